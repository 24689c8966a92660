#pragma once

#include "zeroab/error.hpp"
#include "zeroab/exactla/linalg.hpp"
#include "zeroab/projcat/category.hpp"
#include "zeroab/projcat/equations.hpp"
#include "zeroab/projcat/factorization.hpp"
#include "zeroab/projcat/predicates.hpp"
#include "zeroab/projcat/ring.hpp"
#include "zeroab/random.hpp"
#include "zeroab/fpfun/decompose.hpp"
#include "zeroab/fpfun/evaluate.hpp"
#include "zeroab/fpfun/functor.hpp"
#include "zeroab/fpfun/hom.hpp"
#include "zeroab/ebif/extension.hpp"
#include "zeroab/ebif/modc.hpp"
#include "zeroab/ebif/nsles.hpp"
#include "zeroab/ebif/stable.hpp"
