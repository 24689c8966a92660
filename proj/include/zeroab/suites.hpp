#pragma once

// Named invariant suites. Each case draws from its own seed, derived from the
// suite seed and the case index, so a failing case is reproducible alone.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "zeroab/oracle/oracle.hpp"
#include "zeroab/zeroab.hpp"

namespace zeroab::suites {

struct CaseResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool passed = true;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::string ring;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  [[nodiscard]] std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult &c) { return c.passed; }));
  }
  [[nodiscard]] std::size_t failed() const { return cases.size() - passed(); }
  [[nodiscard]] bool ok() const { return failed() == 0; }
};

struct SuiteParams {
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t max_summands = 3;
  bool exhaustive = false;
};

inline std::uint64_t case_seed(std::uint64_t base, std::size_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

template <class... Parts> std::string describe(const Parts &...parts) {
  std::ostringstream os;
  ((os << parts << ' '), ...);
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

// Runs body(rng, detail) once per case; exceptions count as failures.
template <ExactScalar T>
SuiteReport run_cases(const std::string &name, const Category<T> &C, const SuiteParams &params,
                      const std::function<bool(Rng &, std::string &)> &body) {
  SuiteReport rep{name, C.config().shorthand(), params.seed, {}};
  for (std::size_t i = 0; i < params.count; ++i) {
    CaseResult c{i, case_seed(params.seed, i), true, {}};
    Rng rng(c.seed);
    try {
      c.passed = body(rng, c.detail);
    } catch (const Error &e) {
      c.passed = false;
      c.detail = std::string(to_string(e.kind())) + ": " + e.what();
    }
    if (c.passed) c.detail.clear();
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

inline void add_case(SuiteReport &rep, bool passed, std::string detail) {
  const std::size_t i = rep.cases.size();
  rep.cases.push_back({i, 0, passed, passed ? std::string() : std::move(detail)});
}

// --- helpers ----------------------------------------------------------------

template <ExactScalar T> std::size_t size_cap(const Category<T> &C, std::size_t max_summands) {
  (void)C;
  return max_summands;
}

template <ExactScalar T> Morphism<T> random_map(const Category<T> &C, Rng &rng, std::size_t max_summands) {
  const Object x = random_object(C, rng, 0, max_summands), y = random_object(C, rng, 0, max_summands);
  return random_morphism(C, rng, x, y, 9);
}

template <ExactScalar T>
std::optional<Morphism<T>> random_bimorphism_from(const Category<T> &C, Rng &rng, const Object &x, long bound = 3) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Object y = random_object(C, rng, x.size(), x.size());
    const auto f = random_morphism(C, rng, x, y, bound);
    if (is_bimorphism(f)) return f;
  }
  return std::nullopt;
}

// Every object with between lo and hi summands.
template <ExactScalar T> std::vector<Object> all_objects(const Category<T> &C, std::size_t lo, std::size_t hi) {
  std::vector<Object> out;
  std::vector<std::size_t> mult(C.m(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == C.m()) {
      for (std::size_t v = 0; v <= left; ++v) {
        mult[i] = v;
        const Object x(mult);
        if (x.size() >= lo) out.push_back(x);
      }
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      mult[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, hi);
  return out;
}

// Every morphism x -> y over a prime field.
inline void for_each_morphism(const Category<Modular> &C, const Object &x, const Object &y,
                              const std::function<void(const Morphism<Modular> &)> &fn) {
  const HomSpace h = C.hom(x, y);
  const std::uint32_t p = C.scalars().characteristic();
  std::vector<std::uint32_t> digits(h.dimension(), 0);
  for (;;) {
    std::vector<Modular> coords;
    for (auto d : digits) coords.push_back(C.from_int(d));
    fn(h.element<Modular>(coords));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
}

template <class T> oracle::LinearMap<T> linear_map(const Matrix<T> &a) {
  oracle::LinearMap<T> out{a.cols(), a.rows(), oracle::zeros<T>(a.rows(), a.cols())};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.m[i][j] = a(i, j);
  return out;
}

// --- projcat ------------------------------------------------------------------

template <ExactScalar T> SuiteReport factorization(const Category<T> &C, const SuiteParams &params) {
  return run_cases<T>("factorization", C, params, [&](Rng &rng, std::string &detail) {
    const auto f = random_map(C, rng, size_cap(C, params.max_summands));
    detail = describe(f);
    return verify(C, zero_kernel(C, f), f) && verify(C, zero_cokernel(C, f), f);
  });
}

template <ExactScalar T> SuiteReport kernel_splitness(const Category<T> &C, const SuiteParams &params) {
  return run_cases<T>("kernel-splitness", C, params, [&](Rng &rng, std::string &detail) {
    const auto f = random_map(C, rng, size_cap(C, params.max_summands));
    detail = describe(f);
    const SplitMono<T> k = kernel(C, f);
    const SplitEpi<T> c = cokernel(C, f);
    const bool kernel_ok = (f * k.map).is_zero() && k.retraction * k.map == C.identity(k.map.source());
    const bool cokernel_ok = (c.map * f).is_zero() && c.map * c.section == C.identity(c.map.target());
    // kernel of f has the size of the null space, cokernel that of coker
    const std::size_t r = rank(f.matrix());
    return kernel_ok && cokernel_ok && k.map.source().size() == f.source().size() - r &&
           c.map.target().size() == f.target().size() - r;
  });
}

template <ExactScalar T> SuiteReport universal_property(const Category<T> &C, const SuiteParams &params) {
  return run_cases<T>("universal-property", C, params, [&](Rng &rng, std::string &detail) {
    const auto f = random_map(C, rng, size_cap(C, params.max_summands));
    detail = describe(f);
    const Object w = random_object(C, rng, 0, 3);
    // one probe through f and one arbitrary, on each side
    std::vector<Morphism<T>> into{f * random_morphism(C, rng, w, f.source(), 3), random_morphism(C, rng, w, f.target(), 3)};
    std::vector<Morphism<T>> out_of{random_morphism(C, rng, f.target(), w, 3) * f, random_morphism(C, rng, f.source(), w, 3)};
    const auto k = universal_property_check<T>(C, zero_kernel(C, f), f, into);
    const auto c = universal_property_check<T>(C, zero_cokernel(C, f), f, out_of);
    return k.passed() && c.passed() && k.factoring >= 1 && c.factoring >= 1;
  });
}

// A non-split bimorphism exists, and bimorphisms compose.
template <ExactScalar T> SuiteReport bimorphisms(const Category<T> &C, const SuiteParams &params) {
  SuiteReport rep = run_cases<T>("bimorphisms", C, params, [&](Rng &rng, std::string &detail) {
    const Object x = random_object(C, rng, 1, size_cap(C, params.max_summands));
    const auto f = random_bimorphism_from(C, rng, x);
    if (!f) return true;
    const auto g = random_bimorphism_from(C, rng, f->target());
    if (!g) return true;
    detail = describe(*f, *g);
    return is_bimorphism(*g * *f);
  });
  Morphism<T> w = Category<T>::integral ? C.morphism(C.indecomposable(1), C.indecomposable(1), {{2}})
                                        : C.zero(C.zero_object(), C.zero_object());
  if constexpr (!Category<T>::integral) {
    if (C.m() >= 2) w = C.morphism(C.indecomposable(1), C.indecomposable(2), {{1}});
  }
  const bool witnessed = is_bimorphism(w) && !is_iso(C, w);
  add_case(rep, witnessed || (!Category<T>::integral && C.m() == 1), describe("non-split bimorphism", w));
  return rep;
}

// --- fpfun --------------------------------------------------------------------------

template <ExactScalar T> SuiteReport torsion_decomposition(const Category<T> &C, const SuiteParams &params) {
  return run_cases<T>("torsion-orthogonality", C, params, [&](Rng &rng, std::string &detail) {
    const Object p1 = random_object(C, rng, 0, size_cap(C, params.max_summands));
    const Object p0 = random_object(C, rng, 0, size_cap(C, params.max_summands));
    const auto f = random_morphism(C, rng, p1, p0, 6);
    detail = describe(f);
    const FpFunctor<T> F = mr(f);
    const auto d = decompose(C, F);
    bool ok = is_bimorphism(d.bimorphism_part) && orthogonality_holds(C, d);
    for (std::size_t k = 1; k <= C.m() && ok; ++k) {
      const Object pk = C.indecomposable(k);
      ok = evaluate(C, F, pk) ==
           direct_sum(evaluate(C, mr(d.bimorphism_part), pk), evaluate(C, representable(C, d.projective_part), pk));
    }
    if constexpr (Category<T>::integral) {
      // against the structure theorem, from determinantal divisors
      if (ok && f.matrix().rows() * f.matrix().cols() > 0) {
        oracle::Mat<long long> a = oracle::zeros<long long>(f.target().size(), f.source().size());
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < f.source().size(); ++j) a[i][j] = f.matrix()(i, j).get_si();
        const auto g = oracle::cokernel_group(a, f.target().size(), f.source().size());
        const auto split = split_module(C, f);
        ok = split.torsion_part.free_rank == 0 && split.torsion_part.torsion == g.torsion &&
             split.projective_part.free_rank == g.free_rank && split.projective_part.torsion.empty();
      }
    }
    return ok;
  });
}

// --- ebif ---------------------------------------------------------------------------

template <FieldScalar T> SuiteReport e_table(const Category<T> &C) {
  SuiteReport rep{"e-table", C.config().shorthand(), 0, {}};
  const std::size_t m = C.m();
  const bool use_oracle = std::is_same_v<T, Modular> && m <= 4;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      const auto x = C.indecomposable(i), y = C.indecomposable(j);
      const std::size_t d = e_group(C, x, y).dimension();
      bool ok = d == (j < i ? 1u : 0u);
      if constexpr (std::is_same_v<T, Modular>) {
        if (use_oracle) {
          const auto p = C.scalars().characteristic();
          ok = ok && d == oracle::e_dimension(oracle::projective_module(x.multiplicities(), p),
                                              oracle::projective_module(y.multiplicities(), p));
        }
      }
      add_case(rep, ok, describe("E(P", i, ", P", j, ") =", d));
    }
  for (std::size_t k = 1; k <= m; ++k) {
    add_case(rep, e_group(C, C.indecomposable(k), C.indecomposable(m)).dimension() == 0, describe("E(-, P_m) at", k));
    add_case(rep, e_group(C, C.indecomposable(1), C.indecomposable(k)).dimension() == 0, describe("E(P_1, -) at", k));
  }
  return rep;
}

template <FieldScalar T> bool nsles_case(const Category<T> &C, const Morphism<T> &f, std::string &detail) {
  detail = describe(f);
  const auto s = nsles(C, f);
  bool ok = s.exact();
  for (std::size_t k = 1; k <= C.m() && ok; ++k) {
    const auto cf = evaluate_map(C, s.c_f, k), d = evaluate_map(C, s.connecting, k), ef = evaluate_map(C, s.e_f, k);
    const std::vector<oracle::LinearMap<T>> seq{linear_map(Matrix<T>(cf.cols(), 0)), linear_map(cf), linear_map(d),
                                                linear_map(ef), linear_map(Matrix<T>(0, ef.rows()))};
    ok = oracle::rank_exactness(seq) && rank(cf) == cf.cols() && rank(ef) == ef.rows();
  }
  return ok;
}

template <FieldScalar T> SuiteReport nsles_exactness(const Category<T> &C, const SuiteParams &params) {
  if constexpr (std::is_same_v<T, Modular>) {
    if (params.exhaustive) {
      SuiteReport rep{"nsles-exactness", C.config().shorthand(), params.seed, {}};
      const auto objects = all_objects(C, 0, params.max_summands);
      for (const auto &x : objects)
        for (const auto &y : objects) {
          if (x.size() != y.size()) continue;
          for_each_morphism(C, x, y, [&](const Morphism<Modular> &f) {
            if (!is_bimorphism(f)) return;
            std::string detail;
            const bool ok = nsles_case(C, f, detail);
            add_case(rep, ok, detail);
          });
        }
      return rep;
    }
  }
  return run_cases<T>("nsles-exactness", C, params, [&](Rng &rng, std::string &detail) {
    const Object x = random_object(C, rng, 0, params.max_summands);
    const auto f = random_bimorphism_from(C, rng, x);
    if (!f) return true;
    return nsles_case(C, *f, detail);
  });
}

template <FieldScalar T> SuiteReport balance(const Category<T> &C, const SuiteParams &params) {
  SuiteReport rep = run_cases<T>("balance", C, params, [&](Rng &rng, std::string &detail) {
    const Object x = random_object(C, rng, 0, params.max_summands), y = random_object(C, rng, 0, params.max_summands);
    detail = describe(x, y);
    return C.hom(projective_cover(C, x), y).dimension() == C.hom(x, injective_hull(C, y)).dimension();
  });
  for (std::size_t i = 1; i <= C.m(); ++i)
    for (std::size_t j = 1; j <= C.m(); ++j)
      add_case(rep, balance_check(C, C.indecomposable(i), C.indecomposable(j)).bijective, describe("delta at P", i, "P", j));
  return rep;
}

// Split idempotents on E(-, X): conjugates of summand projections by random
// automorphisms, realized through their images.
template <FieldScalar T> SuiteReport realize_summands(const Category<T> &C, const SuiteParams &params) {
  return run_cases<T>("realize-summand", C, params, [&](Rng &rng, std::string &detail) {
    const Object x = random_object(C, rng, 1, params.max_summands);
    Morphism<T> theta = C.identity(x);
    for (int attempt = 0; attempt < 100; ++attempt) {
      const auto t = random_morphism(C, rng, x, x, 3);
      if (is_iso(C, t)) {
        theta = t;
        break;
      }
    }
    Matrix<T> pm(x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (uniform_int(rng, 0, 1)) pm(i, i) = C.one();
    const Morphism<T> e = *inverse(C, theta) * Morphism<T>(x, x, pm) * theta;
    detail = describe(x, e);
    const auto q = cokernel_nat(C, e_functor_map(C, C.identity(x) - e));
    const auto r = realize_summand(C, x, q.projection);
    return is_bimorphism(r.h) && section(C, r.e_h).has_value() && is_iso_nat(C, r.iso) &&
           vertex_dimensions(C, q.functor) == vertex_dimensions(C, effaceable_e(C, r.v)) &&
           injective_hull(C, x) == injective_hull(C, r.v);
  });
}

template <FieldScalar T> SuiteReport injective_resolutions(const Category<T> &C, const SuiteParams &params) {
  SuiteReport rep = run_cases<T>("injective-resolution", C, params, [&](Rng &rng, std::string &detail) {
    const Object p1 = random_object(C, rng, 0, params.max_summands), p0 = random_object(C, rng, 0, params.max_summands);
    const auto f = random_morphism(C, rng, p1, p0, 3);
    detail = describe(f);
    const auto r = injective_resolution(C, mr(f));
    return r.exact() && r.dual_matches();
  });
  const std::size_t m = C.m();
  for (std::size_t i = 1; i < m; ++i)
    add_case(rep, classify_injective_modC(C, effaceable_e(C, C.indecomposable(i))).kind == ModCClass::EffaceableInjective,
             describe("E(-, P", i, ") effaceable injective"));
  add_case(rep, classify_injective_modC(C, representable(C, C.indecomposable(m))).kind == ModCClass::ProjectiveInjective,
           "C(-, P_m) projective injective");
  if (m >= 2)
    add_case(rep, classify_injective_modC(C, representable(C, C.indecomposable(1))).kind == ModCClass::NotInjective,
             "C(-, P_1) not injective");
  return rep;
}

template <FieldScalar T> SuiteReport hilton_rees(const Category<T> &C) {
  SuiteReport rep{"hilton-rees", C.config().shorthand(), 0, {}};
  for (std::size_t i = 1; i <= C.m(); ++i)
    for (std::size_t j = 1; j <= C.m(); ++j) {
      const auto x = C.indecomposable(i), y = C.indecomposable(j);
      const auto h = hilton_rees_check(C, x, y);
      bool ok = h.passed();
      if constexpr (std::is_same_v<T, Modular>) {
        if (C.m() <= 3 && C.scalars().characteristic() == 2) {
          const auto ex = eta(C, x), ey = eta(C, y);
          const auto rep_of = [&](const Object &o) { return oracle::projective_module(o.multiplicities(), 2); };
          const auto map_of = [&](const Morphism<Modular> &g) {
            oracle::Mat<Modular> a = oracle::zeros<Modular>(g.target().size(), g.source().size());
            for (std::size_t r = 0; r < a.size(); ++r)
              for (std::size_t c = 0; c < g.source().size(); ++c) a[r][c] = g.matrix()(r, c);
            return oracle::from_blocks(g.source().multiplicities(), g.target().multiplicities(), a);
          };
          ok = ok && h.functor_dimension == oracle::squares_mod_homotopy(rep_of(x), rep_of(ex.target()), map_of(ex),
                                                                         rep_of(y), rep_of(ey.target()), map_of(ey));
        }
      }
      add_case(rep, ok, describe("P", i, "P", j, "stable", h.stable_dimension, "functor", h.functor_dimension));
    }
  return rep;
}

// Stable hom tables of proj Lambda_m against the hom table of proj
// Lambda_{m-1}: P_i -> P_i (injectively stable, P_m -> 0) and P_i -> P_{i-1}
// (projectively stable, P_1 -> 0).
template <FieldScalar T> SuiteReport stable_equivalence(const Category<T> &C) {
  SuiteReport rep{"stable-equivalence", C.config().shorthand(), 0, {}};
  const std::size_t m = C.m();
  const auto smaller_hom = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (m == 1 || i == 0 || j == 0 || i > m - 1 || j > m - 1) return 0;
    const Category<T> D(m - 1, C.scalars());
    return D.hom(D.indecomposable(i), D.indecomposable(j)).dimension();
  };
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      const auto x = C.indecomposable(i), y = C.indecomposable(j);
      const std::size_t inj = stable_hom(C, x, y, StableFlavor::InjectivelyStable).dimension;
      const std::size_t proj = stable_hom(C, x, y, StableFlavor::ProjectivelyStable).dimension;
      add_case(rep, inj == smaller_hom(i, j), describe("inj P", i, "P", j, "=", inj));
      add_case(rep, proj == smaller_hom(i - 1, j - 1), describe("proj P", i, "P", j, "=", proj));
    }
  return rep;
}

} // namespace zeroab::suites
