#pragma once

// Request/response layer behind the command-line tool.
//
// request   {"ring": <ring>, "payload": {...}, "options": {"seed": n, "verbosity": "full"|"summary"}}
// response  {"command", "ring", "input", "result"} or {"command", "error": {"kind", "message"}}
//
// Exit codes: 0 success, 1 a check suite reported failures, 2 schema or
// validation failure, 3 ring capability error, 4 precondition failure.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeroab/io/serialize.hpp"
#include "zeroab/oracle/oracle.hpp"
#include "zeroab/suites.hpp"
#include "zeroab/zeroab.hpp"

namespace zeroab::cli {

using io::json;
using io::to_json;

struct Response {
  json document;
  int exit_code = 0;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Validation:
  case ErrorKind::DimensionMismatch: return 2;
  case ErrorKind::NoEnoughInjectives:
  case ErrorKind::NoEnoughProjectives: return 3;
  case ErrorKind::Precondition:
  case ErrorKind::BoundExceeded: return 4;
  }
  return 4;
}

struct CommandInfo {
  std::string_view name;
  std::string_view summary;
  std::string_view statement;
};

inline const std::vector<CommandInfo> &commands() {
  static const std::vector<CommandInfo> table{
      {"classify", "object: injective/projective; morphism: mono, epi, split and iso tests with witnesses",
       "A morphism is split mono (epi) iff it has a retraction (section); injectives of proj Lambda_m are add P_m, "
       "projective objects add P_1, and proj Z has neither beyond 0."},
      {"zero-kernel", "f = g h with h split epi and g mono",
       "In a 0-abelian category every morphism factors as a split epimorphism followed by a monomorphism."},
      {"zero-cokernel", "f = r s with s epi and r split mono",
       "Dually, every morphism factors as an epimorphism followed by a split monomorphism."},
      {"kernel", "split mono kernel with retraction",
       "Kernels exist and are split monomorphisms, obtained by splitting 1 - h' h for a 0-kernel f = g h."},
      {"cokernel", "split epi cokernel with section", "Cokernels exist and are split epimorphisms."},
      {"split-idempotent", "e = g h with h g = 1", "The category is idempotent complete: an idempotent splits "
                                                   "through its image."},
      {"orthogonal-fill", "diagonal of a commutative square",
       "Split epimorphisms are left orthogonal to monomorphisms: a commutative square with a split epi on one "
       "side and a mono on the other has a unique diagonal."},
      {"decompose", "F = mr(s) + C(-, W) with s a bimorphism",
       "Every finitely presented functor splits as an effaceable part presented by a bimorphism plus a "
       "representable part, and there are no nonzero maps from the effaceable part to representables."},
      {"cor8", "M = N + P with Hom(N, Lambda) = 0 and P projective",
       "A finitely presented module splits as a torsion part with no maps to the ring plus a projective part; "
       "over Z this is the torsion/free splitting."},
      {"ebif", "E(X, Y) = coker C(X, eta_Y)",
       "E(X, Y) is the cokernel of C(X, eta_Y) for the bimorphism eta_Y : Y -> Y_Inj; E(P_i, P_j) is one "
       "dimensional iff j < i."},
      {"ebif-map", "E on morphisms", "E is a bifunctor, contravariant in the first and covariant in the second "
                                     "variable; E(-, f) is induced by (f, f_Inj)."},
      {"balance", "E(X, Y) against coker C(eps_X, Y)",
       "E can be computed from the injective side or from the projective side; the comparison map is a "
       "bijection."},
      {"nsles", "0 -> C(-, X) -> C(-, Y) -> E(-, X) -> E(-, Y) -> 0",
       "A bimorphism f : X -> Y induces a four term exact sequence of functors."},
      {"realize-summand", "a summand of E(-, X) as E(-, V)",
       "Every direct summand of E(-, X) is isomorphic to E(-, V) for a bimorphism h : X -> V with E(-, h) split "
       "epi."},
      {"inj-res", "0 -> F -> I0 -> I1 -> 0 with I0, I1 injective",
       "Every finitely presented functor has an injective resolution of length one, and the injectives of "
       "mod C are the functors C(-, I) + E(-, X) with I injective."},
      {"classify-modc", "injectivity of a functor in mod C",
       "F is injective in mod C iff F = C(-, I) + E(-, X) with I injective."},
      {"stable-hom", "C(X, Y) modulo injectives or projectives",
       "The stable categories of proj Lambda_m modulo injectives and modulo projectives are both equivalent to "
       "proj Lambda_{m-1}; over Z the stable hom is the plain hom group."},
      {"hilton-rees", "stable hom against Hom(E(-, X), E(-, Y))",
       "f |-> E(-, f) identifies C(X, Y) modulo maps factoring through injectives with Hom(E(-, X), E(-, Y))."},
      {"check", "run a named invariant suite", "Runs seeded property families and reports each case with its "
                                               "reproduction seed."},
      {"oracle", "brute-force reference computation",
       "Independent enumeration over F_p representations and determinantal divisors over Z."},
  };
  return table;
}

inline const CommandInfo *find_command(std::string_view name) {
  for (const auto &c : commands())
    if (c.name == name) return &c;
  return nullptr;
}

inline const std::vector<std::string_view> &suite_names() {
  static const std::vector<std::string_view> names{
      "factorization",   "kernel-splitness",    "universal-property", "bimorphisms",
      "torsion-orthogonality", "e-table",       "nsles-exactness",    "balance",
      "realize-summand", "injective-resolution", "hilton-rees",       "stable-equivalence"};
  return names;
}

namespace detail {

inline const json &field(const json &payload, const char *key) { return payload.at(key); }

template <ExactScalar T> Object object_at(const Category<T> &C, const json &p, const char *key) {
  return io::object_from_json(C, field(p, key), std::string("payload.") + key);
}
template <ExactScalar T> Morphism<T> morphism_at(const Category<T> &C, const json &p, const char *key) {
  return io::morphism_from_json(C, field(p, key), std::string("payload.") + key);
}
template <ExactScalar T> FpFunctor<T> functor_at(const Category<T> &C, const json &p, const char *key) {
  return io::functor_from_json(C, field(p, key), std::string("payload.") + key);
}

template <ExactScalar T> json morphisms_json(const std::vector<Morphism<T>> &fs) {
  json out = json::array();
  for (const auto &f : fs) out.push_back(to_json(f));
  return out;
}

inline json points_json(const std::vector<ExactnessPoint> &pts) {
  json out = json::array();
  for (const auto &p : pts) out.push_back({{"vertex", p.vertex}, {"dims", p.dims}, {"ranks", p.ranks}, {"exact", p.exact}});
  return out;
}

template <ExactScalar T> json object_json(const Object &x) { return io::object_to_json<T>(x); }

inline json report_json(const suites::SuiteReport &r) {
  json cases = json::array();
  for (const auto &c : r.cases) {
    json j{{"index", c.index}, {"seed", std::to_string(c.seed)}, {"passed", c.passed}};
    if (!c.passed) j["detail"] = c.detail;
    cases.push_back(std::move(j));
  }
  return {{"suite", r.name}, {"ring", r.ring}, {"seed", std::to_string(r.seed)}, {"total", r.cases.size()},
          {"passed", r.passed()}, {"failed", r.failed()}, {"cases", std::move(cases)}};
}

// --- projcat ----------------------------------------------------------------

template <ExactScalar T> json run_classify(const Category<T> &C, const json &p) {
  io::expect_keys(p, {}, {"object", "morphism"}, "payload");
  require(p.contains("object") != p.contains("morphism"), ErrorKind::Validation,
          "payload: give exactly one of 'object' or 'morphism'");
  if (p.contains("object")) {
    const Object x = object_at(C, p, "object");
    const ObjectClass c = classify(C, x);
    return {{"injective", c.injective}, {"projective", c.projective}};
  }
  const Morphism<T> f = morphism_at(C, p, "morphism");
  const auto r = retraction(C, f), s = section(C, f);
  const auto inv = r && s ? inverse(C, f) : std::nullopt;
  return {{"mono", is_mono(f)},
          {"epi", is_epi(f)},
          {"bimorphism", is_bimorphism(f)},
          {"split_mono", r.has_value()},
          {"split_epi", s.has_value()},
          {"iso", inv.has_value()},
          {"witness", {{"retraction", to_json(r)}, {"section", to_json(s)}, {"inverse", to_json(inv)}}}};
}

template <ExactScalar T> json zero_kernel_json(const Category<T> &C, const Morphism<T> &f) {
  const ZeroKernel<T> k = zero_kernel(C, f);
  return {{"object", object_json<T>(k.g.source())},
          {"equations_hold", verify(C, k, f)},
          {"witness", {{"h", to_json(k.h)}, {"h_section", to_json(k.h_section)}, {"g", to_json(k.g)}}}};
}

template <ExactScalar T> json zero_cokernel_json(const Category<T> &C, const Morphism<T> &f) {
  const ZeroCokernel<T> k = zero_cokernel(C, f);
  return {{"object", object_json<T>(k.s.target())},
          {"equations_hold", verify(C, k, f)},
          {"witness", {{"s", to_json(k.s)}, {"r", to_json(k.r)}, {"r_retraction", to_json(k.r_retraction)}}}};
}

template <ExactScalar T> json run_kernel(const Category<T> &C, const Morphism<T> &f) {
  const SplitMono<T> k = kernel(C, f);
  const bool ok = (f * k.map).is_zero() && k.retraction * k.map == C.identity(k.map.source());
  return {{"object", object_json<T>(k.map.source())},
          {"equations_hold", ok},
          {"witness", {{"kernel", to_json(k.map)}, {"retraction", to_json(k.retraction)}}}};
}

template <ExactScalar T> json run_cokernel(const Category<T> &C, const Morphism<T> &f) {
  const SplitEpi<T> c = cokernel(C, f);
  const bool ok = (c.map * f).is_zero() && c.map * c.section == C.identity(c.map.target());
  return {{"object", object_json<T>(c.map.target())},
          {"equations_hold", ok},
          {"witness", {{"cokernel", to_json(c.map)}, {"section", to_json(c.section)}}}};
}

template <ExactScalar T> json run_split_idempotent(const Category<T> &C, const Morphism<T> &e) {
  const IdempotentSplitting<T> s = split_idempotent(C, e);
  const bool ok = s.g * s.h == e && s.h * s.g == C.identity(s.g.source());
  return {{"object", object_json<T>(s.g.source())},
          {"equations_hold", ok},
          {"witness", {{"g", to_json(s.g)}, {"h", to_json(s.h)}}}};
}

template <ExactScalar T> json run_orthogonal_fill(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"f", "g", "x", "y"}, {}, "payload");
  const Morphism<T> f = morphism_at(C, p, "f"), g = morphism_at(C, p, "g");
  const Morphism<T> x = morphism_at(C, p, "x"), y = morphism_at(C, p, "y");
  const Fill<T> fill = orthogonal_fill(C, f, g, x, y);
  return {{"exists", fill.r.has_value()}, {"unique", fill.unique}, {"witness", {{"r", to_json(fill.r)}}}};
}

// --- fpfun -----------------------------------------------------------------------

template <ExactScalar T> json run_decompose(const Category<T> &C, const FpFunctor<T> &F) {
  const TorsionDecomposition<T> d = decompose(C, F);
  const Object G = C.generator();
  return {{"bimorphism_part", to_json(d.bimorphism_part)},
          {"projective_part", object_json<T>(d.projective_part)},
          {"is_bimorphism", is_bimorphism(d.bimorphism_part)},
          {"orthogonal", orthogonality_holds(C, d)},
          {"at_generator",
           {{"functor", to_json(evaluate(C, F, G))},
            {"effaceable", to_json(evaluate(C, mr(d.bimorphism_part), G))},
            {"representable", to_json(evaluate(C, representable(C, d.projective_part), G))}}},
          {"witness", {{"sum", to_json(d.sum)}, {"to_sum", to_json(d.to_sum)}, {"from_sum", to_json(d.from_sum)}}}};
}

template <ExactScalar T> json run_cor8(const Category<T> &C, const Morphism<T> &f) {
  const ModuleSplitting<T> s = split_module(C, f);
  return {{"module", to_json(evaluate(C, mr(f), C.generator()))},
          {"torsion_part", to_json(s.torsion_part)},
          {"projective_part", to_json(s.projective_part)},
          {"witness",
           {{"bimorphism_part", to_json(s.decomposition.bimorphism_part)},
            {"projective_object", object_json<T>(s.decomposition.projective_part)},
            {"to_sum", to_json(s.decomposition.to_sum)},
            {"from_sum", to_json(s.decomposition.from_sum)}}}};
}

// --- ebif ------------------------------------------------------------------------------

template <FieldScalar T> json e_value_json(const Category<T> &C, const EValue<T> &e) {
  return {{"x", object_json<T>(e.x)},
          {"y", object_json<T>(e.y)},
          {"dimension", e.dimension()},
          {"relations_dimension", e.group.subspace_dimension()},
          {"witness",
           {{"representatives", morphisms_json(e.group.representatives(C.one()))},
            {"presentation", to_json(e.presentation)}}}};
}

template <ExactScalar T> json run_ebif(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"x", "y"}, {}, "payload");
  const Object x = object_at(C, p, "x"), y = object_at(C, p, "y");
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) return e_value_json(C, e_group(C, x, y));
  return {};
}

template <ExactScalar T> json run_ebif_map(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"morphism", "variance"}, {"object"}, "payload");
  const Morphism<T> f = morphism_at(C, p, "morphism");
  const std::string variance = p.at("variance").template get<std::string>();
  require(variance == "covariant" || variance == "contravariant" || variance == "functor", ErrorKind::Validation,
          "payload.variance: expected 'covariant', 'contravariant' or 'functor'");
  require((variance == "functor") != p.contains("object"), ErrorKind::Validation,
          "payload.object: required for covariant and contravariant maps only");
  std::optional<Object> o;
  if (p.contains("object")) o = object_at(C, p, "object");
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    if (variance == "functor") {
      const FpMorphism<T> a = e_functor_map(C, f);
      return {{"natural_transformation", to_json(a)}, {"matrix_at_generator", to_json(evaluate_map_at_generator(C, a))}};
    }
    const EMap<T> m = variance == "covariant" ? e_map_cov(C, *o, f) : e_map_contra(C, f, *o);
    return {{"source", e_value_json(C, m.source)}, {"target", e_value_json(C, m.target)}, {"matrix", to_json(m.matrix)}};
  }
  return {};
}

template <ExactScalar T> json run_balance(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"x", "y"}, {}, "payload");
  const Object x = object_at(C, p, "x"), y = object_at(C, p, "y");
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    const Balance<T> b = balance_check(C, x, y);
    return {{"e_dimension", b.e.dimension()},
            {"e_prime_dimension", b.e_prime.dimension()},
            {"bijective", b.bijective},
            {"witness",
             {{"delta", to_json(b.delta)},
              {"rank", rank(b.delta)},
              {"e_prime_representatives", morphisms_json(b.e_prime.representatives(C.one()))},
              {"e_representatives", morphisms_json(b.e.group.representatives(C.one()))}}}};
  }
  return {};
}

template <ExactScalar T> json run_nsles(const Category<T> &C, const Morphism<T> &f) {
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    const NSLES<T> s = nsles(C, f);
    return {{"exact", s.exact()},
            {"dimensions_at_generator", s.dimensions_at_generator()},
            {"points", points_json(s.points)},
            {"witness",
             {{"f_inj_inverse", to_json(s.f_inj_inverse)},
              {"c_f", to_json(s.c_f)},
              {"connecting", to_json(s.connecting)},
              {"e_f", to_json(s.e_f)}}}};
  }
  (void)f;
  return {};
}

template <ExactScalar T> json run_realize_summand(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"object", "alpha"}, {}, "payload");
  const Object x = object_at(C, p, "object");
  const json &a = p.at("alpha");
  io::expect_keys(a, {"target", "a", "b"}, {}, "payload.alpha");
  const FpFunctor<T> target = io::functor_from_json(C, a.at("target"), "payload.alpha.target");
  const Morphism<T> ma = io::morphism_from_json(C, a.at("a"), "payload.alpha.a");
  const Morphism<T> mb = io::morphism_from_json(C, a.at("b"), "payload.alpha.b");
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    const FpMorphism<T> alpha(effaceable_e(C, x), target, ma, mb);
    const RealizedSummand<T> r = realize_summand(C, x, alpha);
    return {{"v", object_json<T>(r.v)},
            {"h", to_json(r.h)},
            {"h_bimorphism", is_bimorphism(r.h)},
            {"e_h_split_epi", section(C, r.e_h).has_value()},
            {"iso", is_iso_nat(C, r.iso)},
            {"witness",
             {{"g", to_json(r.g)},
              {"alpha_section", to_json(r.alpha_section)},
              {"e_h", to_json(r.e_h)},
              {"e_h_section", to_json(r.e_h_section)},
              {"iso", to_json(r.iso)},
              {"iso_inverse", to_json(r.iso_inverse)}}}};
  }
  return {};
}

template <ExactScalar T> json run_inj_res(const Category<T> &C, const FpFunctor<T> &F) {
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    const InjectiveResolution<T> r = injective_resolution(C, F);
    return {{"exact", r.exact()},
            {"middle", to_json(r.middle)},
            {"right", to_json(r.right)},
            {"dual_dimensions", r.dual_dimensions},
            {"expected_dual_dimensions", r.expected_dual_dimensions},
            {"points", points_json(r.points)},
            {"witness",
             {{"iota", to_json(r.iota)},
              {"pi", to_json(r.pi)},
              {"bimorphism_part", to_json(r.decomposition.bimorphism_part)},
              {"projective_part", object_json<T>(r.decomposition.projective_part)}}}};
  }
  (void)F;
  return {};
}

template <ExactScalar T> json run_classify_modc(const Category<T> &C, const FpFunctor<T> &F) {
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    const ModCClassification<T> c = classify_injective_modC(C, F);
    json out{{"kind", std::string(to_string(c.kind))}, {"injective", c.kind != ModCClass::NotInjective}};
    if (c.kind != ModCClass::NotInjective) {
      out["injective_part"] = object_json<T>(c.injective_part);
      out["effaceable_part"] = object_json<T>(c.effaceable_part);
    }
    out["witness"] = {{"retraction", to_json(c.retraction)}};
    return out;
  }
  (void)F;
  return {};
}

template <ExactScalar T> json run_stable_hom(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"x", "y", "flavor"}, {}, "payload");
  const Object x = object_at(C, p, "x"), y = object_at(C, p, "y");
  const std::string fl = p.at("flavor").template get<std::string>();
  require(fl == "inj" || fl == "proj", ErrorKind::Validation, "payload.flavor: expected 'inj' or 'proj'");
  const StableHom<T> s =
      stable_hom(C, x, y, fl == "inj" ? StableFlavor::InjectivelyStable : StableFlavor::ProjectivelyStable);
  return {{"flavor", fl},
          {"dimension", s.dimension},
          {"ideal_dimension", s.ideal_dimension},
          {"witness", {{"representatives", morphisms_json(s.representatives)}}}};
}

template <ExactScalar T> json run_hilton_rees(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"x", "y"}, {}, "payload");
  const Object x = object_at(C, p, "x"), y = object_at(C, p, "y");
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    const HiltonRees<T> h = hilton_rees_check(C, x, y);
    return {{"stable_dimension", h.stable_dimension},
            {"functor_dimension", h.functor_dimension},
            {"bijective", h.bijective},
            {"passed", h.passed()},
            {"witness", {{"matrix", to_json(h.matrix)}, {"rank", rank(h.matrix)}}}};
  }
  return {};
}

// --- suites and oracle --------------------------------------------------------------

template <ExactScalar T>
suites::SuiteReport run_suite(const Category<T> &C, const std::string &name, const suites::SuiteParams &params) {
  if (name == "factorization") return suites::factorization(C, params);
  if (name == "kernel-splitness") return suites::kernel_splitness(C, params);
  if (name == "universal-property") return suites::universal_property(C, params);
  if (name == "bimorphisms") return suites::bimorphisms(C, params);
  if (name == "torsion-orthogonality") return suites::torsion_decomposition(C, params);
  require_enough_injectives(C);
  if constexpr (FieldScalar<T>) {
    if (name == "e-table") return suites::e_table(C);
    if (name == "nsles-exactness") return suites::nsles_exactness(C, params);
    if (name == "balance") return suites::balance(C, params);
    if (name == "realize-summand") return suites::realize_summands(C, params);
    if (name == "injective-resolution") return suites::injective_resolutions(C, params);
    if (name == "hilton-rees") return suites::hilton_rees(C);
    if (name == "stable-equivalence") return suites::stable_equivalence(C);
  }
  fail(ErrorKind::Validation, "check: unknown suite '" + name + "'");
}

template <ExactScalar T> json run_check(const Category<T> &C, const json &p, std::uint64_t seed, bool &all_passed) {
  io::expect_keys(p, {"suite"}, {"count", "max_summands", "exhaustive"}, "payload");
  const std::string name = p.at("suite").template get<std::string>();
  require(std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end(), ErrorKind::Validation,
          "check: unknown suite '" + name + "'");
  suites::SuiteParams params;
  params.seed = seed;
  if (p.contains("count")) params.count = io::get_size(p.at("count"), "payload.count");
  if (p.contains("max_summands")) params.max_summands = io::get_size(p.at("max_summands"), "payload.max_summands");
  if (p.contains("exhaustive")) {
    require(p.at("exhaustive").is_boolean(), ErrorKind::Validation, "payload.exhaustive: expected a boolean");
    params.exhaustive = p.at("exhaustive").template get<bool>();
  }
  require(params.max_summands >= 1 && params.max_summands <= 8, ErrorKind::Validation,
          "payload.max_summands: expected a value in [1, 8]");
  const suites::SuiteReport r = run_suite(C, name, params);
  all_passed = r.ok();
  return report_json(r);
}

inline oracle::RepModule rep_module(const Object &x, std::uint32_t p) { return oracle::projective_module(x.multiplicities(), p); }

template <ExactScalar T> json run_oracle(const Category<T> &C, const json &p) {
  io::expect_keys(p, {"computation"}, {"x", "y", "matrix"}, "payload");
  const std::string what = p.at("computation").template get<std::string>();
  if (what == "cokernel-group") {
    require(Category<T>::integral, ErrorKind::Validation, "oracle: cokernel-group runs over the integers");
    require(p.contains("matrix") && p.at("matrix").is_array(), ErrorKind::Validation, "payload.matrix: expected rows");
    const json &mj = p.at("matrix");
    const std::size_t rows = mj.size(), cols = rows == 0 ? 0 : mj[0].size();
    oracle::Mat<long long> a = oracle::zeros<long long>(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      require(mj[i].is_array() && mj[i].size() == cols, ErrorKind::Validation, "payload.matrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer v = io::integer_from_json(mj[i][j], "payload.matrix");
        require(v.fits_slong_p(), ErrorKind::Validation, "payload.matrix: oracle entries must fit in 64 bits");
        a[i][j] = v.get_si();
      }
    }
    const auto g = oracle::cokernel_group(a, rows, cols);
    ModuleDescriptor d{g.free_rank, g.torsion};
    return {{"computation", what}, {"group", to_json(d)}};
  }
  if constexpr (std::is_same_v<T, Modular>) {
    require(p.contains("x") && p.contains("y"), ErrorKind::Validation, "payload: oracle needs x and y");
    const Object x = object_at(C, p, "x"), y = object_at(C, p, "y");
    const std::uint32_t q = C.scalars().characteristic();
    const auto X = rep_module(x, q), Y = rep_module(y, q);
    std::size_t value = 0;
    if (what == "hom-dimension") value = oracle::hom_dimension(X, Y);
    else if (what == "e-dimension") value = oracle::e_dimension(X, Y);
    else if (what == "stable-dimension") value = oracle::injectively_stable_dimension(X, Y);
    else fail(ErrorKind::Validation, "oracle: unknown computation '" + what + "'");
    return {{"computation", what}, {"dimension", value}};
  }
  fail(ErrorKind::Validation, "oracle: '" + what + "' enumerates over a prime field ring");
}

inline void strip_witnesses(json &j) {
  if (j.is_object()) {
    j.erase("witness");
    for (auto &[k, v] : j.items()) strip_witnesses(v);
  } else if (j.is_array()) {
    for (auto &v : j) strip_witnesses(v);
  }
}

template <ExactScalar T>
json dispatch(const Category<T> &C, const std::string &command, const json &p, std::uint64_t seed, int &code) {
  if (command == "classify") return run_classify(C, p);
  if (command == "check") {
    bool ok = true;
    json r = run_check(C, p, seed, ok);
    if (!ok) code = 1;
    return r;
  }
  if (command == "oracle") return run_oracle(C, p);
  if (command == "orthogonal-fill") return run_orthogonal_fill(C, p);
  if (command == "ebif") return run_ebif(C, p);
  if (command == "ebif-map") return run_ebif_map(C, p);
  if (command == "balance") return run_balance(C, p);
  if (command == "realize-summand") return run_realize_summand(C, p);
  if (command == "stable-hom") return run_stable_hom(C, p);
  if (command == "hilton-rees") return run_hilton_rees(C, p);
  if (command == "decompose" || command == "inj-res" || command == "classify-modc") {
    io::expect_keys(p, {"functor"}, {}, "payload");
    const FpFunctor<T> F = functor_at(C, p, "functor");
    if (command == "decompose") return run_decompose(C, F);
    if (command == "inj-res") return run_inj_res(C, F);
    return run_classify_modc(C, F);
  }
  io::expect_keys(p, {"morphism"}, {}, "payload");
  const Morphism<T> f = morphism_at(C, p, "morphism");
  if (command == "zero-kernel") return zero_kernel_json(C, f);
  if (command == "zero-cokernel") return zero_cokernel_json(C, f);
  if (command == "kernel") return run_kernel(C, f);
  if (command == "cokernel") return run_cokernel(C, f);
  if (command == "split-idempotent") return run_split_idempotent(C, f);
  if (command == "cor8") return run_cor8(C, f);
  if (command == "nsles") return run_nsles(C, f);
  fail(ErrorKind::Validation, "unknown command '" + command + "'");
}

} // namespace detail

inline std::uint64_t parse_seed(const json &j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::uint64_t>(j.get<long long>());
  require(j.is_string(), ErrorKind::Validation, "options.seed: expected a non-negative integer");
  const std::string s = j.get<std::string>();
  require(!s.empty() && s.size() <= 20 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }),
          ErrorKind::Validation, "options.seed: expected a non-negative integer");
  const Integer v(s, 10);
  require(v <= Integer("18446744073709551615"), ErrorKind::Validation, "options.seed: out of range");
  return std::stoull(s);
}

inline Response run(const std::string &command, const json &request) {
  json doc{{"command", command}};
  try {
    require(find_command(command) != nullptr, ErrorKind::Validation, "unknown command '" + command + "'");
    io::expect_keys(request, {"ring", "payload"}, {"options"}, "request");
    const RingConfig ring = io::ring_from_json(request.at("ring"));
    doc["ring"] = ring.shorthand();
    std::uint64_t seed = 0;
    std::string verbosity = "full";
    if (request.contains("options")) {
      const json &o = request.at("options");
      io::expect_keys(o, {}, {"seed", "verbosity"}, "options");
      if (o.contains("seed")) seed = parse_seed(o.at("seed"));
      if (o.contains("verbosity")) {
        require(o.at("verbosity").is_string(), ErrorKind::Validation, "options.verbosity: expected a string");
        verbosity = o.at("verbosity").get<std::string>();
        require(verbosity == "full" || verbosity == "summary", ErrorKind::Validation,
                "options.verbosity: expected 'full' or 'summary'");
      }
    }
    const json &payload = request.at("payload");
    require(payload.is_object(), ErrorKind::Validation, "payload: expected an object");
    doc["input"] = request;
    int code = 0;
    json result;
    if (ring.kind == RingKind::Integer) {
      result = detail::dispatch(Category<Integer>(), command, payload, seed, code);
    } else if (ring.field == FieldKind::Rational) {
      result = detail::dispatch(Category<Rational>(ring.m, ScalarContext<Rational>{}), command, payload, seed, code);
    } else {
      result = detail::dispatch(Category<Modular>(ring.m, ScalarContext<Modular>(ring.p)), command, payload, seed, code);
    }
    if (verbosity == "summary") detail::strip_witnesses(result);
    doc["result"] = std::move(result);
    return {std::move(doc), code};
  } catch (const Error &e) {
    doc.erase("input");
    doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    return {std::move(doc), exit_code_for(e.kind())};
  } catch (const json::exception &e) {
    doc.erase("input");
    doc["error"] = {{"kind", "Validation"}, {"message", e.what()}};
    return {std::move(doc), 2};
  }
}

} // namespace zeroab::cli
