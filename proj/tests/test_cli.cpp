#include <gtest/gtest.h>

#include "support.hpp"
#include "zeroab/cli/run.hpp"

using namespace zt;
using zeroab::cli::json;
using zeroab::cli::run;

namespace {

json request(const std::string &ring, json payload) { return {{"ring", ring}, {"payload", std::move(payload)}}; }

json lambda_map(std::vector<std::size_t> src, std::vector<std::size_t> tgt, json blocks = json::array()) {
  return {{"source", src}, {"target", tgt}, {"blocks", std::move(blocks)}};
}

// P_1 -> P_2 by the scalar 1, over Lambda_2
json p1_to_p2() { return lambda_map({1, 0}, {0, 1}, json::array({{{"from_index", 1}, {"to_index", 2}, {"matrix", {{1}}}}})); }

template <ExactScalar T> void expect_round_trip(const Category<T> &C, const Morphism<T> &f) {
  const json j = io::to_json(f);
  const Morphism<T> back = io::morphism_from_json(C, j, "f");
  EXPECT_EQ(back, f);
  EXPECT_EQ(io::to_json(back), j);
  const json reparsed = json::parse(j.dump());
  EXPECT_EQ(io::morphism_from_json(C, reparsed, "f"), f);
}

} // namespace

TEST(CliSerialization, MorphismRoundTrip) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    expect_round_trip(Z(), random_morphism(Z(), rng, random_object(Z(), rng, 0, 4), random_object(Z(), rng, 0, 4), 1000));
    const auto Q = TriQ(3);
    expect_round_trip(Q, random_morphism(Q, rng, random_object(Q, rng, 0, 4), random_object(Q, rng, 0, 4), 9));
    const auto F = TriP(4, 5);
    expect_round_trip(F, random_morphism(F, rng, random_object(F, rng, 0, 4), random_object(F, rng, 0, 4), 9));
  }
}

TEST(CliSerialization, LargeIntegersAndRationals) {
  const json big = "123456789012345678901234567890";
  EXPECT_EQ(io::integer_from_json(big, "x").get_str(), "123456789012345678901234567890");
  const ScalarContext<Rational> q;
  const Rational r = io::scalar_from_json<Rational>(json{{"num", "6"}, {"den", "-4"}}, q, "r");
  EXPECT_EQ(r, Rational(-3, 2));
  EXPECT_EQ(io::to_json(r), (json{{"num", "-3"}, {"den", "2"}}));
}

TEST(CliSerialization, RingEncodings) {
  EXPECT_EQ(io::ring_from_json("tri:m=4:f=p5").shorthand(), "tri:m=4:f=p5");
  EXPECT_EQ(io::ring_from_json(json{{"kind", "triangular"}, {"m", 3}, {"field", "q"}}).shorthand(), "tri:m=3:f=q");
  EXPECT_EQ(io::ring_from_json(json{{"kind", "integer"}}).shorthand(), "z");
  EXPECT_THROW((void)io::ring_from_json(json{{"kind", "triangular"}, {"m", 3}, {"field", "p"}, {"p", 4}}), Error);
  EXPECT_THROW((void)io::ring_from_json("tri:m=0:f=q"), Error);
}

TEST(CliSerialization, ParseErrorsAreValidation) {
  const auto bad = [](const json &req, const std::string &command = "kernel") {
    const auto r = run(command, req);
    EXPECT_EQ(r.exit_code, 2) << req.dump();
    EXPECT_EQ(r.document["error"]["kind"], "Validation") << req.dump();
  };
  bad(request("tri:m=2:f=q", {{"morphism", lambda_map({0, 1}, {1, 0}, json::array({{{"from_index", 2}, {"to_index", 1}, {"matrix", {{1}}}}}))}}));
  bad(request("tri:m=2:f=q", {{"morphism", lambda_map({1, 0}, {0, 1}, json::array({{{"from_index", 1}, {"to_index", 2}, {"matrix", {{1}}}}, {{"from_index", 1}, {"to_index", 2}, {"matrix", {{2}}}}}))}}));
  bad(request("tri:m=2:f=p3", {{"morphism", lambda_map({1, 0}, {0, 1}, json::array({{{"from_index", 1}, {"to_index", 2}, {"matrix", {{3}}}}}))}}));
  bad(request("tri:m=2:f=q", {{"morphism", lambda_map({1, 0}, {0, 1}, json::array({{{"from_index", 1}, {"to_index", 2}, {"matrix", {{{{"num", "1"}, {"den", "0"}}}}}}}))}}));
  bad(request("z", {{"morphism", {{"source", 1}, {"target", 1}, {"matrix", {{"2x"}}}}}}));
  bad(request("z", {{"morphism", {{"source", 1}, {"target", 2}, {"matrix", {{"2"}}}}}}));
  bad(request("z", {{"morphism", {{"source", 1}, {"target", 1}, {"matrix", {{"2"}}}, {"extra", 0}}}}));
  bad(request("z", {{"morphism", {{"source", 1}, {"target", 1}, {"matrix", {{"2"}}}}}, {"extra", 1}}));
  bad({{"payload", json::object()}});
  bad(request("z", json::object()), "no-such-command");
  bad(request("z", {{"suite", "no-such-suite"}}), "check");
  bad(json{{"ring", "z"}, {"payload", json::object()}, {"options", {{"seed", -1}}}});
}

TEST(CliRun, ZeroKernelExample) {
  const auto r = run("zero-kernel", request("z", {{"morphism", {{"source", 1}, {"target", 1}, {"matrix", {{"2"}}}}}}));
  ASSERT_EQ(r.exit_code, 0);
  const json &w = r.document["result"]["witness"];
  EXPECT_EQ(w["g"]["matrix"], (json{{"2"}}));
  EXPECT_EQ(w["h"]["matrix"], (json{{"1"}}));
  EXPECT_EQ(w["h_section"]["matrix"], (json{{"1"}}));
  EXPECT_TRUE(r.document["result"]["equations_hold"]);
  EXPECT_EQ(r.document["input"]["payload"]["morphism"]["matrix"], (json{{"2"}}));
}

TEST(CliRun, StableHomExample) {
  const auto r = run("stable-hom", request("tri:m=3:f=q", {{"x", {0, 1, 0}}, {"y", {0, 1, 0}}, {"flavor", "inj"}}));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.document["result"]["dimension"], 1);
  const auto z = run("stable-hom", request("z", {{"x", 2}, {"y", 3}, {"flavor", "proj"}}));
  ASSERT_EQ(z.exit_code, 0);
  EXPECT_EQ(z.document["result"]["dimension"], 6);
}

TEST(CliRun, CapabilityErrorsOverIntegers) {
  const json zf{{"source", 1}, {"target", 1}, {"matrix", {{"2"}}}};
  const std::vector<std::pair<std::string, json>> cases{
      {"ebif", {{"x", 1}, {"y", 1}}},
      {"ebif-map", {{"morphism", zf}, {"variance", "functor"}}},
      {"balance", {{"x", 1}, {"y", 1}}},
      {"nsles", {{"morphism", zf}}},
      {"realize-summand", {{"object", 1}, {"alpha", {{"target", {{"presentation", zf}}}, {"a", zf}, {"b", zf}}}}},
      {"inj-res", {{"functor", {{"presentation", zf}}}}},
      {"classify-modc", {{"functor", {{"presentation", zf}}}}},
      {"hilton-rees", {{"x", 1}, {"y", 1}}},
  };
  for (const auto &[cmd, payload] : cases) {
    const auto r = run(cmd, request("z", payload));
    EXPECT_EQ(r.exit_code, 3) << cmd;
    EXPECT_EQ(r.document["error"]["kind"], "NoEnoughInjectives") << cmd;
  }
}

TEST(CliRun, PreconditionFailures) {
  const auto r = run("nsles", request("tri:m=2:f=q", {{"morphism", lambda_map({1, 0}, {0, 1})}}));
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_EQ(r.document["error"]["kind"], "Precondition");
  const auto s = run("split-idempotent", request("z", {{"morphism", {{"source", 1}, {"target", 1}, {"matrix", {{"2"}}}}}}));
  EXPECT_EQ(s.exit_code, 4);
}

TEST(CliRun, EveryCommandOverLambda) {
  const std::string ring = "tri:m=2:f=q";
  const json f = p1_to_p2();
  const json eta_p1 = f; // eta of P_1 over Lambda_2
  const json id_p1 = lambda_map({1, 0}, {1, 0}, json::array({{{"from_index", 1}, {"to_index", 1}, {"matrix", {{1}}}}}));
  const json id_p2 = lambda_map({0, 1}, {0, 1}, json::array({{{"from_index", 2}, {"to_index", 2}, {"matrix", {{1}}}}}));
  const json zero_p2 = lambda_map({0, 1}, {0, 1});
  const std::vector<std::pair<std::string, json>> cases{
      {"classify", {{"object", {0, 2}}}},
      {"classify", {{"morphism", f}}},
      {"zero-kernel", {{"morphism", f}}},
      {"zero-cokernel", {{"morphism", f}}},
      {"kernel", {{"morphism", f}}},
      {"cokernel", {{"morphism", f}}},
      {"split-idempotent", {{"morphism", id_p1}}},
      {"orthogonal-fill", {{"f", id_p2}, {"g", id_p2}, {"x", zero_p2}, {"y", zero_p2}}},
      {"decompose", {{"functor", {{"presentation", f}}}}},
      {"cor8", {{"morphism", f}}},
      {"ebif", {{"x", {0, 1}}, {"y", {1, 0}}}},
      {"ebif-map", {{"morphism", f}, {"variance", "functor"}}},
      {"ebif-map", {{"morphism", f}, {"variance", "contravariant"}, {"object", {1, 0}}}},
      {"ebif-map", {{"morphism", f}, {"variance", "covariant"}, {"object", {0, 1}}}},
      {"balance", {{"x", {0, 1}}, {"y", {1, 0}}}},
      {"nsles", {{"morphism", f}}},
      {"realize-summand", {{"object", {1, 0}}, {"alpha", {{"target", {{"presentation", eta_p1}}}, {"a", id_p1}, {"b", id_p2}}}}},
      {"inj-res", {{"functor", {{"presentation", f}}}}},
      {"classify-modc", {{"functor", {{"presentation", f}}}}},
      {"stable-hom", {{"x", {1, 0}}, {"y", {1, 0}}, {"flavor", "proj"}}},
      {"hilton-rees", {{"x", {1, 0}}, {"y", {1, 0}}}},
      {"check", {{"suite", "e-table"}}},
  };
  for (const auto &[cmd, payload] : cases) {
    const auto r = run(cmd, request(ring, payload));
    EXPECT_EQ(r.exit_code, 0) << cmd << " " << r.document.dump();
    EXPECT_TRUE(r.document.contains("result")) << cmd;
  }
  EXPECT_EQ(run("ebif", request(ring, {{"x", {0, 1}}, {"y", {1, 0}}})).document["result"]["dimension"], 1);
  EXPECT_EQ(run("classify-modc", request(ring, {{"functor", {{"presentation", f}}}})).document["result"]["kind"],
            "EffaceableInjective");
  const auto rs = run("realize-summand",
                      request(ring, {{"object", {1, 0}},
                                     {"alpha", {{"target", {{"presentation", eta_p1}}}, {"a", id_p1}, {"b", id_p2}}}}));
  EXPECT_EQ(rs.document["result"]["v"], (json{1, 0}));
  EXPECT_TRUE(rs.document["result"]["iso"]);
}

TEST(CliRun, OracleComputations) {
  EXPECT_EQ(run("oracle", request("tri:m=3:f=p2", {{"computation", "e-dimension"}, {"x", {0, 0, 1}}, {"y", {1, 0, 0}}}))
                .document["result"]["dimension"],
            1);
  const auto g = run("oracle", request("z", {{"computation", "cokernel-group"}, {"matrix", {{2, 0}, {0, 0}}}}));
  EXPECT_EQ(g.document["result"]["group"], (json{{"free_rank", 1}, {"torsion", {"2"}}}));
  EXPECT_EQ(run("oracle", request("tri:m=3:f=q", {{"computation", "e-dimension"}, {"x", {0, 0, 1}}, {"y", {1, 0, 0}}}))
                .exit_code,
            2);
}

TEST(CliRun, SummaryVerbosityDropsWitnesses) {
  json req = request("z", {{"morphism", {{"source", 1}, {"target", 1}, {"matrix", {{"2"}}}}}});
  req["options"] = {{"verbosity", "summary"}};
  const auto r = run("zero-kernel", req);
  EXPECT_FALSE(r.document["result"].contains("witness"));
  EXPECT_TRUE(r.document["result"]["equations_hold"]);
}

TEST(CliCheck, SeedDeterministicReports) {
  for (const auto &[ring, suite] : std::vector<std::pair<std::string, std::string>>{
           {"z", "torsion-orthogonality"}, {"z", "universal-property"}, {"tri:m=3:f=p2", "balance"}, {"tri:m=3:f=q", "factorization"}}) {
    json req = request(ring, {{"suite", suite}, {"count", 20}});
    req["options"] = {{"seed", 7}};
    const auto a = run("check", req), b = run("check", req);
    EXPECT_EQ(a.exit_code, 0) << suite;
    EXPECT_EQ(a.document.dump(), b.document.dump()) << suite;
    req["options"]["seed"] = 8;
    if (suite != "balance") {
      EXPECT_NE(run("check", req).document.dump(), a.document.dump()) << suite;
    }
  }
}

TEST(CliCheck, ExamplesFromTheContract) {
  json t = request("z", {{"suite", "torsion-orthogonality"}, {"count", 100}});
  t["options"] = {{"seed", 7}};
  const auto a = run("check", t);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.document["result"]["passed"], 100);
  const auto b = run("check", request("tri:m=3:f=p2", {{"suite", "balance"}}));
  EXPECT_EQ(b.exit_code, 0);
  EXPECT_EQ(b.document["result"]["failed"], 0);
  json u = request("z", {{"suite", "universal-property"}});
  u["options"] = {{"seed", 11}};
  EXPECT_EQ(run("check", u).exit_code, 0);
  EXPECT_EQ(run("check", request("z", {{"suite", "e-table"}})).exit_code, 3);
}
