#include <doctest.h>

#include "eqcoh/json_io.hpp"
#include "test_util.hpp"

using namespace eqcoh;
using json_io::json;

namespace {

RingElement round_trip(const RingElement& e) { return json_io::parse_ring_element(json::parse(json_io::ring_element(e).dump())); }

}  // namespace

TEST_CASE("integers") {
  CHECK(json_io::integer(BigInt(-5)) == json(-5));
  BigInt big = 1;
  for (int i = 0; i < 30; ++i) big *= 1000;
  CHECK(json_io::integer(big).is_string());
  CHECK(json_io::parse_integer(json_io::integer(big)) == big);
  CHECK(json_io::parse_integer(json_io::integer(-big)) == -big);
  CHECK_ERROR(json_io::parse_integer(json("12a")), ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_integer(json("-")), ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_integer(json(1.5)), ErrorCode::ParseError);
}

TEST_CASE("ring elements round-trip") {
  const std::vector<Weight> ws{Weight{1, -2}, Weight{3, 1}, Weight{-1, -1}};
  for (Theory th : {Theory::H, Theory::K, Theory::MU})
    for (int d : {2, 4, 6}) {
      const auto e = euler_class(th, ws, 2, FormalGroupLaw(d));
      const auto back = round_trip(e);
      CHECK(back == e);
      CHECK(to_string(back) == to_string(e));
      CHECK(json_io::ring_element(back) == json_io::ring_element(e));
    }
  const auto exact = RingElement{MUElement::constant(2, FormalGroupLaw(4), 7)};
  CHECK(json_io::ring_element(exact)["precision"].is_null());
  CHECK(round_trip(exact) == exact);
  std::vector<Weight> many(30, Weight{1000});
  const auto huge = euler_class(Theory::H, many, 1);
  CHECK(json_io::ring_element(huge)["terms"][0]["coeff"].is_string());
  CHECK(round_trip(huge) == huge);
}

TEST_CASE("ring element parse errors") {
  CHECK_ERROR(json_io::parse_ring_element(json::parse(R"({"theory":"Q","rank":1,"terms":[]})")), ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_ring_element(json::parse(R"({"theory":"H","terms":[]})")), ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_ring_element(json::parse(R"({"theory":"H","rank":2,"terms":[{"exponents":[1],"coeff":1}]})")),
              ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_ring_element(json::parse(R"({"theory":"H","rank":1,"terms":[{"exponents":[-1],"coeff":1}]})")),
              ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_ring_element(json::parse(R"({"theory":"K","rank":1,"terms":[]})")), ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_ring_element(json::parse(R"({"theory":"MU","rank":1,"truncation":8,"terms":[]})")),
              ErrorCode::UnsupportedTruncation);
  CHECK_ERROR(json_io::parse_ring_element(
                  json::parse(R"({"theory":"MU","rank":1,"truncation":4,"precision":2,"terms":[{"exponents":[3,0],"coeff":1}]})")),
              ErrorCode::ParseError);
}

TEST_CASE("models round-trip") {
  const auto m = flag_model({RootSystemSpec::parse("B2"), {}});
  const auto j = json_io::model(m);
  const auto back = json_io::parse_model(json::parse(j.dump()));
  CHECK(json_io::model(back) == j);
  CHECK(back.coweight == m.coweight);
  CHECK(back.closure_covers == m.closure_covers);

  const auto minimal = json_io::parse_model(json::parse(R"({"dimension":1,"points":[{"label":"0","weights":[[2]]},{"label":"inf","weights":[[-2]]}]})"));
  CHECK(minimal.rank == 1);
  CHECK(!minimal.closure_covers);
  CHECK(module_structure(minimal).rank() == 2);

  CHECK_ERROR(json_io::parse_model(json::parse(R"({"points":[]})")), ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_model(json::parse(R"({"dimension":1,"points":[]})")), ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_model(json::parse(R"({"dimension":1,"points":[{"label":"a","weights":[[1],[2]]}]})")),
              ErrorCode::InvalidModel);
  CHECK_ERROR(json_io::parse_model(json::parse(R"({"dimension":1,"points":[{"label":"a","weights":[["x"]]}]})")),
              ErrorCode::ParseError);
  CHECK_ERROR(json_io::parse_model(json::parse(R"({"dimension":1,"points":[{"label":"a","weights":[[1]]}],"closure_covers":[["a"]]})")),
              ErrorCode::ParseError);
}

TEST_CASE("posets round-trip") {
  const auto m = flag_model({RootSystemSpec::parse("A2"), {}});
  for (Theory th : {Theory::H, Theory::K, Theory::MU}) {
    const auto poset = bb_stratify(m, generic_coweight(m), {th, 4});
    const auto j = json_io::poset(poset);
    const auto back = json_io::parse_poset(json::parse(j.dump()));
    CHECK(json_io::poset(back) == j);
    CHECK(json_io::poset_theory(j) == th);
    const auto a = assemble_module(poset, th), b = assemble_module(back, th);
    CHECK(json_io::decomposition(a) == json_io::decomposition(b));
  }
  const auto chain = json_io::parse_poset(json::parse(R"({"labels":["a","b"],"covers":[["a","b"]]})"));
  CHECK(chain.less(0, 1));
  CHECK_ERROR(json_io::parse_poset(json::parse(R"({"labels":["a","b"],"covers":[["a","b"],["b","a"]]})")),
              ErrorCode::NotAPartialOrder);
  CHECK_ERROR(json_io::parse_poset(json::parse(R"({"labels":["a"],"payload":{"a":{}}})")), ErrorCode::ParseError);
  CHECK(json_io::poset_theory(json::parse(R"({"labels":["a"]})")) == Theory::H);
}

TEST_CASE("reports carry their schema names") {
  const WeylGroup w(build_root_datum(RootSystemSpec::parse("B2")));
  CHECK(json_io::weyl_report(w)["schema"] == "eqcoh.weyl/1");
  CHECK(json_io::weyl_report(w)["order"] == 8);
  const AffineGrassmannian gr(RootSystemSpec::parse("A1"), Weight{1});
  const auto g = json_io::gr_report(gr, 3);
  CHECK(g["count"] == 7);
  CHECK(g["module"]["ranks"] == json({1, 3, 5, 7}));
  CHECK(json_io::error_report("X", "y")["error"]["code"] == "X");
}
