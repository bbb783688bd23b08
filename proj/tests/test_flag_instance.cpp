#include <doctest.h>

#include "eqcoh/flag_instance.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace eqcoh;

namespace {

FlagSpec fs(const char* type, std::vector<int> parabolic = {}) { return {RootSystemSpec::parse(type), std::move(parabolic)}; }

std::vector<std::string> words(const std::vector<WeylElement>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.word_string());
  return out;
}

std::multiset<Weight> as_set(const std::vector<Weight>& ws) { return {ws.begin(), ws.end()}; }

}  // namespace

TEST_CASE("fixed points") {
  CHECK(words(flag_fixed_points(fs("A1"))) == std::vector<std::string>{"e", "s1"});
  CHECK(flag_fixed_points(fs("A2")).size() == 6);
  CHECK(flag_fixed_points(fs("A2", {0})).size() == 3);
  CHECK(flag_fixed_points(fs("A2", {0, 1})).size() == 1);
  CHECK_ERROR(flag_fixed_points(fs("A2", {5})), ErrorCode::UnknownLabel);
}

TEST_CASE("tangent weights") {
  const FlagVariety a1(fs("A1"));
  CHECK(flag_tangent_weights(fs("A1"), a1.weyl()[0]) == std::vector<Weight>{Weight{-2}});
  CHECK(flag_tangent_weights(fs("A1"), a1.weyl()[1]) == std::vector<Weight>{Weight{2}});
  const FlagVariety a2(fs("A2"));
  CHECK(as_set(a2.tangent_weights(a2.weyl()[0])) == std::multiset<Weight>{Weight{-2, 1}, Weight{1, -2}, Weight{-1, -1}});
}

TEST_CASE("weights at w are w applied to the weights at the base point") {
  for (const char* t : {"A2", "B2", "A3", "G2"})
    for (int p = -1; p < 2; ++p) {
      CAPTURE(t);
      CAPTURE(p);
      const FlagVariety fv(fs(t, p < 0 ? std::vector<int>{} : std::vector<int>{p}));
      const auto base = fv.tangent_weights(fv.weyl()[0]);
      for (auto i : fv.fixed_points()) {
        const auto& w = fv.weyl()[i];
        std::vector<Weight> moved;
        for (const auto& b : base) moved.push_back(weyl_act_weight(w, b));
        CHECK(as_set(fv.tangent_weights(w)) == as_set(moved));
        CHECK(static_cast<int>(fv.tangent_weights(w).size()) == fv.dimension());
      }
    }
}

TEST_CASE("models") {
  const auto p1 = flag_model(fs("A1"));
  CHECK(p1.dimension == 1);
  CHECK(p1.points.size() == 2);
  CHECK(p1.points[0].tangent_weights == std::vector<Weight>{Weight{-2}});
  CHECK(p1.points[1].tangent_weights == std::vector<Weight>{Weight{2}});
  const auto a2 = flag_model(fs("A2"));
  CHECK(a2.dimension == 3);
  CHECK(a2.points.size() == 6);
  const auto plane = flag_model(fs("A2", {0}));
  CHECK(plane.dimension == 2);
  CHECK(plane.points.size() == 3);
  CHECK(poincare_series(module_structure(plane)).to_string() == "1 + q^2 + q^4");
}

TEST_CASE("closure order is the Bruhat order") {
  for (const char* t : {"A2", "B2", "A3"})
    for (int p = -1; p < 2; ++p) {
      CAPTURE(t);
      CAPTURE(p);
      const FlagVariety fv(fs(t, p < 0 ? std::vector<int>{} : std::vector<int>{p}));
      const auto m = fv.model();
      const auto poset = bb_stratify(m, generic_coweight(m));
      std::map<std::string, std::set<std::string>> closures;
      for (auto v : fv.fixed_points())
        for (auto u : fv.fixed_points())
          if (fv.weyl().bruhat_leq(u, v)) closures[fv.weyl()[v].word_string()].insert(fv.weyl()[u].word_string());
      CHECK(check_stratification(poset, closures));
    }
}

TEST_CASE("Poincare series match the length enumeration") {
  for (const char* t : {"A2", "B2", "A3"}) {
    const auto rank = RootSystemSpec::parse(t).rank;
    for (int p = -1; p < rank; ++p) {
      CAPTURE(t);
      CAPTURE(p);
      const std::vector<int> par = p < 0 ? std::vector<int>{} : std::vector<int>{p};
      const FlagVariety fv(fs(t, par));
      for (Theory th : {Theory::H, Theory::K, Theory::MU}) {
        const auto dec = module_structure(fv.model(), {th, 6});
        CHECK(dec.rank() == fv.weyl().size() / (par.empty() ? 1 : 2));
        CHECK(poincare_series(dec).coeffs == oracle::coset_poincare(fv.datum().cartan, par));
      }
    }
  }
  CHECK(poincare_series(module_structure(flag_model(fs("A2")))).to_string() == "1 + 2q^2 + 2q^4 + q^6");
}

TEST_CASE("codimension of the stratum at w is l(w0) - l(w)") {
  const FlagVariety fv(fs("A2"));
  const auto m = fv.model();
  const auto poset = bb_stratify(m, generic_coweight(m));
  const int top = fv.weyl()[fv.weyl().longest()].length;
  for (auto i : fv.fixed_points()) {
    const auto& w = fv.weyl()[i];
    CHECK(poset.payload(poset.index_of(w.word_string()))->codim == top - w.length);
  }
}
