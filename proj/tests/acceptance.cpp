// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "eqcoh/affine_grassmannian.hpp"
#include "eqcoh/bb_theory.hpp"
#include "eqcoh/flag_instance.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eqcoh;

namespace {

// Collects the first few mismatches of a criterion.
struct Report {
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) detail << (failures > 1 ? "; " : "") << what;
  }
};

RootSystemSpec spec(const char* t) { return RootSystemSpec::parse(t); }

std::string str(const std::vector<Int>& v) { return to_string(v); }

void weyl_orders(Report& r) {
  const std::vector<std::pair<const char*, std::size_t>> expected{{"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}};
  for (const auto& [t, n] : expected) {
    const WeylGroup w(build_root_datum(spec(t)));
    const std::size_t oracle_n = oracle::weyl_closure(w.datum().cartan).size();
    r.expect(w.size() == n && oracle_n == n, std::string(t) + ": |W| = " + std::to_string(w.size()) + ", oracle " +
                                                 std::to_string(oracle_n) + ", expected " + std::to_string(n));
  }
}

void flag_ranks(Report& r) {
  for (const char* t : {"A2", "B2", "A3"}) {
    const int rank = spec(t).rank;
    for (int p = -1; p < rank; ++p) {
      const std::vector<int> par = p < 0 ? std::vector<int>{} : std::vector<int>{p};
      const FlagVariety fv({spec(t), par});
      const auto oracle_series = oracle::coset_poincare(fv.datum().cartan, par);
      Int cosets = 0;
      for (auto c : oracle_series) cosets += c;
      const std::string tag = std::string(t) + " P=" + (p < 0 ? "{}" : "{" + std::to_string(p + 1) + "}");
      r.expect(static_cast<Int>(fv.fixed_points().size()) == cosets, tag + ": fixed points != |W/W_P|");
      for (Theory th : {Theory::H, Theory::K, Theory::MU}) {
        const auto dec = module_structure(fv.model(), {th, 6});
        r.expect(static_cast<Int>(dec.rank()) == cosets, tag + " " + std::string(to_string(th)) + ": rank");
        r.expect(poincare_series(dec).coeffs == oracle_series,
                 tag + " " + std::string(to_string(th)) + ": series " + poincare_series(dec).to_string());
      }
    }
  }
}

void gr_counts(Report& r) {
  for (int n = 0; n <= 10; ++n) {
    const auto c = gr_level_count(spec("A1"), Weight{1}, n);
    r.expect(c == static_cast<std::size_t>(2 * n + 1), "A1 n=" + std::to_string(n) + ": " + std::to_string(c));
  }
  const AffineGrassmannian a2(spec("A2"), Weight{1, 0});
  std::set<Coweight> prev;
  for (int n = 0; n <= 5; ++n) {
    const auto pts = a2.fixed_points(n);
    const auto scan = oracle::gr_box_scan(a2.datum().cartan, {1, 0}, n, 2 * n + 2);
    const auto wider = oracle::gr_box_scan(a2.datum().cartan, {1, 0}, n, 2 * n + 6);
    std::set<oracle::Vec> got;
    std::set<Coweight> cur;
    for (const auto& p : pts) {
      got.insert(p.coweight.coords());
      cur.insert(p.coweight);
    }
    r.expect(scan == wider, "A2 n=" + std::to_string(n) + ": oracle box too small");
    r.expect(got == scan && pts.size() == scan.size(),
             "A2 n=" + std::to_string(n) + ": " + std::to_string(pts.size()) + " vs oracle " + std::to_string(scan.size()));
    r.expect(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()), "A2 level " + std::to_string(n) + " not nested");
    prev = std::move(cur);
  }
  r.expect(gr_filtration_check(spec("A1"), Weight{1}, 10), "A1 filtration check");
  r.expect(gr_filtration_check(spec("A2"), Weight{1, 0}, 5), "A2 filtration check");
}

std::vector<Weight> random_multiset(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> size(0, 4);
  std::uniform_int_distribution<Int> coord(-3, 3);
  std::vector<Weight> out;
  for (int s = size(rng); s > 0;) {
    std::vector<Int> v(rank);
    for (auto& x : v) x = coord(rng);
    if (Weight(v).is_zero()) continue;
    out.emplace_back(v);
    --s;
  }
  return out;
}

void euler_laws(Report& r) {
  std::mt19937_64 rng(20240601);
  for (Theory th : {Theory::H, Theory::K, Theory::MU})
    for (int k = 0; k < 200; ++k) {
      const std::size_t rank = 1 + static_cast<std::size_t>(k % 3);
      const auto A = random_multiset(rng, rank), B = random_multiset(rng, rank);
      auto AB = A;
      AB.insert(AB.end(), B.begin(), B.end());
      r.expect(euler_class(th, AB, rank) == multiply(euler_class(th, A, rank), euler_class(th, B, rank)),
               std::string(to_string(th)) + ": Whitney fails on pair " + std::to_string(k));
    }
  for (Int i = -3; i <= 3; ++i)
    for (Int j = -3; j <= 3; ++j)
      for (Int k = -3; k <= 3; ++k) {
        const Weight mu{i, j, k};
        if (mu.is_zero()) continue;
        const std::vector<Weight> one{mu};
        LaurentPolynomial expect = LaurentPolynomial::constant(3, 1);
        expect.add_term({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}, -1);
        const auto ek = euler_K(one);
        r.expect(ek.value == expect && ek.degree == 2 && to_string(ek) == "1 - e^{" + str(mu.coords()) + "}",
                 "euler_K " + str(mu.coords()) + " = " + to_string(ek));
        for (int d : {2, 4, 6})
          r.expect(specialize_additive(euler_MU(one, FormalGroupLaw(d))) == euler_H(one),
                   "euler_MU " + str(mu.coords()) + " at D=" + std::to_string(d));
      }
}

void fgl_soundness(Report& r) {
  for (int d : {2, 4, 6}) {
    const FormalGroupLaw f(d);
    const auto X = MUElement::chern(3, f, 0), Y = MUElement::chern(3, f, 1), Z = MUElement::chern(3, f, 2);
    const auto zero = MUElement(3, f);
    const std::string tag = "D=" + std::to_string(d);
    r.expect(fgl_sum(fgl_sum(X, Y, f), Z, f) == fgl_sum(X, fgl_sum(Y, Z, f), f), tag + ": associativity");
    r.expect(fgl_sum(X, zero, f) == X && fgl_sum(zero, X, f) == X, tag + ": unit");
    r.expect(fgl_sum(X, Y, f) == fgl_sum(Y, X, f), tag + ": commutativity");
    r.expect(fgl_sum(X, fgl_multiple(-1, X, f), f).is_zero(), tag + ": [-1] is not an inverse");
    r.expect(fgl_sum(X, fgl_multiple(-1, X, f), f).precision() > f.max_x_degree(), tag + ": inverse checked too coarsely");
  }
}

std::vector<FlagSpec> shipped_flags() {
  std::vector<FlagSpec> out;
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2"}) {
    const auto s = spec(t);
    out.push_back({s, {}});
    for (int i = 0; i < s.rank; ++i) out.push_back({s, {i}});
  }
  return out;
}

std::string flag_tag(const FlagSpec& fs) {
  std::string p;
  for (int i : fs.parabolic) p += std::to_string(i + 1);
  return fs.spec.name() + "/P{" + p + "}";
}

void hypothesis_enforcement(Report& r) {
  for (const auto& fs : shipped_flags()) {
    const auto m = flag_model(fs);
    for (Theory th : {Theory::H, Theory::K, Theory::MU}) {
      const TheoryOptions opts{th, 6};
      const auto poset = bb_stratify(m, generic_coweight(m), opts);
      try {
        assemble_module(poset, th);
      } catch (const Error& e) {
        r.expect(false, flag_tag(fs) + " " + std::string(to_string(th)) + ": " + e.what());
        continue;
      }
      // Replace one normal weight of the deepest stratum by zero.
      const Coweight lam = generic_coweight(m);
      for (std::size_t i = 0; i < m.points.size(); ++i) {
        std::vector<Weight> normal;
        for (const auto& w : m.points[i].tangent_weights)
          if (pairing(lam, w) < 0) normal.push_back(w);
        if (normal.empty()) continue;
        normal.back() = Weight::zero(m.rank);
        auto broken = poset;
        broken.set_payload(broken.index_of(m.points[i].label),
                           {static_cast<int>(normal.size()), euler_product(th, normal, m.rank, FormalGroupLaw(6))});
        ErrorCode code = ErrorCode::ParseError;
        bool thrown = false;
        try {
          assemble_module(broken, th);
        } catch (const Error& e) {
          thrown = true;
          code = e.code();
        }
        r.expect(thrown && code == ErrorCode::ZeroDivisorEulerClass,
                 flag_tag(fs) + " " + std::string(to_string(th)) + ": zero weight at " + m.points[i].label + " accepted");
        break;
      }
    }
  }
}

void direct_limit(Report& r) {
  const std::vector<std::pair<const char*, Weight>> cases{{"A1", Weight{1}}, {"A2", Weight{1, 0}}};
  for (const auto& [t, alpha] : cases) {
    const auto p = gr_limit_module(spec(t), alpha, 4, Theory::H);
    r.expect(diagrams_commute(p), std::string(t) + ": diagrams do not commute");
    r.expect(p.restrictions_surjective, std::string(t) + ": restrictions not surjective");
    r.expect(p.levels.size() == 5, std::string(t) + ": level count");
    for (const auto& l : p.levels) {
      r.expect(l.rank == gr_level_count(spec(t), alpha, l.n), std::string(t) + ": rank at level " + std::to_string(l.n));
      r.expect(l.rank == l.labels.size(), std::string(t) + ": labels at level " + std::to_string(l.n));
    }
    for (std::size_t n = 0; n + 1 < p.levels.size(); ++n) {
      const auto& lo = p.levels[n].labels;
      const std::set<std::string> lo_set(lo.begin(), lo.end());
      const std::set<std::string> hi_set(p.levels[n + 1].labels.begin(), p.levels[n + 1].labels.end());
      r.expect(lo_set.size() == lo.size() && std::includes(hi_set.begin(), hi_set.end(), lo_set.begin(), lo_set.end()),
               std::string(t) + ": labels not nested at " + std::to_string(n));
    }
  }
}

struct Invariants {
  std::size_t rank;
  std::multiset<int> shifts;
  std::multiset<std::string> classes;
  bool operator==(const Invariants&) const = default;
};

Invariants invariants(const GradedModuleDecomposition& d) {
  Invariants inv{d.rank(), {}, {}};
  for (const auto& g : d.generators) {
    inv.shifts.insert(g.shift);
    inv.classes.insert(g.label + "|" + to_string(g.cls));
  }
  return inv;
}

std::size_t check_all_extensions(Report& r, const StratumPoset& poset, Theory th, const std::string& tag) {
  std::vector<std::vector<bool>> less(poset.size(), std::vector<bool>(poset.size()));
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b) less[a][b] = poset.less(a, b);
  const auto reference = invariants(assemble_module(poset, th));
  const auto all = oracle::all_linear_extensions(less);
  r.expect(!all.empty(), tag + ": no linear extension");
  for (const auto& order : all) r.expect(invariants(assemble_module(poset, th, order)) == reference, tag + ": differs");
  return all.size();
}

void order_independence(Report& r, std::size_t& posets, std::size_t& extensions) {
  for (const auto& fs : shipped_flags()) {
    if (flag_fixed_points(fs).size() > 8) continue;
    const auto m = flag_model(fs);
    for (Theory th : {Theory::H, Theory::K, Theory::MU}) {
      extensions += check_all_extensions(r, bb_stratify(m, generic_coweight(m), {th, 6}), th, flag_tag(fs));
      ++posets;
      auto bare = m;
      bare.closure_covers.reset();
      bare.coweight.reset();
      extensions += check_all_extensions(r, bb_stratify(bare, generic_coweight(bare), {th, 6}), th, flag_tag(fs) + " bare");
      ++posets;
    }
  }
  std::mt19937_64 rng(8);
  for (int k = 0; k < 240; ++k) {
    const auto th = static_cast<Theory>(k % 3);
    const auto n = 1 + static_cast<std::size_t>(k % 8);
    extensions += check_all_extensions(r, fixtures::random_poset(rng, n, th), th, "random poset " + std::to_string(k));
    ++posets;
  }
}

}  // namespace

int main() {
  int failed = 0;
  auto criterion = [&](int id, const std::string& name, double limit_s, const std::function<std::string(Report&)>& body) {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    std::string extra;
    try {
      extra = body(r);
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0) r.expect(secs < limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    const bool ok = r.failures == 0;
    failed += ok ? 0 : 1;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << " (" << time.str() << " s" << extra << ")";
    if (!ok) std::cout << ": " << r.detail.str();
    std::cout << std::endl;
  };

  criterion(1, "Weyl-group orders match the closure oracle", 1.0, [](Report& r) {
    weyl_orders(r);
    return std::string();
  });
  criterion(2, "flag module ranks equal |W/W_P| and series match length enumeration", 5.0, [](Report& r) {
    flag_ranks(r);
    return std::string();
  });
  criterion(3, "affine Grassmannian level counts and nesting", 10.0, [](Report& r) {
    gr_counts(r);
    return std::string();
  });
  criterion(4, "Euler-class laws in H, K and MU", 0, [](Report& r) {
    euler_laws(r);
    return std::string();
  });
  criterion(5, "formal group law soundness for D = 2, 4, 6", 0, [](Report& r) {
    fgl_soundness(r);
    return std::string();
  });
  criterion(6, "zero-divisor Euler classes are rejected, shipped instances pass", 0, [](Report& r) {
    hypothesis_enforcement(r);
    return std::string();
  });
  criterion(7, "direct-limit bookkeeping for A1 and A2 up to level 4", 5.0, [](Report& r) {
    direct_limit(r);
    return std::string();
  });
  criterion(8, "assembly invariants agree across all linear extensions", 0, [](Report& r) {
    std::size_t posets = 0, extensions = 0;
    order_independence(r, posets, extensions);
    return ", " + std::to_string(posets) + " posets, " + std::to_string(extensions) + " extensions";
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
