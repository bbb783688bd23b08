// Serial versus OpenMP timings for the data-parallel kernels.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "eqcoh/kernels.hpp"

using namespace eqcoh;
using kernels::Exec;

namespace {

double best_of(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void compare(const std::string& kernel, const std::string& input, int reps, const std::function<void(Exec)>& run) {
  const double s = best_of(reps, [&] { run(Exec::serial); });
  const double p = best_of(reps, [&] { run(Exec::parallel); });
  std::printf("%-16s %-22s %10.4f %10.4f %8.2fx\n", kernel.c_str(), input.c_str(), s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial versus parallel kernel timings"};
  bool quick = false;
  int reps = 3;
  app.add_flag("--quick", quick, "small inputs, one repetition");
  app.add_option("--reps", reps, "repetitions per measurement (best is reported)")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  if (quick) reps = 1;

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-16s %-22s %10s %10s %9s\n", "kernel", "input", "serial s", "parallel s", "speedup");
  bool ok = true;

  const std::vector<const char*> groups = quick ? std::vector<const char*>{"B3"}
                                                : std::vector<const char*>{"B3", "C3", "D4", "F4"};
  for (const char* t : groups) {
    const WeylGroup w(build_root_datum(RootSystemSpec::parse(t)));
    std::vector<std::size_t> all(w.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::pair<std::size_t, std::size_t>> out[2];
    compare("bruhat_covers", std::string(t) + " |W|=" + std::to_string(w.size()), reps, [&](Exec e) {
      out[e == Exec::parallel] = kernels::bruhat_covers(w, all, e);
    });
    ok &= out[0] == out[1];
  }

  for (const char* t : quick ? std::vector<const char*>{"A3"} : std::vector<const char*>{"A3", "B4", "D4"}) {
    const WeylGroup w(build_root_datum(RootSystemSpec::parse(t)));
    const int box = quick ? 2 : 4;
    std::set<Coweight> reps_set;
    std::vector<Int> v(w.rank(), -box);
    while (true) {
      reps_set.insert(dominant_representative(Coweight(v), w).coweight);
      std::size_t i = 0;
      while (i < v.size() && ++v[i] > box) v[i++] = -box;
      if (i == v.size()) break;
    }
    const std::vector<Coweight> dom(reps_set.begin(), reps_set.end());
    std::vector<std::vector<Coweight>> out[2];
    compare("coweight_orbits", std::string(t) + " " + std::to_string(dom.size()) + " dominant", reps, [&](Exec e) {
      out[e == Exec::parallel] = kernels::coweight_orbits(w, dom, e);
    });
    ok &= out[0] == out[1];
  }

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> c(-3, 3);
  const std::size_t count = quick ? 200 : 4000;
  std::vector<std::vector<Weight>> batches(count);
  for (auto& b : batches)
    for (int j = 0; j < 4; ++j) {
      Weight wgt{c(rng), c(rng), c(rng)};
      if (!wgt.is_zero()) b.push_back(wgt);
    }
  const FormalGroupLaw fgl(6);
  for (Theory th : {Theory::H, Theory::K, Theory::MU}) {
    const std::span<const std::vector<Weight>> input(batches.data(), th == Theory::MU ? count / 8 : count);
    std::vector<RingElement> out[2];
    compare("euler_batch", std::string(to_string(th)) + " " + std::to_string(input.size()) + " x4", reps, [&](Exec e) {
      out[e == Exec::parallel] = kernels::euler_batch(th, input, 3, fgl, e);
    });
    ok &= out[0] == out[1];
  }
  if (!ok) std::printf("serial and parallel results differ\n");
  return ok ? 0 : 1;
}
