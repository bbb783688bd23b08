#include "eqcoh/kernels.hpp"

#include <set>

namespace eqcoh::kernels {

std::vector<Coweight> coweight_orbit(const WeylGroup& weyl, const Coweight& lam) {
  const RootDatum& d = weyl.datum();
  std::set<Coweight> seen{lam};
  std::vector<Coweight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Coweight> next;
    for (const auto& c : frontier) {
      const auto b = d.fundamental_coweight_coords(c);
      for (std::size_t i = 0; i < d.rank(); ++i) {
        if (b[i] == 0) continue;
        std::vector<Int> s = c.coords();
        s[i] -= b[i];
        Coweight r(std::move(s));
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const WeylGroup& weyl,
                                                               std::span<const std::size_t> elements, Exec exec) {
  return exec == Exec::serial ? serial::bruhat_covers(weyl, elements) : parallel::bruhat_covers(weyl, elements);
}

std::vector<std::vector<Coweight>> coweight_orbits(const WeylGroup& weyl, std::span<const Coweight> dominant,
                                                   Exec exec) {
  return exec == Exec::serial ? serial::coweight_orbits(weyl, dominant) : parallel::coweight_orbits(weyl, dominant);
}

std::vector<RingElement> euler_batch(Theory theory, std::span<const std::vector<Weight>> multisets, std::size_t rank,
                                     const FormalGroupLaw& fgl, Exec exec) {
  return exec == Exec::serial ? serial::euler_batch(theory, multisets, rank, fgl)
                              : parallel::euler_batch(theory, multisets, rank, fgl);
}

}  // namespace eqcoh::kernels
