#include <algorithm>

#include "eqcoh/kernels.hpp"

namespace eqcoh::kernels::serial {

std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const WeylGroup& weyl,
                                                               std::span<const std::size_t> elements) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    const int lv = weyl[elements[j]].length;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (weyl[elements[i]].length + 1 == lv && weyl.bruhat_leq(elements[i], elements[j])) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Coweight>> coweight_orbits(const WeylGroup& weyl, std::span<const Coweight> dominant) {
  std::vector<std::vector<Coweight>> out;
  out.reserve(dominant.size());
  for (const auto& lam : dominant) out.push_back(coweight_orbit(weyl, lam));
  return out;
}

std::vector<RingElement> euler_batch(Theory theory, std::span<const std::vector<Weight>> multisets, std::size_t rank,
                                     const FormalGroupLaw& fgl) {
  std::vector<RingElement> out;
  out.reserve(multisets.size());
  for (const auto& m : multisets) out.push_back(euler_product(theory, m, rank, fgl));
  return out;
}

}  // namespace eqcoh::kernels::serial
