#pragma once

// Shared generators of test inputs.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "eqcoh/stratification.hpp"

namespace fixtures {

/// Random poset on n labels; p_i sits below p_j only when i < j, and the
/// codimension n - i decreases upward. Payloads are Euler classes of random
/// nonzero rank-2 weights in `theory`, of matching degree.
inline eqcoh::StratumPoset random_poset(std::mt19937_64& rng, std::size_t n, eqcoh::Theory theory = eqcoh::Theory::H) {
  using namespace eqcoh;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) == 0) covers.emplace_back(labels[i], labels[j]);
  std::map<std::string, StratumPayload> pay;
  std::uniform_int_distribution<Int> w(-2, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto codim = static_cast<int>(n - i);
    std::vector<Weight> ws;
    while (ws.size() < static_cast<std::size_t>(codim)) {
      Weight v{w(rng), w(rng)};
      if (!v.is_zero()) ws.push_back(v);
    }
    pay[labels[i]] = {codim, euler_class(theory, ws, 2, FormalGroupLaw(4))};
  }
  return StratumPoset::from_covers(labels, covers, pay);
}

}  // namespace fixtures
