#include "eqcoh/stratification.hpp"

#include <bit>
#include <queue>

namespace eqcoh {

StratumPoset StratumPoset::from_covers(std::vector<std::string> labels,
                                       const std::vector<std::pair<std::string, std::string>>& covers,
                                       std::map<std::string, StratumPayload> payload) {
  StratumPoset p;
  p.labels_ = std::move(labels);
  const std::size_t n = p.labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!p.index_.emplace(p.labels_[i], i).second)
      throw Error(ErrorCode::NotAPartialOrder, "duplicate stratum label '" + p.labels_[i] + "'");

  std::vector<std::vector<std::size_t>> up(n);
  for (const auto& [lo, hi] : covers) {
    const std::size_t a = p.index_of(lo), b = p.index_of(hi);
    if (a == b) throw Error(ErrorCode::NotAPartialOrder, "relation '" + lo + "' < '" + lo + "'");
    up[a].push_back(b);
  }

  // Reflexive-transitive closure by DFS from every node; a path back to the
  // start means the relation has a cycle.
  p.words_ = (n + 63) / 64;
  p.up_.assign(n * p.words_, 0);
  auto set = [&](std::vector<std::uint64_t>& bits, std::size_t row, std::size_t col) {
    bits[row * p.words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  };
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    set(p.up_, s, s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : up[v]) {
        if (w == s) throw Error(ErrorCode::NotAPartialOrder, "cycle through '" + p.labels_[s] + "'");
        if (!p.leq(s, w)) {
          set(p.up_, s, w);
          stack.push_back(w);
        }
      }
    }
  }

  // a < b is a cover iff nothing lies strictly between: (up(a) & down(b)) == {a, b}.
  std::vector<std::uint64_t> down(n * p.words_, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(a, b)) set(down, b, a);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      std::size_t between = 0;
      for (std::size_t k = 0; k < p.words_; ++k)
        between += static_cast<std::size_t>(std::popcount(p.up_[a * p.words_ + k] & down[b * p.words_ + k]));
      if (between == 2) p.covers_.emplace_back(a, b);
    }

  p.payload_.assign(n, std::nullopt);
  for (auto& [label, pl] : payload) p.payload_[p.index_of(label)] = std::move(pl);
  return p;
}

std::size_t StratumPoset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorCode::UnknownLabel, "unknown stratum label '" + label + "'");
  return it->second;
}

Int PoincareSeries::at_one() const {
  Int s = 0;
  for (Int c : coeffs) s += c;
  return s;
}

std::string PoincareSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Int c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Int mag = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "q";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

bool is_open(const StratumPoset& poset, const std::set<std::string>& J) {
  std::vector<char> in(poset.size(), 0);
  for (const auto& l : J) in[poset.index_of(l)] = 1;
  for (std::size_t b = 0; b < poset.size(); ++b) {
    if (!in[b]) continue;
    for (std::size_t g = 0; g < poset.size(); ++g)
      if (poset.leq(b, g) && !in[g]) return false;
  }
  return true;
}

std::vector<std::size_t> linear_extension(const StratumPoset& poset) {
  // Kahn's algorithm on the Hasse diagram: the removed set is always an upset,
  // so a stratum is maximal among the rest once all its upper covers are gone.
  const std::size_t n = poset.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> lower(n);
  for (const auto& [lo, hi] : poset.covers()) {
    ++pending[lo];
    lower[hi].push_back(lo);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (pending[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t b = ready.top();
    ready.pop();
    order.push_back(b);
    for (std::size_t lo : lower[b])
      if (--pending[lo] == 0) ready.push(lo);
  }
  return order;
}

bool is_legal_extension(const StratumPoset& poset, const std::vector<std::size_t>& order) {
  const std::size_t n = poset.size();
  if (order.size() != n) return false;
  std::vector<char> removed(n, 0);
  for (std::size_t b : order) {
    if (b >= n || removed[b]) return false;
    for (std::size_t g = 0; g < n; ++g)
      if (poset.less(b, g) && !removed[g]) return false;
    removed[b] = 1;
  }
  return true;
}

GradedModuleDecomposition assemble_module(const StratumPoset& poset, Theory theory) {
  return assemble_module(poset, theory, linear_extension(poset));
}

GradedModuleDecomposition assemble_module(const StratumPoset& poset, Theory theory,
                                          const std::vector<std::size_t>& order) {
  if (!is_legal_extension(poset, order))
    throw Error(ErrorCode::IllegalExtension, "order is not a maximal-first linear extension");
  GradedModuleDecomposition dec;
  dec.theory = theory;
  dec.generators.reserve(order.size());
  for (std::size_t b : order) {
    const auto& label = poset.label(b);
    const auto& pl = poset.payload(b);
    if (!pl || !pl->euler) throw Error(ErrorCode::MissingPayload, "stratum '" + label + "' has no Euler class");
    if (pl->euler->theory() != theory)
      throw Error(ErrorCode::TheoryMismatch, "stratum '" + label + "' carries a " +
                                                 std::string(to_string(pl->euler->theory())) + " class");
    // Injectivity of multiplication by e_T(beta) is what splits the long exact
    // sequence of the pair into a short exact one.
    if (!is_nonzero_divisor(*pl->euler))
      throw Error(ErrorCode::ZeroDivisorEulerClass, "Euler class of stratum '" + label + "' is a zero divisor");
    const auto deg = degree(*pl->euler);
    if (pl->codim < 0 || !deg || *deg != 2 * pl->codim)
      throw Error(ErrorCode::DegreeMismatch, "stratum '" + label + "': Euler class degree does not match 2*codim " +
                                                 std::to_string(2 * pl->codim));
    dec.generators.push_back({label, 2 * pl->codim, *pl->euler});
  }
  return dec;
}

PoincareSeries poincare_series(const GradedModuleDecomposition& dec) {
  PoincareSeries s;
  for (const auto& g : dec.generators) {
    if (static_cast<std::size_t>(g.shift) >= s.coeffs.size()) s.coeffs.resize(g.shift + 1, 0);
    ++s.coeffs[g.shift];
  }
  return s;
}

bool check_stratification(const StratumPoset& poset, const std::map<std::string, std::set<std::string>>& closures) {
  for (const auto& [label, members] : closures) {
    poset.index_of(label);
    for (const auto& m : members) poset.index_of(m);
  }
  for (std::size_t b = 0; b < poset.size(); ++b) {
    auto it = closures.find(poset.label(b));
    if (it == closures.end()) return false;
    std::set<std::string> down;
    for (std::size_t g = 0; g < poset.size(); ++g)
      if (poset.leq(g, b)) down.insert(poset.label(g));
    if (down != it->second) return false;
  }
  return true;
}

}  // namespace eqcoh
