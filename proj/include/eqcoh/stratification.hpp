#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqcoh/coefficient_rings.hpp"

namespace eqcoh {

struct StratumPayload {
  int codim = 0;
  std::optional<RingElement> euler;
};

/// Finite poset of strata under the closure order (beta <= gamma iff X_beta is
/// contained in the closure of X_gamma), with per-stratum payload.
class StratumPoset {
 public:
  StratumPoset() = default;

  /// `covers` are pairs (lower, upper). Throws UnknownLabel, NotAPartialOrder.
  static StratumPoset from_covers(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>>& covers,
                                  std::map<std::string, StratumPayload> payload = {});

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;  // throws UnknownLabel

  bool leq(std::size_t a, std::size_t b) const { return (up_[a * words_ + b / 64] >> (b % 64)) & 1U; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  /// Hasse diagram as (lower, upper) index pairs.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }

  const std::optional<StratumPayload>& payload(std::size_t i) const { return payload_[i]; }
  void set_payload(std::size_t i, StratumPayload p) { payload_[i] = std::move(p); }

  /// Free-form remarks raised while building the poset (e.g. assumed orders).
  std::vector<std::string> notes;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;  // row a: bitset of {b : a <= b}
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::optional<StratumPayload>> payload_;
};

struct Generator {
  std::string label;
  int shift = 0;  // 2 * codim
  RingElement cls;
};

/// E_T^*(X) as a direct sum of shifted free rank-one modules, one per stratum,
/// each generated by the restricted Euler class (the principal ideal <e_T(beta)>).
struct GradedModuleDecomposition {
  Theory theory = Theory::H;
  std::vector<Generator> generators;

  std::size_t rank() const noexcept { return generators.size(); }
};

/// Integer polynomial in q, coeffs[k] multiplies q^k.
struct PoincareSeries {
  std::vector<Int> coeffs;

  Int at_one() const;
  std::string to_string() const;  // "1 + 2q^2 + 2q^4 + q^6"
  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
};

/// True iff J is upward closed.
bool is_open(const StratumPoset& poset, const std::set<std::string>& J);

/// Repeatedly removes a maximal remaining stratum, smallest label position first.
std::vector<std::size_t> linear_extension(const StratumPoset& poset);

/// True iff each element is maximal among those not yet listed.
bool is_legal_extension(const StratumPoset& poset, const std::vector<std::size_t>& order);

GradedModuleDecomposition assemble_module(const StratumPoset& poset, Theory theory);
/// Same, walking a caller-supplied order; throws IllegalExtension if it is not one.
GradedModuleDecomposition assemble_module(const StratumPoset& poset, Theory theory,
                                          const std::vector<std::size_t>& order);

PoincareSeries poincare_series(const GradedModuleDecomposition& dec);

/// True iff closure(beta) equals the down-set of beta for every stratum.
bool check_stratification(const StratumPoset& poset, const std::map<std::string, std::set<std::string>>& closures);

}  // namespace eqcoh
