#pragma once

#include <vector>

#include "eqcoh/bb_theory.hpp"
#include "eqcoh/root_system.hpp"

namespace eqcoh {

struct FlagSpec {
  RootSystemSpec spec;
  std::vector<int> parabolic;  // 0-based simple-root indices generating W_P
};

/// Partial flag variety G/P together with its Weyl group.
class FlagVariety {
 public:
  explicit FlagVariety(const FlagSpec& fs);

  const FlagSpec& spec() const noexcept { return spec_; }
  const RootDatum& datum() const noexcept { return weyl_.datum(); }
  const WeylGroup& weyl() const noexcept { return weyl_; }

  /// Minimal-length coset representatives of W / W_P (group indices).
  const std::vector<std::size_t>& fixed_points() const noexcept { return points_; }
  /// Positive roots outside the parabolic subsystem.
  const std::vector<Weight>& unipotent_roots() const noexcept { return unipotent_; }
  int dimension() const noexcept { return static_cast<int>(unipotent_.size()); }

  /// {w(-beta) : beta positive, not in the parabolic subsystem}.
  std::vector<Weight> tangent_weights(const WeylElement& w) const;

  /// Model with Bruhat closure order and a dominant regular coweight, for which
  /// the stratum of w has dimension l(w) (so w0 W_P is the open cell).
  VarietyModel model() const;

 private:
  FlagSpec spec_;
  WeylGroup weyl_;
  std::vector<std::size_t> points_;
  std::vector<Weight> unipotent_;
};

std::vector<WeylElement> flag_fixed_points(const FlagSpec& fs);
std::vector<Weight> flag_tangent_weights(const FlagSpec& fs, const WeylElement& w);
VarietyModel flag_model(const FlagSpec& fs);

}  // namespace eqcoh
