#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqcoh/coefficient_rings.hpp"
#include "eqcoh/kernels.hpp"
#include "eqcoh/root_system.hpp"

namespace eqcoh {

/// A T-fixed point t^mu of the affine Grassmannian, T = T_R x S^1 (the loop
/// rotation circle adds a lattice coordinate but does not change which points are fixed).
struct GrFixedPoint {
  Coweight coweight;      // mu, coroot coordinates
  Coweight dominant_rep;  // dominant conjugate of mu
  WeylElement witness;    // witness * mu == dominant_rep
  int level = 0;          // smallest n with t^mu in Gr_n: -<dominant_rep, w0 alpha>

  std::string label() const;  // "t^(1,-1)"
};

/// Gr of a simply-connected group filtered through the representation V(alpha).
class AffineGrassmannian {
 public:
  /// Throws InvalidAlpha unless alpha is dominant and nonzero.
  AffineGrassmannian(const RootSystemSpec& spec, const Weight& alpha);

  const RootDatum& datum() const noexcept { return weyl_.datum(); }
  const WeylGroup& weyl() const noexcept { return weyl_; }
  const Weight& alpha() const noexcept { return alpha_; }
  /// w0 alpha, the lowest weight of V(alpha).
  const Weight& lowest_weight() const noexcept { return lowest_; }
  /// Rank of the extended torus T_R x S^1.
  std::size_t extended_rank() const noexcept { return datum().rank() + 1; }

  /// Val(t^lam) = <lam, w0 alpha> for dominant lam; throws NotDominant.
  Int val(const Coweight& lam) const;

  /// Dominant coweights lam with <lam, w0 alpha> >= -n, from an exact
  /// per-coordinate bound b_i <= n / <omega_i^vee, -w0 alpha>.
  std::vector<Coweight> dominant_up_to(int n) const;

  /// (Gr_n)^T sorted by (level, coroot coordinates).
  std::vector<GrFixedPoint> fixed_points(int n, kernels::Exec exec = kernels::Exec::parallel) const;

 private:
  WeylGroup weyl_;
  Weight alpha_;
  Weight lowest_;
  std::vector<Rational> alpha_star_pairings_;  // <omega_i^vee, -w0 alpha>
};

Int val_coweight(const Coweight& lam, const Weight& alpha, const RootDatum& datum);

std::vector<GrFixedPoint> gr_fixed_points(const RootSystemSpec& spec, const Weight& alpha, int n);
std::size_t gr_level_count(const RootSystemSpec& spec, const Weight& alpha, int n);

/// Nesting of the fixed-point sets over levels 0..n_max, W-stability of each
/// level, and exhaustion: every coweight of the box [-n_max, n_max]^r whose
/// level is at most n_max appears.
bool gr_filtration_check(const RootSystemSpec& spec, const Weight& alpha, int n_max);

struct LevelRecord {
  int n = 0;
  std::size_t rank = 0;  // free rank of E_T^*(Gr_n) = |(Gr_n)^T|
  std::vector<std::string> labels;
};

/// pi_n : level n+1 -> level n. source_to_target[i] is the position in level n
/// of generator i of level n+1, or nullopt when it restricts to zero.
struct LevelProjection {
  int from = 0;
  std::vector<std::optional<std::size_t>> source_to_target;
};

/// The inverse system {E_T^*(Gr_n)}_n in bookkeeping form, together with the
/// index set of its limit, the product over all coweights.
struct LimitModulePresentation {
  Theory theory = Theory::H;
  std::string group;
  Weight alpha;
  std::size_t base_ring_rank = 0;
  std::vector<LevelRecord> levels;
  std::vector<LevelProjection> projections;
  std::string index_description;
  /// Restrictions are surjective, hence lim^1 vanishes; recorded, not recomputed.
  bool restrictions_surjective = false;
};

LimitModulePresentation gr_limit_module(const RootSystemSpec& spec, const Weight& alpha, int n_max, Theory theory);

/// For each consecutive pair: labels nested as a prefix, projections injective
/// on survivors and label-preserving, and restrict o psi_{n+1} == psi_n o pi_n
/// on every basis generator.
bool diagrams_commute(const LimitModulePresentation& p);

}  // namespace eqcoh
