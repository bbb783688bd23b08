#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqcoh/coefficient_rings.hpp"
#include "eqcoh/stratification.hpp"

namespace eqcoh {

struct FixedPointData {
  std::string label;
  std::vector<Weight> tangent_weights;
};

/// Combinatorial shadow of a smooth projective T-variety with isolated fixed
/// points: tangent weights at each fixed point, and optionally the closure
/// order of the Bialynicki-Birula strata for `coweight`.
struct VarietyModel {
  std::size_t rank = 0;  // torus rank
  int dimension = 0;
  std::vector<FixedPointData> points;
  /// (lower, upper) pairs; absent means "order by codimension".
  std::optional<std::vector<std::pair<std::string, std::string>>> closure_covers;
  /// One-parameter subgroup the closure order belongs to, if known.
  std::optional<Coweight> coweight;
};

/// Throws InvalidModel on duplicate labels, wrong multiset sizes or ranks.
void validate_model(const VarietyModel& model);

struct TheoryOptions {
  Theory theory = Theory::H;
  int mu_truncation = 6;
};

/// A coweight pairing nonzero with every tangent weight, compatible with the
/// closure order when one is given. Uses model.coweight if present, otherwise
/// searches max-norm shells 1..R with R = max(1, ceil(N/2)), N the number of
/// distinct weight lines: N hyperplanes cannot cover the box [-R, R]^r.
Coweight generic_coweight(const VarietyModel& model);

/// Stratum dimensions, codimensions and Euler payloads for `lam`.
StratumPoset bb_stratify(const VarietyModel& model, const Coweight& lam, const TheoryOptions& opts = {});

GradedModuleDecomposition module_structure(const VarietyModel& model, const TheoryOptions& opts = {});

struct RelativeFreenessReport {
  std::size_t outer_rank = 0;
  std::size_t inner_rank = 0;
  std::size_t relative_rank = 0;
  bool shifts_even = false;
  bool restriction_surjective = false;

  bool ok() const { return shifts_even && restriction_surjective && relative_rank + inner_rank == outer_rank; }
};

/// Bookkeeping form of the relative statement for a closed invariant
/// subvariety given by a down-set of fixed points. Throws NotClosed.
RelativeFreenessReport check_relative_freeness(const VarietyModel& outer, const std::set<std::string>& inner_labels,
                                               const TheoryOptions& opts = {});

}  // namespace eqcoh
