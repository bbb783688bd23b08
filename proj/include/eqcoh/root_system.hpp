#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqcoh/lattice.hpp"

namespace eqcoh {

struct RootSystemSpec {
  char family = 'A';  // one of A B C D G F (E is recognised and rejected)
  int rank = 1;

  /// Parses "A2", "b3", "G2". Throws UnsupportedType.
  static RootSystemSpec parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Root datum of a simply-connected group. Conventions:
///  - cartan[i][j] = <alpha_i^vee, alpha_j> (Bourbaki numbering);
///  - weights are in fundamental-weight coordinates, so alpha_j has coordinates
///    (cartan[0][j], ..., cartan[r-1][j]);
///  - coweights are in coroot coordinates, so alpha_i^vee is the unit vector e_i.
struct RootDatum {
  RootSystemSpec spec;
  IntMatrix cartan;
  std::vector<Weight> simple_roots;
  std::vector<Coweight> simple_coroots;
  std::vector<Weight> fundamental_weights;
  /// Positive roots sorted by height, then by simple-root coordinates.
  std::vector<Weight> positive_roots;
  /// Same roots, in simple-root coordinates.
  std::vector<std::vector<Int>> positive_roots_simple;

  std::size_t rank() const noexcept { return cartan.size(); }

  /// +1 for a positive root, -1 for a negative one, 0 if `mu` is not a root.
  int root_sign(const Weight& mu) const;

  /// <lam, alpha_i> for every simple root: fundamental-coweight coordinates.
  std::vector<Int> fundamental_coweight_coords(const Coweight& lam) const;
  /// Inverse of the above; throws NotInCorootLattice when the result is not integral.
  Coweight coweight_from_fundamental_coords(const std::vector<Int>& b) const;
  bool is_dominant(const Coweight& lam) const;
  bool is_dominant(const Weight& mu) const;

  /// A dominant regular coweight in the coroot lattice (primitive multiple of rho^vee).
  Coweight regular_dominant_coweight() const;

 private:
  friend RootDatum build_root_datum(const RootSystemSpec&);
  std::map<std::vector<Int>, int> root_signs_;
  RationalMatrix cartan_transpose_inverse_;
};

RootDatum build_root_datum(const RootSystemSpec& spec);

struct WeylElement {
  IntMatrix matrix;           // action on weight coordinates
  IntMatrix coweight_matrix;  // action on coroot coordinates
  std::vector<int> word;      // lexicographically smallest reduced word, 0-based generators
  int length = 0;

  std::string word_string() const;  // "e", "s1s2s1" (1-based)
};

Weight weyl_act_weight(const WeylElement& w, const Weight& mu);
Coweight weyl_act_coweight(const WeylElement& w, const Coweight& lam);

/// Finite Weyl group with elements ordered by (length, reduced word).
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& datum);

  const RootDatum& datum() const noexcept { return datum_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t rank() const noexcept { return datum_.rank(); }
  const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }

  std::size_t identity() const noexcept { return 0; }
  std::size_t longest() const noexcept { return elements_.size() - 1; }
  /// Index of s_gen * w.
  std::size_t left_multiply(std::size_t gen, std::size_t w) const { return left_[w * rank() + gen]; }
  /// Index of the element with this weight matrix; throws std::out_of_range.
  std::size_t index_of(const WeylElement& w) const;

  bool bruhat_leq(std::size_t u, std::size_t v) const;
  bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;

  /// Number of positive roots sent negative, counted from the matrix.
  int inversion_count(const WeylElement& w) const;

 private:
  RootDatum datum_;
  std::vector<WeylElement> elements_;
  std::vector<std::size_t> left_;
  std::map<IntMatrix, std::size_t> index_;
};

WeylGroup generate_weyl(const RootDatum& datum);

/// Unique element of maximal length in `elements`; throws IncompleteGroup if the
/// maximum is not attained by exactly one element.
const WeylElement& longest_element(std::span<const WeylElement> elements);

struct DominantRepresentative {
  Coweight coweight;
  std::size_t witness = 0;  // index in the group: witness * lam == coweight
};

DominantRepresentative dominant_representative(const Coweight& lam, const WeylGroup& weyl);

/// Minimal-length representatives of W / W_P, P given by 0-based simple-root indices.
std::vector<std::size_t> coset_representatives(const WeylGroup& weyl, const std::vector<int>& parabolic);

bool bruhat_leq(const WeylGroup& weyl, const WeylElement& u, const WeylElement& v);

}  // namespace eqcoh
