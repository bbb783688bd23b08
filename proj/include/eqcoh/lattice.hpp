#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqcoh/error.hpp"

namespace eqcoh {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<Int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Integer vector in a fixed lattice basis. The tag keeps weights and coweights
// from being mixed up; they are paired, never added to each other.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  static LatticeVector zero(std::size_t rank) { return LatticeVector(std::vector<Int>(rank, 0)); }

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const noexcept {
    for (Int c : coords_)
      if (c != 0) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) {
    for (Int& c : a.coords_) c = -c;
    return a;
  }
  friend LatticeVector operator*(Int k, LatticeVector a) {
    for (Int& c : a.coords_) c *= k;
    return a;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  void check_rank(const LatticeVector& o) const {
    if (o.rank() != rank())
      throw Error(ErrorCode::RankMismatch, "lattice vectors of rank " + std::to_string(rank()) +
                                               " and " + std::to_string(o.rank()));
  }

  std::vector<Int> coords_;
};

struct WeightTag {};
struct CoweightTag {};

/// Character of the torus, in fundamental-weight coordinates (or, for a bare
/// torus without root datum, in the standard character basis).
using Weight = LatticeVector<WeightTag>;
/// Cocharacter, in the basis dual to the weight basis: coroot coordinates for a
/// simply-connected root datum.
using Coweight = LatticeVector<CoweightTag>;

/// <lam, mu>; a plain dot product because the two bases are dual.
Int pairing(const Coweight& lam, const Weight& mu);

std::string to_string(const std::vector<Int>& v);
template <class Tag>
std::string to_string(const LatticeVector<Tag>& v) { return to_string(v.coords()); }
template <class Tag>
std::ostream& operator<<(std::ostream& os, const LatticeVector<Tag>& v) { return os << to_string(v); }

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
/// Exact inverse of a square integer matrix; throws std::domain_error if singular.
RationalMatrix inverse(const IntMatrix& m);

}  // namespace eqcoh
