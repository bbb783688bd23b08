#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eqcoh/lattice.hpp"
#include "eqcoh/polynomial.hpp"

namespace eqcoh {

enum class Theory { H = 0, K = 1, MU = 2 };

std::string_view to_string(Theory t);
Theory parse_theory(std::string_view s);  // "H", "K", "MU"; throws ParseError

/// Element of R(T) carrying its even cohomological degree; odd degrees vanish.
struct KClass {
  LaurentPolynomial value;
  int degree = 0;

  friend bool operator==(const KClass&, const KClass&) = default;
  friend KClass operator*(const KClass& a, const KClass& b) { return {a.value * b.value, a.degree + b.degree}; }
};

/// Truncation data for the universal formal group law
///   F(x, y) = x + y + sum_{i,j>=1} a_ij x^i y^j,   a_ij = a_ji,
/// kept modulo monomials of x-degree > D/2. The Lazard generators a_ij with
/// i + j <= D/2 are opaque symbols of cohomological degree -2(i+j-1).
class FormalGroupLaw {
 public:
  /// D must be 2, 4 or 6; beyond x-degree 3 free symmetric coefficients are no
  /// longer associative (the Lazard ring acquires relations).
  explicit FormalGroupLaw(int truncation = 6);

  int truncation() const noexcept { return truncation_; }
  int max_x_degree() const noexcept { return truncation_ / 2; }
  const std::vector<std::pair<int, int>>& generators() const noexcept { return generators_; }
  std::size_t generator_index(int i, int j) const;
  int generator_degree(std::size_t k) const {
    return -2 * (generators_[k].first + generators_[k].second - 1);
  }

  friend bool operator==(const FormalGroupLaw& a, const FormalGroupLaw& b) { return a.truncation_ == b.truncation_; }

 private:
  int truncation_;
  std::vector<std::pair<int, int>> generators_;
};

/// Element of the truncated model of MU_T^*(pt): a polynomial in the Chern
/// variables x_1..x_r and the Lazard generators. Terms of x-degree >= precision()
/// are unknown and never stored; exact elements carry kExact.
class MUElement {
 public:
  static constexpr int kExact = 1 << 20;

  MUElement(std::size_t rank, const FormalGroupLaw& fgl);  // zero, exact

  static MUElement constant(std::size_t rank, const FormalGroupLaw& fgl, const BigInt& c);
  static MUElement chern(std::size_t rank, const FormalGroupLaw& fgl, std::size_t j);
  static MUElement lazard(std::size_t rank, const FormalGroupLaw& fgl, int i, int j);

  std::size_t rank() const noexcept { return rank_; }
  FormalGroupLaw fgl() const { return FormalGroupLaw(truncation_); }
  int truncation() const noexcept { return truncation_; }
  int precision() const noexcept { return precision_; }
  /// Exponent vectors are (x_1..x_r, a-generators in FormalGroupLaw order).
  const IntPolynomial& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.is_zero(); }

  int x_degree(const Exponents& e) const;
  /// Smallest x-degree of a stored term (precision() for zero).
  int valuation() const;
  /// Cohomological degree if homogeneous.
  std::optional<int> homogeneous_degree() const;

  void add_term(Exponents e, const BigInt& c);
  /// Drops terms of x-degree >= p and lowers precision to p.
  MUElement truncated(int p) const;

  MUElement& operator+=(const MUElement& o);
  MUElement& operator-=(const MUElement& o);
  friend MUElement operator+(MUElement a, const MUElement& b) { return a += b; }
  friend MUElement operator-(MUElement a, const MUElement& b) { return a -= b; }
  friend MUElement operator-(MUElement a);
  friend MUElement operator*(const MUElement& a, const MUElement& b);

  /// Equality of the known parts: terms below the smaller precision agree.
  friend bool operator==(const MUElement& a, const MUElement& b);

 private:
  void check(const MUElement& o) const;

  std::size_t rank_;
  int truncation_;
  std::size_t ngens_;
  int precision_ = kExact;
  IntPolynomial terms_;
};

struct RingElement {
  std::variant<IntPolynomial, KClass, MUElement> value;

  Theory theory() const noexcept { return static_cast<Theory>(value.index()); }
  bool is_zero() const;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// Product in the common ring; throws TheoryMismatch.
RingElement multiply(const RingElement& a, const RingElement& b);

IntPolynomial linear_form(const Weight& mu);  // sum mu_j x_j

IntPolynomial euler_H(std::span<const Weight> weights);
KClass euler_K(std::span<const Weight> weights);
MUElement euler_MU(std::span<const Weight> weights, const FormalGroupLaw& fgl);

/// Product of per-weight classes without the zero-weight check: a zero weight
/// contributes the zero class, as the Euler class of a trivial line does.
RingElement euler_product(Theory theory, std::span<const Weight> weights, std::size_t rank,
                          const FormalGroupLaw& fgl = FormalGroupLaw());
/// Checked Euler class; throws ZeroWeight.
RingElement euler_class(Theory theory, std::span<const Weight> weights, std::size_t rank,
                        const FormalGroupLaw& fgl = FormalGroupLaw());

MUElement fgl_sum(const MUElement& a, const MUElement& b, const FormalGroupLaw& fgl);
MUElement fgl_inverse(const MUElement& x, const FormalGroupLaw& fgl);
MUElement fgl_multiple(Int n, const MUElement& x, const FormalGroupLaw& fgl);

/// a_ij -> 0: polynomial in x_1..x_r.
IntPolynomial specialize_additive(const MUElement& e);
/// a_11 -> -beta, other a_ij -> 0: polynomial in x_1..x_r, beta (beta last).
IntPolynomial specialize_multiplicative(const MUElement& e);
/// beta -> 1, x_j -> 1 - e^{eps_j}; maps the multiplicative law onto K-theory.
LaurentPolynomial multiplicative_to_laurent(const IntPolynomial& p);

/// H, K: nonzero (both rings are domains). MU: the additive specialization is
/// nonzero, a sufficient condition.
bool is_nonzero_divisor(const RingElement& e);

/// Cohomological degree when homogeneous.
std::optional<int> degree(const RingElement& e);

std::string to_string(const KClass& k);
std::string to_string(const MUElement& e);
std::string to_string(const RingElement& e);

}  // namespace eqcoh
