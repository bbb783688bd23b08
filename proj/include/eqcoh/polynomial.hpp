#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "eqcoh/lattice.hpp"

namespace eqcoh {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lex order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  }
};

// Sparse polynomial with integer coefficients. Zero coefficients are never
// stored. With AllowNegative the exponents may be negative (Laurent).
template <bool AllowNegative>
class SparsePolynomial {
 public:
  using Terms = std::map<Exponents, BigInt, GradedLexLess>;

  explicit SparsePolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static SparsePolynomial constant(std::size_t nvars, const BigInt& c) {
    SparsePolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static SparsePolynomial monomial(Exponents e, const BigInt& c = 1) {
    SparsePolynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }
  static SparsePolynomial variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(Exponents e, const BigInt& c) {
    if (e.size() != nvars_) throw Error(ErrorCode::RankMismatch, "monomial has wrong number of variables");
    if constexpr (!AllowNegative) {
      if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("negative exponent in polynomial");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(SparsePolynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.check(b);
    SparsePolynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  /// Degree of the monomials if all share one total degree; -1 for zero or
  /// inhomogeneous polynomials.
  int homogeneous_degree() const {
    if (terms_.empty()) return -1;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return -1;
    return d;
  }

 private:
  void check(const SparsePolynomial& o) const {
    if (o.nvars_ != nvars_)
      throw Error(ErrorCode::RankMismatch, "polynomials in " + std::to_string(nvars_) + " and " +
                                               std::to_string(o.nvars_) + " variables");
  }

  std::size_t nvars_;
  Terms terms_;
};

using IntPolynomial = SparsePolynomial<false>;
using LaurentPolynomial = SparsePolynomial<true>;

/// Canonical text: monomials in descending graded-lex order, variables named
/// by `names` (x1^2*x2). Laurent polynomials render each monomial as e^{(n1,...,nr)}.
std::string to_string(const IntPolynomial& p, const std::vector<std::string>& names);
std::string to_string(const IntPolynomial& p);  // variables x1..xr
std::string to_string(const LaurentPolynomial& p);

}  // namespace eqcoh
