#include "eqcoh/coefficient_rings.hpp"

#include <algorithm>

namespace eqcoh {

std::string_view to_string(Theory t) {
  switch (t) {
    case Theory::H: return "H";
    case Theory::K: return "K";
    case Theory::MU: return "MU";
  }
  return "?";
}

Theory parse_theory(std::string_view s) {
  if (s == "H" || s == "h") return Theory::H;
  if (s == "K" || s == "k") return Theory::K;
  if (s == "MU" || s == "mu") return Theory::MU;
  throw Error(ErrorCode::ParseError, "unknown theory '" + std::string(s) + "' (expected H, K or MU)");
}

// ---------------------------------------------------------------------------
// Formal group law

FormalGroupLaw::FormalGroupLaw(int truncation) : truncation_(truncation) {
  if (truncation != 2 && truncation != 4 && truncation != 6)
    throw Error(ErrorCode::UnsupportedTruncation,
                "FGL truncation degree must be 2, 4 or 6 (got " + std::to_string(truncation) + ")");
  const int m = truncation / 2;
  for (int s = 2; s <= m; ++s)
    for (int i = 1; i <= s / 2; ++i) generators_.emplace_back(i, s - i);
}

std::size_t FormalGroupLaw::generator_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (std::size_t k = 0; k < generators_.size(); ++k)
    if (generators_[k] == std::pair{i, j}) return k;
  throw std::out_of_range("a_" + std::to_string(i) + std::to_string(j) + " is beyond the truncation");
}

// ---------------------------------------------------------------------------
// MUElement

MUElement::MUElement(std::size_t rank, const FormalGroupLaw& fgl)
    : rank_(rank), truncation_(fgl.truncation()), ngens_(fgl.generators().size()), terms_(rank + ngens_) {}

MUElement MUElement::constant(std::size_t rank, const FormalGroupLaw& fgl, const BigInt& c) {
  MUElement e(rank, fgl);
  e.add_term(Exponents(rank + e.ngens_, 0), c);
  return e;
}

MUElement MUElement::chern(std::size_t rank, const FormalGroupLaw& fgl, std::size_t j) {
  MUElement e(rank, fgl);
  Exponents x(rank + e.ngens_, 0);
  x.at(j) = 1;
  e.add_term(std::move(x), 1);
  return e;
}

MUElement MUElement::lazard(std::size_t rank, const FormalGroupLaw& fgl, int i, int j) {
  MUElement e(rank, fgl);
  Exponents x(rank + e.ngens_, 0);
  x[rank + fgl.generator_index(i, j)] = 1;
  e.add_term(std::move(x), 1);
  return e;
}

int MUElement::x_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < rank_; ++i) d += e[i];
  return d;
}

int MUElement::valuation() const {
  int v = precision_;
  for (const auto& [e, c] : terms_.terms()) v = std::min(v, x_degree(e));
  return v;
}

std::optional<int> MUElement::homogeneous_degree() const {
  if (terms_.is_zero()) return std::nullopt;
  const FormalGroupLaw f(truncation_);
  std::optional<int> d;
  for (const auto& [e, c] : terms_.terms()) {
    int de = 2 * x_degree(e);
    for (std::size_t k = 0; k < ngens_; ++k) de += f.generator_degree(k) * e[rank_ + k];
    if (d && *d != de) return std::nullopt;
    d = de;
  }
  return d;
}

void MUElement::add_term(Exponents e, const BigInt& c) {
  if (x_degree(e) >= precision_) return;
  terms_.add_term(std::move(e), c);
}

MUElement MUElement::truncated(int p) const {
  MUElement out(rank_, FormalGroupLaw(truncation_));
  out.precision_ = std::min(p, precision_);
  for (const auto& [e, c] : terms_.terms()) out.add_term(e, c);
  return out;
}

void MUElement::check(const MUElement& o) const {
  if (o.truncation_ != truncation_)
    throw Error(ErrorCode::TruncationMismatch, "MU elements with truncation " + std::to_string(truncation_) +
                                                   " and " + std::to_string(o.truncation_));
  if (o.rank_ != rank_) throw Error(ErrorCode::RankMismatch, "MU elements of different rank");
}

MUElement& MUElement::operator+=(const MUElement& o) {
  check(o);
  precision_ = std::min(precision_, o.precision_);
  for (const auto& [e, c] : o.terms_.terms()) terms_.add_term(e, c);
  *this = truncated(precision_);
  return *this;
}

MUElement& MUElement::operator-=(const MUElement& o) { return *this += -o; }

MUElement operator-(MUElement a) {
  a.terms_ = -a.terms_;
  return a;
}

MUElement operator*(const MUElement& a, const MUElement& b) {
  a.check(b);
  const long p = std::min<long>({static_cast<long>(a.valuation()) + b.precision_,
                                 static_cast<long>(b.valuation()) + a.precision_, MUElement::kExact});
  MUElement out(a.rank_, FormalGroupLaw(a.truncation_));
  out.precision_ = static_cast<int>(p);
  Exponents e(a.rank_ + a.ngens_);
  for (const auto& [ea, ca] : a.terms_.terms()) {
    const int da = a.x_degree(ea);
    for (const auto& [eb, cb] : b.terms_.terms()) {
      if (da + a.x_degree(eb) >= p) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const MUElement& a, const MUElement& b) {
  if (a.rank_ != b.rank_ || a.truncation_ != b.truncation_) return false;
  const int p = std::min(a.precision_, b.precision_);
  return a.truncated(p).terms_ == b.truncated(p).terms_;
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, KClass>)
          return v.value.is_zero();
        else
          return v.is_zero();
      },
      value);
}

// ---------------------------------------------------------------------------
// Euler classes

namespace {

void require_nonzero(std::span<const Weight> weights) {
  for (const auto& w : weights)
    if (w.is_zero()) throw Error(ErrorCode::ZeroWeight, "zero weight: its Euler class is zero");
}

std::size_t common_rank(std::span<const Weight> weights, std::size_t fallback) {
  for (const auto& w : weights)
    if (w.rank() != fallback) throw Error(ErrorCode::RankMismatch, "weight " + to_string(w) + " has wrong rank");
  return fallback;
}

LaurentPolynomial one_minus_character(const Weight& mu) {
  LaurentPolynomial p = LaurentPolynomial::constant(mu.rank(), 1);
  Exponents e(mu.coords().begin(), mu.coords().end());
  p.add_term(std::move(e), -1);
  return p;
}

MUElement weight_class(const Weight& mu, const FormalGroupLaw& fgl) {
  MUElement cls(mu.rank(), fgl);
  for (std::size_t j = 0; j < mu.rank(); ++j) {
    if (mu[j] == 0) continue;
    cls = fgl_sum(cls, fgl_multiple(mu[j], MUElement::chern(mu.rank(), fgl, j), fgl), fgl);
  }
  return cls;
}

}  // namespace

RingElement multiply(const RingElement& a, const RingElement& b) {
  if (a.theory() != b.theory())
    throw Error(ErrorCode::TheoryMismatch,
                std::string("cannot multiply ") + std::string(to_string(a.theory())) + " by " +
                    std::string(to_string(b.theory())));
  return std::visit(
      [&](const auto& x) -> RingElement {
        using T = std::decay_t<decltype(x)>;
        return {x * std::get<T>(b.value)};
      },
      a.value);
}

IntPolynomial linear_form(const Weight& mu) {
  IntPolynomial p(mu.rank());
  for (std::size_t j = 0; j < mu.rank(); ++j) {
    Exponents e(mu.rank(), 0);
    e[j] = 1;
    p.add_term(std::move(e), mu[j]);
  }
  return p;
}

IntPolynomial euler_H(std::span<const Weight> weights) {
  require_nonzero(weights);
  return std::get<IntPolynomial>(euler_product(Theory::H, weights, weights.empty() ? 0 : weights[0].rank()).value);
}

KClass euler_K(std::span<const Weight> weights) {
  require_nonzero(weights);
  return std::get<KClass>(euler_product(Theory::K, weights, weights.empty() ? 0 : weights[0].rank()).value);
}

MUElement euler_MU(std::span<const Weight> weights, const FormalGroupLaw& fgl) {
  require_nonzero(weights);
  return std::get<MUElement>(
      euler_product(Theory::MU, weights, weights.empty() ? 0 : weights[0].rank(), fgl).value);
}

RingElement euler_product(Theory theory, std::span<const Weight> weights, std::size_t rank,
                          const FormalGroupLaw& fgl) {
  common_rank(weights, rank);
  switch (theory) {
    case Theory::H: {
      auto p = IntPolynomial::constant(rank, 1);
      for (const auto& w : weights) p *= linear_form(w);
      return {p};
    }
    case Theory::K: {
      KClass k{LaurentPolynomial::constant(rank, 1), 0};
      for (const auto& w : weights) k = k * KClass{one_minus_character(w), 2};
      return {k};
    }
    case Theory::MU: {
      auto m = MUElement::constant(rank, fgl, 1);
      for (const auto& w : weights) m = m * weight_class(w, fgl);
      return {m};
    }
  }
  throw std::logic_error("unreachable");
}

RingElement euler_class(Theory theory, std::span<const Weight> weights, std::size_t rank,
                        const FormalGroupLaw& fgl) {
  require_nonzero(weights);
  return euler_product(theory, weights, rank, fgl);
}

// ---------------------------------------------------------------------------
// Formal group law arithmetic

namespace {

void require_augmentation(const MUElement& a) {
  for (const auto& [e, c] : a.terms().terms())
    if (a.x_degree(e) == 0)
      throw Error(ErrorCode::NotInAugmentationIdeal, "formal sum needs arguments without x-degree 0 terms");
}

// F(a, b) - a - b, truncated at precision p.
MUElement higher_terms(const MUElement& a, const MUElement& b, const FormalGroupLaw& fgl, int p) {
  const std::size_t r = a.rank();
  const int m = fgl.max_x_degree();
  std::vector<MUElement> pa{MUElement::constant(r, fgl, 1)}, pb{MUElement::constant(r, fgl, 1)};
  for (int k = 1; k <= m; ++k) {
    pa.push_back((pa.back() * a).truncated(p));
    pb.push_back((pb.back() * b).truncated(p));
  }
  MUElement out(r, fgl);
  out = out.truncated(p);
  for (const auto& [i, j] : fgl.generators()) {
    MUElement mono = pa[i] * pb[j];
    if (i != j) mono += pa[j] * pb[i];
    out += (MUElement::lazard(r, fgl, i, j) * mono).truncated(p);
  }
  return out;
}

void require_fgl(const MUElement& a, const FormalGroupLaw& fgl) {
  if (a.truncation() != fgl.truncation())
    throw Error(ErrorCode::TruncationMismatch, "element truncated at " + std::to_string(a.truncation()) +
                                                   ", law at " + std::to_string(fgl.truncation()));
}

}  // namespace

MUElement fgl_sum(const MUElement& a, const MUElement& b, const FormalGroupLaw& fgl) {
  require_fgl(a, fgl);
  require_fgl(b, fgl);
  require_augmentation(a);
  require_augmentation(b);
  const int p = std::min({a.precision(), b.precision(), fgl.max_x_degree() + 1});
  return (a + b).truncated(p) + higher_terms(a, b, fgl, p);
}

MUElement fgl_inverse(const MUElement& x, const FormalGroupLaw& fgl) {
  require_fgl(x, fgl);
  require_augmentation(x);
  const int p = std::min(x.precision(), fgl.max_x_degree() + 1);
  const MUElement neg = (-x).truncated(p);
  MUElement inv = neg;
  // Each pass fixes one more x-degree of the solution of F(x, i) = 0.
  for (int k = 0; k < fgl.max_x_degree(); ++k) inv = neg - higher_terms(x, inv, fgl, p);
  return inv;
}

MUElement fgl_multiple(Int n, const MUElement& x, const FormalGroupLaw& fgl) {
  require_fgl(x, fgl);
  require_augmentation(x);
  const int p = std::min(x.precision(), fgl.max_x_degree() + 1);
  if (n == 0) return MUElement(x.rank(), fgl).truncated(p);
  const MUElement step = n > 0 ? x.truncated(p) : fgl_inverse(x, fgl);
  MUElement acc = step;
  for (Int k = 1; k < (n > 0 ? n : -n); ++k) acc = fgl_sum(acc, step, fgl);
  return acc;
}

// ---------------------------------------------------------------------------
// Specializations

IntPolynomial specialize_additive(const MUElement& e) {
  const std::size_t r = e.rank();
  IntPolynomial out(r);
  for (const auto& [x, c] : e.terms().terms()) {
    if (std::any_of(x.begin() + static_cast<long>(r), x.end(), [](int k) { return k != 0; })) continue;
    out.add_term(Exponents(x.begin(), x.begin() + static_cast<long>(r)), c);
  }
  return out;
}

IntPolynomial specialize_multiplicative(const MUElement& e) {
  const std::size_t r = e.rank();
  const FormalGroupLaw fgl = e.fgl();
  IntPolynomial out(r + 1);
  for (const auto& [x, c] : e.terms().terms()) {
    int beta = 0;
    bool killed = false;
    for (std::size_t k = 0; k < fgl.generators().size(); ++k) {
      const int ex = x[r + k];
      if (ex == 0) continue;
      if (fgl.generators()[k] == std::pair{1, 1})
        beta = ex;
      else
        killed = true;
    }
    if (killed) continue;
    Exponents y(x.begin(), x.begin() + static_cast<long>(r));
    y.push_back(beta);
    out.add_term(std::move(y), beta % 2 ? BigInt(-c) : c);
  }
  return out;
}

LaurentPolynomial multiplicative_to_laurent(const IntPolynomial& p) {
  if (p.nvars() == 0) throw Error(ErrorCode::RankMismatch, "expected variables x_1..x_r, beta");
  const std::size_t r = p.nvars() - 1;
  LaurentPolynomial out(r);
  for (const auto& [e, c] : p.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(r, c);
    for (std::size_t j = 0; j < r; ++j) {
      Exponents unit(r, 0);
      unit[j] = 1;
      LaurentPolynomial base = LaurentPolynomial::constant(r, 1);
      base.add_term(unit, -1);
      for (int k = 0; k < e[j]; ++k) term *= base;
    }
    out += term;
  }
  return out;
}

bool is_nonzero_divisor(const RingElement& e) {
  switch (e.theory()) {
    case Theory::H: return !std::get<IntPolynomial>(e.value).is_zero();
    case Theory::K: return !std::get<KClass>(e.value).value.is_zero();
    case Theory::MU: return !specialize_additive(std::get<MUElement>(e.value)).is_zero();
  }
  return false;
}

std::optional<int> degree(const RingElement& e) {
  switch (e.theory()) {
    case Theory::H: {
      const int d = std::get<IntPolynomial>(e.value).homogeneous_degree();
      return d < 0 ? std::nullopt : std::optional<int>(2 * d);
    }
    case Theory::K: {
      const auto& k = std::get<KClass>(e.value);
      return k.value.is_zero() ? std::nullopt : std::optional<int>(k.degree);
    }
    case Theory::MU: return std::get<MUElement>(e.value).homogeneous_degree();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const KClass& k) { return to_string(k.value); }

std::string to_string(const MUElement& e) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < e.rank(); ++i) names.push_back("x" + std::to_string(i + 1));
  const FormalGroupLaw fgl = e.fgl();
  for (const auto& [i, j] : fgl.generators()) names.push_back("a" + std::to_string(i) + std::to_string(j));
  std::string s = to_string(e.terms(), names);
  if (e.precision() < MUElement::kExact) s += " + O(x^" + std::to_string(e.precision()) + ")";
  return s;
}

std::string to_string(const RingElement& e) {
  return std::visit([](const auto& v) { return to_string(v); }, e.value);
}

}  // namespace eqcoh
