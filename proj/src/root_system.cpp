#include "eqcoh/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace eqcoh {

namespace {

IntMatrix cartan_matrix(const RootSystemSpec& s) {
  const int n = s.rank;
  IntMatrix c(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j, Int cij, Int cji) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  switch (s.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'G':  // alpha_1 short
      link(0, 1, -3, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      break;
  }
  return c;
}

Int height(const std::vector<Int>& r) { return std::accumulate(r.begin(), r.end(), Int{0}); }

}  // namespace

RootSystemSpec RootSystemSpec::parse(std::string_view name) {
  if (name.size() < 2)
    throw Error(ErrorCode::UnsupportedType, "bad root system name '" + std::string(name) + "'");
  RootSystemSpec s;
  s.family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int rank = 0;
  for (char ch : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 100)
      throw Error(ErrorCode::UnsupportedType, "bad root system name '" + std::string(name) + "'");
    rank = rank * 10 + (ch - '0');
  }
  s.rank = rank;
  const bool ok = (s.family == 'A' && rank >= 1 && rank <= 6) ||
                  ((s.family == 'B' || s.family == 'C') && rank >= 2 && rank <= 6) ||
                  (s.family == 'D' && rank >= 3 && rank <= 6) || (s.family == 'G' && rank == 2) ||
                  (s.family == 'F' && rank == 4);
  if (!ok) throw Error(ErrorCode::UnsupportedType, "unsupported root system '" + std::string(name) + "'");
  return s;
}

std::string RootSystemSpec::name() const { return std::string(1, family) + std::to_string(rank); }

RootDatum build_root_datum(const RootSystemSpec& spec) {
  // Re-validate through the parser so hand-built specs get the same checks.
  RootDatum d;
  d.spec = RootSystemSpec::parse(spec.name());
  d.cartan = cartan_matrix(d.spec);
  const std::size_t n = d.cartan.size();

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> col(n), unit(n, 0);
    for (std::size_t i = 0; i < n; ++i) col[i] = d.cartan[i][j];
    unit[j] = 1;
    d.simple_roots.emplace_back(col);
    d.simple_coroots.emplace_back(unit);
    d.fundamental_weights.emplace_back(unit);
  }

  // Close the simple roots (simple-root coordinates) under the simple reflections.
  std::set<std::vector<Int>> roots;
  std::deque<std::vector<Int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> r(n, 0);
    r[i] = 1;
    roots.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const auto r = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Int p = 0;
      for (std::size_t k = 0; k < n; ++k) p += d.cartan[i][k] * r[k];
      auto s = r;
      s[i] -= p;
      if (roots.insert(s).second) queue.push_back(std::move(s));
    }
  }

  for (const auto& r : roots) {
    const bool positive = std::all_of(r.begin(), r.end(), [](Int x) { return x >= 0; });
    std::vector<Int> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) w[i] += d.cartan[i][k] * r[k];
    d.root_signs_[w] = positive ? 1 : -1;
    if (positive) d.positive_roots_simple.push_back(r);
  }
  std::sort(d.positive_roots_simple.begin(), d.positive_roots_simple.end(),
            [](const auto& a, const auto& b) {
              const Int ha = height(a), hb = height(b);
              return ha != hb ? ha < hb : a > b;
            });
  for (const auto& r : d.positive_roots_simple) {
    std::vector<Int> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) w[i] += d.cartan[i][k] * r[k];
    d.positive_roots.emplace_back(w);
  }
  d.cartan_transpose_inverse_ = inverse(transpose(d.cartan));
  return d;
}

int RootDatum::root_sign(const Weight& mu) const {
  auto it = root_signs_.find(mu.coords());
  return it == root_signs_.end() ? 0 : it->second;
}

std::vector<Int> RootDatum::fundamental_coweight_coords(const Coweight& lam) const {
  if (lam.rank() != rank()) throw Error(ErrorCode::RankMismatch, "coweight rank mismatch");
  std::vector<Int> b(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t k = 0; k < rank(); ++k) b[i] += lam[k] * cartan[k][i];
  return b;
}

Coweight RootDatum::coweight_from_fundamental_coords(const std::vector<Int>& b) const {
  if (b.size() != rank()) throw Error(ErrorCode::RankMismatch, "coweight rank mismatch");
  std::vector<Int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational x = 0;
    for (std::size_t k = 0; k < rank(); ++k) x += cartan_transpose_inverse_[i][k] * b[k];
    if (denominator(x) != 1)
      throw Error(ErrorCode::NotInCorootLattice,
                  "fundamental-coweight vector " + to_string(b) + " is not in the coroot lattice");
    c[i] = static_cast<Int>(numerator(x));
  }
  return Coweight(c);
}

bool RootDatum::is_dominant(const Coweight& lam) const {
  const auto b = fundamental_coweight_coords(lam);
  return std::all_of(b.begin(), b.end(), [](Int x) { return x >= 0; });
}

bool RootDatum::is_dominant(const Weight& mu) const {
  if (mu.rank() != rank()) throw Error(ErrorCode::RankMismatch, "weight rank mismatch");
  return std::all_of(mu.coords().begin(), mu.coords().end(), [](Int x) { return x >= 0; });
}

Coweight RootDatum::regular_dominant_coweight() const {
  std::vector<Rational> c(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t k = 0; k < rank(); ++k) c[i] += cartan_transpose_inverse_[i][k];
  BigInt l = 1;
  for (const auto& x : c) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  std::vector<Int> out(rank());
  BigInt g = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Rational y = c[i] * l;
    out[i] = static_cast<Int>(numerator(y));
    g = boost::multiprecision::gcd(g, BigInt(out[i]));
  }
  for (auto& x : out) x /= static_cast<Int>(g);
  return Coweight(out);
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (int g : word) s += "s" + std::to_string(g + 1);
  return s;
}

Weight weyl_act_weight(const WeylElement& w, const Weight& mu) {
  if (mu.rank() != w.matrix.size()) throw Error(ErrorCode::RankMismatch, "weight rank mismatch");
  return Weight(mat_vec(w.matrix, mu.coords()));
}

Coweight weyl_act_coweight(const WeylElement& w, const Coweight& lam) {
  if (lam.rank() != w.coweight_matrix.size()) throw Error(ErrorCode::RankMismatch, "coweight rank mismatch");
  return Coweight(mat_vec(w.coweight_matrix, lam.coords()));
}

WeylGroup::WeylGroup(const RootDatum& datum) : datum_(datum) {
  const std::size_t n = datum_.rank();
  std::vector<IntMatrix> refl(n), corefl(n);
  for (std::size_t i = 0; i < n; ++i) {
    refl[i] = identity_matrix(n);
    corefl[i] = identity_matrix(n);
    for (std::size_t j = 0; j < n; ++j) {
      refl[i][j][i] -= datum_.cartan[j][i];
      corefl[i][i][j] -= datum_.cartan[j][i];
    }
  }

  // Breadth-first search in the Cayley graph: BFS depth is the length.
  struct Raw {
    IntMatrix m, cm;
    int length;
  };
  std::vector<Raw> raw{{identity_matrix(n), identity_matrix(n), 0}};
  std::map<IntMatrix, std::size_t> seen{{raw[0].m, 0}};
  std::vector<std::size_t> left;
  for (std::size_t head = 0; head < raw.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix m = mat_mul(refl[i], raw[head].m);
      auto [it, inserted] = seen.try_emplace(m, raw.size());
      if (inserted) raw.push_back({std::move(m), mat_mul(corefl[i], raw[head].cm), raw[head].length + 1});
      left.push_back(it->second);
    }
  }

  // Lexicographically smallest reduced word: smallest left descent first.
  std::vector<std::vector<int>> words(raw.size());
  for (std::size_t w = 1; w < raw.size(); ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t sw = left[w * n + i];
      if (raw[sw].length + 1 == raw[w].length) {
        words[w].push_back(static_cast<int>(i));
        words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
        break;
      }
    }
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw[a].length != raw[b].length ? raw[a].length < raw[b].length : words[a] < words[b];
  });
  std::vector<std::size_t> position(raw.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;

  elements_.reserve(raw.size());
  left_.resize(left.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t old = order[k];
    elements_.push_back({std::move(raw[old].m), std::move(raw[old].cm), std::move(words[old]), raw[old].length});
    for (std::size_t i = 0; i < n; ++i) left_[k * n + i] = position[left[old * n + i]];
    index_.emplace(elements_.back().matrix, k);
  }
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w.matrix);
  if (it == index_.end()) throw std::out_of_range("element not in Weyl group");
  return it->second;
}

bool WeylGroup::bruhat_leq(std::size_t u, std::size_t v) const {
  // If s is a left descent of v: u <= v iff (su < u ? su <= sv : u <= sv).
  while (true) {
    if (elements_[u].length > elements_[v].length) return false;
    if (v == identity()) return u == identity();
    const std::size_t s = static_cast<std::size_t>(elements_[v].word.front());
    const std::size_t su = left_multiply(s, u);
    if (elements_[su].length < elements_[u].length) u = su;
    v = left_multiply(s, v);
  }
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& v) const {
  return bruhat_leq(index_of(u), index_of(v));
}

int WeylGroup::inversion_count(const WeylElement& w) const {
  int count = 0;
  for (const auto& beta : datum_.positive_roots)
    if (datum_.root_sign(weyl_act_weight(w, beta)) < 0) ++count;
  return count;
}

WeylGroup generate_weyl(const RootDatum& datum) { return WeylGroup(datum); }

const WeylElement& longest_element(std::span<const WeylElement> elements) {
  if (elements.empty()) throw Error(ErrorCode::IncompleteGroup, "empty element set");
  const WeylElement* best = &elements[0];
  int ties = 0;
  for (const auto& w : elements) {
    if (w.length > best->length) {
      best = &w;
      ties = 1;
    } else if (w.length == best->length) {
      ++ties;
    }
  }
  if (ties != 1)
    throw Error(ErrorCode::IncompleteGroup,
                std::to_string(ties) + " elements share the maximal length " + std::to_string(best->length));
  return *best;
}

DominantRepresentative dominant_representative(const Coweight& lam, const WeylGroup& weyl) {
  const RootDatum& d = weyl.datum();
  DominantRepresentative out{lam, weyl.identity()};
  while (true) {
    const auto b = d.fundamental_coweight_coords(out.coweight);
    auto neg = std::find_if(b.begin(), b.end(), [](Int x) { return x < 0; });
    if (neg == b.end()) return out;
    const auto i = static_cast<std::size_t>(neg - b.begin());
    std::vector<Int> c = out.coweight.coords();
    c[i] -= *neg;
    out.coweight = Coweight(std::move(c));
    out.witness = weyl.left_multiply(i, out.witness);
  }
}

std::vector<std::size_t> coset_representatives(const WeylGroup& weyl, const std::vector<int>& parabolic) {
  const RootDatum& d = weyl.datum();
  for (int j : parabolic)
    if (j < 0 || static_cast<std::size_t>(j) >= d.rank())
      throw Error(ErrorCode::UnknownLabel, "simple-root index " + std::to_string(j + 1) + " out of range");
  std::vector<std::size_t> reps;
  for (std::size_t w = 0; w < weyl.size(); ++w) {
    const bool minimal = std::all_of(parabolic.begin(), parabolic.end(), [&](int j) {
      return d.root_sign(weyl_act_weight(weyl[w], d.simple_roots[j])) > 0;
    });
    if (minimal) reps.push_back(w);
  }
  return reps;
}

bool bruhat_leq(const WeylGroup& weyl, const WeylElement& u, const WeylElement& v) { return weyl.bruhat_leq(u, v); }

}  // namespace eqcoh
