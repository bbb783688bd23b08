#include "eqcoh/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace eqcoh {

namespace {

// Joins signed terms: "a + b - c". `body` is empty for a bare constant.
void append_term(std::string& out, const BigInt& c, const std::string& body) {
  const bool negative = c < 0;
  const BigInt mag = negative ? BigInt(-c) : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (body.empty()) {
    out += mag.str();
  } else {
    if (mag != 1) out += mag.str() + "*";
    out += body;
  }
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string body;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      const int e = it->first[i];
      if (e == 0) continue;
      if (!body.empty()) body += '*';
      body += i < names.size() ? names[i] : "v" + std::to_string(i + 1);
      if (e != 1) body += "^" + std::to_string(e);
    }
    append_term(out, it->second, body);
  }
  return out;
}

std::string to_string(const IntPolynomial& p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("x" + std::to_string(i + 1));
  return to_string(p, names);
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  // Constant term first, then by total absolute degree, ties by descending exponent.
  using Term = std::pair<std::vector<int>, BigInt>;
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  const auto weight = [](const std::vector<int>& e) {
    long s = 0;
    for (int x : e) s += x < 0 ? -x : x;
    return s;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    const long wa = weight(a.first), wb = weight(b.first);
    return wa != wb ? wa < wb : a.first > b.first;
  });
  std::string out;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const bool unit = std::all_of(it->first.begin(), it->first.end(), [](int e) { return e == 0; });
    std::string body;
    if (!unit) {
      body = "e^{(";
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (i) body += ',';
        body += std::to_string(it->first[i]);
      }
      body += ")}";
    }
    append_term(out, it->second, body);
  }
  return out;
}

}  // namespace eqcoh
