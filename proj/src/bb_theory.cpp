#include "eqcoh/bb_theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eqcoh/kernels.hpp"

namespace eqcoh {

void validate_model(const VarietyModel& model) {
  if (model.rank == 0) throw Error(ErrorCode::InvalidModel, "torus rank must be positive");
  if (model.dimension < 0) throw Error(ErrorCode::InvalidModel, "negative dimension");
  if (model.points.empty()) throw Error(ErrorCode::InvalidModel, "model has no fixed points");
  std::set<std::string> labels;
  for (const auto& p : model.points) {
    if (!labels.insert(p.label).second) throw Error(ErrorCode::InvalidModel, "duplicate label '" + p.label + "'");
    if (p.tangent_weights.size() != static_cast<std::size_t>(model.dimension))
      throw Error(ErrorCode::InvalidModel, "fixed point '" + p.label + "' has " +
                                               std::to_string(p.tangent_weights.size()) + " tangent weights, expected " +
                                               std::to_string(model.dimension));
    for (const auto& w : p.tangent_weights)
      if (w.rank() != model.rank)
        throw Error(ErrorCode::InvalidModel, "weight " + to_string(w) + " at '" + p.label + "' has wrong rank");
  }
  if (model.coweight && model.coweight->rank() != model.rank)
    throw Error(ErrorCode::InvalidModel, "coweight hint has wrong rank");
  if (model.closure_covers)
    for (const auto& [lo, hi] : *model.closure_covers)
      if (!labels.count(lo) || !labels.count(hi))
        throw Error(ErrorCode::UnknownLabel, "closure cover (" + lo + ", " + hi + ") names an unknown fixed point");
}

namespace {

int codim_at(const FixedPointData& p, const Coweight& lam) {
  int c = 0;
  for (const auto& w : p.tangent_weights)
    if (pairing(lam, w) < 0) ++c;
  return c;
}

bool is_generic(const VarietyModel& model, const Coweight& lam) {
  for (const auto& p : model.points)
    for (const auto& w : p.tangent_weights)
      if (pairing(lam, w) == 0) return false;
  return true;
}

// beta < gamma in the closure order forces dim X_beta < dim X_gamma.
bool closure_compatible(const VarietyModel& model, const Coweight& lam) {
  if (!model.closure_covers) return true;
  std::map<std::string, int> codim;
  for (const auto& p : model.points) codim[p.label] = codim_at(p, lam);
  return std::all_of(model.closure_covers->begin(), model.closure_covers->end(),
                     [&](const auto& c) { return codim.at(c.first) > codim.at(c.second); });
}

std::vector<Int> primitive_line(const Weight& w) {
  Int g = 0;
  for (Int c : w.coords()) g = std::gcd(g, c);
  std::vector<Int> v = w.coords();
  for (auto& c : v) c /= g;
  const auto first = std::find_if(v.begin(), v.end(), [](Int c) { return c != 0; });
  if (*first < 0)
    for (auto& c : v) c = -c;
  return v;
}

// 0, 1, -1, 2, -2, ...
Int digit(std::size_t k) { return k % 2 ? static_cast<Int>((k + 1) / 2) : -static_cast<Int>(k / 2); }

}  // namespace

Coweight generic_coweight(const VarietyModel& model) {
  validate_model(model);
  std::set<std::vector<Int>> lines;
  for (const auto& p : model.points)
    for (const auto& w : p.tangent_weights) {
      if (w.is_zero())
        throw Error(ErrorCode::ZeroTangentWeight, "fixed point '" + p.label + "' has tangent weight zero");
      lines.insert(primitive_line(w));
    }

  if (model.coweight) {
    if (!is_generic(model, *model.coweight))
      throw Error(ErrorCode::NonGenericCoweight, "supplied coweight " + to_string(*model.coweight) +
                                                     " is orthogonal to a tangent weight");
    if (!closure_compatible(model, *model.coweight))
      throw Error(ErrorCode::ClosureOrderMismatch, "supplied coweight does not fit the closure order");
    return *model.coweight;
  }

  const std::size_t r = model.rank;
  const Int bound = std::max<Int>(1, static_cast<Int>((lines.size() + 1) / 2));
  for (Int shell = 1; shell <= bound; ++shell) {
    const std::size_t base = static_cast<std::size_t>(2 * shell + 1);
    std::vector<std::size_t> odo(r, 0);
    while (true) {
      std::vector<Int> c(r);
      Int norm = 0;
      for (std::size_t i = 0; i < r; ++i) {
        c[i] = digit(odo[i]);
        norm = std::max(norm, c[i] < 0 ? -c[i] : c[i]);
      }
      if (norm == shell) {
        Coweight lam(std::move(c));
        if (is_generic(model, lam) && closure_compatible(model, lam)) return lam;
      }
      std::size_t pos = r;
      while (pos > 0 && ++odo[pos - 1] == base) odo[--pos] = 0;
      if (pos == 0) break;
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no generic coweight with max-norm <= " + std::to_string(bound) +
                  (model.closure_covers ? " compatible with the closure order" : ""));
}

StratumPoset bb_stratify(const VarietyModel& model, const Coweight& lam, const TheoryOptions& opts) {
  validate_model(model);
  if (lam.rank() != model.rank) throw Error(ErrorCode::RankMismatch, "coweight rank does not match the torus");
  const FormalGroupLaw fgl(opts.mu_truncation);

  std::vector<std::string> labels;
  std::vector<int> codims;
  std::vector<std::vector<Weight>> normal;  // weights of T_w X / T_w X_w
  for (const auto& p : model.points) {
    std::vector<Weight> neg;
    for (const auto& w : p.tangent_weights) {
      const Int s = pairing(lam, w);
      if (s == 0)
        throw Error(ErrorCode::NonGenericCoweight,
                    "coweight " + to_string(lam) + " pairs to zero with weight " + to_string(w) + " at '" + p.label + "'");
      if (s < 0) neg.push_back(w);
    }
    labels.push_back(p.label);
    codims.push_back(static_cast<int>(neg.size()));
    normal.push_back(std::move(neg));
  }

  const auto classes = kernels::euler_batch(opts.theory, normal, model.rank, fgl);
  std::map<std::string, StratumPayload> payload;
  for (std::size_t k = 0; k < labels.size(); ++k) payload[labels[k]] = {codims[k], classes[k]};

  if (model.closure_covers) {
    if (!closure_compatible(model, lam))
      throw Error(ErrorCode::ClosureOrderMismatch,
                  "closure order is not compatible with the strata of coweight " + to_string(lam));
    return StratumPoset::from_covers(labels, *model.closure_covers, std::move(payload));
  }

  // No closure order supplied: larger codimension is lower.
  std::map<int, std::vector<std::string>, std::greater<>> by_codim;
  for (std::size_t k = 0; k < labels.size(); ++k) by_codim[codims[k]].push_back(labels[k]);
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto it = by_codim.begin(); it != by_codim.end(); ++it) {
    auto next = std::next(it);
    if (next == by_codim.end()) break;
    for (const auto& lo : it->second)
      for (const auto& hi : next->second) covers.emplace_back(lo, hi);
  }
  auto poset = StratumPoset::from_covers(labels, covers, std::move(payload));
  poset.notes.push_back("closure order not supplied; strata ordered by codimension");
  return poset;
}

GradedModuleDecomposition module_structure(const VarietyModel& model, const TheoryOptions& opts) {
  const Coweight lam = generic_coweight(model);
  return assemble_module(bb_stratify(model, lam, opts), opts.theory);
}

RelativeFreenessReport check_relative_freeness(const VarietyModel& outer, const std::set<std::string>& inner_labels,
                                               const TheoryOptions& opts) {
  const Coweight lam = generic_coweight(outer);
  const StratumPoset poset = bb_stratify(outer, lam, opts);
  std::vector<char> inner(poset.size(), 0);
  for (const auto& l : inner_labels) inner[poset.index_of(l)] = 1;
  for (std::size_t b = 0; b < poset.size(); ++b) {
    if (!inner[b]) continue;
    for (std::size_t g = 0; g < poset.size(); ++g)
      if (poset.leq(g, b) && !inner[g])
        throw Error(ErrorCode::NotClosed, "'" + poset.label(g) + "' lies in the closure of '" + poset.label(b) +
                                              "' but not in the subvariety");
  }

  const auto dec = assemble_module(poset, opts.theory);
  RelativeFreenessReport rep;
  rep.outer_rank = dec.rank();
  rep.inner_rank = inner_labels.size();
  rep.shifts_even = std::all_of(dec.generators.begin(), dec.generators.end(),
                                [](const Generator& g) { return g.shift % 2 == 0; });
  std::set<std::string> hit;
  for (const auto& g : dec.generators) {
    if (inner_labels.count(g.label))
      hit.insert(g.label);
    else
      ++rep.relative_rank;
  }
  rep.restriction_surjective = hit == inner_labels;
  return rep;
}

}  // namespace eqcoh
