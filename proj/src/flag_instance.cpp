#include "eqcoh/flag_instance.hpp"

#include <algorithm>

#include "eqcoh/kernels.hpp"

namespace eqcoh {

FlagVariety::FlagVariety(const FlagSpec& fs) : spec_(fs), weyl_(build_root_datum(fs.spec)) {
  std::sort(spec_.parabolic.begin(), spec_.parabolic.end());
  spec_.parabolic.erase(std::unique(spec_.parabolic.begin(), spec_.parabolic.end()), spec_.parabolic.end());
  points_ = coset_representatives(weyl_, spec_.parabolic);
  const RootDatum& d = weyl_.datum();
  for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
    const auto& r = d.positive_roots_simple[k];
    bool in_levi = true;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0 && !std::binary_search(spec_.parabolic.begin(), spec_.parabolic.end(), static_cast<int>(i)))
        in_levi = false;
    if (!in_levi) unipotent_.push_back(d.positive_roots[k]);
  }
}

std::vector<Weight> FlagVariety::tangent_weights(const WeylElement& w) const {
  std::vector<Weight> out;
  out.reserve(unipotent_.size());
  for (const auto& beta : unipotent_) out.push_back(weyl_act_weight(w, -beta));
  return out;
}

VarietyModel FlagVariety::model() const {
  VarietyModel m;
  m.rank = datum().rank();
  m.dimension = dimension();
  for (std::size_t idx : points_) m.points.push_back({weyl_[idx].word_string(), tangent_weights(weyl_[idx])});
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [lo, hi] : kernels::bruhat_covers(weyl_, points_))
    covers.emplace_back(weyl_[points_[lo]].word_string(), weyl_[points_[hi]].word_string());
  m.closure_covers = std::move(covers);
  m.coweight = datum().regular_dominant_coweight();
  return m;
}

std::vector<WeylElement> flag_fixed_points(const FlagSpec& fs) {
  const FlagVariety fv(fs);
  std::vector<WeylElement> out;
  for (std::size_t idx : fv.fixed_points()) out.push_back(fv.weyl()[idx]);
  return out;
}

std::vector<Weight> flag_tangent_weights(const FlagSpec& fs, const WeylElement& w) {
  return FlagVariety(fs).tangent_weights(w);
}

VarietyModel flag_model(const FlagSpec& fs) { return FlagVariety(fs).model(); }

}  // namespace eqcoh
