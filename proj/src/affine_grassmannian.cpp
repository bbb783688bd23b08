#include "eqcoh/affine_grassmannian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqcoh {

std::string GrFixedPoint::label() const { return "t^" + to_string(coweight); }

AffineGrassmannian::AffineGrassmannian(const RootSystemSpec& spec, const Weight& alpha)
    : weyl_(build_root_datum(spec)), alpha_(alpha) {
  const RootDatum& d = weyl_.datum();
  if (alpha.rank() != d.rank()) throw Error(ErrorCode::RankMismatch, "alpha has wrong rank");
  if (alpha.is_zero() || !d.is_dominant(alpha))
    throw Error(ErrorCode::InvalidAlpha, "highest weight " + to_string(alpha) + " must be dominant and nonzero");
  lowest_ = weyl_act_weight(weyl_[weyl_.longest()], alpha);

  // <omega_i^vee, omega_j> = (C^-1)_ij, all entries positive for irreducible types.
  const RationalMatrix cinv = inverse(d.cartan);
  alpha_star_pairings_.assign(d.rank(), 0);
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j) alpha_star_pairings_[i] -= cinv[i][j] * lowest_[j];
}

Int AffineGrassmannian::val(const Coweight& lam) const {
  if (!datum().is_dominant(lam)) throw Error(ErrorCode::NotDominant, "coweight " + to_string(lam) + " is not dominant");
  return pairing(lam, lowest_);
}

std::vector<Coweight> AffineGrassmannian::dominant_up_to(int n) const {
  const RootDatum& d = datum();
  const std::size_t r = d.rank();
  std::vector<Int> bound(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Rational q = Rational(n) / alpha_star_pairings_[i];
    bound[i] = static_cast<Int>(numerator(q) / denominator(q));
  }
  std::vector<Coweight> out;
  std::vector<Int> b(r, 0);
  while (true) {
    Rational level = 0;
    for (std::size_t i = 0; i < r; ++i) level += alpha_star_pairings_[i] * b[i];
    if (level <= n) {
      try {
        out.push_back(d.coweight_from_fundamental_coords(b));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInCorootLattice) throw;
      }
    }
    std::size_t pos = r;
    while (pos > 0 && ++b[pos - 1] > bound[pos - 1]) b[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<GrFixedPoint> AffineGrassmannian::fixed_points(int n, kernels::Exec exec) const {
  if (n < 0) return {};
  const auto dominant = dominant_up_to(n);
  const auto orbits = kernels::coweight_orbits(weyl_, dominant, exec);
  std::vector<GrFixedPoint> out;
  for (std::size_t k = 0; k < dominant.size(); ++k) {
    const int level = static_cast<int>(-pairing(dominant[k], lowest_));
    for (const auto& mu : orbits[k]) {
      const auto rep = dominant_representative(mu, weyl_);
      out.push_back({mu, rep.coweight, weyl_[rep.witness], level});
    }
  }
  std::sort(out.begin(), out.end(), [](const GrFixedPoint& a, const GrFixedPoint& b) {
    return a.level != b.level ? a.level < b.level : a.coweight < b.coweight;
  });
  return out;
}

Int val_coweight(const Coweight& lam, const Weight& alpha, const RootDatum& datum) {
  if (!datum.is_dominant(lam)) throw Error(ErrorCode::NotDominant, "coweight " + to_string(lam) + " is not dominant");
  const WeylGroup weyl(datum);
  return pairing(lam, weyl_act_weight(weyl[weyl.longest()], alpha));
}

std::vector<GrFixedPoint> gr_fixed_points(const RootSystemSpec& spec, const Weight& alpha, int n) {
  return AffineGrassmannian(spec, alpha).fixed_points(n);
}

std::size_t gr_level_count(const RootSystemSpec& spec, const Weight& alpha, int n) {
  return gr_fixed_points(spec, alpha, n).size();
}

bool gr_filtration_check(const RootSystemSpec& spec, const Weight& alpha, int n_max) {
  const AffineGrassmannian gr(spec, alpha);
  const RootDatum& d = gr.datum();
  std::set<Coweight> previous;
  std::set<Coweight> last;
  for (int n = 0; n <= n_max; ++n) {
    std::set<Coweight> current;
    for (const auto& p : gr.fixed_points(n)) current.insert(p.coweight);
    if (!std::includes(current.begin(), current.end(), previous.begin(), previous.end())) return false;
    for (const auto& mu : current)
      for (const auto& w : gr.weyl().elements())
        if (!current.count(weyl_act_coweight(w, mu))) return false;
    previous = current;
    last = std::move(current);
  }

  const std::size_t r = d.rank();
  std::vector<Int> c(r, -n_max);
  while (true) {
    const Coweight mu(c);
    const auto rep = dominant_representative(mu, gr.weyl());
    if (-pairing(rep.coweight, gr.lowest_weight()) <= n_max && !last.count(mu)) return false;
    std::size_t pos = r;
    while (pos > 0 && ++c[pos - 1] > n_max) c[--pos] = -n_max;
    if (pos == 0) break;
  }
  return true;
}

LimitModulePresentation gr_limit_module(const RootSystemSpec& spec, const Weight& alpha, int n_max, Theory theory) {
  const AffineGrassmannian gr(spec, alpha);
  LimitModulePresentation p;
  p.theory = theory;
  p.group = gr.datum().spec.name();
  p.alpha = alpha;
  p.base_ring_rank = gr.extended_rank();

  // Levels are prefixes of one sorted list, so compute the top level once.
  const auto top = gr.fixed_points(std::max(n_max, 0));
  for (int n = 0; n <= n_max; ++n) {
    LevelRecord rec;
    rec.n = n;
    for (const auto& fp : top)
      if (fp.level <= n) rec.labels.push_back(fp.label());
    rec.rank = rec.labels.size();
    p.levels.push_back(std::move(rec));
  }
  for (int n = 0; n < n_max; ++n) {
    const auto& lower = p.levels[n].labels;
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < lower.size(); ++i) pos[lower[i]] = i;
    LevelProjection proj;
    proj.from = n + 1;
    for (const auto& l : p.levels[n + 1].labels) {
      auto it = pos.find(l);
      proj.source_to_target.push_back(it == pos.end() ? std::nullopt : std::optional<std::size_t>(it->second));
    }
    p.projections.push_back(std::move(proj));
  }
  p.index_description =
      "X_*(T) = coroot lattice of " + p.group + ", enumerated by level -<dom(mu), w0 alpha> then coroot coordinates";
  p.restrictions_surjective = true;
  for (const auto& proj : p.projections) {
    std::vector<char> hit(p.levels[proj.from - 1].rank, 0);
    for (const auto& t : proj.source_to_target)
      if (t) hit[*t] = 1;
    p.restrictions_surjective =
        p.restrictions_surjective && std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  }
  return p;
}

bool diagrams_commute(const LimitModulePresentation& p) {
  if (p.projections.size() + 1 != p.levels.size()) return false;
  for (const auto& proj : p.projections) {
    const auto& upper = p.levels[proj.from];
    const auto& lower = p.levels[proj.from - 1];
    if (upper.rank != upper.labels.size() || lower.rank != lower.labels.size()) return false;
    if (proj.source_to_target.size() != upper.rank) return false;
    if (lower.rank > upper.rank || !std::equal(lower.labels.begin(), lower.labels.end(), upper.labels.begin()))
      return false;
    std::map<std::string, std::size_t> lower_pos;
    for (std::size_t i = 0; i < lower.labels.size(); ++i) lower_pos[lower.labels[i]] = i;
    // psi_n(pi_n(e_x)) against the restriction of psi_{n+1}(e_x), generator by generator.
    std::set<std::size_t> targets;
    for (std::size_t i = 0; i < upper.rank; ++i) {
      auto it = lower_pos.find(upper.labels[i]);
      const std::optional<std::size_t> restricted =
          it == lower_pos.end() ? std::nullopt : std::optional<std::size_t>(it->second);
      if (proj.source_to_target[i] != restricted) return false;
      if (restricted && !targets.insert(*restricted).second) return false;
    }
  }
  return true;
}

}  // namespace eqcoh
