#include "eqcoh/json_io.hpp"

#include <limits>

namespace eqcoh::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class P>
json terms(const P& poly) {
  json out = json::array();
  // Descending, matching the text form.
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
    out.push_back({{"exponents", it->first}, {"coeff", integer(it->second)}});
  return out;
}

template <class P>
P parse_terms(const json& j, std::size_t nvars) {
  P p(nvars);
  if (!j.is_array()) fail("\"terms\" must be an array");
  for (const auto& t : j) {
    const auto& e = field(t, "exponents");
    if (!e.is_array()) fail("\"exponents\" must be an array");
    Exponents ex;
    for (const auto& v : e) {
      if (!v.is_number_integer()) fail("exponent must be an integer");
      ex.push_back(v.get<int>());
    }
    if (ex.size() != nvars) fail("exponent vector has " + std::to_string(ex.size()) + " entries, expected " +
                                 std::to_string(nvars));
    if constexpr (std::is_same_v<P, IntPolynomial>) {
      for (int x : ex)
        if (x < 0) fail("negative exponent");
    }
    p.add_term(std::move(ex), parse_integer(field(t, "coeff")));
  }
  return p;
}

json weights(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.coords());
  return out;
}

json covers_json(const std::vector<std::pair<std::string, std::string>>& cs) {
  json out = json::array();
  for (const auto& [a, b] : cs) out.push_back({a, b});
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_covers(const json& j) {
  if (!j.is_array()) fail("\"covers\" must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      fail("a cover must be a pair of labels");
    out.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return out;
}

json series(const PoincareSeries& s) { return {{"coeffs", s.coeffs}, {"text", s.to_string()}}; }

json generators(const GradedModuleDecomposition& dec) {
  json out = json::array();
  for (const auto& g : dec.generators) out.push_back({{"label", g.label}, {"shift", g.shift}, {"class", ring_element(g.cls)}});
  return out;
}

}  // namespace

json integer(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

BigInt parse_integer(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      fail("not an integer: \"" + s + "\"");
    return BigInt(s);
  }
  fail("coefficient must be an integer or a decimal string");
}

json vector(const std::vector<Int>& v) { return v; }

std::vector<Int> parse_vector(const json& j) {
  if (!j.is_array()) fail("expected an integer array");
  std::vector<Int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail("expected an integer array");
    out.push_back(v.get<Int>());
  }
  return out;
}

json ring_element(const RingElement& e) {
  json out;
  out["theory"] = std::string(to_string(e.theory()));
  if (const auto* h = std::get_if<IntPolynomial>(&e.value)) {
    out["rank"] = h->nvars();
    out["terms"] = terms(*h);
  } else if (const auto* k = std::get_if<KClass>(&e.value)) {
    out["rank"] = k->value.nvars();
    out["degree"] = k->degree;
    out["terms"] = terms(k->value);
  } else {
    const auto& m = std::get<MUElement>(e.value);
    out["rank"] = m.rank();
    out["truncation"] = m.truncation();
    out["precision"] = m.precision() == MUElement::kExact ? json(nullptr) : json(m.precision());
    json gens = json::array();
    const FormalGroupLaw fgl = m.fgl();
    for (const auto& [i, j] : fgl.generators()) gens.push_back({i, j});
    out["lazard_generators"] = gens;
    out["terms"] = terms(m.terms());
  }
  out["text"] = to_string(e);
  return out;
}

RingElement parse_ring_element(const json& j) {
  const Theory th = parse_theory(field(j, "theory").get<std::string>());
  const json& rk = field(j, "rank");
  if (!rk.is_number_unsigned()) fail("\"rank\" must be a non-negative integer");
  const auto rank = rk.get<std::size_t>();
  switch (th) {
    case Theory::H:
      return {parse_terms<IntPolynomial>(field(j, "terms"), rank)};
    case Theory::K: {
      const json& d = field(j, "degree");
      if (!d.is_number_integer()) fail("\"degree\" must be an integer");
      return {KClass{parse_terms<LaurentPolynomial>(field(j, "terms"), rank), d.get<int>()}};
    }
    case Theory::MU: {
      const json& t = field(j, "truncation");
      if (!t.is_number_integer()) fail("\"truncation\" must be an integer");
      const FormalGroupLaw fgl(t.get<int>());
      MUElement m(rank, fgl);
      const auto poly = parse_terms<IntPolynomial>(field(j, "terms"), rank + fgl.generators().size());
      int precision = MUElement::kExact;
      if (j.contains("precision") && !j["precision"].is_null()) {
        if (!j["precision"].is_number_integer()) fail("\"precision\" must be an integer or null");
        precision = j["precision"].get<int>();
      }
      m = m.truncated(precision);
      for (const auto& [e, c] : poly.terms()) {
        if (m.x_degree(e) >= precision) fail("term beyond the stated precision");
        m.add_term(e, c);
      }
      return {m};
    }
  }
  fail("unknown theory");
}

json model(const VarietyModel& m) {
  json out;
  out["rank"] = m.rank;
  out["dimension"] = m.dimension;
  json pts = json::array();
  for (const auto& p : m.points) pts.push_back({{"label", p.label}, {"weights", weights(p.tangent_weights)}});
  out["points"] = pts;
  if (m.closure_covers) out["closure_covers"] = covers_json(*m.closure_covers);
  if (m.coweight) out["coweight"] = m.coweight->coords();
  return out;
}

VarietyModel parse_model(const json& j) {
  VarietyModel m;
  const json& dim = field(j, "dimension");
  if (!dim.is_number_integer()) fail("\"dimension\" must be an integer");
  m.dimension = dim.get<int>();
  const json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) fail("\"points\" must be a nonempty array");
  for (const auto& p : pts) {
    const json& label = field(p, "label");
    if (!label.is_string()) fail("\"label\" must be a string");
    FixedPointData fp{label.get<std::string>(), {}};
    const json& ws = field(p, "weights");
    if (!ws.is_array()) fail("\"weights\" must be an array");
    for (const auto& w : ws) fp.tangent_weights.emplace_back(parse_vector(w));
    m.points.push_back(std::move(fp));
  }
  if (j.contains("rank")) {
    if (!j["rank"].is_number_unsigned()) fail("\"rank\" must be a non-negative integer");
    m.rank = j["rank"].get<std::size_t>();
  } else {
    for (const auto& p : m.points)
      if (!p.tangent_weights.empty()) {
        m.rank = p.tangent_weights.front().rank();
        break;
      }
  }
  if (j.contains("closure_covers")) m.closure_covers = parse_covers(j["closure_covers"]);
  if (j.contains("coweight")) m.coweight = Coweight(parse_vector(j["coweight"]));
  validate_model(m);
  return m;
}

json poset(const StratumPoset& p) {
  json out;
  out["labels"] = p.labels();
  std::vector<std::pair<std::string, std::string>> cs;
  for (const auto& [a, b] : p.covers()) cs.emplace_back(p.label(a), p.label(b));
  out["covers"] = covers_json(cs);
  json payload = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& pl = p.payload(i);
    if (!pl) continue;
    json entry{{"codim", pl->codim}};
    if (pl->euler) entry["euler"] = ring_element(*pl->euler);
    payload[p.label(i)] = entry;
  }
  out["payload"] = payload;
  return out;
}

StratumPoset parse_poset(const json& j) {
  const json& labels = field(j, "labels");
  if (!labels.is_array()) fail("\"labels\" must be an array");
  std::vector<std::string> ls;
  for (const auto& l : labels) {
    if (!l.is_string()) fail("labels must be strings");
    ls.push_back(l.get<std::string>());
  }
  const auto cs = j.contains("covers") ? parse_covers(j["covers"]) : std::vector<std::pair<std::string, std::string>>{};
  std::map<std::string, StratumPayload> payload;
  if (j.contains("payload")) {
    if (!j["payload"].is_object()) fail("\"payload\" must be an object");
    for (const auto& [label, entry] : j["payload"].items()) {
      const json& codim = field(entry, "codim");
      if (!codim.is_number_integer()) fail("\"codim\" must be an integer");
      StratumPayload sp{codim.get<int>(), std::nullopt};
      if (entry.contains("euler") && !entry["euler"].is_null()) sp.euler = parse_ring_element(entry["euler"]);
      payload.emplace(label, std::move(sp));
    }
  }
  return StratumPoset::from_covers(std::move(ls), cs, std::move(payload));
}

Theory poset_theory(const json& j) {
  if (j.contains("payload") && j["payload"].is_object())
    for (const auto& [label, entry] : j["payload"].items())
      if (entry.is_object() && entry.contains("euler") && entry["euler"].is_object() && entry["euler"].contains("theory"))
        return parse_theory(entry["euler"]["theory"].get<std::string>());
  return Theory::H;
}

json decomposition(const GradedModuleDecomposition& dec) {
  return {{"theory", std::string(to_string(dec.theory))},
          {"rank", dec.rank()},
          {"poincare", series(poincare_series(dec))},
          {"generators", generators(dec)}};
}

json weyl_report(const WeylGroup& weyl) {
  const RootDatum& d = weyl.datum();
  json elements = json::array();
  for (const auto& w : weyl.elements()) elements.push_back({{"word", w.word_string()}, {"length", w.length}});
  json roots = json::array();
  for (const auto& r : d.positive_roots) roots.push_back(r.coords());
  return {{"schema", "eqcoh.weyl/1"},
          {"type", d.spec.name()},
          {"rank", d.rank()},
          {"cartan", d.cartan},
          {"order", weyl.size()},
          {"longest_length", weyl[weyl.longest()].length},
          {"positive_roots", roots},
          {"elements", elements}};
}

json flag_report(const FlagVariety& fv, const GradedModuleDecomposition& dec, const Coweight& lam) {
  std::vector<int> parabolic;
  for (int i : fv.spec().parabolic) parabolic.push_back(i + 1);
  json out = decomposition(dec);
  out["schema"] = "eqcoh.flag/1";
  out["type"] = fv.datum().spec.name();
  out["parabolic"] = parabolic;
  out["dimension"] = fv.dimension();
  out["weyl_order"] = fv.weyl().size();
  out["coweight"] = lam.coords();
  return out;
}

json model_report(const GradedModuleDecomposition& dec, const Coweight& lam, const std::vector<std::string>& notes) {
  json out = decomposition(dec);
  out["schema"] = "eqcoh.decomposition/1";
  out["coweight"] = lam.coords();
  out["notes"] = notes;
  return out;
}

json poset_report(const GradedModuleDecomposition& dec, const std::vector<std::string>& order,
                  const std::vector<std::string>& notes) {
  json out = decomposition(dec);
  out["schema"] = "eqcoh.poset-decomposition/1";
  out["order"] = order;
  out["notes"] = notes;
  return out;
}

json gr_report(const AffineGrassmannian& gr, int level) {
  const auto pts = gr.fixed_points(level);
  json fps = json::array();
  for (const auto& p : pts)
    fps.push_back({{"label", p.label()},
                   {"coweight", p.coweight.coords()},
                   {"dominant", p.dominant_rep.coords()},
                   {"witness", p.witness.word_string()},
                   {"level", p.level}});
  // Levels are prefixes of the sorted list.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(level) + 1, 0);
  for (const auto& p : pts)
    for (int n = p.level; n <= level; ++n) ++ranks[static_cast<std::size_t>(n)];
  json projections = json::array();
  for (int n = 0; n < level; ++n)
    projections.push_back({{"from", n + 1},
                           {"to", n},
                           {"kept", ranks[static_cast<std::size_t>(n)]},
                           {"dropped", ranks[static_cast<std::size_t>(n) + 1] - ranks[static_cast<std::size_t>(n)]}});
  return {{"schema", "eqcoh.gr/1"},
          {"type", gr.datum().spec.name()},
          {"alpha", gr.alpha().coords()},
          {"lowest_weight", gr.lowest_weight().coords()},
          {"level", level},
          {"count", pts.size()},
          {"fixed_points", fps},
          {"module", {{"ranks", ranks}, {"projections", projections}}}};
}

json gr_limit_report(const LimitModulePresentation& p, bool commute) {
  json levels = json::array();
  for (const auto& l : p.levels) levels.push_back({{"n", l.n}, {"rank", l.rank}, {"labels", l.labels}});
  json projections = json::array();
  for (const auto& pr : p.projections) {
    json map = json::array();
    for (const auto& t : pr.source_to_target) map.push_back(t ? json(*t) : json(nullptr));
    projections.push_back({{"from", pr.from}, {"to", pr.from - 1}, {"map", map}});
  }
  return {{"schema", "eqcoh.gr-limit/1"},
          {"type", p.group},
          {"alpha", p.alpha.coords()},
          {"theory", std::string(to_string(p.theory))},
          {"base_ring_rank", p.base_ring_rank},
          {"index_description", p.index_description},
          {"levels", levels},
          {"projections", projections},
          {"restrictions_surjective", p.restrictions_surjective},
          {"diagrams_commute", commute}};
}

json euler_report(Theory theory, std::size_t rank, const std::vector<Weight>& ws, const RingElement& cls) {
  json out{{"schema", "eqcoh.euler/1"},
           {"theory", std::string(to_string(theory))},
           {"rank", rank},
           {"weights", weights(ws)},
           {"class", ring_element(cls)},
           {"nonzero_divisor", is_nonzero_divisor(cls)}};
  const auto deg = degree(cls);
  out["degree"] = deg ? json(*deg) : json(nullptr);
  return out;
}

json error_report(std::string_view code, std::string_view message) {
  return {{"schema", "eqcoh.error/1"}, {"error", {{"code", std::string(code)}, {"message", std::string(message)}}}};
}

}  // namespace eqcoh::json_io
