#include "eqcoh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "eqcoh/json_io.hpp"
#include "eqcoh/schemas_embedded.hpp"

namespace eqcoh::cli {

namespace {

using json_io::json;

// Raised while validating flags; maps to exit code 2.
struct UsageError {
  std::string code;
  std::string message;
};

struct Common {
  std::string theory = "H";
  int mu_truncation = 6;
  std::string output = "text";
};

void add_common(CLI::App* sub, Common& c, bool with_theory = true) {
  if (with_theory) {
    sub->add_option("--theory", c.theory, "Coefficient theory: H, K or MU")->capture_default_str();
    sub->add_option("--mu-truncation", c.mu_truncation, "Degree cutoff D for MU (2, 4 or 6)")->capture_default_str();
  }
  sub->add_option("--output", c.output, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

template <class F>
auto validate(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError{std::string(to_string(e.code())), e.what()};
  }
}

std::vector<Int> parse_ints(const std::string& s, const std::string& what) {
  std::vector<Int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError{"ParseError", what + ": cannot read \"" + s + "\""};
    out.push_back(v);
  }
  if (s.back() == ',') throw UsageError{"ParseError", what + ": cannot read \"" + s + "\""};
  return out;
}

TheoryOptions theory_options(const Common& c) {
  return validate([&] {
    TheoryOptions o;
    o.theory = parse_theory(c.theory);
    o.mu_truncation = FormalGroupLaw(c.mu_truncation).truncation();
    return o;
  });
}

RootSystemSpec root_spec(const std::string& type) {
  return validate([&] { return RootSystemSpec::parse(type); });
}

Weight alpha_for(const RootSystemSpec& spec, const std::string& alpha) {
  if (alpha.empty()) {
    if (spec.family != 'A')
      throw UsageError{"InvalidAlpha", "--alpha is required for type " + spec.name()};
    std::vector<Int> w(static_cast<std::size_t>(spec.rank), 0);
    w[0] = 1;
    return Weight(w);
  }
  const auto v = parse_ints(alpha, "--alpha");
  if (v.size() != static_cast<std::size_t>(spec.rank))
    throw UsageError{"RankMismatch", "--alpha needs " + std::to_string(spec.rank) + " coordinates for " + spec.name()};
  return Weight(v);
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError{"ParseError", "cannot open " + path};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + "  " : s + std::string(w - s.size() + 2, ' '); }

void print_decomposition(std::ostream& out, const GradedModuleDecomposition& dec) {
  out << "theory " << to_string(dec.theory) << "\n";
  out << "rank " << dec.rank() << "\n";
  out << "poincare " << poincare_series(dec).to_string() << "\n";
  std::size_t w = 0;
  for (const auto& g : dec.generators) w = std::max(w, g.label.size());
  out << "generators:\n";
  for (const auto& g : dec.generators)
    out << "  " << pad(g.label, w) << "shift " << g.shift << "  class " << to_string(g.cls) << "\n";
}

void emit(std::ostream& out, const Common& c, const json& j, const std::function<void()>& text) {
  if (c.output == "json")
    out << j.dump(2) << "\n";
  else
    text();
}

int cmd_weyl(const std::string& type, const Common& c, std::ostream& out) {
  const WeylGroup weyl(build_root_datum(root_spec(type)));
  emit(out, c, json_io::weyl_report(weyl), [&] {
    out << "type " << weyl.datum().spec.name() << "\n";
    out << "order " << weyl.size() << "\n";
    out << "longest length " << weyl[weyl.longest()].length << "\n";
    out << "positive roots " << weyl.datum().positive_roots.size() << "\n";
    out << "elements:\n";
    for (const auto& w : weyl.elements()) out << "  " << w.word_string() << " (length " << w.length << ")\n";
  });
  return 0;
}

int cmd_flag(const std::string& type, const std::string& parabolic, bool emit_model, const Common& c,
             std::ostream& out) {
  const auto spec = root_spec(type);
  const auto opts = theory_options(c);
  FlagSpec fs{spec, {}};
  for (Int i : parse_ints(parabolic, "--parabolic")) {
    if (i < 1 || i > spec.rank)
      throw UsageError{"UnknownLabel", "--parabolic index " + std::to_string(i) + " outside 1.." + std::to_string(spec.rank)};
    fs.parabolic.push_back(static_cast<int>(i - 1));
  }
  const FlagVariety fv(fs);
  const VarietyModel m = fv.model();
  if (emit_model) {
    out << json_io::model(m).dump(2) << "\n";
    return 0;
  }
  const Coweight lam = generic_coweight(m);
  const auto dec = assemble_module(bb_stratify(m, lam, opts), opts.theory);
  emit(out, c, json_io::flag_report(fv, dec, lam), [&] {
    std::string p;
    for (int i : fs.parabolic) p += (p.empty() ? "" : ",") + std::to_string(i + 1);
    out << "type " << spec.name() << "\n";
    out << "parabolic {" << p << "}\n";
    out << "dimension " << fv.dimension() << "\n";
    out << "coweight " << to_string(lam) << "\n";
    print_decomposition(out, dec);
  });
  return 0;
}

int cmd_model(const std::string& input, const Common& c, std::ostream& out) {
  const auto opts = theory_options(c);
  const VarietyModel m = json_io::parse_model(read_json(input));
  const Coweight lam = generic_coweight(m);
  const StratumPoset poset = bb_stratify(m, lam, opts);
  const auto dec = assemble_module(poset, opts.theory);
  emit(out, c, json_io::model_report(dec, lam, poset.notes), [&] {
    out << "coweight " << to_string(lam) << "\n";
    print_decomposition(out, dec);
    for (const auto& n : poset.notes) out << "note: " << n << "\n";
  });
  return 0;
}

int cmd_poset(const std::string& input, const std::string& order, const Common& c, std::ostream& out) {
  const json j = read_json(input);
  const StratumPoset poset = json_io::parse_poset(j);
  const Theory theory = json_io::poset_theory(j);
  std::vector<std::size_t> idx;
  if (order.empty()) {
    idx = linear_extension(poset);
  } else {
    std::stringstream ss(order);
    std::string label;
    while (std::getline(ss, label, ',')) idx.push_back(poset.index_of(label));
  }
  const auto dec = assemble_module(poset, theory, idx);
  std::vector<std::string> labels;
  for (auto i : idx) labels.push_back(poset.label(i));
  emit(out, c, json_io::poset_report(dec, labels, poset.notes), [&] {
    std::string o;
    for (const auto& l : labels) o += (o.empty() ? "" : " ") + l;
    out << "order " << o << "\n";
    print_decomposition(out, dec);
  });
  return 0;
}

int cmd_gr(const std::string& type, const std::string& alpha, int level, const Common& c, std::ostream& out) {
  const auto spec = root_spec(type);
  theory_options(c);
  if (level < 0) throw UsageError{"ParseError", "--level must be non-negative"};
  const Weight a = alpha_for(spec, alpha);
  const AffineGrassmannian gr = validate([&] { return AffineGrassmannian(spec, a); });
  const json j = json_io::gr_report(gr, level);
  emit(out, c, j, [&] {
    out << "type " << spec.name() << "\n";
    out << "alpha " << to_string(a) << ", lowest weight " << to_string(gr.lowest_weight()) << "\n";
    out << "level " << level << "\n";
    out << "count " << j["count"].get<std::size_t>() << "\n";
    out << "ranks";
    for (const auto& r : j["module"]["ranks"]) out << " " << r.get<std::size_t>();
    out << "\nfixed points:\n";
    for (const auto& p : j["fixed_points"])
      out << "  " << p["label"].get<std::string>() << "  level " << p["level"].get<int>() << "  dominant "
          << to_string(p["dominant"].get<std::vector<Int>>()) << "\n";
  });
  return 0;
}

int cmd_gr_limit(const std::string& type, const std::string& alpha, int levels, const Common& c, std::ostream& out) {
  const auto spec = root_spec(type);
  const auto opts = theory_options(c);
  if (levels < 0) throw UsageError{"ParseError", "--levels must be non-negative"};
  const Weight a = alpha_for(spec, alpha);
  validate([&] { return AffineGrassmannian(spec, a); });
  const auto p = gr_limit_module(spec, a, levels, opts.theory);
  const bool commute = diagrams_commute(p);
  emit(out, c, json_io::gr_limit_report(p, commute), [&] {
    out << "type " << p.group << ", alpha " << to_string(a) << ", theory " << to_string(p.theory) << "\n";
    out << "base ring rank " << p.base_ring_rank << "\n";
    out << "index " << p.index_description << "\n";
    for (const auto& l : p.levels) out << "level " << l.n << "  rank " << l.rank << "\n";
    for (const auto& pr : p.projections) {
      const auto dropped = std::count(pr.source_to_target.begin(), pr.source_to_target.end(), std::nullopt);
      out << "pi_" << pr.from - 1 << ": level " << pr.from << " -> " << pr.from - 1 << "  drops " << dropped << "\n";
    }
    out << "restrictions surjective " << (p.restrictions_surjective ? "yes" : "no") << "\n";
    out << "diagrams commute " << (commute ? "yes" : "no") << "\n";
  });
  return commute ? 0 : 1;
}

std::vector<Weight> parse_weight_list(const std::string& s) {
  std::vector<Weight> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) out.emplace_back(parse_ints(item, "--weights"));
  if (out.empty()) throw UsageError{"ParseError", "--weights is empty"};
  for (const auto& w : out)
    if (w.rank() != out.front().rank()) throw UsageError{"RankMismatch", "--weights entries differ in rank"};
  return out;
}

int cmd_euler(const std::string& weights, std::optional<std::uint64_t> seed, int count, int rank, const Common& c,
              std::ostream& out) {
  const auto opts = theory_options(c);
  const FormalGroupLaw fgl(opts.mu_truncation);
  std::vector<std::vector<Weight>> batches;
  if (seed) {
    if (!weights.empty()) throw UsageError{"ParseError", "--weights and --seed are exclusive"};
    if (rank < 1 || rank > 8 || count < 1) throw UsageError{"ParseError", "--rank must be 1..8 and --count positive"};
    std::mt19937_64 rng(*seed);
    std::uniform_int_distribution<int> size(1, 3);
    std::uniform_int_distribution<Int> coord(-3, 3);
    for (int k = 0; k < count; ++k) {
      std::vector<Weight> ws;
      for (int s = size(rng); s > 0;) {
        std::vector<Int> v(static_cast<std::size_t>(rank));
        for (auto& x : v) x = coord(rng);
        Weight w(v);
        if (w.is_zero()) continue;
        ws.push_back(w);
        --s;
      }
      batches.push_back(std::move(ws));
    }
  } else {
    if (weights.empty()) throw UsageError{"ParseError", "give --weights or --seed"};
    batches.push_back(parse_weight_list(weights));
  }
  json reports = json::array();
  std::vector<RingElement> classes;
  for (const auto& ws : batches) {
    classes.push_back(euler_class(opts.theory, ws, ws.front().rank(), fgl));
    reports.push_back(json_io::euler_report(opts.theory, ws.front().rank(), ws, classes.back()));
  }
  emit(out, c, seed ? reports : reports.front(), [&] {
    for (std::size_t k = 0; k < batches.size(); ++k) {
      std::string ws;
      for (const auto& w : batches[k]) ws += (ws.empty() ? "" : " ") + to_string(w);
      out << "e_" << to_string(opts.theory) << "{" << ws << "} = " << to_string(classes[k]) << "\n";
    }
  });
  return 0;
}

int print_schema(const std::string& name, std::ostream& out) {
  if (name.empty() || name == "all") {
    json all = json::object();
    for (const auto& [k, v] : schemas::kAll) all[std::string(k)] = json::parse(v);
    out << all.dump(2) << "\n";
    return 0;
  }
  for (const auto& [k, v] : schemas::kAll)
    if (k == name) {
      out << v;
      return 0;
    }
  std::string names;
  for (const auto& [k, v] : schemas::kAll) names += (names.empty() ? "" : ", ") + std::string(k);
  throw UsageError{"UnknownLabel", "no schema \"" + name + "\"; available: " + names};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant cohomology of T-varieties with isolated fixed points", "eqcoh"};
  app.require_subcommand(0, 1);
  std::string schema;
  auto* schema_opt = app.add_option("--schema", schema, "Print the JSON schema NAME (or all of them)")->expected(0, 1);

  Common c;
  std::string type, parabolic, input, alpha, weights, order;
  int level = 0, levels = 0, count = 200, rank = 3;
  bool emit_model = false;
  std::optional<std::uint64_t> seed;

  auto* weyl = app.add_subcommand("weyl", "Weyl group of a root system");
  weyl->add_option("--type", type, "Root system, e.g. A2, B3, G2")->required();
  add_common(weyl, c, false);

  auto* flag = app.add_subcommand("flag", "Module structure of a (partial) flag variety G/P");
  flag->add_option("--type", type, "Root system")->required();
  flag->add_option("--parabolic", parabolic, "Simple roots of P, 1-based, comma separated");
  flag->add_flag("--emit-model", emit_model, "Print the variety model as JSON instead");
  add_common(flag, c);

  auto* model = app.add_subcommand("model", "Module structure of a variety model read from JSON");
  model->add_option("--input", input, "Model file, - for stdin")->required();
  add_common(model, c);

  auto* poset = app.add_subcommand("poset", "Assemble a module from a stratum poset read from JSON");
  poset->add_option("--input", input, "Poset file, - for stdin")->required();
  poset->add_option("--order", order, "Linear extension to walk, comma separated labels");
  add_common(poset, c, false);

  auto* gr = app.add_subcommand("gr", "Fixed points of a level of the affine Grassmannian");
  gr->add_option("--type", type, "Root system")->required();
  gr->add_option("--alpha", alpha, "Highest weight of the representation, fundamental-weight coordinates");
  gr->add_option("--level", level, "Filtration level n")->required();
  add_common(gr, c);

  auto* gr_limit = app.add_subcommand("gr-limit", "Inverse system of affine Grassmannian levels");
  gr_limit->add_option("--type", type, "Root system")->required();
  gr_limit->add_option("--alpha", alpha, "Highest weight of the representation");
  gr_limit->add_option("--levels", levels, "Largest level")->required();
  add_common(gr_limit, c);

  auto* euler = app.add_subcommand("euler", "Equivariant Euler class of a weight multiset");
  euler->add_option("--weights", weights, "Weights separated by ';', coordinates by ','");
  euler->add_option("--seed", seed, "Random multisets from this seed");
  euler->add_option("--count", count, "Number of random multisets")->capture_default_str();
  euler->add_option("--rank", rank, "Rank of random weights")->capture_default_str();
  add_common(euler, c);

  // Schema names such as "gr" would otherwise parse as subcommands.
  if (!args.empty() && (args[0] == "--schema" || args[0].rfind("--schema=", 0) == 0)) {
    if (args.size() > (args[0] == "--schema" ? 2U : 1U)) {
      err << json_io::error_report("UsageError", "--schema takes at most one name").dump() << "\n";
      return 2;
    }
    const std::string name = args[0] == "--schema" ? (args.size() > 1 ? args[1] : "") : args[0].substr(9);
    try {
      return print_schema(name, out);
    } catch (const UsageError& e) {
      err << json_io::error_report(e.code, e.message).dump() << "\n";
      return 2;
    }
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << json_io::error_report("UsageError", e.what()).dump() << "\n";
    return 2;
  }

  try {
    if (schema_opt->count() > 0) return print_schema(schema, out);
    if (app.get_subcommands().empty()) {
      err << json_io::error_report("UsageError", "a subcommand is required").dump() << "\n";
      return 2;
    }
    if (weyl->parsed()) return cmd_weyl(type, c, out);
    if (flag->parsed()) return cmd_flag(type, parabolic, emit_model, c, out);
    if (model->parsed()) return cmd_model(input, c, out);
    if (poset->parsed()) return cmd_poset(input, order, c, out);
    if (gr->parsed()) return cmd_gr(type, alpha, level, c, out);
    if (gr_limit->parsed()) return cmd_gr_limit(type, alpha, levels, c, out);
    if (euler->parsed()) return cmd_euler(weights, seed, count, rank, c, out);
  } catch (const UsageError& e) {
    err << json_io::error_report(e.code, e.message).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    err << json_io::error_report(to_string(e.code()), e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json_io::error_report("InternalError", e.what()).dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace eqcoh::cli
