// conjlab: normal forms, conjugacy, hierarchy data and projection-complex
// experiments from the command line.
//
// Exit codes: 0 success, 1 check failed, 2 input error, 3 budget exceeded.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conjlab/cayley.hpp"
#include "conjlab/conjugator.hpp"
#include "conjlab/domains.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/harness.hpp"
#include "conjlab/projection_complex.hpp"
#include "conjlab/raag.hpp"

using namespace conjlab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string graph;
  std::uint64_t seed = 7;
  int radius = -1;
  double k = -1.0;
  double c = 0.0;
  std::size_t samples = 0;
  std::size_t budget_elems = 0;
  int universe_bound = -1;
  std::string out;
  std::string format;

  std::vector<std::string> words;
  std::string h = "a";
  int rank = 2;
  std::vector<std::string> delta;
  std::string rep;
  std::string domain_file;
  std::size_t max_core = 6;
  std::size_t eps = 0;
  std::size_t m_max = 20;
  int m = 2;
  int f_radius = 8;
  int f_universe = 4;
};

// Generator names appearing in the words, for the default free group.
DefiningGraph free_group_on(const std::vector<std::string>& words) {
  std::set<std::string> names;
  for (const auto& w : words) {
    std::istringstream in(w);
    std::string tok;
    while (in >> tok) {
      std::string name = tok.substr(0, tok.find('^'));
      if (name == tok) {
        while (name.size() > 1 && std::isdigit(static_cast<unsigned char>(name.back())))
          name.pop_back();
      }
      if (!name.empty()) names.insert(name);
    }
  }
  if (names.empty()) names.insert("a");
  return DefiningGraph({names.begin(), names.end()}, {});
}

DefiningGraph graph_for(const Options& o) {
  if (!o.graph.empty()) return resolve_graph(o.graph);
  return free_group_on(o.words);
}

std::size_t budget(const Options& o) {
  return o.budget_elems != 0 ? o.budget_elems : budget_from_env(kDefaultElementBudget);
}

json base_config(const std::string& command, const Options& o, const DefiningGraph& g) {
  json c;
  c["command"] = command;
  c["graph"] = graph_to_json(g);
  c["graph_source"] = o.graph.empty() ? "free group on the input generators" : o.graph;
  c["seed"] = o.seed;
  c["budget_elems"] = budget(o);
  c["inputs"] = o.words;
  return c;
}

std::string emit_text_or_json(const Options& o, const json& config, const json& result,
                              const std::string& text) {
  if (o.format == "json") {
    json j;
    j["config"] = config;
    j["result"] = result;
    return dump_json(j);
  }
  return text + "\n";
}

NormalForm word_arg(const DefiningGraph& g, const Options& o, std::size_t i) {
  if (i >= o.words.size()) throw InputError("missing word argument");
  return parse_element(g, o.words[i]);
}

std::string fmt(const DefiningGraph& g, const NormalForm& x) { return format_word(g, x.letters()); }

json certificate_json(const DefiningGraph& g, const ConjugacyCertificate& c) {
  json j;
  j["a"] = fmt(g, c.a);
  j["b"] = fmt(g, c.b);
  j["conjugate"] = c.conjugate;
  if (c.conjugate) {
    j["conjugator"] = fmt(g, c.conjugator);
    j["conjugator_length"] = c.conjugator.length();
    j["valid"] = c.valid;
    j["within_bound"] = c.within_bound;
    j["pipeline_length"] = c.pipeline_length;
    j["used_fallback"] = c.used_fallback;
  }
  j["bound_K"] = c.bound_k;
  j["bound_C"] = c.bound_c;
  return j;
}

int cmd_nf(const Options& o) {
  const auto g = graph_for(o);
  const NormalForm x = word_arg(g, o, 0);
  write_output(o.out, emit_text_or_json(o, base_config("nf", o, g), fmt(g, x), fmt(g, x)));
  return kExitOk;
}

int cmd_mul(const Options& o) {
  const auto g = graph_for(o);
  NormalForm x;
  for (std::size_t i = 0; i < o.words.size(); ++i) x = multiply(g, x, word_arg(g, o, i));
  write_output(o.out, emit_text_or_json(o, base_config("mul", o, g), fmt(g, x), fmt(g, x)));
  return kExitOk;
}

int cmd_inv(const Options& o) {
  const auto g = graph_for(o);
  const NormalForm x = invert(g, word_arg(g, o, 0));
  write_output(o.out, emit_text_or_json(o, base_config("inv", o, g), fmt(g, x), fmt(g, x)));
  return kExitOk;
}

int cmd_conj(const Options& o) {
  const auto g = graph_for(o);
  FindOptions fo;
  fo.element_budget = budget(o);
  const double k = o.k < 0 ? 2.0 : o.k;
  const auto cert = find_conjugator(g, word_arg(g, o, 0), word_arg(g, o, 1), k, o.c, fo);
  json j;
  j["config"] = base_config("conj", o, g);
  j["config"]["K"] = k;
  j["config"]["C"] = o.c;
  j["result"] = certificate_json(g, cert);
  write_output(o.out, dump_json(j));
  return cert.conjugate && !cert.valid ? kExitCheckFailed : kExitOk;
}

int cmd_min_conj(const Options& o) {
  const auto g = graph_for(o);
  const NormalForm a = word_arg(g, o, 0);
  const NormalForm b = word_arg(g, o, 1);
  const int r = o.radius < 0 ? 8 : o.radius;
  const auto brute = shortest_conjugator_bruteforce(g, a, b, r, budget(o));
  json res;
  res["found"] = brute.has_value();
  bool ok = true;
  if (brute) {
    res["conjugator"] = fmt(g, *brute);
    res["length"] = brute->length();
    FindOptions fo;
    fo.minimize = true;
    fo.element_budget = budget(o);
    const auto cert = find_conjugator(g, a, b, 2.0, 0.0, fo);
    res["pipeline_min_length"] = cert.conjugator.length();
    ok = cert.conjugator.length() == brute->length();
    res["cross_check"] = ok;
  } else {
    res["conjugate"] = are_conjugate(g, a, b);
  }
  json j;
  j["config"] = base_config("min-conj", o, g);
  j["config"]["radius"] = r;
  j["result"] = res;
  write_output(o.out, dump_json(j));
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_shorten(const Options& o) {
  const auto g = graph_for(o);
  const NormalForm a = word_arg(g, o, 0);
  const NormalForm b = word_arg(g, o, 1);
  const NormalForm c = word_arg(g, o, 2);
  const NormalForm s = shorten_conjugator(g, a, b, c);
  json res;
  res["input_length"] = c.length();
  res["conjugator"] = fmt(g, s);
  res["length"] = s.length();
  res["valid"] = is_conjugator(g, s, a, b);
  write_output(o.out, emit_text_or_json(o, base_config("shorten", o, g), res, fmt(g, s)));
  return kExitOk;
}

int cmd_big(const Options& o) {
  const auto g = graph_for(o);
  const BigSet b = big(g, word_arg(g, o, 0));
  json res;
  res["domains"] = json::array();
  for (const auto& d : b.domains) res["domains"].push_back(domain_to_json(g, d));
  res["factors"] = json::array();
  for (const auto& f : b.factors) res["factors"].push_back(fmt(g, f));
  res["maximal"] = b.maximal;
  json j;
  j["config"] = base_config("big", o, g);
  j["result"] = res;
  write_output(o.out, dump_json(j));
  return kExitOk;
}

int cmd_gate(const Options& o) {
  const auto g = graph_for(o);
  const NormalForm x = word_arg(g, o, 0);
  Coset target;
  if (!o.domain_file.empty()) {
    std::ifstream in(o.domain_file);
    if (!in) throw InputError("cannot open " + o.domain_file);
    json dj;
    try {
      in >> dj;
    } catch (const json::exception& e) {
      throw InputError(std::string("domain JSON: ") + e.what());
    }
    const Domain d = parse_domain_json(g, dj);
    target = d.f_coset();
  } else {
    if (o.delta.empty()) throw InputError("gate needs --delta or --domain");
    target = {parse_element(g, o.rep), parse_vertex_set(g, o.delta)};
  }
  const Gate gt = gate(g, x, target);
  json res;
  res["gate"] = fmt(g, gt.point);
  res["distance"] = gt.distance;
  json config = base_config("gate", o, g);
  config["delta"] = o.delta;
  config["rep"] = o.rep;
  config["domain_file"] = o.domain_file;
  write_output(o.out, emit_text_or_json(o, config, res, fmt(g, gt.point)));
  return kExitOk;
}

int cmd_domains(const Options& o) {
  const auto g = graph_for(o);
  const std::size_t threshold = o.k < 0 ? 3 : static_cast<std::size_t>(o.k);
  const int radius = o.radius < 0 ? 1 : o.radius;
  const auto ds = relevant_domains(g, word_arg(g, o, 0), word_arg(g, o, 1), threshold, radius,
                                   budget(o));
  json res = json::array();
  for (const auto& d : ds) {
    json e = domain_to_json(g, d);
    e["distance"] = domain_distance(g, d, word_arg(g, o, 0), word_arg(g, o, 1));
    res.push_back(e);
  }
  json j;
  j["config"] = base_config("domains", o, g);
  j["config"]["K"] = threshold;
  j["config"]["radius"] = radius;
  j["config"]["metric"] = "F-metric proxy";
  j["result"] = res;
  write_output(o.out, dump_json(j));
  return kExitOk;
}

int cmd_clf_scan(const Options& o) {
  Options opt = o;
  if (opt.graph.empty()) opt.graph = "C5";
  const auto g = resolve_graph(opt.graph);
  ClfConfig cfg;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.max_core_len = o.max_core;
  cfg.max_twist_len = o.radius < 0 ? 6 : static_cast<std::size_t>(o.radius);
  cfg.bound_k = o.k < 0 ? 2.0 : o.k;
  cfg.bound_c = o.c;
  cfg.element_budget = budget(o);
  const ClfResult res = clf_experiment(g, cfg);
  const double c0 = fit_additive_constant(res.rows, cfg.bound_k);
  std::string content;
  if (o.format == "json") {
    json j;
    j["config"] = base_config("clf-scan", opt, g);
    j["config"]["samples"] = cfg.samples;
    j["config"]["max_core_len"] = cfg.max_core_len;
    j["config"]["max_twist_len"] = cfg.max_twist_len;
    j["config"]["K"] = cfg.bound_k;
    j["fitted_C"] = c0;
    j["skipped"] = res.skipped;
    j["rows"] = json::array();
    for (const auto& r : res.rows)
      j["rows"].push_back({{"trial", r.trial},
                           {"|a|", r.len_a},
                           {"|b|", r.len_b},
                           {"min_conj_len", r.min_conj_len},
                           {"pipeline_conj_len", r.pipeline_conj_len},
                           {"big_maximal", r.big_maximal},
                           {"seed", r.seed}});
    content = dump_json(j);
  } else {
    std::ostringstream out;
    write_clf_csv(out, res,
                  {{"command", "clf-scan"},
                   {"graph", graph_to_json(g).dump()},
                   {"graph_source", opt.graph},
                   {"seed", std::to_string(cfg.seed)},
                   {"samples", std::to_string(cfg.samples)},
                   {"max_core_len", std::to_string(cfg.max_core_len)},
                   {"max_twist_len", std::to_string(cfg.max_twist_len)},
                   {"budget_elems", std::to_string(cfg.element_budget)},
                   {"K", json(cfg.bound_k).dump()},
                   {"fitted_C", json(c0).dump()}});
    content = out.str();
  }
  write_output(o.out, content);
  return kExitOk;
}

CosetFamily family_for(const Options& o) {
  const auto g = o.graph.empty() ? DefiningGraph::free_group(o.rank) : resolve_graph(o.graph);
  return CosetFamily(g, parse_element(g, o.h));
}

json pc_config(const std::string& command, const Options& o, const CosetFamily& fam) {
  json c;
  c["command"] = command;
  c["graph"] = graph_to_json(fam.graph());
  c["h"] = fmt(fam.graph(), fam.h());
  c["root"] = fmt(fam.graph(), fam.root());
  c["seed"] = o.seed;
  c["inputs"] = o.words;
  return c;
}

// K from --K, or the least K passing the lemma suite on the universe.
std::size_t resolve_k(const Options& o, const CosetFamily& fam, int bound, json& config) {
  if (o.k >= 1) {
    config["K_source"] = "given";
    return static_cast<std::size_t>(o.k);
  }
  const KScan scan = scan_k(fam, bound, 1, 8, 0, 200, o.seed);
  if (!scan.found) throw InputError("no K in [1, 8] passes the lemma suite");
  config["K_source"] = "scan";
  return scan.k;
}

int cmd_pc_build(const Options& o) {
  const auto fam = family_for(o);
  const int bound = o.universe_bound < 0 ? 5 : o.universe_bound;
  json config = pc_config("pc-build", o, fam);
  const std::size_t k = resolve_k(o, fam, bound, config);
  const PkGraph pk = build_pk(fam, fam.universe(bound), k);
  json j;
  j["check"] = "build";
  j["parameters"] = config;
  j["universe_bound"] = bound;
  j["K"] = k;
  j["vertices"] = pk.vertices().size();
  j["edges"] = pk.edge_count();
  j["connected"] = pk.connected();
  j["worst_case"] = 0;
  j["pass"] = pk.connected();
  write_output(o.out, dump_json(j));
  return pk.connected() ? kExitOk : kExitCheckFailed;
}

int cmd_pc_check(const Options& o) {
  const auto fam = family_for(o);
  const int bound = o.universe_bound < 0 ? 5 : o.universe_bound;
  json config = pc_config("pc-check", o, fam);
  config["path_samples"] = o.samples == 0 ? 200 : o.samples;
  json out;
  bool pass = true;
  std::size_t k = 0;
  json steps = json::array();
  if (o.k >= 1) {
    k = static_cast<std::size_t>(o.k);
    config["K_source"] = "given";
  } else {
    config["K_source"] = "scan";
  }
  // Scanning from the given K (or 1) upward; a given K is checked alone.
  const std::size_t k_lo = k == 0 ? 1 : k;
  const std::size_t k_hi = k == 0 ? 8 : k;
  const KScan scan = scan_k(fam, bound, k_lo, k_hi, 0, o.samples == 0 ? 200 : o.samples, o.seed);
  for (const auto& s : scan.steps) {
    json e;
    e["K"] = s.k;
    e["thin_triangle"] = s.at_bound.thin_triangles.to_json();
    e["thin_triangle"]["universe_bound"] = bound;
    e["bottleneck"] = s.at_bound.bottleneck.to_json();
    e["quasi_geodesic"] = {{"lambda", s.at_bound.quasi_geodesic.lambda},
                           {"epsilon", s.at_bound.quasi_geodesic.epsilon},
                           {"pairs", s.at_bound.quasi_geodesic.pairs},
                           {"paths_are_paths", s.at_bound.quasi_geodesic.paths_are_paths}};
    if (s.at_next_bound)
      e["quasi_geodesic_next_bound"] = {{"lambda", s.at_next_bound->lambda},
                                        {"epsilon", s.at_next_bound->epsilon},
                                        {"pairs", s.at_next_bound->pairs}};
    e["stable"] = s.stable;
    e["pass"] = s.pass;
    steps.push_back(e);
  }
  pass = scan.found;
  k = scan.found ? scan.k : scan.steps.empty() ? k_lo : scan.steps.back().k;
  out["check"] = "lemma_suite";
  out["parameters"] = config;
  out["universe_bound"] = bound;
  out["K"] = k;
  out["worst_case"] = scan.steps.empty() ? 0.0 : scan.steps.back().at_bound.bottleneck.worst_case;
  out["pass"] = pass;
  out["steps"] = steps;
  write_output(o.out, dump_json(out));
  return pass ? kExitOk : kExitCheckFailed;
}

FMeasureConfig f_config(const Options& o, std::size_t k) {
  FMeasureConfig fc;
  fc.k = k;
  fc.eps = o.eps;
  fc.m_max = o.m_max;
  fc.ball_radius = o.radius < 0 ? o.f_radius : o.radius;
  fc.universe_bound = o.universe_bound < 0 ? o.f_universe : o.universe_bound;
  // Joint 0-stabilisers of distinct cosets are trivial, so R(0) = 1.
  fc.r_threshold = 1;
  return fc;
}

int cmd_pc_f(const Options& o) {
  const auto fam = family_for(o);
  json config = pc_config("pc-f", o, fam);
  const std::size_t k = resolve_k(o, fam, 5, config);
  const FMeasureConfig fc = f_config(o, k);
  const auto rows = f_measure(fam, fc);
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].max_diam >= rows[i - 1].max_diam;
  std::string content;
  if (o.format == "json") {
    json j;
    j["config"] = config;
    j["config"]["K"] = k;
    j["config"]["ball_radius"] = fc.ball_radius;
    j["config"]["universe_bound"] = fc.universe_bound;
    j["config"]["r_threshold"] = fc.r_threshold;
    j["monotone"] = monotone;
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"M", r.m}, {"max_diam", r.max_diam}, {"samples", r.samples}, {"eps", r.eps}});
    content = dump_json(j);
  } else {
    std::ostringstream out;
    out << "# command=pc-f\n# h=" << fmt(fam.graph(), fam.h()) << "\n# rank=" << fam.graph().size()
        << "\n# K=" << k << "\n# ball_radius=" << fc.ball_radius
        << "\n# universe_bound=" << fc.universe_bound << "\n# r_threshold=" << fc.r_threshold
        << "\n# seed=" << o.seed << "\n# monotone=" << (monotone ? 1 : 0) << "\n";
    out << "M,max_diam,samples,eps\n";
    for (const auto& r : rows) out << r.m << ',' << r.max_diam << ',' << r.samples << ',' << r.eps << '\n';
    content = out.str();
  }
  write_output(o.out, content);
  return monotone ? kExitOk : kExitCheckFailed;
}

int cmd_thmc(const Options& o) {
  const auto fam = family_for(o);
  const auto& g = fam.graph();
  json config = pc_config("thmC", o, fam);
  const std::size_t k = resolve_k(o, fam, 5, config);
  const FMeasureConfig fc = f_config(o, k);
  const auto table = f_measure(fam, fc);
  const auto rep = theorem_c_pipeline(fam, k, word_arg(g, o, 0), word_arg(g, o, 1),
                                      word_arg(g, o, 2), o.m, table);
  config["m"] = o.m;
  config["f_ball_radius"] = fc.ball_radius;
  config["f_universe_bound"] = fc.universe_bound;
  config["eps"] = fc.eps;
  json j;
  j["check"] = "theorem_c";
  j["parameters"] = config;
  j["universe_bound"] = fc.universe_bound;
  j["K"] = k;
  j["worst_case"] = rep.conj_length;
  j["pass"] = rep.pass;
  j["details"] = rep.to_json(g);
  write_output(o.out, dump_json(j));
  return rep.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjlab: conjugacy experiments in right-angled Artin groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "builtin graph (F2, Z2, P3, C5, ...) or graph JSON path");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--radius", o.radius, "search / ball / twist radius");
    sub->add_option("--K", o.k, "multiplicative bound, relevance threshold or P_K constant");
    sub->add_option("--C", o.c, "additive bound");
    sub->add_option("--samples", o.samples, "number of samples");
    sub->add_option("--budget-elems", o.budget_elems, "element budget (overrides CONJLAB_BUDGET)");
    sub->add_option("--universe-bound", o.universe_bound, "max canonical rep length of cosets");
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--format", o.format, "text | json | csv");
  };
  auto add_words = [&](CLI::App* sub, const std::string& desc, int n) {
    auto* opt = sub->add_option("words", o.words, desc);
    if (n > 0) opt->expected(n);
    return opt;
  };
  auto add_pc = [&](CLI::App* sub) {
    sub->add_option("--hword", o.h, "element h defining the cosets c.E(h)");
    sub->add_option("--rank", o.rank, "free group rank when --graph is absent");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto reg = [&](const std::string& name, const std::string& desc, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };

  add_words(reg("nf", "normal form of a word", cmd_nf), "word", 1)->required();
  add_words(reg("mul", "product of words", cmd_mul), "words", -1)->required();
  add_words(reg("inv", "inverse of a word", cmd_inv), "word", 1)->required();
  add_words(reg("conj", "conjugacy certificate for a and b", cmd_conj), "a b", 2)->required();
  add_words(reg("min-conj", "shortest conjugator by exhaustive search", cmd_min_conj), "a b", 2)
      ->required();
  add_words(reg("shorten", "shorten a conjugator g with g a g^-1 = b", cmd_shorten), "a b g", 3)
      ->required();
  add_words(reg("big", "Big set of an element", cmd_big), "g", 1)->required();
  {
    CLI::App* sub = reg("gate", "gate of x onto rep.A_delta", cmd_gate);
    add_words(sub, "x", 1)->required();
    sub->add_option("--delta", o.delta, "vertex names of delta")->delimiter(',');
    sub->add_option("--rep", o.rep, "coset representative");
    sub->add_option("--domain", o.domain_file, "domain JSON file");
  }
  add_words(reg("domains", "relevant domains for x, y", cmd_domains), "x y", 2)->required();
  reg("clf-scan", "conjugator length experiment", cmd_clf_scan)
      ->add_option("--max-core", o.max_core, "max cyclic core length");
  {
    CLI::App* sub = reg("pc-build", "build P_K on a coset universe", cmd_pc_build);
    add_pc(sub);
  }
  {
    CLI::App* sub = reg("pc-check", "lemma suite on P_K", cmd_pc_check);
    add_pc(sub);
  }
  {
    CLI::App* sub = reg("pc-f", "measure f(M) from V_eps sets", cmd_pc_f);
    add_pc(sub);
    sub->add_option("--eps", o.eps, "quasi-stabiliser tolerance");
    sub->add_option("--M-max", o.m_max, "largest M");
  }
  {
    CLI::App* sub = reg("thmC", "conjugator bound pipeline for loxodromic a, b", cmd_thmc);
    add_words(sub, "a b g", 3)->required();
    add_pc(sub);
    sub->add_option("--m", o.m, "number of periods");
    sub->add_option("--M-max", o.m_max, "largest M in the f table");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      if (o.format.empty()) o.format = sub->get_name() == "clf-scan" || sub->get_name() == "pc-f" ? "csv"
                                     : sub->get_name() == "nf" || sub->get_name() == "mul" ||
                                               sub->get_name() == "inv" || sub->get_name() == "gate" ||
                                               sub->get_name() == "shorten"
                                         ? "text"
                                         : "json";
      if (o.format != "text" && o.format != "json" && o.format != "csv")
        throw InputError("unknown --format " + o.format);
      return fn(o);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IncompleteUniverseError& e) {
    std::cerr << "incomplete universe: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
