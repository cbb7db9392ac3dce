#include "conjlab/harness.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "conjlab/cayley.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

DefiningGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("graph JSON needs a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw InputError("graph vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("graph \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InputError("graph edges must be pairs of vertex names");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return DefiningGraph(std::move(vertices), edges);
}

DefiningGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

nlohmann::json graph_to_json(const DefiningGraph& graph) {
  nlohmann::json j;
  j["vertices"] = graph.names();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : graph.edges()) j["edges"].push_back({graph.name(u), graph.name(v)});
  return j;
}

DefiningGraph builtin_graph(const std::string& name) {
  static const std::regex pattern("([FZPC])([0-9]+)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw InputError("unknown builtin graph " + name);
  const int n = std::stoi(m[2].str());
  if (n < 1 || n > 26) throw InputError("builtin graph size out of range: " + name);
  switch (m[1].str()[0]) {
    case 'F': return DefiningGraph::free_group(n);
    case 'Z': return DefiningGraph::free_abelian(n);
    case 'P': return DefiningGraph::path(n);
    default:
      if (n < 3) throw InputError("cycle graphs need at least 3 vertices");
      return DefiningGraph::cycle(n);
  }
}

DefiningGraph resolve_graph(const std::string& spec) {
  static const std::regex pattern("[FZPC][0-9]+");
  if (std::regex_match(spec, pattern)) return builtin_graph(spec);
  return load_graph_file(spec);
}

Domain parse_domain_json(const DefiningGraph& graph, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("delta") || !j["delta"].is_array())
    throw InputError("domain JSON needs a \"delta\" array");
  std::vector<std::string> names;
  for (const auto& v : j["delta"]) {
    if (!v.is_string()) throw InputError("domain delta entries must be vertex names");
    names.push_back(v.get<std::string>());
  }
  const std::string rep = j.contains("rep") ? j["rep"].get<std::string>() : std::string();
  return Domain::make(graph, parse_vertex_set(graph, names), parse_element(graph, rep));
}

nlohmann::json domain_to_json(const DefiningGraph& graph, const Domain& d) {
  nlohmann::json j;
  j["delta"] = nlohmann::json::array();
  for (int v : d.delta().members()) j["delta"].push_back(graph.name(v));
  j["rep"] = format_word(graph, d.rep().letters());
  return j;
}

std::size_t budget_from_env(std::size_t fallback) {
  const char* env = std::getenv("CONJLAB_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (!std::isdigit(static_cast<unsigned char>(*env)) || *end != '\0' || v == 0)
    throw InputError("CONJLAB_BUDGET must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::size_t RunConfig::effective_budget() const {
  return element_budget != 0 ? element_budget : budget_from_env(kDefaultElementBudget);
}

Metadata RunConfig::metadata() const {
  return {{"graph", graph},
          {"seed", std::to_string(seed)},
          {"budget_elems", std::to_string(effective_budget())},
          {"format", format}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

}  // namespace conjlab
