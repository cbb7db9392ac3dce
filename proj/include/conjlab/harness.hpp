#pragma once

// Run configuration, file formats and provenance shared by the command-line
// tool, the acceptance binary and the Python bindings.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "conjlab/domains.hpp"
#include "conjlab/raag.hpp"

namespace conjlab {

// {"vertices": [...], "edges": [[u, v], ...]}
DefiningGraph parse_graph_json(const std::string& text);
DefiningGraph load_graph_file(const std::string& path);
nlohmann::json graph_to_json(const DefiningGraph& graph);

// F<n>, Z<n>, P<n>, C<n> (e.g. F2, Z2, P3, C5).
DefiningGraph builtin_graph(const std::string& name);
// A builtin name, or otherwise a path to a graph JSON file.
DefiningGraph resolve_graph(const std::string& spec);

// {"delta": [...], "rep": "..."}
Domain parse_domain_json(const DefiningGraph& graph, const nlohmann::json& j);
nlohmann::json domain_to_json(const DefiningGraph& graph, const Domain& d);

// CONJLAB_BUDGET overrides `fallback` when set to a positive integer.
std::size_t budget_from_env(std::size_t fallback);

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct RunConfig {
  std::string graph = "F2";
  std::uint64_t seed = 7;
  std::size_t element_budget = 0;  // 0: default, possibly overridden by CONJLAB_BUDGET
  std::string output;              // empty: stdout
  std::string format = "json";     // json | csv

  std::size_t effective_budget() const;
  Metadata metadata() const;
};

// Serialised JSON is canonical: keys sorted, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

// Writes to `path`, or stdout when empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace conjlab
