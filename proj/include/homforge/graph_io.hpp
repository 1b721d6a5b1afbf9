#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homforge/graph.hpp"
#include "homforge/hypergraph.hpp"
#include "homforge/mycielski.hpp"
#include "homforge/star.hpp"

namespace homforge {

/// Edge-list format: first line "n <count>", then one "u v" pair per line
/// (0-based); blank lines and '#' comments are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// Weighted variant: "u v w" with w a decimal in [0,1]; unlisted pairs
/// weigh 0; loops (u == v) are allowed.
WeightedGraph read_weighted_graph(std::istream& in);
WeightedGraph read_weighted_graph_file(const std::string& path);
void write_weighted_graph(std::ostream& out, const WeightedGraph& w);
void write_weighted_graph_file(const std::string& path, const WeightedGraph& w);

/// Map format: one "u -> v" line per source vertex.
VertexMap read_vertex_map(std::istream& in, std::optional<int> source_n = std::nullopt,
                          std::optional<int> target_n = std::nullopt);
VertexMap read_vertex_map_file(const std::string& path, std::optional<int> source_n = std::nullopt,
                               std::optional<int> target_n = std::nullopt);
void write_vertex_map(std::ostream& out, const VertexMap& m);
void write_vertex_map_file(const std::string& path, const VertexMap& m);

/// Hypergraph format: first line "n <count> f <uniformity>", an optional
/// "parts <size_1> ... <size_f>" line describing contiguous part blocks, then
/// one hyperedge per line as f vertex ids.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

/// Mycielskian sidecar labelling: "id : v i" per layered vertex, "id : r"
/// for the root.
void write_mycielski_labels(std::ostream& out, const MycielskiGraph& m);
void write_mycielski_labels_file(const std::string& path, const MycielskiGraph& m);

/// Star labelling: "id : base coord_1 ... coord_m" per star vertex.
void write_star_labels(std::ostream& out, const StarGraph& star);
void write_star_labels_file(const std::string& path, const StarGraph& star);
StarGraph read_star_labels(std::istream& in);
StarGraph read_star_labels_file(const std::string& path);

/// Whitespace-separated vertex ids.
std::vector<int> read_vertex_set_file(const std::string& path);

void write_report_file(const std::string& path,
                       const std::vector<std::pair<std::string, std::string>>& lines);

}  // namespace homforge
