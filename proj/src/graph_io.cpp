#include "homforge/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace homforge {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

// Strips comments and blank lines; returns content lines with their numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) lines.emplace_back(number, line);
  }
  return lines;
}

std::string fmt_weight(double w) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw IoError("graph file is empty");
  std::istringstream head(lines[0].second);
  std::string tag;
  int n = -1;
  if (!(head >> tag >> n) || tag != "n" || n < 0)
    throw IoError("expected header 'n <count>'", lines[0].first);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i].second);
    int u, v;
    if (!(row >> u >> v)) throw IoError("expected 'u v'", lines[i].first);
    std::string extra;
    if (row >> extra) throw IoError("trailing tokens after edge", lines[i].first);
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_graph(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_graph(out, g);
}

WeightedGraph read_weighted_graph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw IoError("weighted graph file is empty");
  std::istringstream head(lines[0].second);
  std::string tag;
  int n = -1;
  if (!(head >> tag >> n) || tag != "n" || n < 0)
    throw IoError("expected header 'n <count>'", lines[0].first);
  WeightedGraph w(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i].second);
    int u, v;
    double weight;
    if (!(row >> u >> v >> weight)) throw IoError("expected 'u v w'", lines[i].first);
    if (u < 0 || u >= n || v < 0 || v >= n) throw IoError("vertex out of range", lines[i].first);
    if (!(weight >= 0.0 && weight <= 1.0)) throw IoError("weight outside [0,1]", lines[i].first);
    w.set_weight(u, v, weight);
  }
  return w;
}

WeightedGraph read_weighted_graph_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_weighted_graph(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_weighted_graph(std::ostream& out, const WeightedGraph& w) {
  out << "n " << w.n() << "\n";
  for (int i = 0; i < w.n(); ++i)
    for (int j = i; j < w.n(); ++j)
      if (w.weight(i, j) != 0.0) out << i << " " << j << " " << fmt_weight(w.weight(i, j)) << "\n";
}

void write_weighted_graph_file(const std::string& path, const WeightedGraph& w) {
  auto out = open_output(path);
  write_weighted_graph(out, w);
}

VertexMap read_vertex_map(std::istream& in, std::optional<int> source_n,
                          std::optional<int> target_n) {
  auto lines = content_lines(in);
  std::vector<std::pair<int, int>> pairs;
  int max_u = -1, max_v = -1;
  for (auto& [number, text] : lines) {
    std::istringstream row(text);
    int u, v;
    std::string arrow;
    if (!(row >> u >> arrow >> v) || arrow != "->")
      throw IoError("expected 'u -> v'", number);
    pairs.emplace_back(u, v);
    max_u = std::max(max_u, u);
    max_v = std::max(max_v, v);
  }
  VertexMap m;
  m.source_n = source_n.value_or(max_u + 1);
  m.target_n = target_n.value_or(max_v + 1);
  m.image.assign(m.source_n, -1);
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= m.source_n) throw IoError("map source vertex out of range: " + std::to_string(u));
    if (v < 0 || v >= m.target_n) throw IoError("map target vertex out of range: " + std::to_string(v));
    if (m.image[u] != -1) throw IoError("duplicate map entry for vertex " + std::to_string(u));
    m.image[u] = v;
  }
  for (int u = 0; u < m.source_n; ++u)
    if (m.image[u] < 0) throw IoError("map missing entry for vertex " + std::to_string(u));
  return m;
}

VertexMap read_vertex_map_file(const std::string& path, std::optional<int> source_n,
                               std::optional<int> target_n) {
  auto in = open_input(path);
  try {
    return read_vertex_map(in, source_n, target_n);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_vertex_map(std::ostream& out, const VertexMap& m) {
  for (int u = 0; u < m.source_n; ++u) out << u << " -> " << m.image[u] << "\n";
}

void write_vertex_map_file(const std::string& path, const VertexMap& m) {
  auto out = open_output(path);
  write_vertex_map(out, m);
}

Hypergraph read_hypergraph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw IoError("hypergraph file is empty");
  std::istringstream head(lines[0].second);
  std::string tag_n, tag_f;
  int n = -1, f = -1;
  if (!(head >> tag_n >> n >> tag_f >> f) || tag_n != "n" || tag_f != "f" || n < 0 || f < 0)
    throw IoError("expected header 'n <count> f <uniformity>'", lines[0].first);
  Hypergraph h;
  h.n = n;
  h.uniformity = f;
  std::size_t next = 1;
  if (next < lines.size() && lines[next].second.find("parts") != std::string::npos) {
    std::istringstream row(lines[next].second);
    std::string tag;
    row >> tag;
    if (tag != "parts") throw IoError("expected 'parts <sizes>'", lines[next].first);
    h.part_of.assign(n, -1);
    int v = 0;
    int size;
    int part = 0;
    while (row >> size) {
      if (size < 0 || v + size > n) throw IoError("part sizes exceed n", lines[next].first);
      for (int j = 0; j < size; ++j) h.part_of[v++] = part;
      ++part;
    }
    if (part != f) throw IoError("expected exactly f part sizes", lines[next].first);
    ++next;
  }
  for (; next < lines.size(); ++next) {
    std::istringstream row(lines[next].second);
    std::vector<int> edge;
    int v;
    while (row >> v) edge.push_back(v);
    if (static_cast<int>(edge.size()) != f)
      throw IoError("hyperedge must list exactly f vertices", lines[next].first);
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  h.validate();
  return h;
}

Hypergraph read_hypergraph_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_hypergraph(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "n " << h.n << " f " << h.uniformity << "\n";
  if (h.partite()) {
    // contiguous part blocks: emit the block sizes
    std::vector<int> sizes(h.uniformity, 0);
    for (int v = 0; v < h.n; ++v)
      if (h.part_of[v] >= 0) ++sizes[h.part_of[v]];
    std::vector<int> expect(h.n, -1);
    int v = 0;
    for (int p = 0; p < h.uniformity; ++p)
      for (int j = 0; j < sizes[p]; ++j) expect[v++] = p;
    if (expect != h.part_of) throw IoError("hypergraph writer requires contiguous part blocks");
    out << "parts";
    for (int s : sizes) out << " " << s;
    out << "\n";
  }
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
  auto out = open_output(path);
  write_hypergraph(out, h);
}

void write_mycielski_labels(std::ostream& out, const MycielskiGraph& m) {
  for (int id = 0; id < m.graph.n(); ++id) {
    const auto& label = m.labels[id];
    if (label.root)
      out << id << " : r\n";
    else
      out << id << " : " << label.base << " " << label.layer << "\n";
  }
}

void write_mycielski_labels_file(const std::string& path, const MycielskiGraph& m) {
  auto out = open_output(path);
  write_mycielski_labels(out, m);
}

void write_star_labels(std::ostream& out, const StarGraph& star) {
  out << "# star base_n=" << star.base_n << " m=" << star.m << " delta=" << star.delta << "\n";
  int total = static_cast<int>(star.base_n * star.tuples);
  for (int id = 0; id < total; ++id) {
    out << id << " : " << star.base_of(id);
    for (int c : star.coords_of(id)) out << " " << c;
    out << "\n";
  }
}

void write_star_labels_file(const std::string& path, const StarGraph& star) {
  auto out = open_output(path);
  write_star_labels(out, star);
}

StarGraph read_star_labels(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw IoError("star label file is empty");
  StarGraph star;
  int m = -1, delta = 1, max_base = -1;
  long long count = 0;
  for (auto& [number, text] : lines) {
    std::istringstream row(text);
    long long id;
    std::string colon;
    int base;
    if (!(row >> id >> colon >> base) || colon != ":")
      throw IoError("expected 'id : base coords...'", number);
    std::vector<int> coords;
    int c;
    while (row >> c) coords.push_back(c);
    if (m < 0)
      m = static_cast<int>(coords.size());
    else if (m != static_cast<int>(coords.size()))
      throw IoError("inconsistent coordinate count", number);
    for (int coord : coords) {
      if (coord < 1) throw IoError("coordinates are 1-based", number);
      delta = std::max(delta, coord);
    }
    max_base = std::max(max_base, base);
    ++count;
  }
  star.base_n = max_base + 1;
  star.m = m;
  star.delta = delta;
  star.tuples = 1;
  for (int k = 0; k < m; ++k) star.tuples *= delta;
  if (count != static_cast<long long>(star.base_n) * star.tuples)
    throw IoError("star label file does not enumerate base_n * delta^m vertices");
  star.graph = Graph(static_cast<int>(count), {});
  return star;
}

StarGraph read_star_labels_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_star_labels(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::vector<int> read_vertex_set_file(const std::string& path) {
  auto in = open_input(path);
  auto lines = content_lines(in);
  std::vector<int> set;
  for (auto& [number, text] : lines) {
    std::istringstream row(text);
    int v;
    while (row >> v) set.push_back(v);
  }
  return set;
}

void write_report_file(const std::string& path,
                       const std::vector<std::pair<std::string, std::string>>& lines) {
  auto out = open_output(path);
  for (const auto& [key, value] : lines) out << key << " = " << value << "\n";
}

}  // namespace homforge
