#include "omegalab/errors.hpp"
#include "omegalab/graph.hpp"
#include "text_util.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace omegalab {

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << "p " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
  if (g.has_labels())
    for (std::size_t v = 0; v < g.order(); ++v) out << "l " << v << ' ' << g.label(v) << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

Graph read_graph(std::istream& in) {
  using detail::parse_index;
  const auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'p <n> <m>' header");

  auto header = detail::split_fields(lines[0], 1);
  if (header.size() != 3 || header[0] != "p") throw ParseError(1, "expected 'p <n> <m>'");
  const std::size_t n = parse_index(header[1], 1);
  const std::size_t m = parse_index(header[2], 1);

  Graph g(n);
  std::size_t edges_seen = 0;
  std::vector<std::string> labels;
  std::vector<bool> labeled(n, false);
  std::size_t label_count = 0;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const std::string& line = lines[i];
    if (line.empty()) throw ParseError(lineno, "empty line");
    if (line.rfind("l ", 0) == 0) {
      // label is everything after the second space and may itself contain spaces
      std::size_t sp = line.find(' ', 2);
      if (sp == std::string::npos || sp + 1 >= line.size()) throw ParseError(lineno, "expected 'l <v> <label>'");
      std::size_t v = parse_index(std::string_view(line).substr(2, sp - 2), lineno);
      if (v >= n) throw ParseError(lineno, "label vertex out of range");
      if (labeled[v]) throw ParseError(lineno, "duplicate label for vertex " + std::to_string(v));
      if (labels.empty()) labels.resize(n);
      labels[v] = line.substr(sp + 1);
      labeled[v] = true;
      ++label_count;
      continue;
    }
    auto fields = detail::split_fields(line, lineno);
    if (fields[0] != "e" || fields.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>' or 'l <v> <label>'");
    std::size_t u = parse_index(fields[1], lineno), v = parse_index(fields[2], lineno);
    if (u >= n || v >= n) throw ParseError(lineno, "edge endpoint out of range");
    if (g.adjacent(u, v)) throw ParseError(lineno, "duplicate edge");
    g.add_edge(u, v);
    ++edges_seen;
  }
  if (edges_seen != m)
    throw ParseError(lines.size(), "header promised " + std::to_string(m) + " edges, found " + std::to_string(edges_seen));
  if (label_count != 0 && label_count != n) throw ParseError(lines.size(), "labels must cover every vertex");
  try {
    g.set_labels(std::move(labels));
  } catch (const ParameterError& e) {
    throw ParseError(lines.size(), e.what());
  }
  return g;
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  write_graph(out, g);
}

} // namespace omegalab
