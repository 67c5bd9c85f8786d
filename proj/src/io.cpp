#include "bandspec/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bandspec {

FiniteGraph read_edge_list(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag) || tag != "n" || !(in >> n))
    throw std::runtime_error("edge list: expected header line 'n <count>'");
  std::vector<FiniteGraph::Edge> edges;
  int u = 0;
  int v = 0;
  while (in >> u) {
    if (!(in >> v)) throw std::runtime_error("edge list: dangling endpoint");
    edges.push_back({u, v});
  }
  if (!in.eof() && in.fail())
    throw std::runtime_error("edge list: non-integer token in edge data");
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  try {
    return read_edge_list(in);
  } catch (const std::exception& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
}

void write_edge_list(std::ostream& out, const FiniteGraph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<std::vector<int>> read_mult_table(std::istream& in) {
  std::vector<int> entries;
  int x = 0;
  while (in >> x) entries.push_back(x);
  if (!in.eof() && in.fail())
    throw std::runtime_error("multiplication table: non-integer token");
  const auto order = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
  if (entries.empty() || order * order != entries.size())
    throw std::runtime_error("multiplication table: entry count is not a perfect square");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) table[g][h] = entries[g * order + h];
  return table;
}

std::vector<std::vector<int>> read_mult_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open multiplication table file: " + path);
  try {
    return read_mult_table(in);
  } catch (const std::exception& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
}

}  // namespace bandspec
