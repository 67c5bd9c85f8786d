#ifndef BANDSPEC_IO_HPP
#define BANDSPEC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bandspec/graph.hpp"

namespace bandspec {

// Edge-list text format: first line `n <count>`, then one `u v` pair per
// line, vertices 0-based.
FiniteGraph read_edge_list(std::istream& in);
FiniteGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const FiniteGraph& g);

// Multiplication tables: a square integer matrix, row g column h holding
// g*h, elements 0..order-1 with 0 the identity.
std::vector<std::vector<int>> read_mult_table(std::istream& in);
std::vector<std::vector<int>> read_mult_table_file(const std::string& path);

}  // namespace bandspec

#endif  // BANDSPEC_IO_HPP
