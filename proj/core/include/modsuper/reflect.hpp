#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modsuper/cartan.hpp"

namespace modsuper {

struct ReflectionStep {
  CartanDatum source;
  std::size_t root = 0;
  CartanDatum target;
  // new simple roots in the coordinates of the old ones
  std::vector<RootVector> new_simple_roots;
};

// Grey roots only: odd with zero diagonal.
bool reflectable(const CartanDatum& d, std::size_t i);

// New generators are x_i^-/+ for the reflected root and [x_i, x_j] for its
// neighbours; the new matrix is read off from [h'_j, x'_k] and normalized.
ReflectionStep odd_reflect(const CartanDatum& d, std::size_t i);

using TableCell = std::optional<std::size_t>;
using TableGrid = std::vector<std::vector<TableCell>>;

struct ReflectionTable {
  std::vector<CartanDatum> classes;
  TableGrid table;  // table[c][i]: class reached from c through root i
};

struct EnumerateOptions {
  std::size_t class_cap = 64;
  // deduplicate only up to row rescaling, keeping index-permuted copies
  bool keep_redundant = false;
};

ReflectionTable enumerate_classes(const CartanDatum& seed, const EnumerateOptions& opt = {});

// Same matrix and parities up to rescaling rows, with no index permutation.
bool rescaling_equal(const CartanDatum& a, const CartanDatum& b);

std::string reflection_table_text(const ReflectionTable& t);
std::string reflection_table_json(const ReflectionTable& t);
std::string reflection_graph_dot(const ReflectionTable& t, const std::string& name = "reflections");

struct TableComparison {
  bool ok = true;
  std::vector<std::optional<std::size_t>> printed_to_class;
  std::vector<std::string> problems;
};

// Checks a printed table against an enumeration: every printed matrix is
// equivalent to a class and vice versa, "-" cells sit exactly on nonzero
// diagonals, and each printed cell agrees with both a direct reflection and
// the enumerated table under the class correspondence.
TableComparison compare_table(const ReflectionTable& t, const std::vector<CartanDatum>& printed, const TableGrid& cells);

}  // namespace modsuper
