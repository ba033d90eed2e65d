#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modsuper/field.hpp"
#include "modsuper/matrix.hpp"

namespace modsuper {

// Integer coordinates over the simple roots.
using RootVector = std::vector<int>;

// The pair (A, I): Cartan matrix, parities, and the even "empty diagonal"
// markers. Entries are kept reduced in the datum's field.
class CartanDatum {
 public:
  CartanDatum() = default;
  CartanDatum(FieldSpec field, Matrix entries, std::vector<int> parity, std::vector<bool> even_zero = {});

  // Parity from the diagonal: 2 marks an even root, 0 or 1 an odd one.
  static CartanDatum with_inferred_parity(FieldSpec field, const Matrix& entries);

  std::size_t n() const noexcept { return parity_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  const Matrix& entries() const noexcept { return entries_; }
  const Rational& a(std::size_t i, std::size_t j) const { return entries_(i, j); }
  int parity(std::size_t i) const { return parity_[i]; }
  bool even_zero(std::size_t i) const { return even_zero_[i]; }
  const std::vector<int>& parities() const noexcept { return parity_; }
  const std::vector<bool>& even_zeros() const noexcept { return even_zero_; }

  int root_parity(const RootVector& c) const;
  std::size_t odd_count() const;

  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;

 private:
  FieldSpec field_;
  Matrix entries_;
  std::vector<int> parity_;
  std::vector<bool> even_zero_;
};

enum class NodeKind { GreyOdd, BlackOdd, WhiteEven, StarEven };
enum class NodeTag { Sl2, Osp12, Sl11, Heisenberg };

struct NodeClass {
  NodeKind kind;
  NodeTag tag;
};

std::string glyph(NodeKind kind);
std::string_view kind_name(NodeKind kind);
std::string_view tag_name(NodeTag tag);

NodeClass classify_node(const CartanDatum& d, std::size_t i);

enum class ZeroRowScaling {
  Keep,            // rows with zero diagonal are left as given
  FirstNegativeOne // scale so the first nonzero entry is -1
};

CartanDatum normalize(const CartanDatum& d, ZeroRowScaling zero_rows = ZeroRowScaling::Keep);
bool is_normalized(const CartanDatum& d);

// Witness for b(i,j) = scale[i] * a(perm[i], perm[j]) with matching parities.
struct Equivalence {
  std::vector<std::size_t> perm;
  std::vector<Rational> scale;
};

std::optional<Equivalence> equivalent(const CartanDatum& a, const CartanDatum& b);
CartanDatum apply_equivalence(const CartanDatum& a, const Equivalence& w);
Equivalence compose(const Equivalence& ab, const Equivalence& bc, const FieldSpec& f);

// Integer representatives used for Serre exponents: diagonal values as is,
// off-diagonal residues lifted to negative representatives.
std::vector<std::vector<long long>> signed_lift(const CartanDatum& d);

struct SerreExponents {
  std::size_t n = 0;
  std::vector<std::vector<long long>> b;
  // k[i][j] = 1 - b[i][j] for i != j; diagonal unused (0).
  std::vector<std::vector<long long>> k;
  std::vector<bool> self_square;
  std::vector<bool> self_cube;
};

SerreExponents serre_exponents(const CartanDatum& d);

struct DiagramEdge {
  std::size_t i = 0, j = 0;  // i < j
  int multiplicity = 1;
  // index of the node the arrow points to, if the two lifts differ
  std::optional<std::size_t> arrow_to;
  // raw entries, printed next to grey endpoints
  Rational aij, aji;
  bool touches_grey = false;
  bool grey_pair = false;
};

struct Diagram {
  std::vector<NodeKind> nodes;
  std::vector<DiagramEdge> edges;
  // two adjacent grey nodes: the matrix is not recoverable from the picture
  bool ambiguous = false;
  FieldSpec field;
};

Diagram diagram(const CartanDatum& d);
std::string diagram_text(const Diagram& g);
std::string diagram_dot(const Diagram& g, const std::string& name = "diagram");
// Rebuilds a normalized datum from node kinds, multiplicities, arrows and
// grey-endpoint labels.
CartanDatum reconstruct(const Diagram& g);

Matrix invert(const CartanDatum& d);

// Matrix file format: "p=<int>", "parity=<bits>", then n rows; "*" marks an
// even empty diagonal; "#" starts a comment.
CartanDatum parse_matrix_text(const std::string& text);
std::string format_matrix_text(const CartanDatum& d);

std::string matrix_string(const CartanDatum& d, bool signed_entries = true);

}  // namespace modsuper
