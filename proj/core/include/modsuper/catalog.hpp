#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modsuper/algebra.hpp"
#include "modsuper/cartan.hpp"
#include "modsuper/matrix.hpp"
#include "modsuper/reflect.hpp"
#include "modsuper/relations.hpp"

namespace modsuper {

struct MaxRootRecord {
  std::string label;           // maximal index as printed
  std::vector<int> coeffs;     // as printed
  std::vector<int> weight;     // as printed
  std::string expression;
  RootVector expression_weight;  // empty without an expression
};

enum class HeadlineMeaning { Derived, Simple, Unresolved };
std::string_view headline_name(HeadlineMeaning h);

enum class ErratumKind {
  MatrixSign,       // printed matrix does not follow from the table; working matrix differs
  TableCell,        // printed cell disagrees with the reflection and no sign fix helps
  Inverse,          // printed inverse fails A * inv = I
  WeightLength,     // printed weight has the wrong number of entries
  CoeffLength,      // printed coefficients have the wrong number of entries
  Weight,           // printed weight differs from A * c
  Coefficients,     // printed coefficients differ from the weight of the printed expression
  // declared in the corpus; they need a built algebra to confirm
  Relation,             // a printed relation does not vanish
  RelationsIncomplete,  // the printed list with the Serre relations is not defining
  RelationBlock,        // the matrix is defined by a block printed under another label
  MaxRoot,              // the printed maximal root is the one of another matrix
};
std::string_view erratum_name(ErratumKind k);

struct Erratum {
  std::size_t matrix = 0;  // 1-based
  ErratumKind kind = ErratumKind::Inverse;
  std::string printed;
  std::string recomputed;
  std::size_t item = 0;  // Relation: 1-based position in the block; RelationBlock, MaxRoot: matrix label
  // set when the printed value is right for some rescaling of the rows
  bool rescaled_rows = false;
};

struct CatalogMatrix {
  std::size_t index = 0;  // 1-based
  CartanDatum printed;
  // equal to printed unless a MatrixSign erratum is recorded
  CartanDatum working;
  std::optional<RelationSet> relations;  // block printed under this label
  // label of the block defining this matrix
  std::size_t defining_block = 0;
  std::optional<MaxRootRecord> max_root;
  std::optional<Matrix> inverse;             // as printed
  std::optional<Matrix> inverse_recomputed;  // set when the printed one fails
  // earlier printed matrices equivalent to this one
  std::vector<std::size_t> duplicate_of;
};

struct CatalogEntry {
  std::string name;  // "g(2,3)"
  std::string file;  // corpus file name
  std::size_t n = 0;
  Sdim headline_sdim;
  std::optional<Sdim> noted_sdim;
  HeadlineMeaning headline_means = HeadlineMeaning::Unresolved;
  std::vector<CatalogMatrix> matrices;
  TableGrid table;
  bool degenerate = false;
  std::vector<Erratum> errata;

  const CatalogMatrix& matrix(std::size_t index) const;  // 1-based, NotFound
  std::vector<CartanDatum> printed_matrices() const;
  std::vector<CartanDatum> working_matrices() const;
  std::vector<const Erratum*> errata_for(std::size_t index) const;
  bool has_erratum(std::size_t index, ErratumKind k) const;
  // relations of the block defining matrix `index`; empty set if none
  RelationSet defining_relations(std::size_t index) const;
};

// Parses one corpus file; CorpusCorrupt names the file and line.
CatalogEntry parse_corpus(std::string_view file, std::string_view text);

// All shipped entries, parsed once.
const std::vector<CatalogEntry>& load();

const CatalogEntry& find(std::string_view name);

struct CatalogSlot {
  const CatalogEntry* entry = nullptr;
  const CatalogMatrix* matrix = nullptr;
};

CatalogSlot lookup(std::string_view name, std::size_t index);
// "g(2,3)/1"
CatalogSlot lookup(std::string_view slot);

std::string_view corpus_text(std::string_view name);
std::vector<std::string> corpus_file_names();

// Which of the derived algebra and its simple quotient carries the headline
// superdimension, computed from a radical build of matrix 1.
HeadlineMeaning resolve_headline(const CatalogEntry& e);

std::string catalog_list_text();
std::string catalog_show_text(const CatalogEntry& e);
std::string catalog_show_json(const CatalogEntry& e);

}  // namespace modsuper
