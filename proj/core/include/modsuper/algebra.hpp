#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modsuper/cartan.hpp"
#include "modsuper/dense.hpp"
#include "modsuper/field.hpp"

namespace modsuper {

enum class Part { Zero, Positive, Cartan, Negative };

// Homogeneous element of g'(A,I). Positive and Negative elements are
// coordinates over the basis of a positive weight space (negative ones over
// its image under the Chevalley involution); Cartan elements are
// coordinates over h_1..h_n.
template <class F>
struct Element {
  Part part = Part::Zero;
  int space = -1;
  Vec<F> c;

  bool is_zero(const F& f) const { return part == Part::Zero || is_zero_vec(f, c); }
};

struct BuildOptions {
  int max_height = 64;
  // stop at max_height with complete() == false instead of throwing; the
  // layer at max_height is kept but not raised further
  bool truncate = false;
};

enum class Construction { Radical, Presented };

template <class F>
class GradedAlgebra {
 public:
  using V = typename F::value_type;

  struct Space {
    RootVector weight;
    int height = 0;
    int parity = 0;
    std::vector<int> basis;  // global ids, construction order
    Vec<F> eigen;            // (A * weight)_k over the field
  };

  struct Basis {
    int space = -1;
    int local = -1;
    int gen = -1;     // x_gen ...
    int parent = -1;  // ... bracketed with this basis element; -1 for generators
  };

  GradedAlgebra(const CartanDatum& d, const F& f, Construction how);

  const CartanDatum& datum() const noexcept { return datum_; }
  const F& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return datum_.n(); }
  Construction construction() const noexcept { return how_; }
  bool complete() const noexcept { return complete_; }
  bool has_lowering() const noexcept { return how_ == Construction::Radical; }
  int top_height() const noexcept { return top_height_; }

  const V& a(std::size_t i, std::size_t j) const { return a_[i * n() + j]; }
  int gen_parity(std::size_t i) const { return datum_.parity(i); }

  const std::vector<Space>& spaces() const noexcept { return spaces_; }
  const Space& space(int s) const { return spaces_[static_cast<std::size_t>(s)]; }
  const std::vector<Basis>& basis() const noexcept { return basis_; }
  const Basis& basis(int id) const { return basis_[static_cast<std::size_t>(id)]; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  int find_space(const RootVector& w) const;
  int generator_space(std::size_t i) const { return gen_space_[i]; }
  int parity_of(int id) const { return spaces_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(id)].space)].parity; }
  int height_of(int id) const { return spaces_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(id)].space)].height; }

  // [x_i, b]: target space (-1 when zero) and coordinates there.
  int raise_space(int id, std::size_t i) const { return raise_space_[static_cast<std::size_t>(id)][i]; }
  const Vec<F>& raise(int id, std::size_t i) const { return raise_[static_cast<std::size_t>(id)][i]; }
  // [f_j, b] for b of height >= 2: coordinates over space weight(b) - alpha_j.
  int lower_space(int id, std::size_t j) const { return lower_space_[static_cast<std::size_t>(id)][j]; }
  const Vec<F>& lower(int id, std::size_t j) const { return lower_[static_cast<std::size_t>(id)][j]; }

  // Multiplicity of each positive weight, in space order.
  std::vector<std::pair<RootVector, std::size_t>> multiplicities() const;
  // Left-normed construction word of a basis element, e.g. "[x1, [x2, x3]]".
  std::string word(int id) const;

  Element<F> zero_at(const RootVector& signed_weight) const;
  Element<F> generator(std::size_t i) const;  // e_i
  Element<F> lowering_generator(std::size_t i) const;  // f_i
  Element<F> cartan(std::size_t i) const;  // h_i
  Element<F> basis_element(int id) const;
  RootVector weight_of(const Element<F>& x) const;  // signed; zero for Cartan
  int parity_of(const Element<F>& x) const;

  // builder interface
  int add_space(const RootVector& w);
  int add_basis(int space, int gen, int parent);
  void set_raise(int id, std::size_t i, int space, Vec<F> v);
  void set_lower(int id, std::size_t j, int space, Vec<F> v);
  void finish(bool complete, int top_height);

 private:
  CartanDatum datum_;
  F field_;
  Construction how_;
  std::vector<V> a_;
  std::vector<Space> spaces_;
  std::map<RootVector, int> space_index_;
  std::vector<Basis> basis_;
  std::vector<int> gen_space_;
  std::vector<std::vector<int>> raise_space_;
  std::vector<std::vector<Vec<F>>> raise_;
  std::vector<std::vector<int>> lower_space_;
  std::vector<std::vector<Vec<F>>> lower_;
  bool complete_ = false;
  int top_height_ = 0;
};

// Radical construction of g(A,I): grows the positive part one height at a
// time, declaring a combination zero exactly when every f_j kills it.
template <class F>
GradedAlgebra<F> build(const CartanDatum& d, const F& f, const BuildOptions& opt = {});

// Reinterprets a datum over another field using its integer lift.
CartanDatum over_field(const CartanDatum& d, const FieldSpec& f);

struct RootEntry {
  RootVector coeffs;
  std::size_t multiplicity = 0;
  int parity = 0;
};

struct MaximalRoot {
  RootVector coeffs;
  std::vector<Rational> eigenvalues;  // A * coeffs over the field
  std::string expression;
  std::size_t multiplicity = 0;
};

using Sdim = std::pair<std::size_t, std::size_t>;

struct AlgebraReport {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::size_t cartan_dim = 0;  // 2n - rank
  std::size_t center_dim = 0;  // n - rank, inside g'
  Sdim sdim_full;
  Sdim sdim_derived;
  Sdim sdim_simple;
  std::size_t positive_even = 0;
  std::size_t positive_odd = 0;
  std::size_t positive_root_count = 0;  // dim n+, i.e. with multiplicity
  std::size_t max_height = 0;
  std::vector<RootEntry> roots;
  std::optional<MaximalRoot> maximal_root;
};

template <class F>
AlgebraReport report(const GradedAlgebra<F>& g);

template <class F>
MaximalRoot maximal_root(const GradedAlgebra<F>& g);

std::string sdim_string(const Sdim& s);
std::string report_text(const AlgebraReport& r);
std::string report_json(const AlgebraReport& r);

extern template class GradedAlgebra<PrimeField>;
extern template class GradedAlgebra<RationalField>;
extern template GradedAlgebra<PrimeField> build(const CartanDatum&, const PrimeField&, const BuildOptions&);
extern template GradedAlgebra<RationalField> build(const CartanDatum&, const RationalField&, const BuildOptions&);
extern template AlgebraReport report(const GradedAlgebra<PrimeField>&);
extern template AlgebraReport report(const GradedAlgebra<RationalField>&);
extern template MaximalRoot maximal_root(const GradedAlgebra<PrimeField>&);
extern template MaximalRoot maximal_root(const GradedAlgebra<RationalField>&);

}  // namespace modsuper
