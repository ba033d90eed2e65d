#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modsuper/algebra.hpp"
#include "modsuper/cartan.hpp"

namespace modsuper {

struct RelationExpr {
  enum class Kind { Generator, Bracket, AdPower, Scale, Sum };

  Kind kind = Kind::Generator;
  std::size_t gen = 0;   // Generator, 0-based
  long long coeff = 1;   // Scale
  int exponent = 1;      // AdPower
  std::vector<RelationExpr> kids;  // Bracket: lhs, rhs; AdPower: operator, argument; Scale: body; Sum: terms

  static RelationExpr generator(std::size_t k);
  static RelationExpr bracket(RelationExpr a, RelationExpr b);
  static RelationExpr ad_power(RelationExpr op, int k, RelationExpr arg);
  static RelationExpr scale(long long c, RelationExpr e);
  static RelationExpr sum(std::vector<RelationExpr> terms);

  // 1 + largest generator index used
  std::size_t arity() const;
  // weight over n simple roots; throws InhomogeneousSum for mixed sums
  RootVector weight(std::size_t n) const;
  // ad powers unfolded into nested brackets
  RelationExpr expanded() const;

  friend bool operator==(const RelationExpr&, const RelationExpr&) = default;
};

// expr := term (('+'|'-') term)* ; term := [int ['*']] atom ;
// atom := 'x' int | '[' expr ',' expr ']' | 'ad(' expr ')^' int '(' expr ')'
RelationExpr parse_relation(const std::string& text);
std::string to_string(const RelationExpr& e);

// One relation per line; '#' starts a comment.
std::vector<RelationExpr> parse_relation_file(const std::string& text);

enum class Provenance { Serre, Cube, Listed, Discovered };
std::string_view provenance_name(Provenance p);

struct Relation {
  RelationExpr expr;
  Provenance provenance = Provenance::Listed;
};

struct RelationSet {
  std::string algebra;
  std::size_t index = 0;
  std::vector<Relation> relations;

  std::vector<RelationExpr> exprs() const;
};

// (ad x_i)^{k_ij} x_j for i != j, [x_i, x_i] on grey roots and
// [x_i, [x_i, x_i]] on black roots when p = 3.
RelationSet serre_relations(const CartanDatum& d);

template <class F>
Element<F> evaluate(const GradedAlgebra<F>& g, const RelationExpr& e);

struct RelationCheck {
  Relation relation;
  bool vanishes = false;
  std::size_t nonzero_coords = 0;
};

// Serre relations are generated and prepended unless disabled.
template <class F>
std::vector<RelationCheck> verify_set(const GradedAlgebra<F>& g, const RelationSet& s, bool prepend_serre = true);

struct PresentedOptions {
  int max_height = 64;
  bool truncate = false;
  // impose [u, [u, u]] = 0 for every odd u; in characteristic 3 this does not
  // follow from the Jacobi identity
  bool cube_axiom = false;
};

// Positive part of the algebra presented by the generators x_i, their
// parities, and the given relations.
template <class F>
GradedAlgebra<F> build_from_relations(const CartanDatum& d, const F& f, const std::vector<RelationExpr>& rels,
                                      const PresentedOptions& opt = {});

// Serre relations, followed by a basis of new radical vectors at each weight
// modulo the ideal of everything found so far.
template <class F>
RelationSet discover_relations(const CartanDatum& d, const F& f, const PresentedOptions& opt = {});

extern template Element<PrimeField> evaluate(const GradedAlgebra<PrimeField>&, const RelationExpr&);
extern template Element<RationalField> evaluate(const GradedAlgebra<RationalField>&, const RelationExpr&);
extern template std::vector<RelationCheck> verify_set(const GradedAlgebra<PrimeField>&, const RelationSet&, bool);
extern template std::vector<RelationCheck> verify_set(const GradedAlgebra<RationalField>&, const RelationSet&, bool);
extern template GradedAlgebra<PrimeField> build_from_relations(const CartanDatum&, const PrimeField&,
                                                               const std::vector<RelationExpr>&,
                                                               const PresentedOptions&);
extern template GradedAlgebra<RationalField> build_from_relations(const CartanDatum&, const RationalField&,
                                                                  const std::vector<RelationExpr>&,
                                                                  const PresentedOptions&);
extern template RelationSet discover_relations(const CartanDatum&, const PrimeField&, const PresentedOptions&);
extern template RelationSet discover_relations(const CartanDatum&, const RationalField&, const PresentedOptions&);

}  // namespace modsuper
