#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "modsuper/bracket.hpp"
#include "modsuper/relations.hpp"

namespace support {

using modsuper::Element;
using modsuper::GradedAlgebra;
using modsuper::Part;

template <class F>
Element<F> add(const F& f, Element<F> x, const Element<F>& y, const typename F::value_type& c) {
  if (y.part == Part::Zero || f.is_zero(c)) return x;
  if (x.part == Part::Zero) {
    x.part = y.part;
    x.space = y.space;
    x.c.assign(y.c.size(), f.zero());
  }
  if (x.part != y.part || x.space != y.space) throw std::logic_error("adding elements of different weights");
  modsuper::axpy(f, x.c, c, y.c);
  return x;
}

template <class F>
bool is_zero(const F& f, const Element<F>& x) {
  return x.is_zero(f);
}

template <class F>
typename F::value_type random_scalar(const F& f, std::mt19937_64& rng) {
  return f.from_int(static_cast<long long>(rng() % 7) - 3);
}

// Homogeneous element with random coordinates in a random root space of
// either sign, or in the span of the h_i.
template <class F>
Element<F> random_element(const GradedAlgebra<F>& g, std::mt19937_64& rng) {
  const F& f = g.field();
  const std::size_t spaces = g.spaces().size();
  const std::size_t pick = rng() % (2 * spaces + 1);
  Element<F> x;
  if (pick == 2 * spaces) {
    x.part = Part::Cartan;
    x.c.assign(g.n(), f.zero());
  } else {
    x.part = pick < spaces ? Part::Positive : Part::Negative;
    x.space = static_cast<int>(pick % spaces);
    x.c.assign(g.space(x.space).basis.size(), f.zero());
  }
  for (auto& v : x.c) v = random_scalar(f, rng);
  if (modsuper::is_zero_vec(f, x.c)) x.c[0] = f.one();
  return x;
}

// [u,[v,w]] - [[u,v],w] - (-1)^{|u||v|} [v,[u,w]]
template <class F>
Element<F> jacobiator(modsuper::Bracket<F>& br, const Element<F>& u, const Element<F>& v, const Element<F>& w) {
  const auto& g = br.algebra();
  const F& f = g.field();
  const bool sign = g.parity_of(u) * g.parity_of(v) == 1;
  Element<F> j = br(u, br(v, w));
  j = add(f, j, br(br(u, v), w), f.neg(f.one()));
  j = add(f, j, br(v, br(u, w)), sign ? f.one() : f.neg(f.one()));
  return j;
}


struct GrowthComparison {
  bool presented_complete = false;
  std::size_t differing_weights = 0;
  std::size_t radical_dim = 0, presented_dim = 0;
};

// Per-weight multiplicities of the radical build against the algebra
// presented by the Serre relations and `extra`, grown one height past the
// radical top.
template <class F>
GrowthComparison compare_growth(const modsuper::CartanDatum& d, const F& f,
                                const std::vector<modsuper::RelationExpr>& extra) {
  auto g = modsuper::build(d, f);
  auto rels = modsuper::serre_relations(d).exprs();
  rels.insert(rels.end(), extra.begin(), extra.end());
  modsuper::PresentedOptions o;
  o.max_height = g.top_height() + 2;
  o.truncate = true;
  auto q = modsuper::build_from_relations(d, f, rels, o);
  std::map<modsuper::RootVector, std::size_t> a, b;
  for (const auto& [w, m] : g.multiplicities()) a[w] = m;
  for (const auto& [w, m] : q.multiplicities()) b[w] = m;
  GrowthComparison c;
  c.presented_complete = q.complete();
  c.radical_dim = g.dimension();
  c.presented_dim = q.dimension();
  for (const auto& [w, m] : a)
    if (!b.count(w) || b.at(w) != m) ++c.differing_weights;
  for (const auto& [w, m] : b)
    if (!a.count(w)) ++c.differing_weights;
  return c;
}

template <class F>
bool same_growth(const modsuper::CartanDatum& d, const F& f, const std::vector<modsuper::RelationExpr>& extra) {
  const auto c = compare_growth(d, f, extra);
  return c.presented_complete && c.differing_weights == 0;
}

// Discovered relations that do not already vanish in the algebra presented
// by the Serre relations and `given`.
template <class F>
std::vector<modsuper::RelationExpr> missing_relations(const modsuper::CartanDatum& d, const F& f,
                                                      const std::vector<modsuper::RelationExpr>& given) {
  auto top = modsuper::build(d, f).top_height();
  auto rels = modsuper::serre_relations(d).exprs();
  rels.insert(rels.end(), given.begin(), given.end());
  modsuper::PresentedOptions o;
  o.max_height = top + 2;
  o.truncate = true;
  auto q = modsuper::build_from_relations(d, f, rels, o);
  std::vector<modsuper::RelationExpr> out;
  for (const auto& r : modsuper::discover_relations(d, f).relations) {
    int h = 0;
    for (int x : r.expr.weight(d.n())) h += x;
    if (h > q.top_height()) continue;
    if (!modsuper::evaluate(q, r.expr).is_zero(f)) out.push_back(r.expr);
  }
  return out;
}

}  // namespace support
