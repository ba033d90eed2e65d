#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "modsuper/errors.hpp"
#include "modsuper/relations.hpp"

namespace modsuper {

namespace {

// Positive part presented by generators and homogeneous relations. At each
// weight b the candidates are V_b = sum_i x_i (x) L_{b - alpha_i}; L_b is V_b
// modulo the span K_b of
//   - super-antisymmetry E(u, v) + (-1)^{|u||v|} E(v, u),
//   - E(k, v) for kernel vectors k at lower weights (the bracket must be
//     well defined on the quotient),
//   - relation values of weight b,
//   - optionally E(u, [u, u]) for odd u,
// where E(x_i, v) = x_i (x) v and
//   E([x_i, t], v) = x_i (x) [t, v] - (-1)^{|x_i||t|} E(t, [x_i, v]).
template <class F>
class Presentation {
 public:
  using V = typename F::value_type;

  Presentation(const CartanDatum& d, const F& f, const std::vector<RelationExpr>& rels, const PresentedOptions& opt,
               const GradedAlgebra<F>* target)
      : d_(d), f_(f), opt_(opt), g_(d, f, Construction::Presented), target_(target) {
    const std::size_t n = d.n();
    for (const auto& r : rels) {
      RootVector w = r.weight(n);
      int h = 0;
      for (int x : w) h += x;
      if (h < 2) throw Error(ErrorKind::NotApplicable, "relation " + to_string(r) + " has height one");
      by_weight_[w].push_back(r.expanded());
    }
    if (target_) {
      for (std::size_t i = 0; i < n; ++i) {
        Vec<F> v(target_->space(target_->generator_space(i)).basis.size(), f.zero());
        v[0] = f.one();
        phi_.push_back(std::move(v));
        phi_space_.push_back(target_->generator_space(i));
      }
    }
  }

  void run() {
    const std::size_t n = d_.n();
    std::vector<int> layer;
    for (std::size_t i = 0; i < n; ++i) layer.push_back(static_cast<int>(i));
    int h = 1;
    bool complete = true;
    while (!layer.empty()) {
      if (h >= opt_.max_height) {
        if (!opt_.truncate)
          throw Error(ErrorKind::HeightExceeded, "presented algebra has elements at height " +
                                                     std::to_string(opt_.max_height));
        complete = false;
        for (int id : layer)
          for (std::size_t i = 0; i < n; ++i) g_.set_raise(id, i, -1, {});
        break;
      }
      std::map<RootVector, bool> weights;
      for (std::size_t i = 0; i < n; ++i)
        for (int id : layer) {
          RootVector w = g_.space(g_.basis(id).space).weight;
          ++w[i];
          weights[w] = true;
        }
      std::vector<int> next;
      for (const auto& [w, unused] : weights) process(w, next);
      e_memo_.clear();
      layer = std::move(next);
      ++h;
    }
    g_.finish(complete, complete ? h - 1 : h);
  }

  GradedAlgebra<F>& algebra() { return g_; }
  std::vector<Relation>& discovered() { return found_; }

 private:
  struct Layer {
    RootVector weight;
    int space = -1;
    std::vector<int> vspace;
    std::vector<std::size_t> off;
    std::size_t dim = 0;
    std::vector<long> local;  // V coordinate -> L coordinate, -1 when eliminated
    std::vector<std::size_t> free_cols;
    std::unique_ptr<RowSpace<F>> k;  // reversed coordinates, so early candidates survive
    std::vector<Vec<F>> kernel;      // spanning set of K in natural coordinates
  };

  static std::uint64_t key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
  }

  RootVector weight_of(int id) const { return g_.space(g_.basis(id).space).weight; }

  RootVector plus(const RootVector& a, const RootVector& b) const {
    RootVector w = a;
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += b[k];
    return w;
  }

  V sign(bool odd) const { return odd ? f_.neg(f_.one()) : f_.one(); }

  Layer* layer_at(const RootVector& w) {
    auto it = layers_.find(w);
    return it == layers_.end() ? nullptr : it->second.get();
  }

  Vec<F> reversed(const Vec<F>& v) const { return Vec<F>(v.rbegin(), v.rend()); }

  // V_b coordinates -> L_b coordinates
  Vec<F> project(const Layer& L, const Vec<F>& v) const {
    Vec<F> out(L.free_cols.size(), f_.zero());
    if (out.empty()) return out;
    Vec<F> r = reversed(v);
    L.k->reduce(r);
    for (std::size_t t = 0; t < L.free_cols.size(); ++t) out[t] = r[L.dim - 1 - L.free_cols[t]];
    return out;
  }

  // [u, v] in L; empty when zero
  const Vec<F>& bracket_l(int u, int v, int& space) {
    static const Vec<F> none;
    RootVector w = plus(weight_of(u), weight_of(v));
    Layer* L = layer_at(w);
    space = L ? L->space : -1;
    if (space < 0) return none;
    auto k = key(u, v);
    if (auto it = br_memo_.find(k); it != br_memo_.end()) return it->second;
    Vec<F> e = E(*L, u, v);
    auto [it, ok] = br_memo_.emplace(k, project(*L, e));
    return it->second;
  }

  // E([x_i, t], v) in V_b
  void add_formal(Layer& L, Vec<F>& out, const V& c, std::size_t i, int t, int v) {
    if (f_.is_zero(c)) return;
    int s = -1;
    const Vec<F>& tv = bracket_l(t, v, s);
    if (s >= 0) {
      const std::size_t base = L.off[i];
      for (std::size_t q = 0; q < tv.size(); ++q)
        if (!f_.is_zero(tv[q])) out[base + q] = f_.fma(out[base + q], c, tv[q]);
    }
    const int rs = g_.raise_space(v, i);
    if (rs < 0) return;
    const auto& rv = g_.raise(v, i);
    const auto& rb = g_.space(rs).basis;
    const V cc = f_.mul(c, f_.neg(sign(d_.parity(i) && g_.parity_of(t))));
    for (std::size_t q = 0; q < rv.size(); ++q) {
      if (f_.is_zero(rv[q])) continue;
      axpy(f_, out, f_.mul(cc, rv[q]), E(L, t, rb[q]));
    }
  }

  const Vec<F>& E(Layer& L, int u, int v) {
    auto k = key(u, v);
    if (auto it = e_memo_.find(k); it != e_memo_.end()) return it->second;
    Vec<F> out(L.dim, f_.zero());
    const auto& b = g_.basis(u);
    if (b.parent < 0) {
      const std::size_t i = static_cast<std::size_t>(b.gen);
      out[L.off[i] + static_cast<std::size_t>(g_.basis(v).local)] = f_.one();
    } else {
      add_formal(L, out, f_.one(), static_cast<std::size_t>(b.gen), b.parent, v);
    }
    auto [it, ok] = e_memo_.emplace(k, std::move(out));
    return it->second;
  }

  // value of an expression in L: (space, coordinates); space -1 for zero
  std::pair<int, Vec<F>> eval_l(const RelationExpr& e) {
    using K = RelationExpr::Kind;
    switch (e.kind) {
      case K::Generator: {
        const int s = g_.generator_space(e.gen);
        Vec<F> v(1, f_.one());
        return {s, v};
      }
      case K::Bracket: {
        auto a = eval_l(e.kids[0]);
        auto b = eval_l(e.kids[1]);
        if (a.first < 0 || b.first < 0) return {-1, {}};
        RootVector w = plus(g_.space(a.first).weight, g_.space(b.first).weight);
        Layer* L = layer_at(w);
        if (!L || L->space < 0) return {-1, {}};
        return {L->space, project(*L, e_vec(*L, a, b))};
      }
      case K::Scale: {
        auto a = eval_l(e.kids[0]);
        if (a.first >= 0) scale_vec(f_, a.second, f_.from_int(e.coeff));
        return a;
      }
      case K::Sum: {
        std::pair<int, Vec<F>> acc{-1, {}};
        for (const auto& t : e.kids) {
          auto a = eval_l(t);
          if (a.first < 0) continue;
          if (acc.first < 0)
            acc = std::move(a);
          else
            axpy(f_, acc.second, f_.one(), a.second);
        }
        return acc;
      }
      case K::AdPower:
        break;
    }
    throw Error(ErrorKind::NotApplicable, "unexpanded ad power");
  }

  Vec<F> e_vec(Layer& L, const std::pair<int, Vec<F>>& a, const std::pair<int, Vec<F>>& b) {
    Vec<F> out(L.dim, f_.zero());
    const auto& ab = g_.space(a.first).basis;
    const auto& bb = g_.space(b.first).basis;
    for (std::size_t s = 0; s < a.second.size(); ++s) {
      if (f_.is_zero(a.second[s])) continue;
      for (std::size_t t = 0; t < b.second.size(); ++t) {
        if (f_.is_zero(b.second[t])) continue;
        axpy(f_, out, f_.mul(a.second[s], b.second[t]), E(L, ab[s], bb[t]));
      }
    }
    return out;
  }

  // relation value in V_b (top bracket not reduced)
  Vec<F> eval_v(Layer& L, const RelationExpr& e) {
    using K = RelationExpr::Kind;
    switch (e.kind) {
      case K::Bracket: {
        auto a = eval_l(e.kids[0]);
        auto b = eval_l(e.kids[1]);
        if (a.first < 0 || b.first < 0) return Vec<F>(L.dim, f_.zero());
        return e_vec(L, a, b);
      }
      case K::Scale: {
        Vec<F> v = eval_v(L, e.kids[0]);
        scale_vec(f_, v, f_.from_int(e.coeff));
        return v;
      }
      case K::Sum: {
        Vec<F> acc(L.dim, f_.zero());
        for (const auto& t : e.kids) axpy(f_, acc, f_.one(), eval_v(L, t));
        return acc;
      }
      default:
        throw Error(ErrorKind::NotApplicable, "relation is not a bracket");
    }
  }

  void add_k(Layer& L, const Vec<F>& v) {
    if (is_zero_vec(f_, v)) return;
    if (L.k->insert(reversed(v))) L.kernel.push_back(v);
  }

  RelationExpr word_expr(int id) const {
    const auto& b = g_.basis(id);
    RelationExpr x = RelationExpr::generator(static_cast<std::size_t>(b.gen));
    if (b.parent < 0) return x;
    return RelationExpr::bracket(std::move(x), word_expr(b.parent));
  }

  RelationExpr render(const Layer& L, Vec<F> z) const {
    std::size_t lead = 0;
    while (f_.is_zero(z[lead])) ++lead;
    scale_vec(f_, z, f_.inv(z[lead]));
    std::vector<Rational> c(z.size());
    for (std::size_t q = 0; q < z.size(); ++q) c[q] = f_.to_rational(z[q]);
    const FieldSpec spec = f_.spec();
    if (spec.is_rational()) {
      Integer den = 1;
      for (const auto& x : c)
        if (x != 0) den = boost::multiprecision::lcm(den, Integer(boost::multiprecision::denominator(x)));
      for (auto& x : c) x *= den;
    } else {
      for (auto& x : c) x = spec.symmetric_lift(x);
    }
    std::vector<RelationExpr> terms;
    for (std::size_t i = 0; i < d_.n(); ++i) {
      if (L.vspace[i] < 0) continue;
      const auto& basis = g_.space(L.vspace[i]).basis;
      for (std::size_t q = 0; q < basis.size(); ++q) {
        const Rational& x = c[L.off[i] + q];
        if (x == 0) continue;
        RelationExpr t = RelationExpr::bracket(RelationExpr::generator(i), word_expr(basis[q]));
        long long k = static_cast<long long>(boost::multiprecision::numerator(x));
        terms.push_back(k == 1 ? std::move(t) : RelationExpr::scale(k, std::move(t)));
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return RelationExpr::sum(std::move(terms));
  }

  void process(const RootVector& w, std::vector<int>& next) {
    const std::size_t n = d_.n();
    auto owned = std::make_unique<Layer>();
    Layer& L = *owned;
    L.weight = w;
    L.vspace.assign(n, -1);
    L.off.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] > 0) {
        RootVector u = w;
        --u[i];
        const int s = g_.find_space(u);
        if (s >= 0 && !g_.space(s).basis.empty()) L.vspace[i] = s;
      }
      L.off[i + 1] = L.off[i] + (L.vspace[i] >= 0 ? g_.space(L.vspace[i]).basis.size() : 0);
    }
    L.dim = L.off[n];
    L.k = std::make_unique<RowSpace<F>>(f_, L.dim);
    Layer* lp = owned.get();
    layers_.emplace(w, std::move(owned));

    // antisymmetry over all splittings w = a + b
    const std::size_t nspaces = g_.spaces().size();
    for (std::size_t s1 = 0; s1 < nspaces; ++s1) {
      const auto& sp1 = g_.space(static_cast<int>(s1));
      RootVector rest = w;
      bool ok = true;
      bool nonzero = false;
      for (std::size_t k = 0; k < n; ++k) {
        rest[k] -= sp1.weight[k];
        if (rest[k] < 0) ok = false;
        if (rest[k] > 0) nonzero = true;
      }
      if (!ok || !nonzero) continue;
      const int s2 = g_.find_space(rest);
      if (s2 < 0 || s2 < static_cast<int>(s1)) continue;
      const auto& b1 = sp1.basis;
      const auto& b2 = g_.space(s2).basis;
      const V sg = sign(sp1.parity && g_.space(s2).parity);
      for (std::size_t x = 0; x < b1.size(); ++x)
        for (std::size_t y = (s2 == static_cast<int>(s1) ? x : 0); y < b2.size(); ++y) {
          Vec<F> v = E(L, b1[x], b2[y]);
          axpy(f_, v, sg, E(L, b2[y], b1[x]));
          add_k(L, v);
        }
    }

    // kernel vectors of lower layers bracketed on the right
    for (auto& [gw, low] : layers_) {
      if (low.get() == lp || low->kernel.empty()) continue;
      RootVector rest = w;
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        rest[k] -= gw[k];
        if (rest[k] < 0) ok = false;
      }
      if (!ok) continue;
      const int s2 = g_.find_space(rest);
      if (s2 < 0) continue;
      for (const auto& kv : low->kernel)
        for (int v : g_.space(s2).basis) {
          Vec<F> out(L.dim, f_.zero());
          for (std::size_t i = 0; i < n; ++i) {
            if (low->vspace[i] < 0) continue;
            const auto& tb = g_.space(low->vspace[i]).basis;
            for (std::size_t q = 0; q < tb.size(); ++q) add_formal(L, out, kv[low->off[i] + q], i, tb[q], v);
          }
          add_k(L, out);
        }
    }

    if (auto it = by_weight_.find(w); it != by_weight_.end())
      for (const auto& r : it->second) add_k(L, eval_v(L, r));

    if (opt_.cube_axiom) {
      bool divisible = true;
      RootVector third = w;
      for (auto& x : third) {
        if (x % 3) divisible = false;
        x /= 3;
      }
      if (divisible) {
        const int s = g_.find_space(third);
        if (s >= 0 && g_.space(s).parity)
          for (int u : g_.space(s).basis) {
            int sq = -1;
            Vec<F> uu = bracket_l(u, u, sq);
            if (sq < 0) continue;
            add_k(L, e_vec(L, {g_.basis(u).space, unit(g_.basis(u))}, {sq, uu}));
          }
      }
    }

    if (target_) discover(L);

    // surviving candidates
    std::vector<bool> pivot(L.dim, false);
    for (auto pc : L.k->pivots()) pivot[L.dim - 1 - pc] = true;
    L.local.assign(L.dim, -1);
    for (std::size_t c = 0; c < L.dim; ++c)
      if (!pivot[c]) {
        L.local[c] = static_cast<long>(L.free_cols.size());
        L.free_cols.push_back(c);
      }

    std::vector<std::pair<std::size_t, int>> coords;  // (i, t) per V coordinate
    for (std::size_t i = 0; i < n; ++i)
      if (L.vspace[i] >= 0)
        for (int t : g_.space(L.vspace[i]).basis) coords.emplace_back(i, t);

    if (L.free_cols.empty()) {
      for (const auto& [i, t] : coords) g_.set_raise(t, i, -1, {});
      return;
    }
    L.space = g_.add_space(w);
    for (auto c : L.free_cols) {
      const int id = g_.add_basis(L.space, static_cast<int>(coords[c].first), coords[c].second);
      next.push_back(id);
      if (target_) {
        const auto [i, t] = coords[c];
        phi_.push_back(phi_image(i, t));
        phi_space_.push_back(target_->find_space(w));
      }
    }
    for (std::size_t c = 0; c < L.dim; ++c) {
      Vec<F> e(L.dim, f_.zero());
      e[c] = f_.one();
      g_.set_raise(coords[c].second, coords[c].first, L.space, project(L, e));
    }
  }

  Vec<F> unit(const typename GradedAlgebra<F>::Basis& b) const {
    Vec<F> v(g_.space(b.space).basis.size(), f_.zero());
    v[static_cast<std::size_t>(b.local)] = f_.one();
    return v;
  }

  // [x_i, phi(t)] in the target algebra, over its space at weight(t) + alpha_i
  Vec<F> phi_image(std::size_t i, int t) const {
    RootVector w = weight_of(t);
    ++w[i];
    const int s = target_->find_space(w);
    Vec<F> out(s >= 0 ? target_->space(s).basis.size() : 0, f_.zero());
    if (s < 0 || phi_space_[static_cast<std::size_t>(t)] < 0) return out;
    const auto& src = phi_[static_cast<std::size_t>(t)];
    const auto& sb = target_->space(phi_space_[static_cast<std::size_t>(t)]).basis;
    for (std::size_t q = 0; q < src.size(); ++q) {
      if (f_.is_zero(src[q]) || target_->raise_space(sb[q], i) != s) continue;
      axpy(f_, out, src[q], target_->raise(sb[q], i));
    }
    return out;
  }

  void discover(Layer& L) {
    const std::size_t n = d_.n();
    const int s = target_->find_space(L.weight);
    const std::size_t rows = s >= 0 ? target_->space(s).basis.size() : 0;
    DenseMatrix<F> m(f_, rows, L.dim);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (L.vspace[i] < 0) continue;
      for (int t : g_.space(L.vspace[i]).basis) {
        Vec<F> col = phi_image(i, t);
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = col[r];
        ++c;
      }
    }
    for (const auto& kv : L.kernel) {
      for (std::size_t r = 0; r < rows; ++r) {
        V acc = f_.zero();
        for (std::size_t q = 0; q < L.dim; ++q) acc = f_.fma(acc, m(r, q), kv[q]);
        if (!f_.is_zero(acc))
          throw Error(ErrorKind::Diverged, "presentation is inconsistent with the algebra");
      }
    }
    for (auto& z : null_space(f_, m)) {
      if (!L.k->insert(reversed(z))) continue;
      L.kernel.push_back(z);
      found_.push_back({render(L, z), Provenance::Discovered});
    }
  }

  const CartanDatum& d_;
  F f_;
  PresentedOptions opt_;
  GradedAlgebra<F> g_;
  const GradedAlgebra<F>* target_;
  std::map<RootVector, std::vector<RelationExpr>> by_weight_;
  std::map<RootVector, std::unique_ptr<Layer>> layers_;
  std::unordered_map<std::uint64_t, Vec<F>> e_memo_;
  std::unordered_map<std::uint64_t, Vec<F>> br_memo_;
  std::vector<Vec<F>> phi_;
  std::vector<int> phi_space_;
  std::vector<Relation> found_;
};

}  // namespace

template <class F>
GradedAlgebra<F> build_from_relations(const CartanDatum& d, const F& f, const std::vector<RelationExpr>& rels,
                                      const PresentedOptions& opt) {
  Presentation<F> p(d, f, rels, opt, nullptr);
  p.run();
  return std::move(p.algebra());
}

template <class F>
RelationSet discover_relations(const CartanDatum& d, const F& f, const PresentedOptions& opt) {
  BuildOptions bo;
  bo.max_height = opt.max_height;
  auto g = build(d, f, bo);
  RelationSet serre = serre_relations(d);
  Presentation<F> p(d, f, serre.exprs(), opt, &g);
  p.run();
  RelationSet out = std::move(serre);
  for (auto& r : p.discovered()) out.relations.push_back(std::move(r));
  return out;
}

template GradedAlgebra<PrimeField> build_from_relations(const CartanDatum&, const PrimeField&,
                                                        const std::vector<RelationExpr>&, const PresentedOptions&);
template GradedAlgebra<RationalField> build_from_relations(const CartanDatum&, const RationalField&,
                                                           const std::vector<RelationExpr>&, const PresentedOptions&);
template RelationSet discover_relations(const CartanDatum&, const PrimeField&, const PresentedOptions&);
template RelationSet discover_relations(const CartanDatum&, const RationalField&, const PresentedOptions&);

}  // namespace modsuper
