#include "modsuper/algebra.hpp"

#include <algorithm>
#include <tuple>

#include "modsuper/errors.hpp"

namespace modsuper {

namespace {

int height_of_weight(const RootVector& w) {
  int h = 0;
  for (int x : w) h += x;
  return h;
}

}  // namespace

template <class F>
GradedAlgebra<F>::GradedAlgebra(const CartanDatum& d, const F& f, Construction how)
    : datum_(d), field_(f), how_(how) {
  if (!(f.spec() == d.field())) throw Error(ErrorKind::InvalidField, "field does not match the datum");
  const std::size_t m = d.n();
  a_.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a_.push_back(f.from_rational(d.a(i, j)));
  gen_space_.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    RootVector w(m, 0);
    w[i] = 1;
    gen_space_[i] = add_space(w);
    add_basis(gen_space_[i], static_cast<int>(i), -1);
  }
}

template <class F>
int GradedAlgebra<F>::find_space(const RootVector& w) const {
  auto it = space_index_.find(w);
  return it == space_index_.end() ? -1 : it->second;
}

template <class F>
int GradedAlgebra<F>::add_space(const RootVector& w) {
  if (w.size() != n()) throw Error(ErrorKind::DimensionMismatch, "weight length");
  if (auto s = find_space(w); s >= 0) return s;
  Space sp;
  sp.weight = w;
  sp.height = height_of_weight(w);
  sp.parity = datum_.root_parity(w);
  sp.eigen.assign(n(), field_.zero());
  for (std::size_t k = 0; k < n(); ++k)
    for (std::size_t m = 0; m < n(); ++m)
      if (w[m]) sp.eigen[k] = field_.fma(sp.eigen[k], a(k, m), field_.from_int(w[m]));
  const int idx = static_cast<int>(spaces_.size());
  spaces_.push_back(std::move(sp));
  space_index_.emplace(w, idx);
  return idx;
}

template <class F>
int GradedAlgebra<F>::add_basis(int space, int gen, int parent) {
  auto& sp = spaces_[static_cast<std::size_t>(space)];
  Basis b;
  b.space = space;
  b.local = static_cast<int>(sp.basis.size());
  b.gen = gen;
  b.parent = parent;
  const int id = static_cast<int>(basis_.size());
  sp.basis.push_back(id);
  basis_.push_back(b);
  raise_space_.emplace_back(n(), -1);
  raise_.emplace_back(n());
  lower_space_.emplace_back(n(), -1);
  lower_.emplace_back(n());
  return id;
}

template <class F>
void GradedAlgebra<F>::set_raise(int id, std::size_t i, int space, Vec<F> v) {
  if (space >= 0 && is_zero_vec(field_, v)) space = -1;
  raise_space_[static_cast<std::size_t>(id)][i] = space;
  raise_[static_cast<std::size_t>(id)][i] = space < 0 ? Vec<F>{} : std::move(v);
}

template <class F>
void GradedAlgebra<F>::set_lower(int id, std::size_t j, int space, Vec<F> v) {
  if (space >= 0 && is_zero_vec(field_, v)) space = -1;
  lower_space_[static_cast<std::size_t>(id)][j] = space;
  lower_[static_cast<std::size_t>(id)][j] = space < 0 ? Vec<F>{} : std::move(v);
}

template <class F>
void GradedAlgebra<F>::finish(bool complete, int top_height) {
  complete_ = complete;
  top_height_ = top_height;
}

template <class F>
std::vector<std::pair<RootVector, std::size_t>> GradedAlgebra<F>::multiplicities() const {
  std::vector<std::pair<RootVector, std::size_t>> out;
  for (const auto& s : spaces_)
    if (!s.basis.empty()) out.emplace_back(s.weight, s.basis.size());
  return out;
}

template <class F>
std::string GradedAlgebra<F>::word(int id) const {
  const auto& b = basis(id);
  std::string x = "x" + std::to_string(b.gen + 1);
  if (b.parent < 0) return x;
  return "[" + x + ", " + word(b.parent) + "]";
}

template <class F>
Element<F> GradedAlgebra<F>::zero_at(const RootVector& w) const {
  Element<F> e;
  bool all_zero = true, nonneg = true, nonpos = true;
  for (int x : w) {
    if (x) all_zero = false;
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  if (all_zero) {
    e.part = Part::Cartan;
    e.c.assign(n(), field_.zero());
    return e;
  }
  if (!nonneg && !nonpos) return e;
  RootVector pos = w;
  if (nonpos)
    for (auto& x : pos) x = -x;
  int s = find_space(pos);
  if (s < 0 || space(s).basis.empty()) return e;
  e.part = nonneg ? Part::Positive : Part::Negative;
  e.space = s;
  e.c.assign(space(s).basis.size(), field_.zero());
  return e;
}

template <class F>
Element<F> GradedAlgebra<F>::generator(std::size_t i) const {
  return basis_element(static_cast<int>(i));
}

template <class F>
Element<F> GradedAlgebra<F>::lowering_generator(std::size_t i) const {
  Element<F> e = generator(i);
  e.part = Part::Negative;
  return e;
}

template <class F>
Element<F> GradedAlgebra<F>::cartan(std::size_t i) const {
  Element<F> e;
  e.part = Part::Cartan;
  e.c.assign(n(), field_.zero());
  e.c[i] = field_.one();
  return e;
}

template <class F>
Element<F> GradedAlgebra<F>::basis_element(int id) const {
  const auto& b = basis(id);
  Element<F> e;
  e.part = Part::Positive;
  e.space = b.space;
  e.c.assign(space(b.space).basis.size(), field_.zero());
  e.c[static_cast<std::size_t>(b.local)] = field_.one();
  return e;
}

template <class F>
RootVector GradedAlgebra<F>::weight_of(const Element<F>& x) const {
  if (x.part == Part::Positive) return space(x.space).weight;
  if (x.part == Part::Negative) {
    RootVector w = space(x.space).weight;
    for (auto& v : w) v = -v;
    return w;
  }
  return RootVector(n(), 0);
}

template <class F>
int GradedAlgebra<F>::parity_of(const Element<F>& x) const {
  if (x.part == Part::Positive || x.part == Part::Negative) return space(x.space).parity;
  return 0;
}

CartanDatum over_field(const CartanDatum& d, const FieldSpec& f) {
  if (d.field() == f) return d;
  auto lift = signed_lift(d);
  const std::size_t n = d.n();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = lift[i][j];
  return CartanDatum(f, m.reduced(f), d.parities(), d.even_zeros());
}

template <class F>
GradedAlgebra<F> build(const CartanDatum& d, const F& f, const BuildOptions& opt) {
  using V = typename F::value_type;
  GradedAlgebra<F> g(d, f, Construction::Radical);
  const std::size_t n = d.n();
  auto sign = [&](int a, int b) { return sign_value(f, (a & b) != 0); };

  std::vector<int> layer;
  for (std::size_t i = 0; i < n; ++i) layer.push_back(static_cast<int>(i));
  int h = 1;
  bool complete = true;

  while (true) {
    if (layer.empty()) break;
    if (h >= opt.max_height) {
      if (!opt.truncate)
        throw Error(ErrorKind::HeightExceeded, "no zero layer up to height " + std::to_string(opt.max_height));
      complete = false;
      for (int id : layer)
        for (std::size_t i = 0; i < n; ++i) g.set_raise(id, i, -1, {});
      break;
    }

    // candidates [x_i, b] grouped by weight, in (i, b) order
    std::map<RootVector, std::vector<std::pair<int, int>>> cands;
    for (std::size_t i = 0; i < n; ++i)
      for (int id : layer) {
        RootVector w = g.space(g.basis(id).space).weight;
        ++w[i];
        cands[w].emplace_back(static_cast<int>(i), id);
      }

    std::vector<int> next;
    for (const auto& [w, list] : cands) {
      // lowering targets: weight - alpha_j
      std::vector<int> tgt(n, -1);
      std::vector<std::size_t> off(n + 1, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (w[j] > 0) {
          RootVector u = w;
          --u[j];
          tgt[j] = g.find_space(u);
        }
        off[j + 1] = off[j] + (tgt[j] >= 0 ? g.space(tgt[j]).basis.size() : 0);
      }
      const std::size_t total = off[n];

      auto image = [&](int i, int b) {
        Vec<F> out(total, f.zero());
        const auto& bb = g.basis(b);
        const int pi = d.parity(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < n; ++j) {
          if (tgt[j] < 0) continue;
          const int pj = d.parity(j);
          const V s = sign(pi, pj);
          auto put = [&](int id, const V& c) {
            const auto& e = g.basis(id);
            auto& x = out[off[j] + static_cast<std::size_t>(e.local)];
            x = f.fma(x, s, c);
          };
          if (bb.parent < 0) {
            const std::size_t k = static_cast<std::size_t>(bb.gen);
            if (j == k) put(i, f.mul(sign(pj, d.parity(k)), g.a(k, static_cast<std::size_t>(i))));
            if (j == static_cast<std::size_t>(i)) put(b, f.neg(g.a(static_cast<std::size_t>(i), k)));
            continue;
          }
          // raise_i(lower_j(b))
          const int ls = g.lower_space(b, j);
          if (ls >= 0) {
            const auto& lv = g.lower(b, j);
            const auto& lb = g.space(ls).basis;
            for (std::size_t t = 0; t < lv.size(); ++t) {
              if (f.is_zero(lv[t])) continue;
              const int rs = g.raise_space(lb[t], static_cast<std::size_t>(i));
              if (rs < 0) continue;
              const auto& rv = g.raise(lb[t], static_cast<std::size_t>(i));
              const auto& rb = g.space(rs).basis;
              for (std::size_t u = 0; u < rv.size(); ++u)
                if (!f.is_zero(rv[u])) put(rb[u], f.mul(lv[t], rv[u]));
            }
          }
          if (j == static_cast<std::size_t>(i)) {
            const auto& ev = g.space(bb.space).eigen[j];
            if (!f.is_zero(ev)) put(b, f.neg(ev));
          }
        }
        return out;
      };

      Echelon<F> ech(f, total);
      std::vector<Vec<F>> images;
      std::vector<std::optional<Vec<F>>> deps;
      std::vector<std::size_t> indep_pos;
      for (std::size_t c = 0; c < list.size(); ++c) {
        auto im = image(list[c].first, list[c].second);
        if (is_zero_vec(f, im)) {
          deps.emplace_back(Vec<F>{});
          images.emplace_back();
          continue;
        }
        auto r = ech.insert(im);
        if (!r) indep_pos.push_back(c);
        deps.push_back(std::move(r));
        images.push_back(std::move(im));
      }
      if (indep_pos.empty()) {
        for (const auto& [i, b] : list) g.set_raise(b, static_cast<std::size_t>(i), -1, {});
        continue;
      }
      const int s = g.add_space(w);
      const std::size_t dim = indep_pos.size();
      std::size_t k = 0;
      for (std::size_t c = 0; c < list.size(); ++c) {
        const auto [i, b] = list[c];
        if (!deps[c]) {
          const int id = g.add_basis(s, i, b);
          next.push_back(id);
          for (std::size_t j = 0; j < n; ++j) {
            if (tgt[j] < 0) continue;
            Vec<F> blk(images[c].begin() + static_cast<std::ptrdiff_t>(off[j]),
                       images[c].begin() + static_cast<std::ptrdiff_t>(off[j + 1]));
            g.set_lower(id, j, tgt[j], std::move(blk));
          }
          Vec<F> unit(dim, f.zero());
          unit[k++] = f.one();
          g.set_raise(b, static_cast<std::size_t>(i), s, std::move(unit));
        } else {
          Vec<F> coeff = *deps[c];
          coeff.resize(dim, f.zero());
          g.set_raise(b, static_cast<std::size_t>(i), s, std::move(coeff));
        }
      }
    }
    // top of this layer has been raised; newly created elements still need
    // raise entries, which the next iteration fills in
    layer = std::move(next);
    ++h;
  }
  g.finish(complete, complete ? h - 1 : h);
  return g;
}

template class GradedAlgebra<PrimeField>;
template class GradedAlgebra<RationalField>;
template GradedAlgebra<PrimeField> build(const CartanDatum&, const PrimeField&, const BuildOptions&);
template GradedAlgebra<RationalField> build(const CartanDatum&, const RationalField&, const BuildOptions&);

}  // namespace modsuper
