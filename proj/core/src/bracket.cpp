#include "modsuper/bracket.hpp"

#include "modsuper/errors.hpp"

namespace modsuper {

template <class F>
std::uint64_t Bracket<F>::key(Ref x, Ref y) {
  return (static_cast<std::uint64_t>(x.part) << 62) | (static_cast<std::uint64_t>(x.id) << 32) |
         (static_cast<std::uint64_t>(y.part) << 30) | static_cast<std::uint64_t>(y.id);
}

template <class F>
Element<F> Bracket<F>::zero_for(const Element<F>& x, const Element<F>& y) const {
  RootVector w = g_.weight_of(x);
  RootVector v = g_.weight_of(y);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] += v[k];
  return g_.zero_at(w);
}

template <class F>
void Bracket<F>::accumulate(Element<F>& acc, const V& c, const Element<F>& term) const {
  if (term.part == Part::Zero || acc.part == Part::Zero) return;
  if (term.part != acc.part || term.c.size() != acc.c.size())
    throw Error(ErrorKind::InhomogeneousSum, "bracket terms of different degree");
  axpy(f_, acc.c, c, term.c);
}

template <class F>
Element<F> Bracket<F>::omega(const Element<F>& x) const {
  Element<F> r = x;
  switch (x.part) {
    case Part::Positive:
      r.part = Part::Negative;
      break;
    case Part::Negative:
      r.part = Part::Positive;
      if (g_.space(x.space).parity) scale_vec(f_, r.c, f_.neg(f_.one()));
      break;
    case Part::Cartan:
      scale_vec(f_, r.c, f_.neg(f_.one()));
      break;
    case Part::Zero:
      break;
  }
  return r;
}

template <class F>
Element<F> Bracket<F>::omega_inv(const Element<F>& x) const {
  Element<F> r = x;
  switch (x.part) {
    case Part::Negative:
      r.part = Part::Positive;
      break;
    case Part::Positive:
      r.part = Part::Negative;
      if (g_.space(x.space).parity) scale_vec(f_, r.c, f_.neg(f_.one()));
      break;
    case Part::Cartan:
      scale_vec(f_, r.c, f_.neg(f_.one()));
      break;
    case Part::Zero:
      break;
  }
  return r;
}

template <class F>
Element<F> Bracket<F>::raise(std::size_t i, const Element<F>& y) const {
  Element<F> out = zero_for(g_.generator(i), y);
  if (y.part != Part::Positive) throw Error(ErrorKind::NotApplicable, "raise expects a positive element");
  const auto& ids = g_.space(y.space).basis;
  for (std::size_t t = 0; t < y.c.size(); ++t) {
    if (f_.is_zero(y.c[t])) continue;
    const int rs = g_.raise_space(ids[t], i);
    if (rs < 0) continue;
    axpy(f_, out.c, y.c[t], g_.raise(ids[t], i));
  }
  return out;
}

template <class F>
Element<F> Bracket<F>::lower_basis(std::size_t i, int id) const {
  const auto& b = g_.basis(id);
  if (b.parent < 0) {
    if (static_cast<std::size_t>(b.gen) != i) return {};
    Element<F> h = g_.cartan(i);
    const bool odd = g_.gen_parity(i) != 0;
    h.c[i] = odd ? f_.one() : f_.neg(f_.one());
    return h;
  }
  if (!g_.has_lowering()) throw Error(ErrorKind::NotApplicable, "negative part needs the radical construction");
  const int s = g_.lower_space(id, i);
  if (s < 0) return {};
  Element<F> r;
  r.part = Part::Positive;
  r.space = s;
  r.c = g_.lower(id, i);
  return r;
}

template <class F>
Element<F> Bracket<F>::e_bracket(std::size_t i, Ref y) {
  switch (y.part) {
    case Part::Positive: {
      Element<F> r;
      const int s = g_.raise_space(y.id, i);
      if (s < 0) return r;
      r.part = Part::Positive;
      r.space = s;
      r.c = g_.raise(y.id, i);
      return r;
    }
    case Part::Cartan: {
      Element<F> r = g_.generator(i);
      const auto& c = g_.a(static_cast<std::size_t>(y.id), i);
      if (f_.is_zero(c)) return {};
      scale_vec(f_, r.c, f_.neg(c));
      return r;
    }
    case Part::Negative: {
      Element<F> r = omega(lower_basis(i, y.id));
      if (g_.gen_parity(i) && r.part != Part::Zero) scale_vec(f_, r.c, f_.neg(f_.one()));
      return r;
    }
    case Part::Zero:
      break;
  }
  return {};
}

template <class F>
Element<F> Bracket<F>::with_left_gen(std::size_t i, const Element<F>& y) {
  if (y.part == Part::Zero) return {};
  Element<F> acc = zero_for(g_.generator(i), y);
  if (acc.part == Part::Zero) return acc;
  for (std::size_t t = 0; t < y.c.size(); ++t) {
    if (f_.is_zero(y.c[t])) continue;
    Ref r{y.part, y.part == Part::Cartan ? static_cast<int>(t) : g_.space(y.space).basis[t]};
    accumulate(acc, y.c[t], e_bracket(i, r));
  }
  return acc;
}

template <class F>
Element<F> Bracket<F>::with_left_basis(int id, const Element<F>& y) {
  if (y.part == Part::Zero) return {};
  Element<F> acc = zero_for(g_.basis_element(id), y);
  if (acc.part == Part::Zero) return acc;
  for (std::size_t t = 0; t < y.c.size(); ++t) {
    if (f_.is_zero(y.c[t])) continue;
    Ref r{y.part, y.part == Part::Cartan ? static_cast<int>(t) : g_.space(y.space).basis[t]};
    accumulate(acc, y.c[t], basis_bracket(Ref{Part::Positive, id}, r));
  }
  return acc;
}

template <class F>
Element<F> Bracket<F>::basis_bracket(Ref x, Ref y) {
  if (x.part == Part::Cartan) {
    if (y.part == Part::Cartan) return {};
    Element<F> r = g_.basis_element(y.id);
    r.part = y.part;
    V ev = g_.space(r.space).eigen[static_cast<std::size_t>(x.id)];
    if (y.part == Part::Negative) ev = f_.neg(ev);
    if (f_.is_zero(ev)) return {};
    scale_vec(f_, r.c, ev);
    return r;
  }
  const auto k = key(x, y);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  Element<F> yel;
  if (y.part == Part::Cartan) {
    yel = g_.cartan(static_cast<std::size_t>(y.id));
  } else {
    yel = g_.basis_element(y.id);
    yel.part = y.part;
  }

  Element<F> out;
  if (x.part == Part::Negative) {
    out = omega(with_left_basis(x.id, omega_inv(yel)));
  } else {
    const auto& b = g_.basis(x.id);
    const std::size_t i = static_cast<std::size_t>(b.gen);
    if (b.parent < 0) {
      out = e_bracket(i, y);
    } else {
      // [[x_i, w], y] = [x_i, [w, y]] - (-1)^{|x_i||w|} [w, [x_i, y]]
      out = with_left_gen(i, with_left_basis(b.parent, yel));
      Element<F> t2 = with_left_basis(b.parent, with_left_gen(i, yel));
      if (out.part == Part::Zero) {
        out = zero_for(g_.basis_element(x.id), yel);
      }
      const bool odd = g_.gen_parity(i) && g_.parity_of(b.parent);
      accumulate(out, odd ? f_.one() : f_.neg(f_.one()), t2);
    }
  }
  if (out.part != Part::Zero && is_zero_vec(f_, out.c)) out = {};
  memo_.emplace(k, out);
  return out;
}

template <class F>
Element<F> Bracket<F>::operator()(const Element<F>& x, const Element<F>& y) {
  if (x.part == Part::Zero || y.part == Part::Zero) return {};
  Element<F> acc = zero_for(x, y);
  if (acc.part == Part::Zero) return acc;
  for (std::size_t s = 0; s < x.c.size(); ++s) {
    if (f_.is_zero(x.c[s])) continue;
    Ref rx{x.part, x.part == Part::Cartan ? static_cast<int>(s) : g_.space(x.space).basis[s]};
    for (std::size_t t = 0; t < y.c.size(); ++t) {
      if (f_.is_zero(y.c[t])) continue;
      Ref ry{y.part, y.part == Part::Cartan ? static_cast<int>(t) : g_.space(y.space).basis[t]};
      accumulate(acc, f_.mul(x.c[s], y.c[t]), basis_bracket(rx, ry));
    }
  }
  return acc;
}

template class Bracket<PrimeField>;
template class Bracket<RationalField>;

}  // namespace modsuper
