#pragma once

#include <cstdint>
#include <unordered_map>

#include "modsuper/algebra.hpp"

namespace modsuper {

// Super bracket on g'(A,I) = n- + h' + n+. Negative elements are reached
// through the Chevalley involution, so only the positive tables are used;
// without lowering tables only brackets inside n+ are available.
template <class F>
class Bracket {
 public:
  using V = typename F::value_type;

  explicit Bracket(const GradedAlgebra<F>& g) : g_(g), f_(g.field()) {}

  Element<F> operator()(const Element<F>& x, const Element<F>& y);

  // Chevalley involution and its inverse
  Element<F> omega(const Element<F>& x) const;
  Element<F> omega_inv(const Element<F>& x) const;

  // [x_i, y] for y in n+
  Element<F> raise(std::size_t i, const Element<F>& y) const;

  const GradedAlgebra<F>& algebra() const noexcept { return g_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct Ref {
    Part part;
    int id;  // basis id, or Cartan index
  };

  Element<F> basis_bracket(Ref x, Ref y);
  Element<F> e_bracket(std::size_t i, Ref y);
  Element<F> with_left_basis(int id, const Element<F>& y);
  Element<F> with_left_gen(std::size_t i, const Element<F>& y);
  Element<F> lower_basis(std::size_t i, int id) const;

  void accumulate(Element<F>& acc, const V& c, const Element<F>& term) const;
  Element<F> zero_for(const Element<F>& x, const Element<F>& y) const;
  static std::uint64_t key(Ref x, Ref y);

  const GradedAlgebra<F>& g_;
  F f_;
  std::unordered_map<std::uint64_t, Element<F>> memo_;
};

extern template class Bracket<PrimeField>;
extern template class Bracket<RationalField>;

}  // namespace modsuper
