#include <doctest.h>

#include <map>

#include "modsuper/bracket.hpp"
#include "modsuper/catalog.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace modsuper;

namespace {

const PrimeField F3(3);

const CartanDatum& working(const char* s) { return lookup(s).matrix->working; }

AlgebraReport report_of(const char* s) { return report(build(working(s), F3)); }

CartanDatum rational(std::initializer_list<std::initializer_list<long long>> rows, std::vector<int> parity) {
  return CartanDatum(FieldSpec(0), Matrix(rows), std::move(parity));
}

// Image of every basis element of a radical build of sl(3) or sl(2|1) in
// supermatrices: e_i = E_{i,i+1}, f_i = E_{i+1,i}.
struct Realization {
  std::vector<int> grade;
  std::vector<oracle::SuperMat> e, f, h, basis;

  Realization(const GradedAlgebra<RationalField>& g, std::vector<int> gr) : grade(std::move(gr)) {
    for (std::size_t i = 0; i < g.n(); ++i) {
      e.push_back(oracle::SuperMat::unit(grade, i, i + 1));
      f.push_back(oracle::SuperMat::unit(grade, i + 1, i));
      h.push_back(oracle::supercommutator(e[i], f[i]));
    }
    for (int id = 0; id < static_cast<int>(g.dimension()); ++id) {
      const auto& b = g.basis(id);
      basis.push_back(b.parent < 0 ? e[static_cast<std::size_t>(b.gen)]
                                   : oracle::supercommutator(e[static_cast<std::size_t>(b.gen)], basis[static_cast<std::size_t>(b.parent)]));
    }
  }

  oracle::SuperMat image(const GradedAlgebra<RationalField>& g, const Element<RationalField>& x) const {
    oracle::SuperMat m = oracle::SuperMat::zero(grade);
    if (x.part == Part::Cartan) {
      for (std::size_t i = 0; i < x.c.size(); ++i) m = m + h[i].scaled(x.c[i]);
    } else if (x.part == Part::Positive) {
      const auto& ids = g.space(x.space).basis;
      for (std::size_t k = 0; k < ids.size(); ++k) m = m + basis[static_cast<std::size_t>(ids[k])].scaled(x.c[k]);
    } else if (x.part != Part::Zero) {
      throw std::logic_error("negative part not realized");
    }
    return m;
  }
};

void check_realization(const CartanDatum& d, std::vector<int> grade, std::size_t expected_dim) {
  const RationalField q;
  auto g = build(d, q);
  REQUIRE(g.complete());
  CHECK(g.dimension() == expected_dim);
  Realization r(g, grade);
  Bracket<RationalField> br(g);
  for (int a = 0; a < static_cast<int>(g.dimension()); ++a) {
    for (int b = 0; b < static_cast<int>(g.dimension()); ++b) {
      const auto z = br(g.basis_element(a), g.basis_element(b));
      CHECK(r.image(g, z) == oracle::supercommutator(r.basis[static_cast<std::size_t>(a)], r.basis[static_cast<std::size_t>(b)]));
    }
    for (std::size_t j = 0; j < g.n(); ++j) {
      const auto z = br(g.lowering_generator(j), g.basis_element(a));
      CHECK(r.image(g, z) == oracle::supercommutator(r.f[j], r.basis[static_cast<std::size_t>(a)]));
      const auto y = br(g.cartan(j), g.basis_element(a));
      CHECK(r.image(g, y) == oracle::supercommutator(r.h[j], r.basis[static_cast<std::size_t>(a)]));
    }
  }
}

}  // namespace

TEST_SUITE("contragredient") {

TEST_CASE("sl(2) over the rationals") {
  const auto g = build(rational({{2}}, {0}), RationalField{});
  const auto r = report(g);
  CHECK(r.positive_root_count == 1);
  CHECK(r.sdim_full == Sdim{3, 0});
  CHECK(r.sdim_derived == Sdim{3, 0});
  CHECK(maximal_root(g).coeffs == RootVector{1});
}

TEST_CASE("catalog builds") {
  const auto g23 = report_of("g(2,3)/1");
  CHECK(g23.positive_root_count == 11);
  CHECK(g23.sdim_derived == Sdim{11, 14});
  CHECK(g23.center_dim == 1);

  const auto g86 = report_of("g(8,6)/8");
  CHECK(g86.positive_root_count == 91);
  CHECK(2 * g86.positive_root_count + 7 == 189);
  CHECK(g86.sdim_derived.first + g86.sdim_derived.second == 189);
  CHECK(g86.sdim_derived == Sdim{133, 56});

  CHECK(report_of("g(3,3)/1").sdim_derived == Sdim{22, 16});

  const auto g43 = report_of("g(4,3)/1");
  CHECK(g43.sdim_derived == Sdim{24, 26});
  CHECK(g43.center_dim == 0);

  const auto g16 = report_of("g(1,6)/1");
  CHECK(g16.sdim_derived == Sdim{21, 14});
  CHECK(g16.positive_root_count == 16);
}

TEST_CASE("report bookkeeping") {
  for (const auto& e : load()) {
    const CartanDatum& d = e.matrices[0].working;
    const auto r = report(build(d, F3));
    const std::size_t l = rank(d.entries(), d.field());
    CHECK(r.rank == l);
    CHECK(r.center_dim == e.n - l);
    CHECK(r.center_dim == null_space(d.entries().transposed(), d.field()).size());
    CHECK(r.cartan_dim == 2 * e.n - l);
    CHECK(r.sdim_full.first - r.sdim_derived.first == e.n - l);
    CHECK(r.sdim_full.second == r.sdim_derived.second);
    CHECK(r.sdim_derived == Sdim{e.n + 2 * r.positive_even, 2 * r.positive_odd});
    CHECK(r.sdim_simple == Sdim{r.sdim_derived.first - r.center_dim, r.sdim_derived.second});
    std::size_t with_mult = 0;
    for (const auto& root : r.roots) with_mult += root.multiplicity;
    CHECK(with_mult == r.positive_root_count);
  }
}

TEST_CASE("maximal roots") {
  const auto m = maximal_root(build(working("g(2,3)/1"), F3));
  CHECK(m.coeffs == RootVector{2, 2, 2});
  CHECK(m.eigenvalues == std::vector<Rational>{0, 0, 2});
  CHECK(maximal_root(build(working("g(4,6)/1"), F3)).coeffs == RootVector{1, 2, 3, 4, 2, 2});
  try {
    (void)maximal_root(build(rational({{2, 0}, {0, 2}}, {0, 0}), RationalField{}));
    FAIL("two top weights accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnique);
  }
}

TEST_CASE("height bound") {
  BuildOptions opt;
  opt.max_height = 3;
  try {
    (void)build(working("g(2,3)/1"), F3, opt);
    FAIL("bound ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HeightExceeded);
  }
  opt.truncate = true;
  const auto g = build(working("g(2,3)/1"), F3, opt);
  CHECK_FALSE(g.complete());
  try {
    (void)report(g);
    FAIL("reported a truncated build");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Incomplete);
  }
  // hyperbolic: never closes
  opt.truncate = false;
  opt.max_height = 12;
  CHECK_THROWS_AS(build(rational({{2, -3}, {-3, 2}}, {0, 0}), RationalField{}, opt), Error);
}

TEST_CASE("generator identities") {
  for (const char* s : {"g(2,3)/1", "g(2,3)/5", "g(3,3)/1", "g(1,6)/2"}) {
    const auto g = build(working(s), F3);
    Bracket<PrimeField> br(g);
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j) {
        const auto ef = br(g.generator(i), g.lowering_generator(j));
        if (i == j) {
          REQUIRE(ef.part == Part::Cartan);
          CHECK(ef.c == g.cartan(j).c);
        } else {
          CHECK(ef.is_zero(F3));
        }
        const auto he = br(g.cartan(i), g.generator(j));
        REQUIRE(he.part == Part::Positive);
        CHECK(he.c[0] == g.a(i, j));
        const auto hf = br(g.cartan(i), g.lowering_generator(j));
        CHECK(hf.c[0] == F3.neg(g.a(i, j)));
        CHECK(br(g.cartan(i), g.cartan(j)).is_zero(F3));
      }
  }
}

TEST_CASE("cartan elements act by the weight") {
  const auto g = build(working("g(4,3)/1"), F3);
  Bracket<PrimeField> br(g);
  for (int id = 0; id < static_cast<int>(g.dimension()); ++id) {
    const auto& sp = g.space(g.basis(id).space);
    for (std::size_t i = 0; i < g.n(); ++i) {
      const auto x = g.basis_element(id);
      const auto y = br(g.cartan(i), x);
      Element<PrimeField> expect = x;
      scale_vec(F3, expect.c, sp.eigen[i]);
      if (F3.is_zero(sp.eigen[i]))
        CHECK(y.is_zero(F3));
      else
        CHECK(y.c == expect.c);
    }
  }
}

TEST_CASE("even elements square to zero") {
  const auto g = build(working("g(2,3)/1"), F3);
  Bracket<PrimeField> br(g);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    auto u = support::random_element(g, rng);
    if (g.parity_of(u) != 0) continue;
    CHECK(br(u, u).is_zero(F3));
  }
}

TEST_CASE("radical soundness") {
  for (const auto& e : load()) {
    const auto g = build(e.matrices[0].working, F3);
    for (int id = 0; id < static_cast<int>(g.dimension()); ++id) {
      if (g.height_of(id) < 2) continue;
      bool killed = true;
      for (std::size_t j = 0; j < g.n(); ++j)
        if (g.lower_space(id, j) >= 0 && !is_zero_vec(F3, g.lower(id, j))) killed = false;
      CHECK_MESSAGE(!killed, e.name << " basis " << id);
    }
  }
}

TEST_CASE("negative part spanned by lowering brackets matches the positive part") {
  const auto g = build(working("g(2,3)/1"), F3);
  Bracket<PrimeField> br(g);
  std::map<RootVector, RowSpace<PrimeField>> spans;
  std::map<RootVector, std::vector<Element<PrimeField>>> layer;
  for (std::size_t i = 0; i < g.n(); ++i) {
    auto f = g.lowering_generator(i);
    const auto w = g.weight_of(f);
    spans.emplace(w, RowSpace<PrimeField>(F3, f.c.size())).first->second.insert(f.c);
    layer[w].push_back(f);
  }
  while (!layer.empty()) {
    std::map<RootVector, std::vector<Element<PrimeField>>> next;
    for (const auto& [w, xs] : layer)
      for (const auto& x : xs)
        for (std::size_t i = 0; i < g.n(); ++i) {
          auto y = br(g.lowering_generator(i), x);
          if (y.is_zero(F3)) continue;
          REQUIRE(y.part == Part::Negative);
          const auto wy = g.weight_of(y);
          auto& sp = spans.emplace(wy, RowSpace<PrimeField>(F3, y.c.size())).first->second;
          if (sp.insert(y.c)) next[wy].push_back(y);
        }
    layer = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& [w, m] : g.multiplicities()) {
    RootVector neg = w;
    for (auto& v : neg) v = -v;
    REQUIRE(spans.count(neg));
    CHECK(spans.at(neg).rank() == m);
    total += m;
  }
  CHECK(spans.size() == g.spaces().size());
  CHECK(total == 11);
}

TEST_CASE("structure constants agree with sl(3) matrices") {
  check_realization(rational({{2, -1}, {-1, 2}}, {0, 0}), {0, 0, 0}, 3);
}

TEST_CASE("structure constants agree with sl(2|1) supermatrices") {
  check_realization(rational({{2, -1}, {-1, 0}}, {0, 1}), {0, 0, 1}, 3);
}

TEST_CASE("structure constants agree with sl(3|1) supermatrices") {
  check_realization(rational({{2, -1, 0}, {-1, 2, -1}, {0, -1, 0}}, {0, 0, 1}), {0, 0, 0, 1}, 6);
}

TEST_CASE("characteristic zero lifts differ from characteristic three") {
  // integer matrices reducing to g(2,3)/3 and g(2,6)/6
  const CartanDatum ag2 = rational({{0, 3, -1}, {3, 0, -2}, {-1, -2, 2}}, {1, 1, 0});
  CHECK(equivalent(over_field(ag2, FieldSpec(3)), working("g(2,3)/3")));
  const auto r0 = report(build(ag2, RationalField{}));
  CHECK(r0.sdim_derived == Sdim{17, 14});
  CHECK(r0.sdim_derived != report_of("g(2,3)/3").sdim_derived);
}

}  // TEST_SUITE
