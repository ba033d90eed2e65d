#include <doctest.h>

#include <random>

#include "modsuper/catalog.hpp"
#include "oracle.hpp"

using namespace modsuper;

namespace {

const CartanDatum& slot(const char* s) { return lookup(s).matrix->printed; }

CartanDatum datum(std::initializer_list<std::initializer_list<long long>> rows, std::vector<int> parity,
                  unsigned p = 3) {
  return CartanDatum(FieldSpec(p), Matrix(rows), std::move(parity));
}

// sl(m|n) in its distinguished root system: m-1 white, one grey, n-1 white.
CartanDatum sl_mn(std::size_t m, std::size_t n, unsigned p) {
  const std::size_t r = m + n - 1;
  Matrix a(r, r);
  std::vector<int> par(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (i + 1 == m) {
      par[i] = 1;
      if (i > 0) a(i, i - 1) = -1;
      if (i + 1 < r) a(i, i + 1) = 1;
      continue;
    }
    a(i, i) = 2;
    if (i > 0) a(i, i - 1) = -1;
    if (i + 1 < r) a(i, i + 1) = -1;
  }
  return CartanDatum(FieldSpec(p), a, par);
}

}  // namespace

TEST_SUITE("cartan") {

TEST_CASE("datum invariants") {
  CHECK_THROWS_AS(CartanDatum(FieldSpec(3), Matrix(2, 2), {0}), Error);
  CHECK_THROWS_AS(CartanDatum(FieldSpec(3), Matrix{{1, 2}, {2, 1}}, {0, 0}, {true, false}), Error);
  const CartanDatum star(FieldSpec(3), Matrix{{0, -1}, {-1, 2}}, {0, 0}, {true, false});
  CHECK(star.even_zero(0));
}

TEST_CASE("matrix text round trip") {
  const CartanDatum& d = slot("g(2,3)/1");
  CHECK(parse_matrix_text(format_matrix_text(d)) == d);
  const CartanDatum e = parse_matrix_text("p=3\nparity=0 0\n# comment\n* -1\n-1 2\n");
  CHECK(e.even_zero(0));
  CHECK(classify_node(e, 0).kind == NodeKind::StarEven);
  CHECK_THROWS_AS(parse_matrix_text("p=3\nparity=0 0\n2 -1\n-1\n"), Error);
  CHECK_THROWS_AS(parse_matrix_text("p=3\nparity=0 2\n2 -1\n-1 2\n"), Error);
}

TEST_CASE("normalize") {
  const CartanDatum& g = slot("g(2,3)/1");
  CHECK(normalize(g) == g);

  const CartanDatum d = datum({{2, -1, 0}, {-1, 2, -1}, {-2, -2, 4}}, {0, 0, 0});
  const CartanDatum n = normalize(d);
  CHECK(n.a(2, 2) == 2);
  CHECK(n.a(2, 0) == 2);  // 2 * -2 = -4 = 2 mod 3
  CHECK(n.a(2, 1) == 2);
  CHECK(n.a(0, 1) == d.a(0, 1));

  const CartanDatum odd = datum({{2, 1}, {1, 2}}, {0, 1});
  CHECK(normalize(odd).a(1, 1) == 1);
  CHECK(normalize(odd).a(1, 0) == 2);
}

TEST_CASE("every catalog matrix is normalized and normalize is idempotent") {
  std::size_t count = 0;
  for (const auto& e : load())
    for (const auto& m : e.matrices) {
      ++count;
      CHECK(is_normalized(m.printed));
      CHECK(normalize(m.printed) == m.printed);
      CHECK(normalize(normalize(m.printed)) == normalize(m.printed));
      CHECK(normalize(m.printed, ZeroRowScaling::FirstNegativeOne) ==
            normalize(normalize(m.printed, ZeroRowScaling::FirstNegativeOne), ZeroRowScaling::FirstNegativeOne));
    }
  CHECK(count == 97);
}

TEST_CASE("equivalence examples") {
  const CartanDatum& g1 = slot("g(2,3)/1");
  auto self = equivalent(g1, g1);
  REQUIRE(self);
  CHECK(apply_equivalence(g1, *self) == g1);

  auto w = equivalent(slot("g(2,3)/3"), slot("g(2,3)/4"));
  REQUIRE(w);
  CHECK(apply_equivalence(slot("g(2,3)/3"), *w) == slot("g(2,3)/4"));
  CHECK(oracle::brute_equivalent(slot("g(2,3)/3"), slot("g(2,3)/4")));

  CHECK_FALSE(equivalent(slot("g(2,3)/2"), slot("g(2,3)/5")));
  CHECK_FALSE(oracle::brute_equivalent(slot("g(2,3)/2"), slot("g(2,3)/5")));
}

TEST_CASE("equivalence matches the brute-force oracle within each family") {
  for (const char* name : {"g(2,3)", "g(1,6)", "g(3,6)", "g(3,3)", "g(4,3)", "g(2,6)"}) {
    const auto& e = find(name);
    for (const auto& a : e.matrices)
      for (const auto& b : e.matrices) {
        const bool fast = equivalent(a.printed, b.printed).has_value();
        CHECK_MESSAGE(fast == oracle::brute_equivalent(a.printed, b.printed), name << ' ' << a.index << ' ' << b.index);
      }
  }
}

TEST_CASE("equivalence is symmetric and witnesses compose") {
  std::mt19937 rng(20261014);
  for (const auto& e : load()) {
    const auto& ms = e.matrices;
    for (const auto& a : ms)
      for (const auto& b : ms) CHECK(equivalent(a.printed, b.printed).has_value() == equivalent(b.printed, a.printed).has_value());
    // random relabelings of matrix 1 form an equivalent triple
    const CartanDatum& a = ms[0].printed;
    std::vector<std::size_t> p1(e.n), p2(e.n);
    std::iota(p1.begin(), p1.end(), 0);
    std::iota(p2.begin(), p2.end(), 0);
    std::shuffle(p1.begin(), p1.end(), rng);
    std::shuffle(p2.begin(), p2.end(), rng);
    Equivalence w1{p1, std::vector<Rational>(e.n, 1)}, w2{p2, std::vector<Rational>(e.n, 1)};
    for (std::size_t i = 0; i < e.n; ++i) w1.scale[i] = (rng() % 2) ? 1 : 2;
    const CartanDatum b = apply_equivalence(a, w1);
    const CartanDatum c = apply_equivalence(b, w2);
    auto ab = equivalent(a, b);
    auto bc = equivalent(b, c);
    REQUIRE(ab);
    REQUIRE(bc);
    CHECK(apply_equivalence(a, compose(*ab, *bc, a.field())) == c);
  }
}

TEST_CASE("node classification") {
  const auto grey = classify_node(slot("g(2,3)/1"), 2);
  CHECK(grey.kind == NodeKind::GreyOdd);
  CHECK(grey.tag == NodeTag::Sl11);
  const auto black = classify_node(slot("g(2,3)/5"), 2);
  CHECK(black.kind == NodeKind::BlackOdd);
  CHECK(black.tag == NodeTag::Osp12);
  CHECK(classify_node(slot("g(2,3)/1"), 0).tag == NodeTag::Sl2);
  const CartanDatum star(FieldSpec(3), Matrix{{0, -1}, {-1, 2}}, {0, 0}, {true, false});
  CHECK(classify_node(star, 0).kind == NodeKind::StarEven);
  CHECK(classify_node(star, 0).tag == NodeTag::Heisenberg);
  const CartanDatum bad = datum({{1, -1}, {-1, 2}}, {0, 0});
  CHECK_THROWS_AS(classify_node(bad, 0), Error);
}

TEST_CASE("serre exponents") {
  const auto s1 = serre_exponents(slot("g(2,3)/1"));
  CHECK(s1.k[2][0] == 2);
  CHECK(s1.k[2][1] == 2);
  CHECK(s1.self_square[2]);
  CHECK_FALSE(s1.self_cube[2]);

  const CartanDatum& g5 = slot("g(2,3)/5");
  const auto s5 = serre_exponents(g5);
  CHECK(s5.b[2][0] == -2);
  CHECK(s5.b[2][1] == -2);
  CHECK(s5.k[2][0] == 3);
  CHECK(s5.k[2][1] == 3);
  CHECK(s5.self_cube[2]);
  CHECK_FALSE(s5.self_square[2]);

  const auto diag = serre_exponents(datum({{2, 0}, {0, 2}}, {0, 0}));
  CHECK(diag.k[0][1] == 1);
  CHECK(diag.k[1][0] == 1);

  const auto sl4 = serre_exponents(datum({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {0, 0, 0}));
  CHECK(sl4.k[0][1] == 2);
  CHECK(sl4.k[1][2] == 2);
  CHECK(sl4.k[0][2] == 1);
}

TEST_CASE("serre exponents are at least one across the catalog") {
  for (const auto& e : load())
    for (const auto& m : e.matrices) {
      const auto s = serre_exponents(m.printed);
      for (std::size_t i = 0; i < e.n; ++i)
        for (std::size_t j = 0; j < e.n; ++j)
          if (i != j) CHECK(s.k[i][j] >= 1);
    }
}

TEST_CASE("diagram") {
  const Diagram g = diagram(slot("g(2,3)/1"));
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.nodes[0] == NodeKind::WhiteEven);
  CHECK(g.nodes[1] == NodeKind::WhiteEven);
  CHECK(g.nodes[2] == NodeKind::GreyOdd);
  CHECK(g.edges.size() == 3);
  CHECK_FALSE(g.ambiguous);
  CHECK(diagram_text(g) == diagram_text(diagram(slot("g(2,3)/1"))));

  const Diagram two = diagram(datum({{2, 0}, {0, 2}}, {0, 0}));
  CHECK(two.edges.empty());
  CHECK(diagram_dot(two).find("--") == std::string::npos);

  const Diagram chain = diagram(sl_mn(3, 3, 0));
  REQUIRE(chain.nodes.size() == 5);
  CHECK(chain.nodes[2] == NodeKind::GreyOdd);
  CHECK(chain.edges.size() == 4);
  for (const auto& x : chain.edges) CHECK(x.j == x.i + 1);

  CHECK(diagram(slot("g(2,3)/2")).ambiguous);
}

TEST_CASE("diagram reconstruction recovers unambiguous matrices") {
  for (const auto& e : load())
    for (const auto& m : e.matrices) {
      const Diagram g = diagram(m.printed);
      if (g.ambiguous) continue;
      CHECK_MESSAGE(equivalent(reconstruct(g), m.printed), e.name << "/" << m.index);
    }
}

TEST_CASE("invert") {
  const Matrix expected{{1, 2, 0, 1}, {2, 0, 0, 0}, {0, 0, 0, 2}, {2, 0, 2, 1}};
  CHECK(invert(slot("g(4,3)/7")) == expected);
  Matrix half(2, 2);
  half(0, 0) = half(1, 1) = Rational(1, 2);
  CHECK(invert(datum({{2, 0}, {0, 2}}, {0, 0}, 0)) == half);
  CHECK(invert(CartanDatum(FieldSpec(3), Matrix::identity(3), {1, 1, 1})) == Matrix::identity(3));
  try {
    (void)invert(slot("g(2,3)/1"));
    FAIL("inverted a degenerate matrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

}  // TEST_SUITE
