#include <doctest.h>

#include <algorithm>
#include <string>

#include "modsuper/catalog.hpp"
#include "modsuper/reflect.hpp"

using namespace modsuper;

namespace {

const CartanDatum& working(const char* s) { return lookup(s).matrix->working; }

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t k = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++k;
  return k;
}

}  // namespace

TEST_SUITE("reflect") {

TEST_CASE("odd reflection examples") {
  const auto s = odd_reflect(working("g(2,3)/2"), 0);
  CHECK(equivalent(s.target, working("g(2,3)/3")));
  CHECK(s.target.odd_count() == 2);
  CHECK(s.source == working("g(2,3)/2"));
  CHECK(s.root == 0);

  const auto t = odd_reflect(working("g(2,3)/1"), 2);
  CHECK(equivalent(t.target, working("g(2,3)/2")));
  REQUIRE(t.new_simple_roots.size() == 3);
  CHECK(t.new_simple_roots[0] == RootVector{1, 0, 1});
  CHECK(t.new_simple_roots[1] == RootVector{0, 1, 1});
  CHECK(t.new_simple_roots[2] == RootVector{0, 0, -1});
  CHECK(t.target.odd_count() == 3);
}

TEST_CASE("reflection is only taken in grey roots") {
  const CartanDatum& d = working("g(2,3)/1");
  CHECK_FALSE(reflectable(d, 0));
  CHECK(reflectable(d, 2));
  try {
    (void)odd_reflect(d, 0);
    FAIL("reflected in an even root");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
  CHECK_THROWS_AS(odd_reflect(working("g(2,3)/5"), 2), Error);
}

TEST_CASE("reflecting twice returns an equivalent datum") {
  for (const auto& e : load())
    for (const auto& m : e.matrices)
      for (std::size_t i = 0; i < e.n; ++i) {
        if (!reflectable(m.working, i)) continue;
        const auto once = odd_reflect(m.working, i);
        REQUIRE(reflectable(once.target, i));
        const auto twice = odd_reflect(once.target, i);
        CHECK_MESSAGE(equivalent(twice.target, m.working), e.name << "/" << m.index << " root " << i + 1);
      }
}

TEST_CASE("parity bookkeeping") {
  for (const auto& e : load())
    for (const auto& m : e.matrices)
      for (std::size_t i = 0; i < e.n; ++i) {
        if (!reflectable(m.working, i)) continue;
        const auto s = odd_reflect(m.working, i);
        for (std::size_t j = 0; j < e.n; ++j) {
          const int expected = j == i ? 1 : (m.working.parity(j) + (m.working.a(j, i) != 0 ? 1 : 0)) % 2;
          CHECK(s.target.parity(j) == expected);
          CHECK(m.working.root_parity(s.new_simple_roots[j]) == expected);
        }
      }
}

TEST_CASE("class counts") {
  CHECK(enumerate_classes(working("g(1,6)/1")).classes.size() == 2);
  // printed matrices 3 and 4 are equivalent
  CHECK(enumerate_classes(working("g(2,3)/1")).classes.size() == 4);
  EnumerateOptions keep;
  keep.keep_redundant = true;
  CHECK(enumerate_classes(working("g(2,3)/1"), keep).classes.size() == 5);
  const auto t = enumerate_classes(working("g(8,3)/1"));
  CHECK(t.classes.size() <= 21);
  for (const auto& m : find("g(8,3)").matrices) {
    const bool found = std::any_of(t.classes.begin(), t.classes.end(),
                                   [&](const CartanDatum& c) { return equivalent(c, m.working).has_value(); });
    CHECK_MESSAGE(found, "g(8,3)/" << m.index);
  }
}

TEST_CASE("class cap") {
  EnumerateOptions opt;
  opt.class_cap = 3;
  try {
    (void)enumerate_classes(working("g(2,3)/1"), opt);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Diverged);
  }
}

TEST_CASE("enumeration is deterministic and closed") {
  for (const auto& e : load()) {
    const auto t = enumerate_classes(e.matrices[0].working);
    CHECK(t.classes[0] == normalize(e.matrices[0].working));
    CHECK(reflection_table_json(t) == reflection_table_json(enumerate_classes(e.matrices[0].working)));
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      for (std::size_t i = 0; i < e.n; ++i) {
        const bool grey = reflectable(t.classes[c], i);
        CHECK(t.table[c][i].has_value() == grey);
        if (!grey) continue;
        CHECK(equivalent(odd_reflect(t.classes[c], i).target, t.classes[*t.table[c][i]]));
      }
  }
}

TEST_CASE("every printed table is reproduced") {
  for (const auto& e : load()) {
    const auto t = enumerate_classes(e.matrices[0].working);
    const auto cmp = compare_table(t, e.working_matrices(), e.table);
    CHECK_MESSAGE(cmp.ok, e.name << ": " << (cmp.problems.empty() ? "" : cmp.problems[0]));
  }
}

TEST_CASE("keep-redundant never merges fewer classes") {
  EnumerateOptions keep;
  keep.keep_redundant = true;
  for (const char* s : {"g(2,3)/1", "g(1,6)/1", "g(3,6)/1"}) {
    const auto dedup = enumerate_classes(working(s));
    const auto all = enumerate_classes(working(s), keep);
    CHECK(all.classes.size() >= dedup.classes.size());
  }
}

TEST_CASE("reflection graph") {
  const std::string dot = reflection_graph_dot(enumerate_classes(working("g(1,6)/1")));
  CHECK(count(dot, "[label=\"") == 2);
  CHECK(count(dot, "->") == 2);
  CHECK(dot.find("c1 -> c2 [style=dashed, label=\"3\"]") != std::string::npos);
  CHECK(dot.find("c2 -> c1 [style=dashed, label=\"3\"]") != std::string::npos);

  const std::string g36 = reflection_graph_dot(enumerate_classes(working("g(3,6)/1")));
  CHECK(count(g36, "[label=\"") == 7);

  const CartanDatum single(FieldSpec(3), Matrix{{0}}, {1});
  const auto one = enumerate_classes(single);
  REQUIRE(one.classes.size() == 1);
  const std::string loop = reflection_graph_dot(one);
  CHECK(count(loop, "->") == 1);
  CHECK(loop.find("c1 -> c1") != std::string::npos);
}

}  // TEST_SUITE
