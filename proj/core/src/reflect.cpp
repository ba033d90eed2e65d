#include "modsuper/reflect.hpp"

#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

#include "modsuper/algebra.hpp"
#include "modsuper/bracket.hpp"
#include "modsuper/errors.hpp"

namespace modsuper {

bool reflectable(const CartanDatum& d, std::size_t i) {
  return i < d.n() && d.parity(i) == 1 && d.a(i, i) == 0;
}

namespace {

bool adjacent(const CartanDatum& d, std::size_t i, std::size_t j) {
  return i != j && (d.a(i, j) != 0 || d.a(j, i) != 0);
}

template <class F>
Matrix reflected_matrix(const CartanDatum& d, const F& f, std::size_t i) {
  const std::size_t n = d.n();
  BuildOptions opt;
  opt.max_height = 2;
  opt.truncate = true;
  auto g = build(d, f, opt);
  Bracket<F> br(g);

  std::vector<Element<F>> plus(n), minus(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) {
      plus[j] = g.lowering_generator(i);
      minus[j] = g.generator(i);
    } else if (adjacent(d, i, j)) {
      plus[j] = br(g.generator(i), g.generator(j));
      minus[j] = br(g.lowering_generator(i), g.lowering_generator(j));
    } else {
      plus[j] = g.generator(j);
      minus[j] = g.lowering_generator(j);
    }
  }

  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element<F> h = br(plus[j], minus[j]);
    if (h.part != Part::Cartan || is_zero_vec(f, h.c))
      throw Error(ErrorKind::MalformedDatum, "reflected root " + std::to_string(j + 1) + " has zero coroot");
    for (std::size_t k = 0; k < n; ++k) {
      RootVector w = g.weight_of(plus[k]);
      auto v = f.zero();
      for (std::size_t m = 0; m < n; ++m) {
        if (f.is_zero(h.c[m])) continue;
        auto ev = f.zero();
        for (std::size_t l = 0; l < n; ++l)
          if (w[l]) ev = f.fma(ev, g.a(m, l), f.from_int(w[l]));
        v = f.fma(v, h.c[m], ev);
      }
      out(j, k) = f.to_rational(v);
    }
  }
  return out;
}

}  // namespace

ReflectionStep odd_reflect(const CartanDatum& d, std::size_t i) {
  if (i >= d.n()) throw Error(ErrorKind::NotApplicable, "root index out of range");
  if (!reflectable(d, i))
    throw Error(ErrorKind::NotApplicable, "root " + std::to_string(i + 1) + " is not odd with zero diagonal");
  const std::size_t n = d.n();
  Matrix m = with_field(d.field(), [&](auto f) { return reflected_matrix(d, f, i); });
  std::vector<int> parity(n);
  std::vector<bool> ez(n, false);
  ReflectionStep step;
  step.source = d;
  step.root = i;
  for (std::size_t j = 0; j < n; ++j) {
    RootVector r(n, 0);
    if (j == i) {
      r[i] = -1;
      parity[j] = d.parity(j);
    } else if (adjacent(d, i, j)) {
      r[j] = 1;
      r[i] = 1;
      parity[j] = (d.parity(j) + d.parity(i)) % 2;
    } else {
      r[j] = 1;
      parity[j] = d.parity(j);
    }
    ez[j] = parity[j] == 0 && m(j, j) == 0;
    step.new_simple_roots.push_back(std::move(r));
  }
  step.target = normalize(CartanDatum(d.field(), m, parity, ez));
  return step;
}

bool rescaling_equal(const CartanDatum& a, const CartanDatum& b) {
  if (a.n() != b.n() || !(a.field() == b.field())) return false;
  if (a.parities() != b.parities() || a.even_zeros() != b.even_zeros()) return false;
  const FieldSpec& f = a.field();
  for (std::size_t i = 0; i < a.n(); ++i) {
    std::optional<Rational> s;
    for (std::size_t j = 0; j < a.n(); ++j) {
      const bool az = a.a(i, j) == 0, bz = b.a(i, j) == 0;
      if (az != bz) return false;
      if (az) continue;
      Rational r = f.mul(b.a(i, j), f.inv(a.a(i, j)));
      if (s && *s != r) return false;
      s = r;
    }
  }
  return true;
}

ReflectionTable enumerate_classes(const CartanDatum& seed, const EnumerateOptions& opt) {
  ReflectionTable t;
  t.classes.push_back(normalize(seed));
  t.table.emplace_back(seed.n());
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < seed.n(); ++i) {
      if (!reflectable(t.classes[c], i)) continue;
      CartanDatum target = odd_reflect(t.classes[c], i).target;
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < t.classes.size() && !hit; ++k) {
        const bool same = opt.keep_redundant ? rescaling_equal(t.classes[k], target)
                                             : equivalent(t.classes[k], target).has_value();
        if (same) hit = k;
      }
      if (!hit) {
        if (t.classes.size() >= opt.class_cap)
          throw Error(ErrorKind::Diverged, "more than " + std::to_string(opt.class_cap) + " classes");
        hit = t.classes.size();
        t.classes.push_back(std::move(target));
        t.table.emplace_back(seed.n());
        queue.push_back(*hit);
      }
      t.table[c][i] = *hit;
    }
  }
  return t;
}

std::string reflection_table_text(const ReflectionTable& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    os << c + 1 << ":";
    for (const auto& cell : t.table[c]) os << ' ' << (cell ? std::to_string(*cell + 1) : std::string("-"));
    os << '\n';
  }
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    os << "\n[" << c + 1 << "] parity";
    for (int p : t.classes[c].parities()) os << ' ' << p;
    os << '\n' << matrix_string(t.classes[c]);
  }
  return os.str();
}

std::string reflection_table_json(const ReflectionTable& t) {
  nlohmann::ordered_json j;
  auto classes = nlohmann::ordered_json::array();
  auto lift_rows = [](const CartanDatum& d) {
    auto lift = signed_lift(d);
    for (std::size_t i = 0; i < d.n(); ++i)
      if (d.even_zero(i)) lift[i][i] = 0;
    return lift;
  };
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    nlohmann::ordered_json e;
    e["index"] = c + 1;
    e["parity"] = t.classes[c].parities();
    e["matrix"] = lift_rows(t.classes[c]);
    auto row = nlohmann::ordered_json::array();
    for (const auto& cell : t.table[c]) row.push_back(cell ? nlohmann::ordered_json(*cell + 1) : nlohmann::ordered_json());
    e["reflections"] = row;
    classes.push_back(e);
  }
  j["classes"] = classes;
  return j.dump(2);
}

std::string reflection_graph_dot(const ReflectionTable& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  node [shape=box, fontname=\"DejaVu Sans\"];\n";
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    std::string label;
    for (std::size_t i = 0; i < t.classes[c].n(); ++i) label += glyph(classify_node(t.classes[c], i).kind);
    os << "  c" << c + 1 << " [label=\"" << c + 1 << ": " << label << "\"];\n";
  }
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    for (std::size_t i = 0; i < t.table[c].size(); ++i)
      if (t.table[c][i])
        os << "  c" << c + 1 << " -> c" << *t.table[c][i] + 1 << " [style=dashed, label=\"" << i + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

TableComparison compare_table(const ReflectionTable& t, const std::vector<CartanDatum>& printed, const TableGrid& cells) {
  TableComparison r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.problems.push_back(std::move(msg));
  };
  if (cells.size() != printed.size()) fail("table has " + std::to_string(cells.size()) + " rows for " +
                                           std::to_string(printed.size()) + " matrices");
  std::vector<std::optional<Equivalence>> wit(printed.size());
  std::vector<bool> class_hit(t.classes.size(), false);
  for (std::size_t c = 0; c < printed.size(); ++c) {
    std::optional<std::size_t> k;
    for (std::size_t q = 0; q < t.classes.size() && !k; ++q)
      if (auto w = equivalent(t.classes[q], printed[c])) {
        k = q;
        wit[c] = std::move(w);
      }
    r.printed_to_class.push_back(k);
    if (!k)
      fail("matrix " + std::to_string(c + 1) + " matches no enumerated class");
    else
      class_hit[*k] = true;
  }
  for (std::size_t q = 0; q < t.classes.size(); ++q)
    if (!class_hit[q]) fail("class " + std::to_string(q + 1) + " matches no printed matrix");

  for (std::size_t c = 0; c < std::min(cells.size(), printed.size()); ++c) {
    const auto& d = printed[c];
    if (cells[c].size() != d.n()) {
      fail("row " + std::to_string(c + 1) + " has the wrong length");
      continue;
    }
    for (std::size_t i = 0; i < d.n(); ++i) {
      const std::string where = "cell (" + std::to_string(c + 1) + "," + std::to_string(i + 1) + ")";
      const bool can = reflectable(d, i);
      if (!cells[c][i]) {
        if (can) fail(where + " is '-' but the root is grey");
        continue;
      }
      if (!can) {
        fail(where + " names a reflection in a non-grey root");
        continue;
      }
      const std::size_t dst = *cells[c][i];
      if (dst >= printed.size()) {
        fail(where + " points past the table");
        continue;
      }
      auto target = odd_reflect(d, i).target;
      if (!equivalent(target, printed[dst])) fail(where + ": reflection is not equivalent to matrix " +
                                                  std::to_string(dst + 1));
      const auto kc = r.printed_to_class[c], kd = r.printed_to_class[dst];
      if (kc && kd && wit[c]) {
        const auto node = wit[c]->perm[i];
        const auto& cell = t.table[*kc][node];
        if (!cell || !equivalent(t.classes[*cell], t.classes[*kd]))
          fail(where + " disagrees with the enumerated table");
      }
    }
  }
  return r;
}

}  // namespace modsuper
