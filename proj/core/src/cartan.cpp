#include "modsuper/cartan.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace modsuper {

CartanDatum::CartanDatum(FieldSpec field, Matrix entries, std::vector<int> parity, std::vector<bool> even_zero)
    : field_(field), entries_(entries.reduced(field)), parity_(std::move(parity)), even_zero_(std::move(even_zero)) {
  const std::size_t n = parity_.size();
  if (even_zero_.empty()) even_zero_.assign(n, false);
  if (entries_.rows() != n || entries_.cols() != n || even_zero_.size() != n)
    throw Error(ErrorKind::MalformedDatum, "matrix, parity and marker sizes disagree");
  if (n == 0) throw Error(ErrorKind::MalformedDatum, "empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (parity_[i] != 0 && parity_[i] != 1) throw Error(ErrorKind::MalformedDatum, "parity must be 0 or 1");
    if (even_zero_[i] && (parity_[i] != 0 || entries_(i, i) != 0))
      throw Error(ErrorKind::MalformedDatum, "empty-diagonal marker on row " + std::to_string(i + 1) +
                                                 " requires an even root with zero diagonal");
  }
}

CartanDatum CartanDatum::with_inferred_parity(FieldSpec field, const Matrix& entries) {
  std::vector<int> parity;
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    Rational d = field.reduce(entries(i, i));
    parity.push_back(d == 2 ? 0 : 1);
  }
  return CartanDatum(field, entries, parity);
}

int CartanDatum::root_parity(const RootVector& c) const {
  long long s = 0;
  for (std::size_t i = 0; i < c.size() && i < n(); ++i) s += static_cast<long long>(c[i]) * parity_[i];
  return static_cast<int>(((s % 2) + 2) % 2);
}

std::size_t CartanDatum::odd_count() const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), 1));
}

std::string glyph(NodeKind kind) {
  switch (kind) {
    case NodeKind::GreyOdd: return "⊗";
    case NodeKind::BlackOdd: return "●";
    case NodeKind::WhiteEven: return "○";
    case NodeKind::StarEven: return "✻";
  }
  return "?";
}

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::GreyOdd: return "grey";
    case NodeKind::BlackOdd: return "black";
    case NodeKind::WhiteEven: return "white";
    case NodeKind::StarEven: return "star";
  }
  return "?";
}

std::string_view tag_name(NodeTag tag) {
  switch (tag) {
    case NodeTag::Sl2: return "sl(2)";
    case NodeTag::Osp12: return "osp(1|2)";
    case NodeTag::Sl11: return "sl(1|1)";
    case NodeTag::Heisenberg: return "hei";
  }
  return "?";
}

NodeClass classify_node(const CartanDatum& d, std::size_t i) {
  const Rational& a = d.a(i, i);
  if (d.parity(i) == 1) {
    if (a == 0) return {NodeKind::GreyOdd, NodeTag::Sl11};
    if (a == 1) return {NodeKind::BlackOdd, NodeTag::Osp12};
  } else {
    if (d.even_zero(i)) return {NodeKind::StarEven, NodeTag::Heisenberg};
    if (a == 2) return {NodeKind::WhiteEven, NodeTag::Sl2};
  }
  throw Error(ErrorKind::MalformedRow, "row " + std::to_string(i + 1) + " has parity " +
                                           std::to_string(d.parity(i)) + " and diagonal " + to_string(a));
}

CartanDatum normalize(const CartanDatum& d, ZeroRowScaling zero_rows) {
  const FieldSpec& f = d.field();
  Matrix m = d.entries();
  for (std::size_t i = 0; i < d.n(); ++i) {
    Rational diag = m(i, i);
    Rational s = 1;
    if (diag != 0) {
      s = f.mul(d.parity(i) == 0 ? Rational(2) : Rational(1), f.inv(diag));
    } else if (zero_rows == ZeroRowScaling::FirstNegativeOne) {
      for (std::size_t j = 0; j < d.n(); ++j)
        if (m(i, j) != 0) {
          s = f.mul(f.neg(1), f.inv(m(i, j)));
          break;
        }
    }
    if (s == 1) continue;
    for (std::size_t j = 0; j < d.n(); ++j) m(i, j) = f.mul(m(i, j), s);
  }
  return CartanDatum(f, m, d.parities(), d.even_zeros());
}

bool is_normalized(const CartanDatum& d) { return normalize(d) == d; }

namespace {

template <class F>
struct EquivSearch {
  using V = typename F::value_type;
  F f;
  std::size_t n;
  std::vector<V> a, b;
  const CartanDatum& da;
  const CartanDatum& db;
  std::vector<std::size_t> perm;
  std::vector<bool> used;
  std::vector<std::optional<V>> lambda;

  EquivSearch(F field, const CartanDatum& x, const CartanDatum& y) : f(field), n(x.n()), da(x), db(y) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a.push_back(f.from_rational(x.a(i, j)));
        b.push_back(f.from_rational(y.a(i, j)));
      }
    perm.assign(n, 0);
    used.assign(n, false);
    lambda.assign(n, std::nullopt);
  }

  const V& A(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  const V& B(std::size_t i, std::size_t j) const { return b[i * n + j]; }

  // b(row, col) must equal lambda[row] * a(prow, pcol)
  bool match(std::vector<std::optional<V>>& lam, std::size_t row, std::size_t col, std::size_t prow,
             std::size_t pcol) const {
    const V& bv = B(row, col);
    const V& av = A(prow, pcol);
    bool bz = f.is_zero(bv), az = f.is_zero(av);
    if (bz != az) return false;
    if (bz) return true;
    if (lam[row]) return f.mul(*lam[row], av) == bv;
    lam[row] = f.mul(bv, f.inv(av));
    return true;
  }

  bool search(std::size_t k) {
    if (k == n) return true;
    for (std::size_t u = 0; u < n; ++u) {
      if (used[u]) continue;
      if (db.parity(k) != da.parity(u) || db.even_zero(k) != da.even_zero(u)) continue;
      auto saved = lambda;
      bool ok = match(lambda, k, k, u, u);
      for (std::size_t i = 0; ok && i < k; ++i)
        ok = match(lambda, i, k, perm[i], u) && match(lambda, k, i, u, perm[i]);
      if (ok) {
        perm[k] = u;
        used[u] = true;
        if (search(k + 1)) return true;
        used[u] = false;
      }
      lambda = std::move(saved);
    }
    return false;
  }
};

// Cheap invariants preserved by permutation and row rescaling.
std::vector<std::tuple<int, bool, bool, std::size_t, std::size_t>> signature(const CartanDatum& d) {
  std::vector<std::tuple<int, bool, bool, std::size_t, std::size_t>> sig;
  for (std::size_t i = 0; i < d.n(); ++i) {
    std::size_t row_nz = 0, col_nz = 0;
    for (std::size_t j = 0; j < d.n(); ++j) {
      if (d.a(i, j) != 0) ++row_nz;
      if (d.a(j, i) != 0) ++col_nz;
    }
    sig.emplace_back(d.parity(i), d.even_zero(i), d.a(i, i) == 0, row_nz, col_nz);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::optional<Equivalence> equivalent(const CartanDatum& a, const CartanDatum& b) {
  if (a.n() != b.n() || !(a.field() == b.field())) return std::nullopt;
  if (signature(a) != signature(b)) return std::nullopt;
  return with_field(a.field(), [&](auto f) -> std::optional<Equivalence> {
    EquivSearch<decltype(f)> s(f, a, b);
    if (!s.search(0)) return std::nullopt;
    Equivalence w;
    w.perm = s.perm;
    for (std::size_t i = 0; i < a.n(); ++i) w.scale.push_back(s.lambda[i] ? f.to_rational(*s.lambda[i]) : Rational(1));
    return w;
  });
}

CartanDatum apply_equivalence(const CartanDatum& a, const Equivalence& w) {
  const std::size_t n = a.n();
  const FieldSpec& f = a.field();
  Matrix m(n, n);
  std::vector<int> parity(n);
  std::vector<bool> ez(n);
  for (std::size_t i = 0; i < n; ++i) {
    parity[i] = a.parity(w.perm[i]);
    ez[i] = a.even_zero(w.perm[i]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.mul(w.scale[i], a.a(w.perm[i], w.perm[j]));
  }
  return CartanDatum(f, m, parity, ez);
}

Equivalence compose(const Equivalence& ab, const Equivalence& bc, const FieldSpec& f) {
  Equivalence out;
  for (std::size_t i = 0; i < bc.perm.size(); ++i) {
    out.perm.push_back(ab.perm[bc.perm[i]]);
    out.scale.push_back(f.mul(bc.scale[i], ab.scale[bc.perm[i]]));
  }
  return out;
}

namespace {

long long to_ll(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw Error(ErrorKind::MalformedDatum, std::string(what) + " entry " + to_string(q) + " is not an integer");
  return static_cast<long long>(boost::multiprecision::numerator(q));
}

}  // namespace

std::vector<std::vector<long long>> signed_lift(const CartanDatum& d) {
  const std::size_t n = d.n();
  const long long p = d.field().characteristic();
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long v = to_ll(d.a(i, j), "Cartan");
      if (p != 0 && i != j && v != 0) v -= p;
      out[i][j] = v;
    }
  return out;
}

SerreExponents serre_exponents(const CartanDatum& d) {
  const std::size_t n = d.n();
  auto lift = signed_lift(d);
  SerreExponents s;
  s.n = n;
  s.b.assign(n, std::vector<long long>(n, 0));
  s.k.assign(n, std::vector<long long>(n, 0));
  s.self_square.assign(n, false);
  s.self_cube.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const long long diag = lift[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      long long b;
      if (diag == 0)
        b = lift[i][j] != 0 ? -1 : 0;
      else if (diag == 1)
        b = 2 * lift[i][j];
      else if (diag == 2)
        b = lift[i][j];
      else
        throw Error(ErrorKind::MalformedRow, "row " + std::to_string(i + 1) + " is not normalized");
      if (b > 0)
        throw Error(ErrorKind::MalformedDatum, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                   ") has no Serre exponent");
      s.b[i][j] = b;
      s.k[i][j] = 1 - b;
    }
    s.self_square[i] = diag == 0 && d.parity(i) == 1;
    s.self_cube[i] = diag == 1 && d.parity(i) == 1 && d.field().characteristic() == 3;
  }
  return s;
}

Diagram diagram(const CartanDatum& d) {
  Diagram g;
  g.field = d.field();
  const std::size_t n = d.n();
  for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(classify_node(d, i).kind);
  auto lift = signed_lift(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d.a(i, j) == 0 && d.a(j, i) == 0) continue;
      DiagramEdge e;
      e.i = i;
      e.j = j;
      e.aij = d.a(i, j);
      e.aji = d.a(j, i);
      long long li = std::llabs(lift[i][j]), lj = std::llabs(lift[j][i]);
      e.multiplicity = static_cast<int>(std::max(li, lj));
      const bool gi = g.nodes[i] == NodeKind::GreyOdd, gj = g.nodes[j] == NodeKind::GreyOdd;
      e.touches_grey = gi || gj;
      e.grey_pair = gi && gj;
      if (!e.touches_grey && li != lj) e.arrow_to = li < lj ? i : j;
      if (e.grey_pair) g.ambiguous = true;
      g.edges.push_back(e);
    }
  return g;
}

namespace {

std::string signed_entry(const FieldSpec& f, const Rational& x) {
  if (f.is_rational()) return to_string(x);
  Rational v = x;
  if (v != 0) v -= f.characteristic();
  return to_string(v);
}

std::string connector(const DiagramEdge& e) {
  std::string line;
  switch (e.multiplicity) {
    case 1: line = "—"; break;
    case 2: line = "═"; break;
    case 3: line = "≡"; break;
    default: line = "-" + std::to_string(e.multiplicity) + "-"; break;
  }
  if (e.arrow_to) line += *e.arrow_to == e.j ? ">" : "<";
  return line;
}

}  // namespace

std::string diagram_text(const Diagram& g) {
  std::ostringstream os;
  os << "nodes:";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) os << "  " << i + 1 << " " << glyph(g.nodes[i]);
  os << '\n';
  for (const auto& e : g.edges) {
    os << "  " << e.i + 1 << " " << connector(e) << " " << e.j + 1;
    if (e.touches_grey)
      os << "   A" << e.i + 1 << e.j + 1 << "=" << signed_entry(g.field, e.aij) << " A" << e.j + 1 << e.i + 1 << "="
         << signed_entry(g.field, e.aji);
    os << '\n';
  }
  if (g.ambiguous) os << "warning: adjacent grey nodes; the matrix is not determined by the diagram\n";
  return os.str();
}

std::string diagram_dot(const Diagram& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=plaintext, fontsize=18];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i + 1 << " [label=\"" << glyph(g.nodes[i]) << "\\n" << i + 1 << "\"];\n";
  for (const auto& e : g.edges) {
    std::size_t tail = e.i, head = e.j;
    if (e.arrow_to && *e.arrow_to == e.i) std::swap(tail, head);
    os << "  n" << tail + 1 << " -- n" << head + 1 << " [";
    os << "penwidth=" << e.multiplicity;
    if (e.multiplicity > 1) os << ", label=\"" << e.multiplicity << "\"";
    if (e.arrow_to) os << ", dir=forward";
    if (e.touches_grey)
      os << ", taillabel=\"" << signed_entry(g.field, tail == e.i ? e.aij : e.aji) << "\", headlabel=\""
         << signed_entry(g.field, tail == e.i ? e.aji : e.aij) << "\"";
    if (e.grey_pair) os << ", color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

CartanDatum reconstruct(const Diagram& g) {
  const std::size_t n = g.nodes.size();
  const FieldSpec& f = g.field;
  Matrix m(n, n);
  std::vector<int> parity(n);
  std::vector<bool> ez(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    switch (g.nodes[i]) {
      case NodeKind::GreyOdd: parity[i] = 1; m(i, i) = 0; break;
      case NodeKind::BlackOdd: parity[i] = 1; m(i, i) = 1; break;
      case NodeKind::WhiteEven: parity[i] = 0; m(i, i) = 2; break;
      case NodeKind::StarEven: parity[i] = 0; ez[i] = true; break;
    }
  }
  for (const auto& e : g.edges) {
    if (e.touches_grey) {
      m(e.i, e.j) = e.aij;
      m(e.j, e.i) = e.aji;
      continue;
    }
    Rational big = -e.multiplicity, small = -1;
    if (!e.arrow_to) {
      m(e.i, e.j) = f.reduce(big);
      m(e.j, e.i) = f.reduce(big);
    } else {
      std::size_t head = *e.arrow_to, tail = head == e.i ? e.j : e.i;
      m(head, tail) = f.reduce(small);
      m(tail, head) = f.reduce(big);
    }
  }
  return CartanDatum(f, m, parity, ez);
}

Matrix invert(const CartanDatum& d) {
  try {
    return inverse(d.entries(), d.field());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular)
      throw Error(ErrorKind::Singular, "degenerate Cartan matrix (rank " +
                                           std::to_string(rank(d.entries(), d.field())) + " < " +
                                           std::to_string(d.n()) + ")");
    throw;
  }
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational parse_rational_token(const std::string& tok, int line_no) {
  try {
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return Rational(v);
    }
    std::size_t u1 = 0, u2 = 0;
    std::string a = tok.substr(0, slash), b = tok.substr(slash + 1);
    long long num = std::stoll(a, &u1), den = std::stoll(b, &u2);
    if (u1 != a.size() || u2 != b.size() || den == 0) throw std::invalid_argument(tok);
    return Rational(num) / Rational(den);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
  }
}

std::string value_after(const std::string& line, const std::string& key) {
  auto eq = line.find('=');
  std::string k = strip_comment(line.substr(0, eq));
  if (eq == std::string::npos || k != key) return {};
  return strip_comment(line.substr(eq + 1));
}

}  // namespace

CartanDatum parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<long long> p;
  std::vector<int> parity;
  bool have_parity = false;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> row_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (!p) {
      std::string v = value_after(line, "p");
      if (v.empty()) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected p=<int>");
      try {
        p = std::stoll(v);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad characteristic");
      }
      continue;
    }
    if (!have_parity) {
      std::string v = value_after(line, "parity");
      if (v.empty()) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected parity=...");
      std::istringstream ps(v);
      std::string tok;
      while (ps >> tok) {
        for (char ch : tok) {
          if (ch != '0' && ch != '1')
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": parity bits must be 0 or 1");
          parity.push_back(ch == '1');
        }
      }
      have_parity = true;
      continue;
    }
    std::istringstream rs(line);
    std::vector<std::string> toks;
    std::string tok;
    while (rs >> tok) toks.push_back(tok);
    rows.push_back(toks);
    row_lines.push_back(line_no);
  }
  if (!p || !have_parity) throw Error(ErrorKind::ParseError, "missing p= or parity= header");
  if (*p < 0 || *p > static_cast<long long>(UINT32_MAX)) throw Error(ErrorKind::InvalidField, "bad characteristic");
  FieldSpec f(static_cast<std::uint32_t>(*p));
  const std::size_t n = parity.size();
  if (rows.size() != n)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " matrix rows, found " +
                                           std::to_string(rows.size()));
  Matrix m(n, n);
  std::vector<bool> ez(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(row_lines[i]) + ": expected " + std::to_string(n) +
                                             " entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] == "*") {
        if (i != j) throw Error(ErrorKind::ParseError, "line " + std::to_string(row_lines[i]) + ": '*' off the diagonal");
        ez[i] = true;
        m(i, j) = 0;
      } else {
        m(i, j) = parse_rational_token(rows[i][j], row_lines[i]);
      }
    }
  }
  return CartanDatum(f, m, parity, ez);
}

std::string matrix_string(const CartanDatum& d, bool signed_entries) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t j = 0; j < d.n(); ++j) {
      if (j) os << ' ';
      if (i == j && d.even_zero(i))
        os << '*';
      else if (signed_entries && i != j)
        os << signed_entry(d.field(), d.a(i, j));
      else
        os << d.a(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::string format_matrix_text(const CartanDatum& d) {
  std::ostringstream os;
  os << "p=" << d.field().characteristic() << '\n' << "parity=";
  for (std::size_t i = 0; i < d.n(); ++i) os << (i ? " " : "") << d.parity(i);
  os << '\n' << matrix_string(d, true);
  return os.str();
}

}  // namespace modsuper
