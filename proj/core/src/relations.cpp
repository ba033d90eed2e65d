#include "modsuper/relations.hpp"

#include <cctype>
#include <sstream>

#include "modsuper/bracket.hpp"
#include "modsuper/errors.hpp"

namespace modsuper {

RelationExpr RelationExpr::generator(std::size_t k) {
  RelationExpr e;
  e.kind = Kind::Generator;
  e.gen = k;
  return e;
}

RelationExpr RelationExpr::bracket(RelationExpr a, RelationExpr b) {
  RelationExpr e;
  e.kind = Kind::Bracket;
  e.kids.push_back(std::move(a));
  e.kids.push_back(std::move(b));
  return e;
}

RelationExpr RelationExpr::ad_power(RelationExpr op, int k, RelationExpr arg) {
  if (k < 1) throw Error(ErrorKind::SyntaxError, "ad exponent must be positive");
  RelationExpr e;
  e.kind = Kind::AdPower;
  e.exponent = k;
  e.kids.push_back(std::move(op));
  e.kids.push_back(std::move(arg));
  return e;
}

RelationExpr RelationExpr::scale(long long c, RelationExpr body) {
  RelationExpr e;
  e.kind = Kind::Scale;
  e.coeff = c;
  e.kids.push_back(std::move(body));
  return e;
}

RelationExpr RelationExpr::sum(std::vector<RelationExpr> terms) {
  RelationExpr e;
  e.kind = Kind::Sum;
  e.kids = std::move(terms);
  return e;
}

std::size_t RelationExpr::arity() const {
  if (kind == Kind::Generator) return gen + 1;
  std::size_t m = 0;
  for (const auto& k : kids) m = std::max(m, k.arity());
  return m;
}

RootVector RelationExpr::weight(std::size_t n) const {
  switch (kind) {
    case Kind::Generator: {
      if (gen >= n) throw Error(ErrorKind::BadGenerator, "x" + std::to_string(gen + 1) + " with only " +
                                                             std::to_string(n) + " generators");
      RootVector w(n, 0);
      w[gen] = 1;
      return w;
    }
    case Kind::Bracket: {
      RootVector w = kids[0].weight(n), v = kids[1].weight(n);
      for (std::size_t k = 0; k < n; ++k) w[k] += v[k];
      return w;
    }
    case Kind::AdPower: {
      RootVector w = kids[1].weight(n), v = kids[0].weight(n);
      for (std::size_t k = 0; k < n; ++k) w[k] += exponent * v[k];
      return w;
    }
    case Kind::Scale:
      return kids[0].weight(n);
    case Kind::Sum: {
      if (kids.empty()) throw Error(ErrorKind::InhomogeneousSum, "empty sum");
      RootVector w = kids[0].weight(n);
      for (std::size_t t = 1; t < kids.size(); ++t)
        if (kids[t].weight(n) != w)
          throw Error(ErrorKind::InhomogeneousSum, "terms " + to_string(kids[0]) + " and " + to_string(kids[t]) +
                                                       " have different weights");
      return w;
    }
  }
  return {};
}

RelationExpr RelationExpr::expanded() const {
  switch (kind) {
    case Kind::Generator:
      return *this;
    case Kind::AdPower: {
      RelationExpr op = kids[0].expanded();
      RelationExpr r = kids[1].expanded();
      for (int k = 0; k < exponent; ++k) r = bracket(op, std::move(r));
      return r;
    }
    default: {
      RelationExpr e = *this;
      for (auto& k : e.kids) k = k.expanded();
      return e;
    }
  }
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RelationExpr parse() {
    RelationExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  long long integer() {
    if (!at_digit()) fail("expected an integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  RelationExpr expr() {
    std::vector<RelationExpr> terms;
    bool neg = eat('-');
    if (!neg) eat('+');
    terms.push_back(term(neg));
    while (true) {
      if (eat('+'))
        terms.push_back(term(false));
      else if (eat('-'))
        terms.push_back(term(true));
      else
        break;
    }
    if (terms.size() == 1) return std::move(terms.front());
    RelationExpr e = RelationExpr::sum(std::move(terms));
    return e;
  }

  RelationExpr term(bool neg) {
    long long c = 1;
    if (at_digit()) {
      c = integer();
      eat('*');
    }
    RelationExpr a = atom();
    if (neg) c = -c;
    if (c == 1) return a;
    return RelationExpr::scale(c, std::move(a));
  }

  RelationExpr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('[')) {
      RelationExpr a = expr();
      expect(',');
      RelationExpr b = expr();
      expect(']');
      return RelationExpr::bracket(std::move(a), std::move(b));
    }
    if (s_.compare(pos_, 3, "ad(") == 0) {
      pos_ += 3;
      RelationExpr op = expr();
      expect(')');
      int k = 1;
      if (eat('^')) k = static_cast<int>(integer());
      if (k < 1) fail("ad exponent must be positive");
      expect('(');
      RelationExpr arg = expr();
      expect(')');
      return RelationExpr::ad_power(std::move(op), k, std::move(arg));
    }
    if (s_[pos_] == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected generator index");
      long long k = integer();
      if (k < 1) fail("generator indices start at 1");
      return RelationExpr::generator(static_cast<std::size_t>(k - 1));
    }
    if (eat('(')) {
      RelationExpr a = expr();
      expect(')');
      return a;
    }
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void print(std::ostream& os, const RelationExpr& e) {
  using K = RelationExpr::Kind;
  switch (e.kind) {
    case K::Generator:
      os << 'x' << e.gen + 1;
      return;
    case K::Bracket:
      os << '[';
      print(os, e.kids[0]);
      os << ", ";
      print(os, e.kids[1]);
      os << ']';
      return;
    case K::AdPower:
      os << "ad(";
      print(os, e.kids[0]);
      os << ")^" << e.exponent << '(';
      print(os, e.kids[1]);
      os << ')';
      return;
    case K::Scale: {
      const bool wrap = e.kids[0].kind == K::Sum;
      if (e.coeff == -1)
        os << '-';
      else
        os << e.coeff << '*';
      if (wrap) os << '(';
      print(os, e.kids[0]);
      if (wrap) os << ')';
      return;
    }
    case K::Sum:
      for (std::size_t t = 0; t < e.kids.size(); ++t) {
        const auto& k = e.kids[t];
        if (t == 0) {
          print(os, k);
          continue;
        }
        if (k.kind == K::Scale && k.coeff < 0) {
          os << " - ";
          if (k.coeff != -1) os << -k.coeff << '*';
          print(os, k.kids[0]);
        } else {
          os << " + ";
          print(os, k);
        }
      }
      return;
  }
}

}  // namespace

RelationExpr parse_relation(const std::string& text) {
  RelationExpr e = Parser(text).parse();
  e.weight(e.arity());
  return e;
}

std::string to_string(const RelationExpr& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

std::vector<RelationExpr> parse_relation_file(const std::string& text) {
  std::vector<RelationExpr> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_relation(line));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  return out;
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Serre:
      return "serre";
    case Provenance::Cube:
      return "cube";
    case Provenance::Listed:
      return "listed";
    case Provenance::Discovered:
      return "discovered";
  }
  return "?";
}

std::vector<RelationExpr> RelationSet::exprs() const {
  std::vector<RelationExpr> out;
  for (const auto& r : relations) out.push_back(r.expr);
  return out;
}

RelationSet serre_relations(const CartanDatum& d) {
  auto s = serre_exponents(d);
  RelationSet out;
  using E = RelationExpr;
  for (std::size_t i = 0; i < d.n(); ++i) {
    if (s.self_square[i]) out.relations.push_back({E::bracket(E::generator(i), E::generator(i)), Provenance::Serre});
    if (s.self_cube[i])
      out.relations.push_back(
          {E::bracket(E::generator(i), E::bracket(E::generator(i), E::generator(i))), Provenance::Cube});
    for (std::size_t j = 0; j < d.n(); ++j) {
      if (i == j) continue;
      const int k = static_cast<int>(s.k[i][j]);
      E r = k == 1 ? E::bracket(E::generator(i), E::generator(j)) : E::ad_power(E::generator(i), k, E::generator(j));
      out.relations.push_back({std::move(r), Provenance::Serre});
    }
  }
  return out;
}

namespace {

template <class F>
Element<F> eval(Bracket<F>& br, const RelationExpr& e) {
  using K = RelationExpr::Kind;
  const auto& g = br.algebra();
  const F& f = g.field();
  switch (e.kind) {
    case K::Generator:
      if (e.gen >= g.n()) throw Error(ErrorKind::BadGenerator, "x" + std::to_string(e.gen + 1) + " out of range");
      return g.generator(e.gen);
    case K::Bracket:
      return br(eval(br, e.kids[0]), eval(br, e.kids[1]));
    case K::AdPower: {
      Element<F> op = eval(br, e.kids[0]);
      Element<F> r = eval(br, e.kids[1]);
      for (int k = 0; k < e.exponent; ++k) r = br(op, r);
      return r;
    }
    case K::Scale: {
      Element<F> r = eval(br, e.kids[0]);
      if (r.part != Part::Zero) scale_vec(f, r.c, f.from_int(e.coeff));
      return r;
    }
    case K::Sum: {
      Element<F> acc = g.zero_at(e.weight(g.n()));
      if (acc.part == Part::Zero) return acc;
      for (const auto& t : e.kids) {
        Element<F> v = eval(br, t);
        if (v.part == Part::Zero) continue;
        axpy(f, acc.c, f.one(), v.c);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

template <class F>
Element<F> evaluate(const GradedAlgebra<F>& g, const RelationExpr& e) {
  Bracket<F> br(g);
  return eval(br, e);
}

template <class F>
std::vector<RelationCheck> verify_set(const GradedAlgebra<F>& g, const RelationSet& s, bool prepend_serre) {
  std::vector<Relation> all;
  if (prepend_serre) all = serre_relations(g.datum()).relations;
  all.insert(all.end(), s.relations.begin(), s.relations.end());
  Bracket<F> br(g);
  std::vector<RelationCheck> out;
  for (auto& r : all) {
    RelationCheck c;
    Element<F> v = eval(br, r.expr);
    c.vanishes = v.is_zero(g.field());
    if (v.part != Part::Zero)
      for (const auto& x : v.c)
        if (!g.field().is_zero(x)) ++c.nonzero_coords;
    c.relation = std::move(r);
    out.push_back(std::move(c));
  }
  return out;
}

template Element<PrimeField> evaluate(const GradedAlgebra<PrimeField>&, const RelationExpr&);
template Element<RationalField> evaluate(const GradedAlgebra<RationalField>&, const RelationExpr&);
template std::vector<RelationCheck> verify_set(const GradedAlgebra<PrimeField>&, const RelationSet&, bool);
template std::vector<RelationCheck> verify_set(const GradedAlgebra<RationalField>&, const RelationSet&, bool);

}  // namespace modsuper
