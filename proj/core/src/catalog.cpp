#include "modsuper/catalog.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "modsuper/errors.hpp"

namespace modsuper {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& corpus_files();
}

std::string_view headline_name(HeadlineMeaning h) {
  switch (h) {
    case HeadlineMeaning::Derived: return "derived";
    case HeadlineMeaning::Simple: return "simple";
    case HeadlineMeaning::Unresolved: break;
  }
  return "unresolved";
}

std::string_view erratum_name(ErratumKind k) {
  switch (k) {
    case ErratumKind::MatrixSign: return "matrix-sign";
    case ErratumKind::TableCell: return "table-cell";
    case ErratumKind::Inverse: return "inverse";
    case ErratumKind::WeightLength: return "weight-length";
    case ErratumKind::CoeffLength: return "coeff-length";
    case ErratumKind::Weight: return "weight";
    case ErratumKind::Coefficients: return "coefficients";
    case ErratumKind::Relation: return "relation";
    case ErratumKind::RelationsIncomplete: return "relations-incomplete";
    case ErratumKind::RelationBlock: return "relation-block";
    case ErratumKind::MaxRoot: return "max-root";
  }
  return "?";
}

const CatalogMatrix& CatalogEntry::matrix(std::size_t index) const {
  if (index < 1 || index > matrices.size())
    throw Error(ErrorKind::NotFound, name + " has " + std::to_string(matrices.size()) + " matrices, no " +
                                         std::to_string(index));
  return matrices[index - 1];
}

std::vector<CartanDatum> CatalogEntry::printed_matrices() const {
  std::vector<CartanDatum> v;
  for (const auto& m : matrices) v.push_back(m.printed);
  return v;
}

std::vector<CartanDatum> CatalogEntry::working_matrices() const {
  std::vector<CartanDatum> v;
  for (const auto& m : matrices) v.push_back(m.working);
  return v;
}

std::vector<const Erratum*> CatalogEntry::errata_for(std::size_t index) const {
  std::vector<const Erratum*> v;
  for (const auto& e : errata)
    if (e.matrix == index) v.push_back(&e);
  return v;
}

bool CatalogEntry::has_erratum(std::size_t index, ErratumKind k) const {
  return std::any_of(errata.begin(), errata.end(), [&](const Erratum& e) { return e.matrix == index && e.kind == k; });
}

RelationSet CatalogEntry::defining_relations(std::size_t index) const {
  const CatalogMatrix& m = matrix(index);
  RelationSet s;
  if (m.defining_block && matrices[m.defining_block - 1].relations) s = *matrices[m.defining_block - 1].relations;
  s.algebra = name;
  s.index = index;
  return s;
}

namespace {

const FieldSpec kField(3);

struct Raw {
  std::map<std::string, std::string> meta;
  std::vector<std::vector<std::string>> table;
  std::map<std::size_t, std::vector<std::vector<long long>>> matrix, inverse;
  std::map<std::size_t, std::vector<int>> parity;
  std::map<std::size_t, std::vector<RelationExpr>> relations;
  std::map<std::size_t, std::map<std::string, std::string>> maxroot;
  std::vector<std::pair<int, std::vector<std::string>>> errata;  // line, tokens
  std::map<std::string, int> line_of;  // section -> header line
};

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> v;
  for (std::string t; is >> t;) v.push_back(t);
  return v;
}

std::vector<int> ints(const std::string& s) {
  std::vector<int> v;
  for (const auto& t : tokens(s)) v.push_back(std::stoi(t));
  return v;
}

std::string vec_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string plain_matrix(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m(r, c).str();
    s += '\n';
  }
  return s;
}

Matrix to_matrix(const std::vector<std::vector<long long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

Raw read_raw(std::string_view file, std::string_view text) {
  static const std::regex header(R"(^\[(meta|table|matrix|parity|relations|maxroot|inverse|errata)(?: ([0-9]+))?\]$)");
  Raw raw;
  std::string kind;
  std::size_t idx = 0;
  int lineno = 0;
  auto corrupt = [&](const std::string& msg) {
    return Error(ErrorKind::CorpusCorrupt, std::string(file) + ":" + std::to_string(lineno) + ": " + msg);
  };
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      kind = m[1];
      const bool numbered = kind != "meta" && kind != "table" && kind != "errata";
      if (numbered != m[2].matched) throw corrupt("bad section header '" + line + "'");
      idx = numbered ? std::stoul(m[2]) : 0;
      if (numbered && idx == 0) throw corrupt("sections are numbered from 1");
      const std::string key = line;
      if (raw.line_of.count(key)) throw corrupt("duplicate section " + key);
      raw.line_of[key] = lineno;
      continue;
    }
    try {
      if (kind.empty()) throw corrupt("data outside any section");
      if (kind == "meta" || kind == "maxroot") {
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw corrupt("expected key = value");
        auto& target = kind == "meta" ? raw.meta : raw.maxroot[idx];
        target[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
      } else if (kind == "table") {
        raw.table.push_back(tokens(line));
      } else if (kind == "errata") {
        raw.errata.emplace_back(lineno, tokens(line));
      } else if (kind == "matrix" || kind == "inverse") {
        std::vector<long long> row;
        for (const auto& t : tokens(line)) row.push_back(std::stoll(t));
        (kind == "matrix" ? raw.matrix : raw.inverse)[idx].push_back(std::move(row));
      } else if (kind == "parity") {
        auto& p = raw.parity[idx];
        if (!p.empty()) throw corrupt("parity takes one line");
        for (const auto& t : tokens(line)) {
          if (t != "0" && t != "1") throw corrupt("parity entries are 0 or 1");
          p.push_back(t == "1");
        }
      } else if (kind == "relations") {
        raw.relations[idx].push_back(parse_relation(line));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::CorpusCorrupt) throw;
      throw corrupt(e.what());
    } catch (const std::exception&) {
      throw corrupt("bad number in '" + line + "'");
    }
  }
  return raw;
}

CartanDatum flip_signs(const CartanDatum& d, const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                       unsigned mask) {
  Matrix m = d.entries();
  for (std::size_t b = 0; b < cells.size(); ++b)
    if (mask & (1u << b)) m(cells[b].first, cells[b].second) = kField.neg(m(cells[b].first, cells[b].second));
  return CartanDatum(d.field(), m, d.parities(), d.even_zeros());
}

// Follows the table from matrix 1. A printed matrix that is not equivalent
// to the reflection it is reached by is replaced by the closest sign variant
// of its zero-diagonal rows that is.
void derive_working(CatalogEntry& e) {
  const std::size_t count = e.matrices.size();
  std::vector<bool> done(count, false);
  done[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    const CartanDatum& src = e.matrices[c].working;
    for (std::size_t i = 0; i < e.n; ++i) {
      const auto& cell = e.table[c][i];
      if (!cell || *cell >= count || done[*cell] || !reflectable(src, i)) continue;
      const std::size_t dst = *cell;
      auto& target_slot = e.matrices[dst];
      const CartanDatum target = odd_reflect(src, i).target;
      done[dst] = true;
      queue.push_back(dst);
      if (equivalent(target_slot.printed, target)) continue;

      const CartanDatum& p = target_slot.printed;
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (std::size_t r = 0; r < e.n; ++r)
        if (p.a(r, r) == 0)
          for (std::size_t k = 0; k < e.n; ++k)
            if (k != r && p.a(r, k) != 0) cells.emplace_back(r, k);
      std::vector<unsigned> masks;
      if (cells.size() < 20)
        for (unsigned m = 1; m < (1u << cells.size()); ++m) masks.push_back(m);
      std::stable_sort(masks.begin(), masks.end(),
                       [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
      bool fixed = false;
      for (unsigned m : masks) {
        CartanDatum cand = flip_signs(p, cells, m);
        if (!equivalent(cand, target)) continue;
        target_slot.working = cand;
        e.errata.push_back({dst + 1, ErratumKind::MatrixSign, matrix_string(p), matrix_string(cand)});
        fixed = true;
        break;
      }
      if (!fixed)
        e.errata.push_back({dst + 1, ErratumKind::TableCell, matrix_string(p), matrix_string(target)});
    }
  }
}

void check_inverses(CatalogEntry& e) {
  for (auto& m : e.matrices) {
    if (!m.inverse) continue;
    const Matrix& a = m.printed.entries();
    if (m.inverse->rows() == a.rows() && m.inverse->cols() == a.cols() && is_identity(multiply(a, *m.inverse, kField), kField))
      continue;
    m.inverse_recomputed = invert(m.printed);
    Erratum x{m.index, ErratumKind::Inverse, plain_matrix(*m.inverse), plain_matrix(*m.inverse_recomputed)};
    // A * inv diagonal means inv inverts D * A for a diagonal D
    if (m.inverse->rows() == a.rows()) {
      const Matrix prod = multiply(a, *m.inverse, kField);
      bool diagonal = true;
      for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < prod.cols(); ++c)
          if ((r == c) == (prod(r, c) == 0)) diagonal = false;
      x.rescaled_rows = diagonal;
    }
    e.errata.push_back(std::move(x));
  }
}

void check_max_roots(CatalogEntry& e) {
  for (auto& m : e.matrices) {
    if (!m.max_root) continue;
    const auto& r = *m.max_root;
    const std::vector<int> from_expr(r.expression_weight.begin(), r.expression_weight.end());
    std::vector<int> c = r.coeffs;
    if (r.coeffs.size() != e.n) {
      e.errata.push_back({m.index, ErratumKind::CoeffLength, vec_string(r.coeffs), vec_string(from_expr)});
      if (from_expr.empty()) continue;
      c = from_expr;
    } else if (!from_expr.empty() && from_expr != r.coeffs) {
      e.errata.push_back({m.index, ErratumKind::Coefficients, vec_string(r.coeffs), vec_string(from_expr)});
      c = from_expr;
    }
    std::vector<int> w(e.n);
    for (std::size_t k = 0; k < e.n; ++k) {
      Rational s = 0;
      for (std::size_t l = 0; l < e.n; ++l) s += m.working.a(k, l) * c[l];
      w[k] = static_cast<int>(kField.reduce(s));
    }
    if (r.weight.size() != e.n) {
      e.errata.push_back({m.index, ErratumKind::WeightLength, vec_string(r.weight), vec_string(w)});
      continue;
    }
    bool same = true, up_to_scale = true;
    for (std::size_t k = 0; k < e.n; ++k) {
      const Rational pw = kField.reduce(r.weight[k]);
      if (pw != w[k]) same = false;
      if ((pw == 0) != (w[k] == 0)) up_to_scale = false;
    }
    if (!same) {
      Erratum x{m.index, ErratumKind::Weight, vec_string(r.weight), vec_string(w)};
      x.rescaled_rows = up_to_scale;
      e.errata.push_back(std::move(x));
    }
  }
}

Sdim parse_sdim(const std::string& s) {
  auto v = ints(s);
  if (v.size() != 2 || v[0] < 0 || v[1] < 0) throw std::invalid_argument("sdim");
  return {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])};
}

}  // namespace

CatalogEntry parse_corpus(std::string_view file, std::string_view text) {
  Raw raw = read_raw(file, text);
  auto corrupt = [&](const std::string& section, const std::string& msg) {
    auto it = raw.line_of.find(section);
    const std::string where = it == raw.line_of.end() ? "" : ":" + std::to_string(it->second);
    return Error(ErrorKind::CorpusCorrupt, std::string(file) + where + ": " + msg);
  };
  auto meta = [&](const std::string& key) -> const std::string& {
    auto it = raw.meta.find(key);
    if (it == raw.meta.end()) throw corrupt("[meta]", "missing meta key '" + key + "'");
    return it->second;
  };

  CatalogEntry e;
  e.file = std::string(file);
  e.name = meta("name");
  try {
    e.n = std::stoul(meta("n"));
    e.headline_sdim = parse_sdim(meta("sdim"));
    if (raw.meta.count("sdim_note")) e.noted_sdim = parse_sdim(raw.meta["sdim_note"]);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw corrupt("[meta]", "bad number in meta");
  }
  const std::string& h = meta("headline");
  if (h == "derived")
    e.headline_means = HeadlineMeaning::Derived;
  else if (h == "simple")
    e.headline_means = HeadlineMeaning::Simple;
  else if (h == "unresolved")
    e.headline_means = HeadlineMeaning::Unresolved;
  else
    throw corrupt("[meta]", "headline is derived, simple or unresolved");

  const std::size_t count = raw.matrix.size();
  if (count == 0) throw corrupt("[meta]", "no matrices");
  for (std::size_t k = 1; k <= count; ++k) {
    const std::string sec = "[matrix " + std::to_string(k) + "]";
    auto mi = raw.matrix.find(k);
    if (mi == raw.matrix.end()) throw corrupt("[meta]", "matrices are not numbered 1.." + std::to_string(count));
    if (mi->second.size() != e.n) throw corrupt(sec, "expected " + std::to_string(e.n) + " rows");
    for (const auto& row : mi->second)
      if (row.size() != e.n) throw corrupt(sec, "expected " + std::to_string(e.n) + " columns");
    auto pi = raw.parity.find(k);
    if (pi == raw.parity.end()) throw corrupt(sec, "no parity for matrix " + std::to_string(k));
    if (pi->second.size() != e.n)
      throw corrupt("[parity " + std::to_string(k) + "]", "expected " + std::to_string(e.n) + " entries");
    CatalogMatrix m;
    m.index = k;
    try {
      m.printed = CartanDatum(kField, to_matrix(mi->second), pi->second);
    } catch (const Error& err) {
      throw corrupt(sec, err.what());
    }
    m.working = m.printed;
    e.matrices.push_back(std::move(m));
  }
  for (const auto& [k, v] : raw.parity)
    if (k > count) throw corrupt("[parity " + std::to_string(k) + "]", "no matching matrix");

  if (raw.table.size() != count)
    throw corrupt("[table]", "table has " + std::to_string(raw.table.size()) + " rows for " + std::to_string(count) +
                                 " matrices");
  for (const auto& row : raw.table) {
    if (row.size() != e.n) throw corrupt("[table]", "table rows need " + std::to_string(e.n) + " cells");
    std::vector<TableCell> cells;
    for (const auto& t : row) {
      if (t == "-") {
        cells.emplace_back();
        continue;
      }
      std::size_t v = 0;
      try {
        v = std::stoul(t);
      } catch (const std::exception&) {
        throw corrupt("[table]", "bad cell '" + t + "'");
      }
      if (v < 1 || v > count) throw corrupt("[table]", "cell " + t + " is out of range");
      cells.emplace_back(v - 1);
    }
    e.table.push_back(std::move(cells));
  }

  for (auto& [k, rels] : raw.relations) {
    const std::string sec = "[relations " + std::to_string(k) + "]";
    if (k > count) throw corrupt(sec, "no matching matrix");
    RelationSet s;
    s.algebra = e.name;
    s.index = k;
    for (auto& r : rels) {
      if (r.arity() > e.n) throw corrupt(sec, "relation " + to_string(r) + " uses a missing generator");
      s.relations.push_back({std::move(r), Provenance::Listed});
    }
    e.matrices[k - 1].relations = std::move(s);
  }
  for (auto& [k, kv] : raw.maxroot) {
    const std::string sec = "[maxroot " + std::to_string(k) + "]";
    if (k > count) throw corrupt(sec, "no matching matrix");
    MaxRootRecord r;
    try {
      r.label = kv.at("label");
      r.coeffs = ints(kv.at("coeffs"));
      r.weight = ints(kv.at("weight"));
      r.expression = kv.count("expr") ? kv.at("expr") : "";
    } catch (const std::exception&) {
      throw corrupt(sec, "needs label, coeffs and weight");
    }
    if (!r.expression.empty()) {
      RelationExpr x;
      try {
        x = parse_relation(r.expression);
      } catch (const Error& err) {
        throw corrupt(sec, std::string("expr: ") + err.what());
      }
      if (x.arity() > e.n) throw corrupt(sec, "expr uses a missing generator");
      r.expression_weight = x.weight(e.n);
    }
    e.matrices[k - 1].max_root = std::move(r);
  }
  for (auto& [k, rows] : raw.inverse) {
    const std::string sec = "[inverse " + std::to_string(k) + "]";
    if (k > count) throw corrupt(sec, "no matching matrix");
    if (rows.size() != e.n) throw corrupt(sec, "expected " + std::to_string(e.n) + " rows");
    for (const auto& row : rows)
      if (row.size() != e.n) throw corrupt(sec, "expected " + std::to_string(e.n) + " columns");
    e.matrices[k - 1].inverse = to_matrix(rows);
  }

  for (auto& m : e.matrices)
    if (m.relations) m.defining_block = m.index;
  for (const auto& [line, t] : raw.errata) {
    auto bad = [&, line = line](const std::string& msg) {
      return Error(ErrorKind::CorpusCorrupt, std::string(file) + ":" + std::to_string(line) + ": " + msg);
    };
    static const std::map<std::string, std::pair<ErratumKind, std::size_t>> kinds = {
        {"relation", {ErratumKind::Relation, 3}},
        {"relations-incomplete", {ErratumKind::RelationsIncomplete, 2}},
        {"relation-block", {ErratumKind::RelationBlock, 3}},
        {"max-root", {ErratumKind::MaxRoot, 3}}};
    auto it = t.empty() ? kinds.end() : kinds.find(t[0]);
    if (it == kinds.end() || t.size() != it->second.second) throw bad("unknown erratum line");
    std::size_t k = 0, item = 0;
    try {
      k = std::stoul(t[1]);
      if (t.size() > 2) item = std::stoul(t[2]);
    } catch (const std::exception&) {
      throw bad("bad number");
    }
    Erratum x{k, it->second.first, {}, {}, item};
    if (x.kind == ErratumKind::MaxRoot) {
      if (k < 1 || k > count || !e.matrices[k - 1].max_root) throw bad("no maximal root for matrix " + t[1]);
      if (item < 1 || item > count || item == k) throw bad("no matrix " + t[2]);
      x.printed = vec_string(e.matrices[k - 1].max_root->coeffs);
      x.recomputed = "as for matrix " + std::to_string(item);
      e.errata.push_back(std::move(x));
      continue;
    }
    if (k < 1 || k > count || !e.matrices[k - 1].relations) throw bad("no relation block for matrix " + t[1]);
    auto& m = e.matrices[k - 1];
    if (x.kind == ErratumKind::Relation) {
      if (item < 1 || item > m.relations->relations.size()) throw bad("no relation " + t[2]);
      x.printed = to_string(m.relations->relations[item - 1].expr);
    } else if (x.kind == ErratumKind::RelationBlock) {
      if (item < 1 || item > count || !e.matrices[item - 1].relations) throw bad("no block " + t[2]);
      m.defining_block = item;
      x.printed = std::to_string(k);
      x.recomputed = std::to_string(item);
    }
    e.errata.push_back(std::move(x));
  }

  e.degenerate = rank(e.matrices[0].printed.entries(), kField) < e.n;
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (equivalent(e.matrices[j].printed, e.matrices[k].printed)) e.matrices[k].duplicate_of.push_back(j + 1);

  derive_working(e);
  check_inverses(e);
  check_max_roots(e);
  return e;
}

const std::vector<CatalogEntry>& load() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    for (const auto& [file, text] : detail::corpus_files()) v.push_back(parse_corpus(file, text));
    // table order, not file order
    static const std::vector<std::string_view> order = {"g(2,3)", "g(1,6)", "g(3,6)", "g(3,3)", "g(4,3)",
                                                        "g(2,6)", "g(8,3)", "g(4,6)", "g(6,6)", "g(8,6)"};
    auto rank_of = [](const CatalogEntry& e) {
      return static_cast<std::size_t>(std::find(order.begin(), order.end(), e.name) - order.begin());
    };
    std::stable_sort(v.begin(), v.end(),
                     [&](const CatalogEntry& a, const CatalogEntry& b) { return rank_of(a) < rank_of(b); });
    return v;
  }();
  return entries;
}

const CatalogEntry& find(std::string_view name) {
  for (const auto& e : load())
    if (e.name == name) return e;
  throw Error(ErrorKind::NotFound, "no algebra named " + std::string(name));
}

CatalogSlot lookup(std::string_view name, std::size_t index) {
  const CatalogEntry& e = find(name);
  return {&e, &e.matrix(index)};
}

CatalogSlot lookup(std::string_view slot) {
  const auto slash = slot.rfind('/');
  if (slash == std::string_view::npos) throw Error(ErrorKind::NotFound, "expected NAME/INDEX, got " + std::string(slot));
  std::size_t index = 0;
  try {
    std::size_t used = 0;
    index = std::stoul(std::string(slot.substr(slash + 1)), &used);
    if (used != slot.size() - slash - 1) throw std::invalid_argument("index");
  } catch (const std::exception&) {
    throw Error(ErrorKind::NotFound, "bad matrix index in " + std::string(slot));
  }
  return lookup(slot.substr(0, slash), index);
}

std::string_view corpus_text(std::string_view name) {
  const CatalogEntry& e = find(name);
  for (const auto& [file, text] : detail::corpus_files())
    if (file == e.file) return text;
  throw Error(ErrorKind::NotFound, "no corpus file for " + std::string(name));
}

std::vector<std::string> corpus_file_names() {
  std::vector<std::string> v;
  for (const auto& [file, text] : detail::corpus_files()) v.emplace_back(file);
  return v;
}

HeadlineMeaning resolve_headline(const CatalogEntry& e) {
  BuildOptions opt;
  auto g = build(e.matrices[0].working, PrimeField(3), opt);
  const AlgebraReport r = report(g);
  if (r.sdim_derived == e.headline_sdim) return HeadlineMeaning::Derived;
  if (r.sdim_simple == e.headline_sdim) return HeadlineMeaning::Simple;
  return HeadlineMeaning::Unresolved;
}

std::string catalog_list_text() {
  std::ostringstream os;
  for (const auto& e : load()) {
    os << e.name << "  n=" << e.n << "  matrices " << e.matrices.size() << "  sdim " << sdim_string(e.headline_sdim)
       << " (" << headline_name(e.headline_means) << ")";
    if (e.degenerate) os << "  degenerate";
    if (!e.errata.empty()) os << "  errata " << e.errata.size();
    os << '\n';
  }
  return os.str();
}

std::string catalog_show_text(const CatalogEntry& e) {
  std::ostringstream os;
  os << e.name << "\nsdim " << sdim_string(e.headline_sdim) << " (" << headline_name(e.headline_means) << ")\n";
  if (e.noted_sdim) os << "also quoted " << sdim_string(*e.noted_sdim) << '\n';
  os << (e.degenerate ? "degenerate\n" : "nondegenerate\n") << "\ntable\n";
  for (std::size_t c = 0; c < e.table.size(); ++c) {
    os << c + 1 << ":";
    for (const auto& cell : e.table[c]) os << ' ' << (cell ? std::to_string(*cell + 1) : std::string("-"));
    os << '\n';
  }
  for (const auto& m : e.matrices) {
    os << "\n[" << m.index << "] parity";
    for (int p : m.printed.parities()) os << ' ' << p;
    os << '\n' << matrix_string(m.printed);
    if (!m.duplicate_of.empty()) {
      os << "equivalent to";
      for (auto j : m.duplicate_of) os << ' ' << j;
      os << '\n';
    }
    if (m.relations) os << "relations " << m.relations->relations.size() << '\n';
    if (m.defining_block && m.defining_block != m.index) os << "defined by relation block " << m.defining_block << '\n';
    if (m.max_root) os << "maximal root " << vec_string(m.max_root->coeffs) << ", index " << m.max_root->label << '\n';
    if (m.inverse) os << "inverse\n" << plain_matrix(*m.inverse);
  }
  if (!e.errata.empty()) {
    os << "\nerrata\n";
    for (const auto& x : e.errata) {
      os << "  " << x.matrix << " " << erratum_name(x.kind) << ": printed ";
      auto flat = [](std::string s) {
        std::replace(s.begin(), s.end(), '\n', ';');
        return s;
      };
      os << flat(x.printed);
      if (!x.recomputed.empty()) os << " recomputed " << flat(x.recomputed);
      if (x.rescaled_rows) os << " (rows rescaled)";
      os << '\n';
    }
  }
  return os.str();
}

std::string catalog_show_json(const CatalogEntry& e) {
  using J = nlohmann::ordered_json;
  auto mat = [](const Matrix& m) {
    J rows = J::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      J row = J::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
      rows.push_back(row);
    }
    return rows;
  };
  J j;
  j["name"] = e.name;
  j["n"] = e.n;
  j["headline_sdim"] = {e.headline_sdim.first, e.headline_sdim.second};
  j["headline_means"] = headline_name(e.headline_means);
  j["degenerate"] = e.degenerate;
  J table = J::array();
  for (const auto& row : e.table) {
    J r = J::array();
    for (const auto& cell : row) r.push_back(cell ? J(*cell + 1) : J());
    table.push_back(r);
  }
  j["table"] = table;
  J ms = J::array();
  for (const auto& m : e.matrices) {
    J x;
    x["index"] = m.index;
    x["parity"] = m.printed.parities();
    x["matrix"] = signed_lift(m.printed);
    if (!(m.working == m.printed)) x["working_matrix"] = signed_lift(m.working);
    x["duplicate_of"] = m.duplicate_of;
    if (m.relations) {
      J rs = J::array();
      for (const auto& r : m.relations->relations) rs.push_back(to_string(r.expr));
      x["relations"] = rs;
    }
    if (m.defining_block) x["defining_block"] = m.defining_block;
    if (m.max_root) x["max_root"] = {{"label", m.max_root->label}, {"coeffs", m.max_root->coeffs},
                                     {"weight", m.max_root->weight}, {"expression", m.max_root->expression}};
    if (m.inverse) x["inverse"] = mat(*m.inverse);
    if (m.inverse_recomputed) x["inverse_recomputed"] = mat(*m.inverse_recomputed);
    ms.push_back(x);
  }
  j["matrices"] = ms;
  J errs = J::array();
  for (const auto& x : e.errata)
    errs.push_back({{"matrix", x.matrix}, {"kind", erratum_name(x.kind)}, {"printed", x.printed},
                    {"recomputed", x.recomputed}, {"rescaled_rows", x.rescaled_rows}});
  j["errata"] = errs;
  return j.dump(2);
}

}  // namespace modsuper
