#include <sstream>

#include <nlohmann/json.hpp>

#include "modsuper/algebra.hpp"
#include "modsuper/errors.hpp"

namespace modsuper {

namespace {

std::string root_string(const RootVector& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

}  // namespace

template <class F>
MaximalRoot maximal_root(const GradedAlgebra<F>& g) {
  if (!g.complete()) throw Error(ErrorKind::Incomplete, "algebra was truncated");
  int best = -1;
  bool tie = false;
  for (std::size_t s = 0; s < g.spaces().size(); ++s) {
    const auto& sp = g.spaces()[s];
    if (sp.basis.empty()) continue;
    if (best < 0 || sp.height > g.space(best).height) {
      best = static_cast<int>(s);
      tie = false;
    } else if (sp.height == g.space(best).height) {
      tie = true;
    }
  }
  if (tie) throw Error(ErrorKind::NotUnique, "several roots of maximal height");
  const auto& sp = g.space(best);
  MaximalRoot m;
  m.coeffs = sp.weight;
  for (const auto& x : sp.eigen) m.eigenvalues.push_back(g.field().to_rational(x));
  m.expression = g.word(sp.basis.front());
  m.multiplicity = sp.basis.size();
  return m;
}

template <class F>
AlgebraReport report(const GradedAlgebra<F>& g) {
  if (!g.complete()) throw Error(ErrorKind::Incomplete, "algebra was truncated");
  AlgebraReport r;
  r.n = g.n();
  r.rank = rank(g.datum().entries(), g.datum().field());
  r.cartan_dim = 2 * r.n - r.rank;
  r.center_dim = r.n - r.rank;
  for (const auto& sp : g.spaces()) {
    if (sp.basis.empty()) continue;
    (sp.parity ? r.positive_odd : r.positive_even) += sp.basis.size();
    r.roots.push_back({sp.weight, sp.basis.size(), sp.parity});
    r.max_height = std::max(r.max_height, static_cast<std::size_t>(sp.height));
  }
  r.positive_root_count = r.positive_even + r.positive_odd;
  r.sdim_full = {r.cartan_dim + 2 * r.positive_even, 2 * r.positive_odd};
  r.sdim_derived = {r.n + 2 * r.positive_even, 2 * r.positive_odd};
  r.sdim_simple = {r.rank + 2 * r.positive_even, 2 * r.positive_odd};
  try {
    r.maximal_root = maximal_root(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotUnique) throw;
  }
  return r;
}

std::string sdim_string(const Sdim& s) {
  return "(" + std::to_string(s.first) + "|" + std::to_string(s.second) + ")";
}

std::string report_text(const AlgebraReport& r) {
  std::ostringstream os;
  os << "rank " << r.rank << " of " << r.n << ", center " << r.center_dim << '\n';
  os << "sdim g       " << sdim_string(r.sdim_full) << '\n';
  os << "sdim g'      " << sdim_string(r.sdim_derived) << '\n';
  os << "sdim g'/c    " << sdim_string(r.sdim_simple) << '\n';
  os << "positive     " << r.positive_root_count << " (even " << r.positive_even << ", odd " << r.positive_odd
     << ")\n";
  os << "max height   " << r.max_height << '\n';
  if (r.maximal_root) {
    os << "maximal root " << root_string(r.maximal_root->coeffs) << " = " << r.maximal_root->expression << '\n';
    os << "weight       (";
    for (std::size_t k = 0; k < r.maximal_root->eigenvalues.size(); ++k)
      os << (k ? "," : "") << to_string(r.maximal_root->eigenvalues[k]);
    os << ")\n";
  }
  os << "roots\n";
  for (const auto& e : r.roots) {
    os << "  " << root_string(e.coeffs) << (e.parity ? " odd" : " even");
    if (e.multiplicity != 1) os << " x" << e.multiplicity;
    os << '\n';
  }
  return os.str();
}

std::string report_json(const AlgebraReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["rank"] = r.rank;
  j["cartan_dim"] = r.cartan_dim;
  j["center_dim"] = r.center_dim;
  j["sdim_full"] = {r.sdim_full.first, r.sdim_full.second};
  j["sdim_derived"] = {r.sdim_derived.first, r.sdim_derived.second};
  j["sdim_simple"] = {r.sdim_simple.first, r.sdim_simple.second};
  j["positive_root_count"] = r.positive_root_count;
  j["positive_even"] = r.positive_even;
  j["positive_odd"] = r.positive_odd;
  j["max_height"] = r.max_height;
  auto roots = nlohmann::ordered_json::array();
  for (const auto& e : r.roots)
    roots.push_back({{"coeffs", e.coeffs}, {"multiplicity", e.multiplicity}, {"parity", e.parity}});
  j["positive_roots"] = roots;
  if (r.maximal_root) {
    std::vector<std::string> ev;
    for (const auto& x : r.maximal_root->eigenvalues) ev.push_back(to_string(x));
    j["maximal_root"] = {{"coeffs", r.maximal_root->coeffs},
                         {"weight", ev},
                         {"expression", r.maximal_root->expression},
                         {"multiplicity", r.maximal_root->multiplicity}};
  } else {
    j["maximal_root"] = nullptr;
  }
  return j.dump(2);
}

template AlgebraReport report(const GradedAlgebra<PrimeField>&);
template AlgebraReport report(const GradedAlgebra<RationalField>&);
template MaximalRoot maximal_root(const GradedAlgebra<PrimeField>&);
template MaximalRoot maximal_root(const GradedAlgebra<RationalField>&);

}  // namespace modsuper
