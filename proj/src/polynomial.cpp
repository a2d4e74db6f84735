#include "bform/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace bform {

namespace {

std::string mono_str(Monomial m) {
  std::string out;
  for (int v = 0; v < kMaxVars; ++v) {
    int e = mono_exp(m, v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const Poly& p, int) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> sorted(p.terms().begin(), p.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = mono_total_degree(a.first), db = mono_total_degree(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    std::string coef = to_string(c);
    bool composite = coef.find_first_of("+-", 1) != std::string::npos ||
                     (!c.is_real() && c.re != 0);
    std::string term;
    if (m == 0)
      term = composite ? "(" + coef + ")" : coef;
    else if (coef == "1")
      term = mono_str(m);
    else if (coef == "-1")
      term = "-" + mono_str(m);
    else
      term = (composite ? "(" + coef + ")" : coef) + "*" + mono_str(m);
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::string to_string(const PolyScalar& p, int nvars) {
  if (p.is_polynomial()) {
    if (p.den().constant_value() == Scalar(1)) return to_string(p.num(), nvars);
    Poly scaled = p.num().scaled(p.den().constant_value().inv());
    return to_string(scaled, nvars);
  }
  return "(" + to_string(p.num(), nvars) + ")/(" + to_string(p.den(), nvars) + ")";
}

}  // namespace bform
