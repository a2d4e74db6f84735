#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bform/polyform.hpp"

namespace bform {

enum class Model { Riemannian, Kahler, Symplectic };

Model model_from_string(const std::string& name);
std::string to_string(Model m);

/// Graded operator on polynomial forms over a flat model. Immutable;
/// composition and brackets build new operators.
struct GradedOperator {
  std::string name;
  int parity = 0;  // 0 even, 1 odd
  Model model = Model::Riemannian;
  int dim = 0;  // n (= 2m for kahler/symplectic)
  std::function<PolyForm(const PolyForm&)> action;

  PolyForm operator()(const PolyForm& a) const { return action(a); }
};

/// Flat-model realizations. Names: d, d*, del, delbar, del*, delbar*,
/// Delta, Delta_del, Delta_delbar, QL, QR, G1, G1*, G2, G2*, L, L*, Lambda,
/// Pi, dt* ([Lambda,d]). Kahler-only names require the kahler model;
/// L/Lambda/Pi/dt* require kahler or symplectic.
GradedOperator build_operator(const std::string& name, Model model, int dim);

/// A compose B (apply B first).
GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
GradedOperator scale(const Scalar& s, const GradedOperator& a);
GradedOperator add(const GradedOperator& a, const GradedOperator& b);

/// [A,B] = A B - (-1)^{|A||B|} B A.
GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b);

/// One identity [A,B] = sum_k c_k R_k over named operators.
struct Identity {
  std::string label;
  std::string a, b;
  std::vector<std::pair<Scalar, std::string>> rhs;
};

struct CommutatorTable {
  std::string name;
  Model model;
  std::vector<Identity> identities;
};

CommutatorTable table_n11();         // [QL,QL]=[QR,QR]=2Delta, [QL,QR]=0
CommutatorTable table_sl2();         // [Pi,L]=2L, [Pi,L*]=-2L*, [L,L*]=Pi
CommutatorTable table_kahler_ids();  // [Pi,G_a], [L,G_a], [L*,G_a]
CommutatorTable table_n22();         // [G_a,G_b*] = delta_ab Delta_del etc.
CommutatorTable table_symplectic();  // spin rep of sl(2) on (d, dt*)

/// Applies every identity to every monomial x^a dx_I with |a| <= degree
/// and requires exact equality; failing monomials are reported.
StructureReport verify_table(const CommutatorTable& table, int dim, int degree);

/// All tables that make sense for the model, in display order.
std::vector<CommutatorTable> tables_for_model(Model model);

}  // namespace bform
