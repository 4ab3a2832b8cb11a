#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgl/formal_group.hpp"

namespace fgl {

/// A series in T (degree -2) over Q_p[u] (|u| = 2).
struct GradedSeries {
  Series<PadicPoly> underlying;
  int variable_degree = -2;
  std::optional<int> homogeneous_degree;
};

SymbolPtr u_symbol();

/// Coefficients of log_{k(n)} in the variable w = uT: w + sum_k prod_{i<=k} (1 - p^{q^i-1})^{-1} p^{-k} w^{q^k}.
Series<Padic> hazewinkel_log_coeffs(long p, int n, int D, int digits = 64);

/// u * log_{k(n)}(T) as a graded series, homogeneous of degree 0.
GradedSeries hazewinkel_log(long p, int n, int D, int digits = 64);

/// T0 +_{k(n)} T1 = u^{-1} exp(log(uT0) + log(uT1)), certified integral and homogeneous.
GradedLaw kn_group_law(long p, int n, int D, int digits = 64);

/// The Lubin-Tate law of L conjugated by T -> uT, over O_L[u].
GradedLaw kl_group_law(const LocalField& L, int D);

// Every monomial u^a T^b has 2a - 2b = degree.
Certificate check_homogeneous(std::string name, const Series<PadicPoly>& s, int degree);
// Every monomial u^a X^b Y^c has 2a - 2(b + c) = degree.
Certificate check_homogeneous(std::string name, const Bivariate<PadicPoly>& s, int degree);

/// Reduction of the coefficients modulo p, into R1 (a cap-1 copy of the coefficient ring).
Series<PadicPoly> reduce_mod_p(const Series<PadicPoly>& s);
Series<PadicPoly> reduce_mod_p(const Series<PadicPoly>& s, const RingPtr& R1);
Bivariate<PadicPoly> reduce_mod_p(const Bivariate<PadicPoly>& s);
Bivariate<PadicPoly> reduce_mod_p(const Bivariate<PadicPoly>& s, const RingPtr& R1);

struct KnPSeries {
  GradedSeries integral;
  GradedSeries mod_p;
  Series<PadicPoly> iterated;  // [p] of the reduced law, by p-fold iteration over F_p[u]
  std::vector<Certificate> certificates;
};

/// [p]_{k(n)}, its reduction, and the checks [p] = pT +_F u^{q-1}T^q, [p] = u^{q-1}T^q mod p,
/// [p] - pT = O(T^q), and agreement with the iterated reduced law.
KnPSeries kn_p_series(const GradedLaw& F, long p, int n, const Rational& digits);

struct ArakiNote {
  std::string title;
  std::vector<std::string> lines;
};
ArakiNote araki_shape_note();

nlohmann::json to_json(const GradedSeries& s);
nlohmann::json to_json(const ArakiNote& a);

}  // namespace fgl
