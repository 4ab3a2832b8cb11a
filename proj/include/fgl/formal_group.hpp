#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgl/certificate.hpp"
#include "fgl/field.hpp"

namespace fgl {

enum class Provenance { multiplicative, lubin_tate_special, honda, rescaled, kn_chromatic };
std::string to_string(Provenance p);

/// A one-dimensional formal group law F(X,Y) with its logarithm and exponential.
template <class C>
struct FormalGroup {
  Bivariate<C> law;
  Series<C> log;
  Series<C> exp;
  Provenance provenance = Provenance::multiplicative;
  std::string base;    // label of the coefficient ring
  std::string parent;  // rescaled laws: "<parent> by <scale>"
  std::optional<Padic> uniformizer;
  std::vector<Certificate> certificates;

  int D() const { return law.D(); }
};
using FormalGroupLaw = FormalGroup<Padic>;
using GradedLaw = FormalGroup<PadicPoly>;

template <class C>
struct EndomorphismSeries {
  Series<C> series;
  Padic scalar;
};

// Relative precision cap giving `digits` usable digits after the losses of
// degree-D log/exp manipulations.
int working_cap(long p, int D, int digits);

inline Padic compact(const Padic& x) { return x.compact(); }
template <class C>
SymPoly<C> compact(const SymPoly<C>& x) {
  SymPoly<C> r = zero_like(x);
  for (const auto& [e, c] : x.terms()) r += SymPoly<C>::monomial(x.sym(), compact(c), e);
  return r;
}
template <class C>
Series<C> compacted(const Series<C>& s) {
  return s.map([](const C& c, int) { return compact(c); });
}
template <class C>
Bivariate<C> compacted(const Bivariate<C>& s) {
  return s.map([](const C& c, int, int) { return compact(c); });
}

// c * s for a coefficient c and a scale s, in the larger of the two types.
inline Padic scale_coeff(const Padic& c, const Padic& s) { return c * s; }
template <class C>
SymPoly<C> scale_coeff(const Padic& c, const SymPoly<C>& s) {
  return s.scaled(c);
}
template <class C>
SymPoly<C> scale_coeff(const SymPoly<C>& c, const SymPoly<C>& s) {
  return c * s;
}
template <class C>
SymPoly<C> scale_coeff(const SymPoly<C>& c, const Padic& s) {
  return c.scaled(s);
}

inline const RingPtr& scalar_ring(const Padic& x) { return x.ring(); }
template <class C>
const RingPtr& scalar_ring(const SymPoly<C>& x) {
  return scalar_ring(x.base_zero());
}

// ------------------------------------------------------------ construction

/// F(X,Y) = exp(log X + log Y) expanded as sum_{k,l} e_{k+l} C(k+l,k) log^k(X) log^l(Y).
template <class C>
Bivariate<C> law_from_log(const Series<C>& log, const Series<C>& exp) {
  const int D = log.D();
  const auto P = powers(log, D);
  const RingPtr& R = scalar_ring(log.proto());
  Bivariate<C> F(D, log.proto());
  mpz_class binom;
  for (int m = 1; m <= D; ++m) {
    if (!exp.nonzero(m)) continue;
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
      const C s = mul_scalar(exp[m], Padic(R, binom));
      for (int i = k; i <= D; ++i) {
        if (!P[k].nonzero(i)) continue;
        const C si = s * P[k][i];
        for (int j = l; i + j <= D; ++j)
          if (P[l].nonzero(j)) F.at(i, j) = F.at(i, j) + si * P[l][j];
      }
    }
  }
  return compacted(F);
}

/// [a](T) = exp(a log T).
template <class C>
EndomorphismSeries<C> fgl_endomorphism(const FormalGroup<C>& F, const Padic& a) {
  return {compacted(compose(F.exp, F.log.scaled(a))), a};
}

/// G(X,Y) = s^{-1} F(sX, sY), with log and exp rescaled the same way.
template <class C, class S>
auto fgl_rescale(const FormalGroup<C>& F, const S& s, const std::string& s_label)
    -> FormalGroup<decltype(scale_coeff(std::declval<C>(), std::declval<S>()))> {
  using R = decltype(scale_coeff(std::declval<C>(), std::declval<S>()));
  const int D = F.D();
  std::vector<S> sp{one_like(s)};
  for (int k = 1; k <= D; ++k) sp.push_back(compact(sp.back() * s));
  auto scale = [&](const C& c, int k) -> R {
    if (is_exact_zero(c)) return zero_like(scale_coeff(c, sp[0]));
    return compact(scale_coeff(c, sp[static_cast<std::size_t>(k)]));
  };
  FormalGroup<R> G;
  G.law = F.law.map([&](const C& c, int i, int j) { return i + j == 0 ? scale(c, 0) : scale(c, i + j - 1); });
  G.log = F.log.map([&](const C& c, int n) { return scale(c, n == 0 ? 0 : n - 1); });
  G.exp = F.exp.map([&](const C& c, int n) { return scale(c, n == 0 ? 0 : n - 1); });
  G.provenance = Provenance::rescaled;
  G.base = F.base + "(" + s_label + ")";
  G.parent = to_string(F.provenance) + " by " + s_label;
  G.uniformizer = F.uniformizer;
  return G;
}

// ------------------------------------------------------------ certificates

template <class C>
Certificate check_unit_axiom(const FormalGroup<C>& F, const Rational& digits) {
  Series<C> x0(F.D(), F.law.proto()), y0(F.D(), F.law.proto());
  for (int i = 0; i <= F.D(); ++i) {
    x0[i] = F.law.at(i, 0);
    y0[i] = F.law.at(0, i);
  }
  Certificate c = check_equal("unit F(X,0) = X", x0, Series<C>::variable(F.D(), F.law.proto()), digits);
  c.absorb(check_equal("unit F(0,Y) = Y", y0, Series<C>::variable(F.D(), F.law.proto()), digits));
  c.name = "unit";
  return c;
}

template <class C>
Certificate check_commutativity(const FormalGroup<C>& F, const Rational& digits) {
  return check_equal("commutativity", F.law, F.law.swapped(), digits);
}

/// F(F(X,Y),Z) = F(X,F(Y,Z)) through total degree D; coefficients of X^a Y^b Z^c
/// are sum_i F_{i,c} [F^i]_{a,b} and sum_j F_{a,j} [F^j]_{b,c}.
template <class C>
Certificate check_associativity(const Bivariate<C>& F, const Rational& digits) {
  const int D = F.D();
  const auto P = powers(F, D);
  Certificate cert;
  cert.name = "associativity";
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b)
      for (int c = 0; a + b + c <= D; ++c) {
        C lhs = zero_like(F.proto()), rhs = zero_like(F.proto());
        for (int i = 1; i <= a + b; ++i)
          if (F.nonzero(i, c) && P[i].nonzero(a, b)) lhs = lhs + F.at(i, c) * P[i].at(a, b);
        if (a + b == 0 && F.nonzero(0, c)) lhs = lhs + F.at(0, c);
        for (int j = 1; j <= b + c; ++j)
          if (F.nonzero(a, j) && P[j].nonzero(b, c)) rhs = rhs + F.at(a, j) * P[j].at(b, c);
        if (b + c == 0 && F.nonzero(a, 0)) rhs = rhs + F.at(a, 0);
        const std::string where = "X^" + std::to_string(a) + "Y^" + std::to_string(b) + "Z^" + std::to_string(c);
        const CertStatus before = cert.status;
        detail::record(cert, lhs - rhs, digits, where);
        if (cert.status != before) {
          cert.first_failure->expected = scalar_str(rhs);
          cert.first_failure->got = scalar_str(lhs);
        }
        if (cert.status == CertStatus::fail) return cert;
      }
  return cert;
}

template <class C>
Certificate check_log_exp_inverse(const FormalGroup<C>& F, const Rational& digits) {
  const auto T = Series<C>::variable(F.D(), F.log.proto());
  Certificate c = check_equal("exp(log T) = T", compose(F.exp, F.log), T, digits);
  c.absorb(check_equal("log(exp T) = T", compose(F.log, F.exp), T, digits));
  c.name = "log/exp inverse";
  return c;
}

template <class C>
Certificate check_law_integral(const FormalGroup<C>& F) {
  return check_valuation("law integral", F.law, Rational(0));
}

/// Unit, commutativity, associativity, log/exp inversion, integrality.
template <class C>
std::vector<Certificate> axiom_certificates(const FormalGroup<C>& F, const Rational& digits) {
  return {check_law_integral(F), check_unit_axiom(F, digits), check_commutativity(F, digits),
          check_associativity(F.law, digits), check_log_exp_inverse(F, digits)};
}

/// F(a(T), b(T)) for series a, b without constant term.
template <class C>
Series<C> formal_sum(const Bivariate<C>& F, const Series<C>& a, const Series<C>& b) {
  const auto Pa = powers(a, F.D()), Pb = powers(b, F.D());
  Series<C> r(F.D(), F.proto());
  for (const auto& e : F.support())
    r += (Pa[static_cast<std::size_t>(e.i)] * Pb[static_cast<std::size_t>(e.j)]).scaled(F.at(e.i, e.j));
  return r;
}

/// [a+b] = F([a],[b]) and [ab] = [a]∘[b].
template <class C>
Certificate check_endomorphism_laws(const FormalGroup<C>& F, const Padic& a, const Padic& b, const Rational& digits) {
  const auto ea = fgl_endomorphism(F, a).series, eb = fgl_endomorphism(F, b).series;
  const auto sum = fgl_endomorphism(F, a + b).series, prod = fgl_endomorphism(F, a * b).series;
  Certificate c = check_equal("[a+b] = [a] +F [b]", sum, formal_sum(F.law, ea, eb), digits);
  c.absorb(check_equal("[ab] = [a]o[b]", prod, compose(ea, eb), digits));
  c.name = "endomorphism ring laws";
  return c;
}

/// [p]_F ≡ 0 modulo an element of valuation `ord_modulus`.
template <class C>
Certificate additive_type_check(const FormalGroup<C>& F, const Rational& ord_modulus, const std::string& modulus_label) {
  const auto ps = fgl_endomorphism(F, Padic(scalar_ring(F.law.proto()), scalar_ring(F.law.proto())->prime()));
  return check_valuation("[p] = 0 mod " + modulus_label, ps.series, ord_modulus);
}

/// phi = exp_G(log_F), certified integral and intertwining F with G.
template <class C>
std::pair<Series<C>, Certificate> fgl_iso(const FormalGroup<C>& F, const FormalGroup<C>& G, const Rational& digits) {
  Series<C> phi = compacted(compose(G.exp, F.log));
  Certificate c = check_valuation("iso integral", phi, Rational(0));
  const auto lhs = compose(phi, F.law);
  const auto rhs = substitute(G.law, phi, phi);
  c.absorb(check_equal("phi(X +F Y) = phi(X) +G phi(Y)", lhs, rhs, digits));
  c.name = "iso";
  return {phi, c};
}

// ------------------------------------------------------------ concrete laws

/// X + Y + XY with log(1+T) and e^T - 1.
FormalGroupLaw fgl_multiplicative(const RingPtr& ring, int D);

/// Lubin–Tate law whose [pi]-series is `pi_series`; the log solves
/// lambda([pi](T)) = pi lambda(T) degree by degree.
FormalGroupLaw fgl_from_p_series(const LocalField& L, const Series<Padic>& pi_series);

/// pi T + T^q.
Series<Padic> special_pi_series(const LocalField& L, int D);

/// The special Lubin–Tate law of L.
FormalGroupLaw fgl_special_lubin_tate(const LocalField& L, int D);

/// The law of sum_n pi^{-n} T^{q^n}.
FormalGroupLaw fgl_honda(const LocalField& L, int D);

/// The multiplicative law rescaled by p_0, over the ring of p0.
FormalGroupLaw fgl_gm_tilde(const Padic& p0, int D);

/// E([pi]) = 0 evaluated in End(F): the F-sum of [c_i]∘[pi]^{∘i}.
Certificate fgl_eisenstein_relation_check(const FormalGroupLaw& F, const LocalField& L, const Rational& digits);

/// For F~ = rescale(special LT, pi_0): [pi]_{F~}(T) = pi (T - T^q) and it
/// vanishes modulo pi_0.
Certificate tilde_pi_series_check(const FormalGroupLaw& Ft, const LocalField& L, const Rational& digits);

/// [pi](T) ≡ T^q modulo pi for the Honda law.
Certificate honda_congruence_check(const FormalGroupLaw& H, const LocalField& L);

nlohmann::json series_to_json(const Series<Padic>& s);
nlohmann::json series_to_json(const Series<PadicPoly>& s);
nlohmann::json bivariate_to_json(const Bivariate<Padic>& s);
nlohmann::json bivariate_to_json(const Bivariate<PadicPoly>& s);
std::string scalar_to_text(const Padic& x);
std::string scalar_to_text(const PadicPoly& x);
std::string series_to_text(const Series<Padic>& s);
std::string series_to_text(const Series<PadicPoly>& s);
nlohmann::json to_json(const FormalGroupLaw& F);
nlohmann::json to_json(const FormalGroup<PadicPoly>& F);

}  // namespace fgl
