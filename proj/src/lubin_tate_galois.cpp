#include "fgl/lubin_tate_galois.hpp"

namespace fgl {

RingPtr root_ring(const RingPtr& R) {
  RingPtr r = R;
  while (r->parent()) r = r->parent();
  return r;
}

GaloisUnit galois_unit(const LocalField& L, const Padic& kappa_L) {
  Padic k = kappa_L.lift_to(L.ring);
  if (!(k.valuation() == Valuation::exact(Rational(0)))) throw std::invalid_argument("kappa_L must be a unit");
  return {k, norm_and_trace(k, root_ring(L.ring)).first};
}

Padic random_unit(const RingPtr& R, std::mt19937_64& rng) {
  std::vector<mpz_class> c(R->degree());
  const unsigned long bound = 1000003;
  for (auto& x : c) x = static_cast<unsigned long>(rng() % bound);
  if (R->ord(c.data()) != 0) c[0] += 1;
  if (R->ord(c.data()) != 0) c[0] += 1;
  return Padic::from_coords(R, c);
}

GaloisUnit random_galois_unit(const LocalField& L, std::mt19937_64& rng) {
  return galois_unit(L, random_unit(L.ring, rng));
}

SymbolicPeriod omega0_symbol(const std::string& name) { return {make_symbol(name, 0, true), Rational(0)}; }

std::pair<Padic, Certificate> primitive_torsion(const LocalField& L, const TildeField& T, const Rational& digits) {
  const Padic& x = T.pi0;
  Padic v = L.pi * x + x.pow(L.q());
  Certificate c;
  c.name = "[pi](pi0) = 0";
  detail::record(c, v, digits, "[pi](pi0)");
  const Rational want(1, L.e() * (L.q() - 1));
  if (!(x.valuation() == Valuation::exact(want)))
    c.absorb(make_fail("ord pi0", {"pi0", "ord " + to_string(want), "ord " + x.valuation().str()}));
  return {x, c};
}

Epsilon0 epsilon0_series(const LocalField& L, const TildeField& T, int D, const Rational& digits,
                         const SymbolicPeriod& omega) {
  Epsilon0 E;
  E.F = fgl_special_lubin_tate(L, D);
  E.Ft = fgl_rescale(E.F, T.pi0, "pi0");
  E.Gt = fgl_rescale(fgl_multiplicative(T.ring, D), T.p0, "p0");
  E.omega = omega;
  E.p0 = T.p0;
  const PadicPoly proto(omega.symbol, Padic::zero(T.ring));
  const auto P = powers(E.Ft.log, D);
  E.series = Series<PadicPoly>(D, proto);
  for (int m = 1; m <= D; ++m) {
    if (!E.Gt.exp.nonzero(m)) continue;
    for (int n = m; n <= D; ++n) {
      if (!P[m].nonzero(n)) continue;
      E.series[n] += PadicPoly::monomial(omega.symbol, compact(E.Gt.exp[m] * P[m][n]), m);
    }
  }
  E.certificates.push_back(check_valuation("eps0 integral", E.series, Rational(0)));
  Certificate lin;
  lin.name = "eps0 linear coefficient = Omega0";
  Series<PadicPoly> t(D, proto);
  if (D >= 1) t[1] = PadicPoly::symbol(omega.symbol, Padic::zero(T.ring));
  for (int n = 0; n <= std::min(D, 1); ++n)
    detail::record(lin, E.series[n] - t[n], digits, detail::mono(n));
  E.certificates.push_back(lin);
  E.certificates.push_back(epsilon0_homomorphism_check(E, digits));
  return E;
}

Certificate epsilon0_homomorphism_check(const Epsilon0& E, const Rational& digits) {
  const int D = E.series.D();
  const auto lhs = compose_powers(E.series, powers(E.Ft.law, D));
  const auto rhs = Bivariate<PadicPoly>::from_x(E.series) + Bivariate<PadicPoly>::from_y(E.series) +
                   Bivariate<PadicPoly>::outer(E.series, E.series).scaled(E.p0);
  return check_equal("eps0 homomorphism", lhs, rhs, digits);
}

Series<PadicPoly> gm_tilde_endomorphism_apply(const Padic& p0, const Padic& c, const Series<PadicPoly>& S) {
  const int D = S.D();
  const RingPtr Z = root_ring(c.ring());
  std::vector<PadicPoly> f(D + 1, S.proto()), y(D + 1, S.proto());
  f[0] = y[0] = one_like(S.proto());
  for (int k = 1; k <= D; ++k)
    if (S.nonzero(k)) f[k] = S[k].scaled(p0);
  for (int n = 1; n <= D; ++n) {
    PadicPoly acc = S.proto();
    for (int k = 1; k <= n; ++k) {
      if (is_exact_zero(f[k]) || is_exact_zero(y[n - k])) continue;
      const Padic w = c * Padic(Z, k) - Padic(Z, n - k);
      acc += (f[k] * y[n - k]).scaled(w);
    }
    y[n] = acc.scaled(Padic(Z, n).inverse());
  }
  const Padic p0inv = p0.inverse();
  Series<PadicPoly> r(D, S.proto());
  for (int n = 1; n <= D; ++n)
    if (!is_exact_zero(y[n])) r[n] = compact(y[n].scaled(p0inv));
  return r;
}

Certificate equivariance_check(const Epsilon0& E, const GaloisUnit& sigma, const Rational& digits) {
  const int D = E.series.D();
  const auto inner = fgl_endomorphism(E.Ft, sigma.kappa_L).series;
  const auto A = compose_powers(E.series, powers(inner, D));
  const auto lhs = gm_tilde_endomorphism_apply(E.p0, sigma.kappa_Qp.inverse(), A);
  const Padic m = E.omega.multiplier(sigma);
  const auto rhs = E.series.map([&](const PadicPoly& c, int) { return c.scale_symbol(m); });
  return check_equal("eps0 equivariance", lhs, rhs, digits);
}

std::pair<Series<PadicPoly>, Certificate> dual_character(const FormalGroupLaw& F, const Rational& digits,
                                                         const std::string& symbol) {
  const int D = F.D();
  const RingPtr& R = scalar_ring(F.log.proto());
  auto sym = make_symbol(symbol);
  const PadicPoly proto(sym, Padic::zero(R));
  const auto P = powers(F.log, D);
  Series<PadicPoly> beta(D, proto);
  beta[0] = one_like(proto);
  Padic fact_inv(R, 1);
  for (int m = 1; m <= D; ++m) {
    fact_inv = fact_inv / Padic(R, m);
    for (int n = m; n <= D; ++n)
      if (P[m].nonzero(n)) beta[n] += PadicPoly::monomial(sym, compact(fact_inv * P[m][n]), m);
  }
  const auto lhs = compose_powers(beta, powers(F.law, D));
  const auto rhs = Bivariate<PadicPoly>::outer(beta, beta);
  return {beta, check_equal("beta(X +F Y) = beta(X) beta(Y)", lhs, rhs, digits)};
}

PeriodValuationRecord period_valuations(const LocalField& L) {
  PeriodValuationRecord r;
  r.ord_pi0 = Rational(1, L.e() * (L.q() - 1));
  r.ord_p0 = Rational(1, L.p() - 1);
  r.ord_Omega = r.ord_p0 - r.ord_pi0;
  r.ord_Omega0 = r.ord_pi0 - r.ord_p0 + r.ord_Omega;
  r.ord_literal_Omega0 = r.ord_p0 - r.ord_pi0 + r.ord_Omega;
  r.ord_different = different_valuation(L.ring).ord_p;
  r.ord_Omega_partial = r.ord_Omega - r.ord_different;
  return r;
}

FractionalIdealValuation tate_twist_valuation(const LocalField& L) {
  const auto r = period_valuations(L);
  return {"(pi0*D_L)^-1", -(r.ord_pi0 + r.ord_different)};
}

Rational torsion_valuation(const LocalField& L, int n) {
  long qn = 1;
  for (int i = 1; i < n; ++i) qn *= L.q();
  return Rational(1, L.e() * qn * (L.q() - 1));
}

nlohmann::json to_json(const PeriodValuationRecord& r) {
  return {{"ord_pi0", to_string(r.ord_pi0)},
          {"ord_p0", to_string(r.ord_p0)},
          {"ord_Omega", to_string(r.ord_Omega)},
          {"ord_Omega0", to_string(r.ord_Omega0)},
          {"ord_p0_over_pi0_times_Omega", to_string(r.ord_literal_Omega0)},
          {"ord_different", to_string(r.ord_different)},
          {"ord_Omega_partial", to_string(r.ord_Omega_partial)}};
}

}  // namespace fgl
