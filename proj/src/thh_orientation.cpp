#include "fgl/thh_orientation.hpp"

#include "fgl/chromatic.hpp"

namespace fgl {

namespace {

Series<PadicPoly> lift_series(const Series<Padic>& s, const PadicPoly& proto) {
  return s.map([&](const Padic& c, int) { return is_exact_zero(c) ? proto : PadicPoly::constant(proto.sym(), c); });
}

Bivariate<PadicPoly> lift_bivariate(const Bivariate<Padic>& s, const PadicPoly& proto) {
  return s.map([&](const Padic& c, int, int) {
    return is_exact_zero(c) ? proto : PadicPoly::constant(proto.sym(), c);
  });
}

Series<PadicPoly> times(const Series<PadicPoly>& s, const PadicPoly& x) {
  return s.map([&](const PadicPoly& c, int) { return c * x; });
}

}  // namespace

GradedRingModel thh_model(const TildeField& T) { return {T.ring, T.p0, make_symbol("gamma", 2, false)}; }

TraceRecord trace_record(const GradedRingModel& M) {
  return {M.beta(), "variant", M.p0.valuation().value()};
}

HopfCoordinate kappa_coproduct(const GradedRingModel& M, int D, const Rational& digits) {
  HopfCoordinate K;
  K.scale = M.beta();
  K.law = fgl_rescale(fgl_multiplicative(M.base, D), K.scale, "p0*gamma");
  K.law.base = M.base->label() + "[gamma]";

  Bivariate<PadicPoly> want(D, M.zero());
  const PadicPoly one = one_like(M.zero());
  if (D >= 1) want.at(1, 0) = want.at(0, 1) = one;
  if (D >= 2) want.at(1, 1) = K.scale;
  Certificate three = check_equal("Delta kappa = kappa1 + kappa2 + p0 gamma kappa1 kappa2", K.law.law, want, digits);
  const auto support = K.law.law.support();
  if (support.size() != want.support().size() && three.status != CertStatus::fail) {
    three.status = CertStatus::fail;
    three.first_failure = Failure{"support", std::to_string(want.support().size()) + " terms",
                                  std::to_string(support.size()) + " terms"};
  }
  K.certificates.push_back(three);
  K.certificates.push_back(check_commutativity(K.law, digits));
  Certificate assoc = check_associativity(K.law.law, digits);
  assoc.name = "co-associativity";
  K.certificates.push_back(assoc);
  K.certificates.push_back(check_homogeneous("Delta kappa homogeneous of degree -2", K.law.law, -2));

  const Padic z = Padic::zero(M.base);
  const auto at0 = K.law.law.map([&](const PadicPoly& c, int, int) { return c.evaluate(z); });
  Bivariate<Padic> additive(D, z);
  if (D >= 1) additive.at(1, 0) = additive.at(0, 1) = Padic(M.base, 1);
  K.certificates.push_back(check_equal("gamma = 0 gives the additive law", at0, additive, digits));
  return K;
}

ChernClass chern_class_series(const GradedRingModel& M, int D, const Rational& digits) {
  const auto Gm = fgl_multiplicative(M.base, D);
  const auto K = fgl_rescale(Gm, M.beta(), "p0*gamma");
  ChernClass out;
  out.c = K.log;
  out.kappa_exp = K.exp;

  Certificate lin;
  lin.name = "c linear coefficient = 1";
  if (D >= 1) detail::record(lin, out.c[1] - one_like(M.zero()), digits, detail::mono(1));
  out.certificates.push_back(lin);
  out.certificates.push_back(check_valuation("kappa = beta^{-1}(exp(beta x) - 1) integral", out.kappa_exp, Rational(0)));

  const auto eta = Series<PadicPoly>::variable(D, M.zero());
  const auto tau_minus_one = compose(Gm.exp, times(out.c, M.beta()));
  out.certificates.push_back(check_equal("tau(eta) = 1 + exp(beta c)", tau_minus_one, times(eta, M.beta()), digits));
  out.certificates.push_back(check_equal("kappa(c(eta)) = eta", compose(out.kappa_exp, out.c), eta, digits));
  return out;
}

Series<PadicPoly> eta_coordinate(const GradedRingModel& M, const std::vector<Padic>& a, int D) {
  Series<PadicPoly> eta = Series<PadicPoly>::variable(D, M.zero());
  for (std::size_t i = 1; i <= a.size() && static_cast<int>(i) + 1 <= D; ++i)
    if (!a[i - 1].is_exact_zero())
      eta[static_cast<int>(i) + 1] = PadicPoly::monomial(M.gamma, a[i - 1] * M.p0.pow(static_cast<long>(i)), i);
  return eta;
}

Certificate coordinate_independence_check(const GradedRingModel& M, const std::vector<Padic>& a, int D,
                                          const Rational& digits) {
  const auto K = kappa_coproduct(M, D, digits);
  const auto c0 = chern_class_series(M, D, digits).c;
  const auto eta = eta_coordinate(M, a, D);
  const auto eta_inv = reverse(eta);
  const auto c_a = compose(c0, eta_inv);
  const auto G_a = law_from_log(c_a, reverse(c_a));

  Certificate cert;
  cert.name = "independence of the coordinate change";
  cert.absorb(check_equal("c_a(eta(x)) = c(x)", compose(c_a, eta), c0, digits));
  cert.absorb(check_valuation("eta-law integral", G_a, Rational(0)));
  const auto transported = substitute(G_a, eta, eta);
  cert.absorb(check_equal("G_a(eta X, eta Y) = eta(Delta kappa)", transported, compose(eta, K.law.law), digits));
  cert.absorb(check_equal("three-term law recovered", compose(eta_inv, transported), K.law.law, digits));
  return cert;
}

Series<PadicPoly> GaloisAction::operator()(const Series<PadicPoly>& s) const {
  return s.map([&](const PadicPoly& c, int) { return (*this)(c); });
}

Bivariate<PadicPoly> GaloisAction::operator()(const Bivariate<PadicPoly>& s) const {
  return s.map([&](const PadicPoly& c, int, int) { return (*this)(c); });
}

GaloisAction galois_act(const GradedRingModel& M, const Padic& chi) {
  if (!(chi.valuation() == Valuation::exact(Rational(0)))) throw std::invalid_argument("chi must be a unit");
  return {chi.lift_to(M.base)};
}

Certificate galois_intertwining_check(const HopfCoordinate& K, const GaloisAction& g, const Rational& digits) {
  const auto& F = K.law.law;
  const auto lhs = g(F).scaled(g.chi);
  const auto rhs = F.map([&](const PadicPoly& c, int i, int j) { return c.scaled(g.chi.pow(i + j)); });
  Certificate cert = check_equal("chi act(Delta kappa)(X, Y) = Delta kappa(chi X, chi Y)", lhs, rhs, digits);
  cert.absorb(check_valuation("[chi] integral", fgl_endomorphism(K.law, g.chi).series, Rational(0)));
  return cert;
}

Certificate galois_multiplicativity_check(const HopfCoordinate& K, const ChernClass& c, const GaloisAction& g,
                                          const GaloisAction& h, const Rational& digits) {
  const GaloisAction gh{g.chi * h.chi};
  Certificate cert = check_equal("act(chi chi') on Delta kappa", gh(K.law.law), g(h(K.law.law)), digits);
  cert.absorb(check_equal("act(chi chi') on c", gh(c.c), g(h(c.c)), digits));
  cert.name = "galois action is multiplicative";
  return cert;
}

OrientationComposite orientation_composite(const LocalField& L, int D, const Rational& digits) {
  OrientationComposite O;
  O.tilde = build_tilde(L);
  const TildeField& T = O.tilde;
  O.d = L.different_generator();
  O.omega = {make_symbol("Omega_d", 0, true), Rational(0)};
  O.target = fgl_special_lubin_tate(L, D);
  const auto Ft = fgl_rescale(O.target, T.pi0, "pi0");
  const auto Gm = fgl_multiplicative(T.ring, D);
  const auto Gt = fgl_rescale(Gm, T.p0, "p0");
  O.kappa_d = fgl_rescale(Gm, compact(T.p0 * O.d), "p0*d");

  const PadicPoly proto(O.omega.symbol, Padic::zero(T.ring));
  Series<Padic> dT(D, Padic::zero(T.ring)), S(D, Padic::zero(T.ring));
  if (D >= 1) dT[1] = O.d;
  Padic dn(L.ring, 1);
  for (int n = 1; n <= D; ++n) {
    dn = dn * O.d;
    if (Gt.log.nonzero(n)) S[n] = compact(Gt.log[n] * dn);
  }
  const auto P = powers(S, D);
  Series<PadicPoly> e(D, proto);
  for (int m = 1; m <= D; ++m) {
    if (!Ft.exp.nonzero(m)) continue;
    for (int n = m; n <= D; ++n)
      if (P[m].nonzero(n)) e[n] += PadicPoly::monomial(O.omega.symbol, compact(Ft.exp[m] * P[m][n]), -m);
  }
  O.psi = compacted(e.scaled(T.pi0));

  O.stages.push_back({"T -> dT", lift_series(dT, proto)});
  O.stages.push_back({"log_G~m", lift_series(S, proto)});
  O.stages.push_back({"Omega_d^-1", S.map([&](const Padic& c, int) {
                        return is_exact_zero(c) ? proto : PadicPoly::monomial(O.omega.symbol, c, -1);
                      })});
  O.stages.push_back({"exp_L~", e});
  O.stages.push_back({"T -> pi0 T", O.psi});

  O.certificates.push_back(check_valuation("composite integral for a unit Omega_d", O.psi, Rational(0)));
  const auto lhs = compose_powers(O.psi, powers(O.kappa_d.law, D));
  const auto rhs = substitute(lift_bivariate(O.target.law, proto), O.psi, O.psi);
  O.certificates.push_back(check_equal("Psi(kappa_d(X, Y)) = LT_L(Psi(X), Psi(Y))", lhs, rhs, digits));
  return O;
}

GenusValue hirzebruch_genus(const FormalGroupLaw& F, int i) {
  if (i < 0 || i + 1 > F.D()) throw std::out_of_range("genus index beyond the truncation degree");
  const Padic v = F.log.nonzero(i + 1) ? F.log[i + 1].mul_int(i + 1) : Padic::zero(scalar_ring(F.log.proto()));
  return {i, v, v.valuation()};
}

nlohmann::json to_json(const GenusValue& g) {
  return {{"i", g.i}, {"value", scalar_to_json(g.value)}, {"ord", g.ord.str()}};
}

}  // namespace fgl
