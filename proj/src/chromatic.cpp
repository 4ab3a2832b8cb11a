#include "fgl/chromatic.hpp"

namespace fgl {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Padic reduce_scalar(const Padic& c, const RingPtr& top, const RingPtr& R1) {
  if (c.is_exact_zero()) return Padic::zero(R1);
  const Padic x = c.lift_to(top);
  if (x.valuation().ge(Rational(1)) == Tri::yes) return Padic::inexact_zero(R1, 1);
  if (x.valuation().ge(Rational(0)) != Tri::yes) throw std::domain_error("reduction of a non-integral coefficient");
  return x.with_rel(1).transfer(R1);
}

PadicPoly reduce_poly(const PadicPoly& c, const RingPtr& top, const RingPtr& R1) {
  PadicPoly r(c.sym(), Padic::zero(R1));
  for (const auto& [e, a] : c.terms()) {
    const Padic v = reduce_scalar(a, top, R1);
    if (!v.is_zero()) r += PadicPoly::monomial(c.sym(), v, e);
  }
  return r;
}

RingPtr reduction_ring(const PadicPoly& proto) { return scalar_ring(proto)->with_cap(1); }

void homogeneity_record(Certificate& cert, const PadicPoly& c, int tdeg, int degree, const std::string& where) {
  for (const auto& [a, x] : c.terms()) {
    if (x.is_zero()) continue;
    const int d = static_cast<int>(2 * a - 2 * tdeg);
    if (d != degree && cert.status != CertStatus::fail) {
      cert.status = CertStatus::fail;
      cert.first_failure = Failure{where + " u^" + std::to_string(a), "degree " + std::to_string(degree),
                                   "degree " + std::to_string(d)};
    }
  }
}

}  // namespace

SymbolPtr u_symbol() {
  static const SymbolPtr u = make_symbol("u", 2, false);
  return u;
}

Series<Padic> hazewinkel_log_coeffs(long p, int n, int D, int digits) {
  auto R = LocalRing::zp(p, working_cap(p, D, digits));
  const long q = ipow(p, n);
  Series<Padic> log(D, Padic::zero(R));
  if (D >= 1) log[1] = Padic(R, 1);
  Padic c(R, 1);
  for (long qk = q; qk <= D; qk *= q) {
    const Padic unit = Padic(R, 1) - Padic(R, p).pow(qk - 1);
    c = c / (unit * Padic(R, p));
    log[static_cast<int>(qk)] = c;
  }
  return log;
}

GradedSeries hazewinkel_log(long p, int n, int D, int digits) {
  const auto w = hazewinkel_log_coeffs(p, n, D, digits);
  const PadicPoly proto(u_symbol(), Padic::zero(w.proto().ring()));
  GradedSeries g;
  g.underlying = w.map([&](const Padic& c, int k) {
    return is_exact_zero(c) ? proto : PadicPoly::monomial(u_symbol(), c, k);
  });
  g.homogeneous_degree = 0;
  return g;
}

GradedLaw kn_group_law(long p, int n, int D, int digits) {
  FormalGroupLaw G;
  G.log = compacted(hazewinkel_log_coeffs(p, n, D, digits));
  G.exp = compacted(reverse(G.log));
  G.law = law_from_log(G.log, G.exp);
  const RingPtr& R = scalar_ring(G.log.proto());
  GradedLaw K = fgl_rescale(G, PadicPoly::symbol(u_symbol(), Padic::zero(R)), "u");
  K.provenance = Provenance::kn_chromatic;
  K.base = "Z_" + std::to_string(p) + "[u]";
  K.parent.clear();
  const Rational prec(digits);
  K.certificates = axiom_certificates(K, prec);
  K.certificates.front().name = "law integral over Z_p[u]";
  K.certificates.push_back(check_homogeneous("law homogeneous of degree -2", K.law, -2));
  for (const auto& c : K.certificates)
    if (c.name == "law integral over Z_p[u]" || c.status == CertStatus::fail) require(c);
  return K;
}

GradedLaw kl_group_law(const LocalField& L, int D) {
  const auto F = fgl_special_lubin_tate(L, D);
  GradedLaw K = fgl_rescale(F, PadicPoly::symbol(u_symbol(), Padic::zero(L.ring)), "u");
  K.base = L.label() + "[u]";
  K.certificates.push_back(check_valuation("law integral over O_L[u]", K.law, Rational(0)));
  K.certificates.push_back(check_homogeneous("law homogeneous of degree -2", K.law, -2));
  return K;
}

Certificate check_homogeneous(std::string name, const Series<PadicPoly>& s, int degree) {
  Certificate cert;
  cert.name = std::move(name);
  for (int b = 0; b <= s.D(); ++b)
    if (s.nonzero(b)) homogeneity_record(cert, s[b], b, degree, detail::mono(b));
  return cert;
}

Certificate check_homogeneous(std::string name, const Bivariate<PadicPoly>& s, int degree) {
  Certificate cert;
  cert.name = std::move(name);
  for (const auto& e : s.support()) homogeneity_record(cert, s.at(e.i, e.j), e.i + e.j, degree, detail::mono(e.i, e.j));
  return cert;
}

Series<PadicPoly> reduce_mod_p(const Series<PadicPoly>& s) { return reduce_mod_p(s, reduction_ring(s.proto())); }

Series<PadicPoly> reduce_mod_p(const Series<PadicPoly>& s, const RingPtr& R1) {
  const RingPtr top = scalar_ring(s.proto());
  Series<PadicPoly> r(s.D(), PadicPoly(s.proto().sym(), Padic::zero(R1)));
  for (int n = 0; n <= s.D(); ++n)
    if (s.nonzero(n)) r[n] = reduce_poly(s[n], top, R1);
  return r;
}

Bivariate<PadicPoly> reduce_mod_p(const Bivariate<PadicPoly>& s) {
  return reduce_mod_p(s, reduction_ring(s.proto()));
}

Bivariate<PadicPoly> reduce_mod_p(const Bivariate<PadicPoly>& s, const RingPtr& R1) {
  const RingPtr top = scalar_ring(s.proto());
  Bivariate<PadicPoly> r(s.D(), PadicPoly(s.proto().sym(), Padic::zero(R1)));
  for (const auto& e : s.support()) r.at(e.i, e.j) = reduce_poly(s.at(e.i, e.j), top, R1);
  return r;
}

KnPSeries kn_p_series(const GradedLaw& F, long p, int n, const Rational& digits) {
  const int D = F.D();
  const long q = ipow(p, n);
  const RingPtr& R = scalar_ring(F.law.proto());
  const PadicPoly proto = F.law.proto();
  KnPSeries out;
  const auto ps = fgl_endomorphism(F, Padic(R, p)).series;
  out.integral = {ps, -2, -2};

  Series<PadicPoly> pT(D, proto), frob(D, proto);
  pT[1] = PadicPoly::constant(u_symbol(), Padic(R, p));
  if (q <= D) frob[static_cast<int>(q)] = PadicPoly::monomial(u_symbol(), Padic(R, 1), q - 1);
  out.certificates.push_back(check_equal("[p] = pT +F u^{q-1}T^q", ps, formal_sum(F.law, pT, frob), digits));

  Certificate gap;
  gap.name = "[p] - pT = O(T^q)";
  const auto diff = ps - pT;
  for (int k = 0; k < std::min<long>(q, D + 1); ++k)
    if (diff.nonzero(k)) detail::record(gap, diff[k], digits, detail::mono(k));
  out.certificates.push_back(gap);
  out.certificates.push_back(check_equal("[p] = u^{q-1}T^q mod p", ps, frob, Rational(1)));
  out.certificates.push_back(check_homogeneous("[p] homogeneous of degree -2", ps, -2));

  const RingPtr R1 = reduction_ring(proto);
  out.mod_p = {reduce_mod_p(ps, R1), -2, -2};
  const auto lawp = reduce_mod_p(F.law, R1);
  const auto T = Series<PadicPoly>::variable(D, lawp.proto());
  out.iterated = T;
  for (long k = 2; k <= p; ++k) out.iterated = formal_sum(lawp, out.iterated, T);
  out.certificates.push_back(check_equal("[p] mod p = p-fold sum over F_p[u]", out.mod_p.underlying, out.iterated,
                                         Rational(1)));
  return out;
}

ArakiNote araki_shape_note() {
  return {"k(n) as a specialization of the Araki BP law",
          {"BP: [p](z) is the BP-sum of v_i z^{p^i} with v_0 = p in Araki's generators; setting v_i = 0 for i "
           "other than 0 and n and v_n = u^{q-1} gives the k(n) law, whose logarithm is hazewinkel_log, so "
           "[p](T) = pT +F u^{q-1}T^q holds exactly over Z_p[u].",
           "k(L_0): tensoring with W(F_q) changes scalars only; kl_group_law builds the analogous graded law "
           "from the Lubin-Tate law of any shipped field.",
           "K(n): reducing the k(n) law mod p gives [p](T) = u^{q-1}T^q over F_p[u], checked against the "
           "p-fold sum in the reduced law."}};
}

nlohmann::json to_json(const GradedSeries& s) {
  nlohmann::json j = series_to_json(s.underlying);
  j["variable_degree"] = s.variable_degree;
  j["homogeneous_degree"] = s.homogeneous_degree ? nlohmann::json(*s.homogeneous_degree) : nlohmann::json("mixed");
  return j;
}

nlohmann::json to_json(const ArakiNote& a) { return {{"title", a.title}, {"lines", a.lines}}; }

}  // namespace fgl
