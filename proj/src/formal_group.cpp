#include "fgl/formal_group.hpp"

#include <cmath>

namespace fgl {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::multiplicative:
      return "multiplicative";
    case Provenance::lubin_tate_special:
      return "lubin_tate_special";
    case Provenance::honda:
      return "honda";
    case Provenance::rescaled:
      return "rescaled";
    case Provenance::kn_chromatic:
      return "kn_chromatic";
  }
  return "unknown";
}

int working_cap(long p, int D, int digits) {
  return digits + static_cast<int>(std::ceil(1.5 * D / static_cast<double>(p - 1))) + 20;
}

FormalGroupLaw fgl_multiplicative(const RingPtr& ring, int D) {
  FormalGroupLaw F;
  const Padic one(ring, 1);
  F.law = Bivariate<Padic>(D, Padic::zero(ring));
  if (D >= 1) F.law.at(1, 0) = F.law.at(0, 1) = one;
  if (D >= 2) F.law.at(1, 1) = one;
  F.log = Series<Padic>(D, one);
  F.exp = Series<Padic>(D, one);
  Padic fact_inv = one;
  for (int n = 1; n <= D; ++n) {
    F.log[n] = Padic(ring, n % 2 ? 1 : -1) / Padic(ring, n);
    fact_inv = fact_inv / Padic(ring, n);
    F.exp[n] = fact_inv;
  }
  F.provenance = Provenance::multiplicative;
  F.base = ring->label().empty() ? "Z_" + std::to_string(ring->prime()) : ring->label();
  return F;
}

Series<Padic> special_pi_series(const LocalField& L, int D) {
  Series<Padic> s(D, Padic::zero(L.ring));
  if (D >= 1) s[1] = L.pi;
  if (L.q() <= D) s[static_cast<int>(L.q())] = Padic(L.ring, 1);
  return s;
}

namespace {

void validate_pi_series(const LocalField& L, const Series<Padic>& s) {
  const int D = s.D();
  const long q = L.q();
  if (q > D) throw std::invalid_argument("truncation degree must reach q = " + std::to_string(q));
  if (s.nonzero(0) && !s[0].is_zero()) throw std::invalid_argument("[pi]-series has a constant term");
  if (!s.nonzero(1) || !(s[1] - L.pi).is_zero())
    throw std::invalid_argument("[pi]-series must be congruent to pi T modulo degree 2");
  const Rational m(1, L.e());
  for (int n = 2; n <= D; ++n) {
    const Padic& c = s[n];
    if (n == q) {
      if (!c.valuation().is_exact() || !(c.valuation().value() == Rational(0)) ||
          c.residue() != L.ring->residue_field().one())
        throw std::invalid_argument("[pi]-series must have T^q coefficient congruent to 1");
    } else if (s.nonzero(n) && c.valuation().ge(m) != Tri::yes) {
      throw std::invalid_argument("[pi]-series coefficient at T^" + std::to_string(n) +
                                  " is not in the maximal ideal");
    }
  }
}

FormalGroupLaw finish_from_log(Series<Padic> log, Provenance prov, const LocalField& L) {
  FormalGroupLaw F;
  F.log = compacted(log);
  F.exp = compacted(reverse(F.log));
  F.law = law_from_log(F.log, F.exp);
  F.provenance = prov;
  F.base = L.label();
  F.uniformizer = L.pi;
  F.certificates.push_back(check_law_integral(F));
  require(F.certificates.back());
  return F;
}

}  // namespace

FormalGroupLaw fgl_from_p_series(const LocalField& L, const Series<Padic>& pi_series) {
  validate_pi_series(L, pi_series);
  const int D = pi_series.D();
  const auto P = powers(pi_series, D);
  Series<Padic> log(D, Padic::zero(L.ring));
  log[1] = Padic(L.ring, 1);
  for (int n = 2; n <= D; ++n) {
    Padic acc = Padic::zero(L.ring);
    for (int k = 1; k < n; ++k)
      if (log.nonzero(k) && P[k].nonzero(n)) acc += log[k] * P[k][n];
    if (acc.is_exact_zero()) continue;
    log[n] = acc / (L.pi - L.pi.pow(n));
  }
  return finish_from_log(std::move(log), Provenance::lubin_tate_special, L);
}

FormalGroupLaw fgl_special_lubin_tate(const LocalField& L, int D) {
  return fgl_from_p_series(L, special_pi_series(L, D));
}

FormalGroupLaw fgl_honda(const LocalField& L, int D) {
  Series<Padic> log(D, Padic::zero(L.ring));
  Padic pinv = L.pi.inverse();
  Padic c = Padic(L.ring, 1);
  for (long qn = 1; qn <= D; qn *= L.q()) {
    log[static_cast<int>(qn)] = c;
    c = c * pinv;
  }
  FormalGroupLaw F = finish_from_log(std::move(log), Provenance::honda, L);
  F.certificates.push_back(honda_congruence_check(F, L));
  return F;
}

FormalGroupLaw fgl_gm_tilde(const Padic& p0, int D) {
  FormalGroupLaw G = fgl_rescale(fgl_multiplicative(p0.ring(), D), p0, "p0");
  G.base = p0.ring()->label();
  return G;
}

Certificate fgl_eisenstein_relation_check(const FormalGroupLaw& F, const LocalField& L, const Rational& digits) {
  const int D = F.D();
  const auto pi_end = fgl_endomorphism(F, L.pi).series;
  std::vector<Padic> coeffs = L.eisenstein;
  coeffs.push_back(Padic(L.W, 1));
  Series<Padic> iter = Series<Padic>::variable(D, Padic::zero(L.ring));
  Series<Padic> total(D, Padic::zero(L.ring));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Series<Padic> term = compose(fgl_endomorphism(F, coeffs[i]).series, iter);
    total = i == 0 ? term : formal_sum(F.law, total, term);
    iter = compose(pi_end, iter);
  }
  Certificate c = check_valuation("E([pi]) = 0", total, digits);
  c.note = "F-sum of [c_i] o [pi]^i over the Eisenstein coefficients";
  return c;
}

Certificate tilde_pi_series_check(const FormalGroupLaw& Ft, const LocalField& L, const Rational& digits) {
  const int D = Ft.D();
  const auto ps = fgl_endomorphism(Ft, L.pi).series;
  Series<Padic> expect(D, Padic::zero(L.ring));
  expect[1] = L.pi;
  if (L.q() <= D) expect[static_cast<int>(L.q())] = -L.pi;
  Certificate c = check_equal("[pi] = pi (T - T^q)", ps, expect, digits);
  c.absorb(check_valuation("[pi] = 0 mod pi0", ps, Rational(1, L.e() * (L.q() - 1))));
  c.name = "[pi] on the rescaled law";
  return c;
}

Certificate honda_congruence_check(const FormalGroupLaw& H, const LocalField& L) {
  auto ps = fgl_endomorphism(H, L.pi).series;
  if (L.q() <= H.D()) ps[static_cast<int>(L.q())] -= Padic(L.ring, 1);
  Certificate c = check_valuation("[pi] = T^q mod pi", ps, Rational(1, L.e()));
  return c;
}

// ------------------------------------------------------------ rendering

namespace {

RingPtr top_ring(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b) return a;
  return b->depth() > a->depth() ? b : a;
}

RingPtr top_ring_of(const Padic& x) { return x.ring(); }
RingPtr top_ring_of(const PadicPoly& x) {
  RingPtr r = x.base_zero().ring();
  for (const auto& t : x.terms()) r = top_ring(r, t.second.ring());
  return r;
}

template <class C>
RingPtr series_ring(const std::vector<C>& cs) {
  RingPtr r;
  for (const auto& c : cs) r = top_ring(r, top_ring_of(c));
  return r;
}

nlohmann::json scalar_json(const Padic& x, const RingPtr& R) { return scalar_to_json(x.lift_to(R)); }
nlohmann::json scalar_json(const PadicPoly& x, const RingPtr& R) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : x.terms()) terms.push_back({{"exp", e}, {"coeff", scalar_to_json(c.lift_to(R))}});
  return {{"symbol", x.name()}, {"terms", terms}};
}

std::string ring_label(const RingPtr& R) {
  if (!R) return "";
  return R->label().empty() ? "Z_" + std::to_string(R->prime()) : R->label();
}

template <class C>
nlohmann::json series_json_impl(const Series<C>& s) {
  const RingPtr R = series_ring(s.coeffs());
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = 0; n <= s.D(); ++n) coeffs.push_back(scalar_json(s[n], R));
  return {{"ring", ring_label(R)}, {"D", s.D()}, {"coeffs", coeffs}};
}

template <class C>
nlohmann::json bivariate_json_impl(const Bivariate<C>& s) {
  std::vector<C> all;
  for (const auto& e : s.support()) all.push_back(s.at(e.i, e.j));
  const RingPtr R = series_ring(all);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& e : s.support()) terms.push_back({{"i", e.i}, {"j", e.j}, {"c", scalar_json(s.at(e.i, e.j), R)}});
  return {{"ring", ring_label(R)}, {"D", s.D()}, {"terms", terms}};
}

template <class C>
std::string series_text_impl(const Series<C>& s) {
  std::string out;
  for (int n = 0; n <= s.D(); ++n) {
    if (!s.nonzero(n)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + scalar_to_text(s[n]) + ")";
    if (n == 1) out += "·T";
    if (n > 1) out += "·T^" + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

template <class C>
nlohmann::json fgl_json_impl(const FormalGroup<C>& F) {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : F.certificates) certs.push_back(to_json(c));
  nlohmann::json j{{"provenance", to_string(F.provenance)},
                   {"base", F.base},
                   {"law", bivariate_json_impl(F.law)},
                   {"log", series_json_impl(F.log)},
                   {"exp", series_json_impl(F.exp)},
                   {"certificates", certs}};
  if (!F.parent.empty()) j["parent"] = F.parent;
  return j;
}

}  // namespace

nlohmann::json series_to_json(const Series<Padic>& s) { return series_json_impl(s); }
nlohmann::json series_to_json(const Series<PadicPoly>& s) { return series_json_impl(s); }
nlohmann::json bivariate_to_json(const Bivariate<Padic>& s) { return bivariate_json_impl(s); }
nlohmann::json bivariate_to_json(const Bivariate<PadicPoly>& s) { return bivariate_json_impl(s); }
std::string scalar_to_text(const Padic& x) { return x.str(); }

std::string scalar_to_text(const PadicPoly& x) {
  std::string out;
  for (const auto& [e, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (e != 0) out += "·" + x.name() + (e == 1 ? "" : "^" + std::to_string(e));
  }
  return out.empty() ? "0" : out;
}

std::string series_to_text(const Series<Padic>& s) { return series_text_impl(s); }
std::string series_to_text(const Series<PadicPoly>& s) { return series_text_impl(s); }
nlohmann::json to_json(const FormalGroupLaw& F) { return fgl_json_impl(F); }
nlohmann::json to_json(const FormalGroup<PadicPoly>& F) { return fgl_json_impl(F); }

}  // namespace fgl
