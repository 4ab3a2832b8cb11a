#include "fgl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fgl/chromatic.hpp"
#include "fgl/lubin_tate_galois.hpp"
#include "fgl/thh_orientation.hpp"

namespace fgl {

nlohmann::json to_json(const PrecisionProfile& p) {
  return {{"p", p.p}, {"n_digits", p.n_digits}, {"trunc_degree", p.trunc_degree}};
}

PrecisionProfile profile_from_json(const nlohmann::json& j, PrecisionProfile base) {
  if (j.contains("p")) base.p = j.at("p").get<long>();
  if (j.contains("n_digits")) base.n_digits = j.at("n_digits").get<int>();
  if (j.contains("trunc_degree")) base.trunc_degree = j.at("trunc_degree").get<int>();
  if (base.p < 2 || base.n_digits < 1 || base.trunc_degree < 2) throw std::invalid_argument("invalid precision profile");
  return base;
}

bool CertificateReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const Certificate& c) { return c.passed(); });
}

int CertificateReport::exit_code() const {
  bool exhausted = false;
  for (const auto& c : results) {
    if (c.status == CertStatus::fail) return 1;
    if (c.status == CertStatus::precision_exhausted) exhausted = true;
  }
  return exhausted ? 3 : 0;
}

nlohmann::json to_json(const CertificateReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : r.results) results.push_back(to_json(c));
  nlohmann::json j{{"suite", r.suite},
                   {"field", to_json(r.field)},
                   {"profile", to_json(r.profile)},
                   {"effective_degree", r.effective_degree},
                   {"notes", r.notes},
                   {"results", results},
                   {"data", r.data}};
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

std::string to_text(const CertificateReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " on " << r.field.label << " (p = " << r.profile.p << ", digits = " << r.profile.n_digits
      << ", D = " << r.effective_degree << ")\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& c : r.results) {
    out << to_string(c.status) << "  " << c.name;
    if (c.first_failure)
      out << "  [at " << c.first_failure->location << ": expected " << c.first_failure->expected << ", got "
          << c.first_failure->got << "]";
    out << "\n";
  }
  if (!r.data.empty()) out << "data: " << r.data.dump() << "\n";
  if (r.wall_time_ms) out << "wall_time_ms: " << *r.wall_time_ms << "\n";
  out << (r.all_passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

struct Ctx {
  FieldDescriptor desc;
  PrecisionProfile profile;
  SuiteOptions opts;
  CertificateReport* report;
  Rational digits;

  long q() const {
    long r = 1;
    for (int i = 0; i < desc.f; ++i) r *= desc.p;
    return r;
  }
  // Raises D so that the q^2 layer is visible, noting the change.
  int degree_at_least(int need, const std::string& why) {
    int D = profile.trunc_degree;
    if (need > D) {
      report->notes.push_back("degree raised from " + std::to_string(D) + " to " + std::to_string(need) + " " + why);
      D = need;
    }
    report->effective_degree = std::max(report->effective_degree, D);
    return D;
  }
  int lt_degree() { return degree_at_least(static_cast<int>(q() * q() + 1), "to reach q^2 + 1"); }
  LocalField field(int D) const { return build_field(desc, working_cap(desc.p, D, profile.n_digits)); }
  void add(Certificate c) { report->results.push_back(std::move(c)); }
  void add_all(const std::vector<Certificate>& cs) {
    for (const auto& c : cs) add(c);
  }
};

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

long digit_sum(long n, long p) {
  long s = 0;
  for (; n; n /= p) s += n % p;
  return s;
}

void legendre_valuations(Ctx& c) {
  const int D = c.degree_at_least(2, "");
  const long p = c.desc.p;
  auto L = build_field(qp_descriptor(p), working_cap(p, D, c.profile.n_digits));
  const auto T = build_tilde(L);
  const auto G = fgl_gm_tilde(T.p0, D);
  c.add(check_exact_valuations("rescaled exp has ord (s_p(n) - 1)/(p - 1)", G.exp,
                               [&](int n) { return Rational(digit_sum(n, p) - 1, p - 1); }));
  c.add(check_valuation("rescaled exp integral", G.exp, Rational(0)));
  c.add(check_valuation("rescaled log integral", G.log, Rational(0)));
  c.add(additive_type_check(G, Rational(1, p - 1), "p0"));
  if (p == 2) {
    const auto H = fgl_rescale(fgl_multiplicative(L.ring, D), Padic(L.ring, 2), "2");
    Series<Padic> powers_of_two(D, Padic::zero(L.ring));
    for (int n = 1; n <= D; ++n)
      if (is_power_of_two(n)) powers_of_two[n] = Padic(L.ring, 1);
    c.add(check_equal("(e^{2x} - 1)/2 = sum of x^{2^n} mod 2", H.exp, powers_of_two, Rational(1)));
  }
}

void additive_type(Ctx& c) {
  const int D = c.lt_degree();
  const auto L = c.field(D);
  const auto T = build_tilde(L);
  const auto F = fgl_special_lubin_tate(L, D);
  c.add_all(axiom_certificates(F, c.digits));
  c.add(check_equal("[pi] = pi T + T^q", fgl_endomorphism(F, L.pi).series, special_pi_series(L, D), c.digits));
  const auto Ft = fgl_rescale(F, T.pi0, "pi0");
  c.add(check_law_integral(Ft));
  c.add(additive_type_check(Ft, Rational(1, L.e() * (L.q() - 1)), "pi0"));
  c.add(tilde_pi_series_check(Ft, L, c.digits));
}

void honda_valuations(Ctx& c) {
  const int D = c.lt_degree();
  const auto L = c.field(D);
  const auto T = build_tilde(L);
  const auto H = fgl_honda(L, D);
  c.add_all(H.certificates);
  const auto Ht = fgl_rescale(H, T.pi0, "pi0");
  const long q = L.q();
  const int e = L.e();
  Certificate cert;
  cert.name = "ord(pi0^{q^n - 1} pi^{-n}) = ((q^n - 1)/(q - 1) - n)/e";
  long qn = 1;
  for (int n = 0; qn <= D; ++n, qn *= q) {
    const Rational want(((qn - 1) / (q - 1) - n), e);
    const auto v = Ht.log[static_cast<int>(qn)].valuation();
    if (!(v == Valuation::exact(want))) {
      cert.status = v.is_exact() ? CertStatus::fail : CertStatus::precision_exhausted;
      cert.first_failure = Failure{detail::mono(static_cast<int>(qn)), "ord " + to_string(want), "ord " + v.str()};
      break;
    }
  }
  c.add(cert);
  c.add(check_law_integral(Ht));
  c.add(fgl_iso(H, fgl_special_lubin_tate(L, D), c.digits).second);
}

void eisenstein_relation(Ctx& c) {
  const int D = c.lt_degree();
  const auto L = c.field(D);
  c.add(fgl_eisenstein_relation_check(fgl_special_lubin_tate(L, D), L, c.digits));
}

void epsilon_equivariance(Ctx& c) {
  const int D = c.lt_degree();
  const auto L = c.field(D);
  const auto T = build_tilde(L);
  const auto E = epsilon0_series(L, T, D, c.digits);
  c.add_all(E.certificates);
  c.add(primitive_torsion(L, T, c.digits).second);
  Certificate id = equivariance_check(E, galois_unit(L, Padic(L.ring, 1)), c.digits);
  id.name += " (identity)";
  c.add(id);
  std::mt19937_64 rng(c.opts.seed);
  Certificate rnd;
  rnd.name = "eps0 equivariance (" + std::to_string(c.opts.random_units) + " random sigma)";
  for (int i = 0; i < c.opts.random_units; ++i) {
    Certificate s = equivariance_check(E, random_galois_unit(L, rng), c.digits);
    s.name = "sigma " + std::to_string(i + 1);
    rnd.absorb(s);
  }
  c.add(rnd);
}

Certificate exact_rational(std::string name, const Rational& got, const Rational& want) {
  if (got == want) return make_pass(std::move(name));
  return make_fail(std::move(name), {"value", to_string(want), to_string(got)});
}

Certificate element_valuation(std::string name, const Padic& x, const Rational& want) {
  const auto v = x.valuation();
  if (v == Valuation::exact(want)) return make_pass(std::move(name));
  Certificate c = make_fail(std::move(name), {"ord", to_string(want), v.str()});
  if (!v.is_exact()) c.status = CertStatus::precision_exhausted;
  return c;
}

void fontaine_valuations(Ctx& c) {
  const int D = c.degree_at_least(2, "");
  const auto L = c.field(D);
  const auto T = build_tilde(L);
  const auto r = period_valuations(L);
  const Rational e(L.e()), qm1(L.q() - 1), pm1(L.p() - 1);
  c.add(element_valuation("ord pi0 = 1/(e(q - 1))", T.pi0, r.ord_pi0));
  c.add(element_valuation("ord p0 = 1/(p - 1)", T.p0, r.ord_p0));
  c.add(element_valuation("ord of E'(pi) = ord of the different", L.different_generator(), r.ord_different));
  c.add(exact_rational("ord Omega = 1/(p - 1) - 1/(e(q - 1))", r.ord_Omega, 1 / pm1 - 1 / (e * qm1)));
  c.add(exact_rational("ord Omega0 = 0", r.ord_Omega0, Rational(0)));
  c.add(exact_rational("ord Omega_partial = ord Omega - ord D_L", r.ord_Omega_partial, r.ord_Omega - r.ord_different));
  const auto tw = tate_twist_valuation(L);
  c.add(exact_rational("twist = -(1/(e(q - 1)) + ord D_L)", tw.ord_p, -(1 / (e * qm1) + r.ord_different)));
  c.add(primitive_torsion(L, T, c.digits).second);
  c.add(exact_rational("ord h_1 = ord pi0", torsion_valuation(L, 1), r.ord_pi0));
  nlohmann::json torsion = nlohmann::json::array();
  for (int n = 1; n <= 4; ++n) torsion.push_back({{"n", n}, {"ord", to_string(torsion_valuation(L, n))}});
  c.report->data["period_valuations"] = to_json(r);
  c.report->data["twist"] = {{"generator", tw.generator_label}, {"ord", to_string(tw.ord_p)}};
  c.report->data["torsion"] = torsion;
}

void kappa_suite(Ctx& c) {
  const int D = c.degree_at_least(2, "");
  const auto L = c.field(D);
  const auto M = thh_model(build_tilde(L));
  const auto K = kappa_coproduct(M, D, c.digits);
  c.add_all(K.certificates);
  const auto cc = chern_class_series(M, D, c.digits);
  c.add_all(cc.certificates);
  c.add(coordinate_independence_check(M, {}, D, c.digits));
  std::mt19937_64 rng(c.opts.seed);
  const RingPtr Z = root_ring(M.base);
  Certificate ind;
  ind.name = "independence of random coordinate changes";
  for (int t = 0; t < 3; ++t) {
    std::vector<Padic> a;
    for (int i = 0; i < D; ++i) a.push_back(Padic(Z, static_cast<long>(rng() % 1000) - 500));
    ind.absorb(coordinate_independence_check(M, a, D, c.digits));
  }
  c.add(ind);
  Certificate act;
  act.name = "galois action (20 random unit pairs)";
  for (int i = 0; i < 20; ++i) {
    const auto g = galois_act(M, random_unit(Z, rng));
    const auto h = galois_act(M, random_unit(Z, rng));
    act.absorb(galois_intertwining_check(K, g, c.digits));
    act.absorb(galois_multiplicativity_check(K, cc, g, h, c.digits));
  }
  c.add(act);
  c.report->data["trace"] = {{"beta_image", series_to_text(Series<PadicPoly>::constant(1, M.beta()))},
                             {"ord_scalar", to_string(trace_record(M).ord_scalar)}};
}

void orientation_suite(Ctx& c) {
  const int D = c.lt_degree();
  const auto L = c.field(D);
  const auto O = orientation_composite(L, D, c.digits);
  c.add_all(O.certificates);
  const auto E = epsilon0_series(L, O.tilde, D, c.digits);
  std::mt19937_64 rng(c.opts.seed);
  Certificate eq;
  eq.name = "unit actions intertwine (5 random units)";
  for (int i = 0; i < 5; ++i) eq.absorb(equivariance_check(E, random_galois_unit(L, rng), c.digits));
  c.add(eq);
  nlohmann::json genus = nlohmann::json::array();
  for (int i = 0; i + 1 <= std::min(D, 10); ++i) genus.push_back(to_json(hirzebruch_genus(O.target, i)));
  c.report->data["hirzebruch_genus"] = genus;
  c.report->data["period_valuations"] = to_json(period_valuations(L));
}

void chromatic_suite(Ctx& c) {
  const long p = c.desc.p;
  const int n = c.opts.height;
  long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  const int D = c.degree_at_least(static_cast<int>(q + 3), "to reach q + 3");
  const auto K = kn_group_law(p, n, D, c.profile.n_digits);
  c.add_all(K.certificates);
  const auto P = kn_p_series(K, p, n, c.digits);
  c.add_all(P.certificates);
  c.report->data["height"] = n;
  c.report->data["araki"] = to_json(araki_shape_note());
}

const std::map<std::string, std::function<void(Ctx&)>>& registry() {
  static const std::map<std::string, std::function<void(Ctx&)>> r{
      {"legendre-valuations", legendre_valuations}, {"additive-type", additive_type},
      {"honda-valuations", honda_valuations},       {"eisenstein-relation", eisenstein_relation},
      {"epsilon-equivariance", epsilon_equivariance}, {"fontaine-valuations", fontaine_valuations},
      {"kappa-coproduct", kappa_suite},             {"orientation-composite", orientation_suite},
      {"chromatic-kn", chromatic_suite}};
  return r;
}

void run_guarded(const std::string& name, Ctx& c) {
  const std::size_t before = c.report->results.size();
  try {
    registry().at(name)(c);
  } catch (const CertificateFailure& e) {
    c.add(e.cert);
  } catch (const PrecisionExhausted& e) {
    Certificate x;
    x.name = name;
    x.status = CertStatus::precision_exhausted;
    x.first_failure = Failure{"construction", "enough precision", e.what()};
    c.add(x);
  }
  for (std::size_t i = before; i < c.report->results.size(); ++i)
    c.report->results[i].name = name + ": " + c.report->results[i].name;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& entry : registry()) n.push_back(entry.first);
    n.push_back("all");
    return n;
  }();
  return names;
}

bool is_suite(const std::string& name) { return name == "all" || registry().count(name) > 0; }

CertificateReport run_suite(const std::string& name, const FieldDescriptor& field, const PrecisionProfile& profile,
                            const SuiteOptions& opts) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  CertificateReport report;
  report.suite = name;
  report.field = field;
  report.profile = profile;
  report.profile.p = field.p;
  report.effective_degree = profile.trunc_degree;
  Ctx c{field, report.profile, opts, &report, Rational(profile.n_digits)};
  if (name == "all") {
    for (const auto& entry : registry()) {
      const std::string& k = entry.first;
      const nlohmann::json saved = report.data;
      report.data = nlohmann::json::object();
      run_guarded(k, c);
      nlohmann::json merged = saved;
      if (!report.data.empty()) merged[k] = report.data;
      report.data = merged;
    }
  } else {
    run_guarded(name, c);
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const Certificate& a, const Certificate& b) { return a.name < b.name; });
  return report;
}

}  // namespace fgl
