#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fgl/chromatic.hpp"
#include "fgl/suites.hpp"
#include "fgl/thh_orientation.hpp"
#include "test_fields.hpp"

using namespace fgl;
using namespace fgl::testing;

namespace {

const int kDigits = 64;
const Rational kPrec(kDigits);

struct Outcome {
  bool pass = true;
  std::string detail;

  void need(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void need(const Certificate& c, const std::string& where) {
    if (c.passed()) return;
    std::string what = where + ": " + c.name + " " + to_string(c.status);
    if (c.first_failure) what += " at " + c.first_failure->location;
    need(false, what);
  }
  void need_all(const std::vector<Certificate>& cs, const std::string& where) {
    for (const auto& c : cs) need(c, where);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

long digit_sum(long n, long p) {
  long s = 0;
  for (; n; n /= p) s += n % p;
  return s;
}

std::vector<FieldDescriptor> test_fields() { return {qp_descriptor(3), qp_descriptor(5), quad_ram(3), unram_quad(3)}; }

int lt_degree(const FieldDescriptor& d) {
  long q = 1;
  for (int i = 0; i < d.f; ++i) q *= d.p;
  return static_cast<int>(q * q + 1);
}

LocalField field_for(const FieldDescriptor& d, int D) { return build_field(d, working_cap(d.p, D, kDigits)); }

std::vector<FieldDescriptor> shipped_fields() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(FGL_FIELDS_DIR))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<FieldDescriptor> out;
  for (const auto& p : paths) {
    std::ifstream in(p);
    out.push_back(field_descriptor_from_json(nlohmann::json::parse(in)));
  }
  return out;
}

// 1. Rescaled multiplicative log/exp valuations, p in {3, 5, 7}, D = 40, < 5 s per prime.
Outcome legendre() {
  Outcome o;
  std::string times;
  for (long p : {3L, 5L, 7L}) {
    const auto t0 = std::chrono::steady_clock::now();
    const int D = 40;
    const auto L = field_for(qp_descriptor(p), D);
    const auto G = fgl_gm_tilde(build_tilde(L).p0, D);
    for (int n = 1; n <= D; ++n) {
      o.need(G.exp[n].valuation() == Valuation::exact(Rational(digit_sum(n, p) - 1, p - 1)),
             "exp ord at p = " + std::to_string(p) + ", n = " + std::to_string(n));
      o.need(G.log[n].valuation().ge(Rational(0)) == Tri::yes, "log integral at n = " + std::to_string(n));
    }
    const double s = seconds_since(t0);
    o.need(s < 5.0, "p = " + std::to_string(p) + " took " + fmt_seconds(s));
    times += (times.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + " " + fmt_seconds(s);
  }
  if (o.pass) o.detail = times;
  return o;
}

// 2. (e^{2x} - 1)/2 at D = 33 reduces mod 2 to the sum of x^{2^n}.
Outcome mod_two() {
  Outcome o;
  const int D = 33;
  auto R = LocalRing::zp(2, working_cap(2, D, kDigits));
  const auto H = fgl_rescale(fgl_multiplicative(R, D), Padic(R, 2), "2");
  std::string got;
  for (int n = 1; n <= D; ++n) {
    const Padic& c = H.exp[n];
    o.need(c.valuation().ge(Rational(0)) == Tri::yes, "non-integral coefficient");
    const bool odd = c.valuation() == Valuation::exact(Rational(0));
    if (odd) got += (got.empty() ? "x^" : " + x^") + std::to_string(n);
    o.need(odd == ((n & (n - 1)) == 0), "coefficient " + std::to_string(n));
  }
  if (o.pass) o.detail = got;
  return o;
}

// 3. [p] = 0 mod pi0 on the rescaled law, D = q^2 + 1, < 30 s per field.
Outcome additive_type() {
  Outcome o;
  std::string times;
  for (const auto& d : test_fields()) {
    const auto t0 = std::chrono::steady_clock::now();
    const int D = lt_degree(d);
    const auto L = field_for(d, D);
    const auto T = build_tilde(L);
    const auto Ft = fgl_rescale(fgl_special_lubin_tate(L, D), T.pi0, "pi0");
    o.need(additive_type_check(Ft, Rational(1, L.e() * (L.q() - 1)), "pi0"), d.label);
    o.need(tilde_pi_series_check(Ft, L, kPrec), d.label);
    const double s = seconds_since(t0);
    o.need(s < 30.0, d.label + " took " + fmt_seconds(s));
    times += (times.empty() ? "" : ", ") + d.label + " D=" + std::to_string(D) + " " + fmt_seconds(s);
  }
  if (o.pass) o.detail = times;
  return o;
}

// 4. ord(pi0^{q^n - 1} pi^{-n}) = ((q^n - 1)/(q - 1) - n)/e for q^n <= D.
Outcome honda() {
  Outcome o;
  int checked = 0;
  for (const auto& d : test_fields()) {
    const int D = std::max(40, lt_degree(d));
    const auto L = field_for(d, D);
    const auto T = build_tilde(L);
    const auto Ht = fgl_rescale(fgl_honda(L, D), T.pi0, "pi0");
    const long q = L.q();
    long qn = 1;
    for (int n = 0; qn <= D; ++n, qn *= q) {
      const Rational want((qn - 1) / (q - 1) - n, L.e());
      o.need(Ht.log[static_cast<int>(qn)].valuation() == Valuation::exact(want),
             d.label + " at q^" + std::to_string(n));
      // The same value computed from the scalars directly.
      const Padic direct = T.pi0.pow(qn - 1) * L.pi.pow(n).inverse();
      o.need(direct.valuation() == Valuation::exact(want), d.label + " scalar at q^" + std::to_string(n));
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " exponents on 4 fields";
  return o;
}

// 5. E([pi]) = 0 for the ramified quadratic field.
Outcome eisenstein() {
  Outcome o;
  const auto d = quad_ram(3);
  const int D = 40;
  const auto L = field_for(d, D);
  o.need(fgl_eisenstein_relation_check(fgl_special_lubin_tate(L, D), L, kPrec), d.label);
  if (o.pass) o.detail = "Q_3(sqrt(-3)), D=40";
  return o;
}

// 6. eps0 homomorphism and equivariance with symbolic Omega0, 10 random sigma per field.
Outcome epsilon() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::string times;
  for (const auto& d : test_fields()) {
    const auto t0 = std::chrono::steady_clock::now();
    const int D = lt_degree(d);
    const auto L = field_for(d, D);
    const auto E = epsilon0_series(L, build_tilde(L), D, kPrec);
    o.need_all(E.certificates, d.label);
    for (int i = 0; i < 10; ++i) o.need(equivariance_check(E, random_galois_unit(L, rng), kPrec), d.label);
    times += (times.empty() ? "" : ", ") + d.label + " " + fmt_seconds(seconds_since(t0));
  }
  if (o.pass) o.detail = times;
  return o;
}

// 7. Period and different valuations for every shipped field.
Outcome fontaine() {
  Outcome o;
  int n = 0;
  for (const auto& d : shipped_fields()) {
    const auto L = field_for(d, 8);
    const auto T = build_tilde(L);
    const auto r = period_valuations(L);
    const Rational e(L.e()), qm1(L.q() - 1), pm1(L.p() - 1);
    o.need(r.ord_Omega == 1 / pm1 - 1 / (e * qm1), d.label + " ord Omega");
    o.need(r.ord_Omega0 == Rational(0), d.label + " ord Omega0");
    o.need(T.pi0.valuation() == Valuation::exact(r.ord_pi0), d.label + " ord pi0");
    o.need(T.p0.valuation() == Valuation::exact(r.ord_p0), d.label + " ord p0");
    o.need(L.different_generator().valuation() == Valuation::exact(r.ord_different), d.label + " different");
    o.need(tate_twist_valuation(L).ord_p == -(1 / (e * qm1) + r.ord_different), d.label + " twist");
    if (d.e == d.p - 1 && d.f == 1 && d.eisenstein.size() == static_cast<std::size_t>(d.p - 1))
      o.need(r.ord_different == Rational(d.p - 2, d.p - 1), d.label + " ord D_{Q_p(p0)}");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " shipped fields";
  return o;
}

// 8. Three-term kappa law, co-associativity, Chern class round trip, independence of a_i.
Outcome kappa() {
  Outcome o;
  const int D = 20;
  std::mt19937_64 rng(7);
  for (long p : {3L, 5L}) {
    const auto L = field_for(qp_descriptor(p), D);
    const auto M = thh_model(build_tilde(L));
    o.need_all(kappa_coproduct(M, D, kPrec).certificates, "p=" + std::to_string(p));
    o.need_all(chern_class_series(M, D, kPrec).certificates, "p=" + std::to_string(p));
    o.need(coordinate_independence_check(M, {}, D, kPrec), "a = 0");
    const RingPtr Z = root_ring(M.base);
    for (int t = 0; t < 3; ++t) {
      std::vector<Padic> a;
      for (int i = 0; i < D; ++i) a.push_back(random_unit(Z, rng) * Padic(Z, static_cast<long>(rng() % 7)));
      o.need(coordinate_independence_check(M, a, D, kPrec), "random a");
    }
  }
  if (o.pass) o.detail = "p=3,5, D=20, a = 0 and 3 random choices";
  return o;
}

// 9. Orientation composite kappa_d -> LT_L for Q_p and the ramified quadratic field, < 60 s.
Outcome orientation() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& d : {qp_descriptor(5), quad_ram(3)}) {
    const int D = lt_degree(d);
    const auto O = orientation_composite(field_for(d, D), D, kPrec);
    o.need_all(O.certificates, d.label);
  }
  const double s = seconds_since(t0);
  o.need(s < 60.0, "took " + fmt_seconds(s));
  if (o.pass) o.detail = "Q_5 D=26, Q_3(sqrt(-3)) D=10, " + fmt_seconds(s);
  return o;
}

// 10. k(n) integrality, homogeneity, and the K(n) reduction.
Outcome chromatic() {
  Outcome o;
  for (auto [p, n] : {std::pair{2L, 1}, std::pair{3L, 1}, std::pair{5L, 1}, std::pair{3L, 2}}) {
    long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    const int D = static_cast<int>(q + 3);
    const std::string where = "(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + ")";
    const auto K = kn_group_law(p, n, D, kDigits);
    o.need_all(K.certificates, where);
    const auto P = kn_p_series(K, p, n, kPrec);
    o.need_all(P.certificates, where);
    const auto& lead = P.mod_p.underlying[static_cast<int>(q)];
    o.need(lead.terms().size() == 1 && lead.terms()[0].first == q - 1 && lead.terms()[0].second.residue()[0] == 1,
           where + " leading term");
    for (int k = 1; k < q; ++k) o.need(P.mod_p.underlying[k].is_zero(), where + " below T^q");
  }
  if (o.pass) o.detail = "(2,1) (3,1) (5,1) (3,2) at D = q + 3";
  return o;
}

// 11. Axioms, log/exp inversion, endomorphism ring laws on 20 random scalars, series associativity.
Outcome infrastructure() {
  Outcome o;
  const int D = 16;
  std::mt19937_64 rng(11);
  std::vector<std::pair<std::string, FormalGroupLaw>> laws;
  for (const auto& d : test_fields()) {
    const auto L = field_for(d, D);
    laws.push_back({d.label + " special", fgl_special_lubin_tate(L, std::max(D, static_cast<int>(L.q())))});
    laws.push_back({d.label + " honda", fgl_honda(L, std::max(D, static_cast<int>(L.q())))});
  }
  laws.push_back({"multiplicative", fgl_multiplicative(LocalRing::zp(5, working_cap(5, D, kDigits)), D)});
  for (const auto& [name, F] : laws) {
    o.need_all(axiom_certificates(F, kPrec), name);
    const RingPtr R = scalar_ring(F.law.proto());
    for (int i = 0; i < 20; i += 2) {
      const Padic a = random_unit(R, rng) * Padic(R, static_cast<long>(rng() % 5 + 1));
      const Padic b = random_unit(R, rng);
      o.need(check_endomorphism_laws(F, a, b, kPrec), name);
    }
  }
  auto R = LocalRing::zp(5, kDigits + 20);
  auto random_series = [&](bool constant) {
    Series<Padic> s(D, Padic::zero(R));
    for (int n = constant ? 0 : 1; n <= D; ++n) s[n] = Padic(R, static_cast<long>(rng() % 100000) - 50000);
    return s;
  };
  for (int t = 0; t < 10; ++t) {
    const auto a = random_series(true), b = random_series(true), c = random_series(true);
    o.need(check_equal("(ab)c = a(bc)", (a * b) * c, a * (b * c), kPrec), "series product");
    const auto x = random_series(false), y = random_series(false), z = random_series(false);
    o.need(check_equal("(x o y) o z = x o (y o z)", compose(compose(x, y), z), compose(x, compose(y, z)), kPrec),
           "series composition");
  }
  if (o.pass) o.detail = std::to_string(laws.size()) + " laws x 20 scalars, 10 random series triples";
  return o;
}

// 12. `fgl certify all` on each shipped field, exit 0, < 5 min in total.
Outcome end_to_end() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::string times;
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(FGL_FIELDS_DIR))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    const auto t1 = std::chrono::steady_clock::now();
    const std::string cmd = std::string(FGL_CLI) + " certify all --field " + p.string() + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    o.need(rc == 0, p.filename().string() + " exit status " + std::to_string(rc));
    times += (times.empty() ? "" : ", ") + p.stem().string() + " " + fmt_seconds(seconds_since(t1));
  }
  const double s = seconds_since(t0);
  o.need(s < 300.0, "took " + fmt_seconds(s));
  if (o.pass) o.detail = times + "; total " + fmt_seconds(s);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rescaled multiplicative valuations (p = 3, 5, 7; D = 40; exact; < 5 s each)", legendre},
      {"(e^{2x} - 1)/2 mod 2 = sum of x^{2^n} (D = 33; exact)", mod_two},
      {"rescaled Lubin-Tate [p] = 0 mod pi0 (4 fields; D = q^2 + 1; < 30 s each)", additive_type},
      {"Honda rescaled valuations (4 fields; exact)", honda},
      {"Eisenstein relation on [pi] (ramified quadratic; D = 40; exact)", eisenstein},
      {"eps0 homomorphism and equivariance (4 fields x 10 sigma; symbolic Omega0)", epsilon},
      {"period, different and twist valuations (shipped fields; exact)", fontaine},
      {"kappa coproduct, Chern class round trip, coordinate independence (D = 20)", kappa},
      {"orientation composite is a homomorphism to LT_L (< 60 s)", orientation},
      {"k(n) law integral, homogeneous, K(n) reduction ((p,n) in 4 cases)", chromatic},
      {"FGL axioms, endomorphism laws, series associativity (mod p^64)", infrastructure},
      {"certify all on the shipped fields exits 0 (< 300 s)", end_to_end},
  };
  int failed = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Outcome r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << k << "] " << name << " -- " << r.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
