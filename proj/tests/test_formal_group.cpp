#include <random>

#include "doctest.h"
#include "fgl/formal_group.hpp"
#include "test_fields.hpp"

using namespace fgl;
using namespace fgl::testing;

namespace {

const Rational kDigits(30);

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long digit_sum(long n, long p) {
  long s = 0;
  for (; n; n /= p) s += n % p;
  return s;
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

// Padic series equal to the integer polynomial `c` (low to high).
Series<Padic> int_series(const RingPtr& R, int D, const std::vector<mpz_class>& c) {
  Series<Padic> s(D, Padic::zero(R));
  for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= D; ++i)
    if (sgn(c[i]) != 0) s[static_cast<int>(i)] = Padic(R, c[i]);
  return s;
}

}  // namespace

TEST_CASE("multiplicative [p]-series is (1+T)^p - 1") {
  for (long p : {3L, 5L}) {
    auto R = LocalRing::zp(p, 60);
    const int D = 12;
    auto F = fgl_multiplicative(R, D);
    std::vector<mpz_class> want(p + 1);
    for (long k = 1; k <= p; ++k) want[k] = binomial(p, k);
    auto ps = fgl_endomorphism(F, Padic(R, p)).series;
    CHECK(check_equal("[p]", ps, int_series(R, D, want), kDigits).passed());
  }
  auto R3 = LocalRing::zp(3, 60);
  auto ps3 = fgl_endomorphism(fgl_multiplicative(R3, 6), Padic(R3, 3)).series;
  CHECK(check_equal("[3]", ps3, int_series(R3, 6, {0, 3, 3, 1}), kDigits).passed());
}

TEST_CASE("multiplicative law satisfies the axioms") {
  auto R = LocalRing::zp(5, 60);
  auto F = fgl_multiplicative(R, 14);
  for (const auto& c : axiom_certificates(F, kDigits)) CHECK_MESSAGE(c.passed(), c.name);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 4; ++t) {
    Padic a(R, static_cast<long>(rng() % 1000)), b(R, static_cast<long>(rng() % 1000));
    CHECK(check_endomorphism_laws(F, a, b, kDigits).passed());
  }
}

TEST_CASE("rescaled multiplicative exp has Legendre valuations") {
  for (long p : {3L, 5L, 7L}) {
    const int D = 40;
    auto L = build_field(qp_descriptor(p), working_cap(p, D, 64));
    auto T = build_tilde(L);
    auto G = fgl_gm_tilde(T.p0, D);
    for (int n = 1; n <= D; ++n) {
      CHECK(G.exp[n].valuation() == Valuation::exact(Rational(digit_sum(n, p) - 1, p - 1)));
      CHECK(G.log[n].valuation().ge(Rational(0)) == Tri::yes);
    }
    CHECK(G.law.at(1, 1).valuation() == Valuation::exact(Rational(1, p - 1)));
  }
}

TEST_CASE("half of e^{2x} - 1 is congruent to the sum of x^{2^n} mod 2") {
  auto L = build_field(qp_descriptor(2), 120);
  auto T = build_tilde(L);
  CHECK((T.p0 + Padic(L.ring, 2)).is_zero());
  auto G = fgl_gm_tilde(T.p0, 33);
  for (int n = 1; n <= 33; ++n) {
    const bool odd = G.exp[n].valuation().ge(Rational(1)) == Tri::no;
    CHECK(odd == is_power_of_two(n));
  }
}

TEST_CASE("special Lubin-Tate law over Q_p") {
  const long p = 3;
  const int D = 16;
  auto L = build_field(qp_descriptor(p), working_cap(p, D, 64));
  auto F = fgl_special_lubin_tate(L, D);
  for (const auto& c : axiom_certificates(F, kDigits)) CHECK_MESSAGE(c.passed(), c.name);
  auto ps = fgl_endomorphism(F, L.pi).series;
  CHECK(check_equal("[p]", ps, special_pi_series(L, D), kDigits).passed());
  // the log solves lambda([pi](T)) = pi lambda(T)
  auto lhs = compose(F.log, special_pi_series(L, D));
  CHECK(check_equal("functional equation", lhs, F.log.scaled(L.pi), kDigits).passed());
  // coefficient at T^q is 1/(pi - pi^q)
  auto expect = Padic(L.ring, 1) / (L.pi - L.pi.pow(p));
  CHECK((F.log[p] - expect).valuation().ge(kDigits) == Tri::yes);
  CHECK_THROWS_AS(fgl_from_p_series(L, Series<Padic>::variable(D, L.pi).scaled(L.pi)), std::invalid_argument);
}

TEST_CASE("rescaled Lubin-Tate laws are of additive type") {
  for (auto d : {qp_descriptor(3), quad_ram(3), unram_quad(3)}) {
    auto L0 = build_field(d, 10);
    const int D = static_cast<int>(L0.q() * L0.q() + 1);
    auto L = build_field(d, working_cap(d.p, D, 64));
    auto T = build_tilde(L);
    auto F = fgl_special_lubin_tate(L, D);
    auto Ft = fgl_rescale(F, T.pi0, "pi0");
    const Rational ord_pi0(1, L.e() * (L.q() - 1));
    CHECK(T.pi0.valuation() == Valuation::exact(ord_pi0));
    CHECK_MESSAGE(additive_type_check(Ft, ord_pi0, "pi0").passed(), d.label);
    CHECK_MESSAGE(tilde_pi_series_check(Ft, L, kDigits).passed(), d.label);
    CHECK(check_law_integral(Ft).passed());
  }
}

TEST_CASE("the unrescaled multiplicative law is not of additive type") {
  auto L = build_field(qp_descriptor(3), 100);
  auto T = build_tilde(L);
  auto F = fgl_multiplicative(L.ring, 12);
  auto c = additive_type_check(F, Rational(1, 2), "p0");
  CHECK(c.status == CertStatus::fail);
  REQUIRE(c.first_failure);
  CHECK(c.first_failure->location == "T^3");
}

TEST_CASE("Eisenstein relation on [pi]") {
  for (auto d : {qp_descriptor(5), quad_ram(3)}) {
    const int D = 20;
    auto L = build_field(d, working_cap(d.p, D, 64));
    auto F = fgl_special_lubin_tate(L, D);
    CHECK_MESSAGE(fgl_eisenstein_relation_check(F, L, kDigits).passed(), d.label);
  }
}

TEST_CASE("Honda law") {
  const long p = 3;
  const int D = 28;
  auto L = build_field(qp_descriptor(p), working_cap(p, D, 64));
  auto H = fgl_honda(L, D);
  CHECK(H.log[3].valuation() == Valuation::exact(-1));
  CHECK(H.log[9].valuation() == Valuation::exact(-2));
  CHECK(H.log[4].is_exact_zero());
  for (const auto& c : H.certificates) CHECK_MESSAGE(c.passed(), c.name);
  // both normalizations are isomorphic through an integral series
  auto F = fgl_special_lubin_tate(L, D);
  auto [phi, cert] = fgl_iso(F, H, kDigits);
  CHECK(cert.passed());
  CHECK((phi[1] - Padic(L.ring, 1)).is_zero());
}

TEST_CASE("rescaling back and forth is the identity") {
  auto L = build_field(quad_ram(3), 100);
  auto T = build_tilde(L);
  auto F = fgl_special_lubin_tate(L, 12);
  auto G = fgl_rescale(fgl_rescale(F, T.pi0, "pi0"), T.pi0.inverse(), "pi0^-1");
  CHECK(check_equal("law", G.law, F.law, kDigits).passed());
  CHECK(check_equal("log", G.log, F.log, kDigits).passed());
}

TEST_CASE("Teichmuller units act linearly on the special law") {
  auto L = build_field(unram_quad(3), 100);
  const int D = 12;
  auto F = fgl_special_lubin_tate(L, D);
  auto omega = teichmuller_lift(L.ring->residue_field().primitive_element(), L.ring);
  auto e = fgl_endomorphism(F, omega).series;
  CHECK(check_equal("[omega]", e, Series<Padic>::variable(D, omega).scaled(omega), kDigits).passed());
}
