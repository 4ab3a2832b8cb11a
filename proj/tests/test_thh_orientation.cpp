#include <random>

#include "doctest.h"
#include "fgl/thh_orientation.hpp"
#include "test_fields.hpp"

using namespace fgl;
using namespace fgl::testing;

namespace {

const Rational kDigits(30);

GradedRingModel model(long p, int D) {
  auto L = build_field(qp_descriptor(p), working_cap(p, D, 30));
  return thh_model(build_tilde(L));
}

bool close(const Padic& a, const Padic& b) { return (a - b).valuation().ge(kDigits) == Tri::yes; }

}  // namespace

TEST_CASE("kappa coproduct is the three-term law") {
  for (long p : {3L, 5L}) {
    const auto M = model(p, 20);
    const auto K = kappa_coproduct(M, 20, kDigits);
    for (const auto& c : K.certificates) CHECK_MESSAGE(c.passed(), c.name);
    CHECK(K.law.law.support().size() == 3);
    CHECK(close(K.law.law.at(1, 1).coeff(1), M.p0));
    const auto tr = trace_record(M);
    CHECK(tr.ord_scalar == Rational(1, p - 1));
  }
}

TEST_CASE("Chern class series") {
  const auto M = model(5, 20);
  const auto c = chern_class_series(M, 20, kDigits);
  for (const auto& cert : c.certificates) CHECK_MESSAGE(cert.passed(), cert.name);
  // log(1 + x) = x - x^2/2 + x^3/3 - ...
  REQUIRE(c.c[2].terms().size() == 1);
  CHECK(c.c[2].terms()[0].first == 1);
  CHECK(close(c.c[2].coeff(1), -(M.p0 / Padic(M.base, 2))));
  CHECK(close(c.c[3].coeff(2), M.p0 * M.p0 / Padic(M.base, 3)));
  // exp(x) - 1 = x + x^2/2 + ...
  CHECK(close(c.kappa_exp[2].coeff(1), M.p0 / Padic(M.base, 2)));
}

TEST_CASE("coordinate changes do not affect the coproduct or the Chern class") {
  const int D = 14;
  const auto M = model(3, D);
  CHECK(coordinate_independence_check(M, {}, D, kDigits).passed());
  std::mt19937_64 rng(5);
  auto Z = root_ring(M.base);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Padic> a;
    for (int i = 0; i < D; ++i) a.push_back(Padic(Z, static_cast<long>(rng() % 1000) - 500));
    const auto eta = eta_coordinate(M, a, D);
    CHECK(eta.nonzero(2) == !a[0].is_exact_zero());
    const auto cert = coordinate_independence_check(M, a, D, kDigits);
    CHECK_MESSAGE(cert.passed(), to_json(cert).dump());
  }
}

TEST_CASE("Galois action on the graded model") {
  const int D = 12;
  const auto M = model(5, D);
  const auto K = kappa_coproduct(M, D, kDigits);
  const auto c = chern_class_series(M, D, kDigits);
  const auto id = galois_act(M, Padic(M.base, 1));
  CHECK(check_equal("identity", id(K.law.law), K.law.law, kDigits).passed());
  CHECK_THROWS_AS(galois_act(M, Padic(M.base, 5)), std::invalid_argument);

  std::mt19937_64 rng(9);
  auto Z = root_ring(M.base);
  for (int i = 0; i < 5; ++i) {
    const auto g = galois_act(M, random_unit(Z, rng));
    const auto h = galois_act(M, random_unit(Z, rng));
    CHECK(galois_intertwining_check(K, g, kDigits).passed());
    CHECK(galois_multiplicativity_check(K, c, g, h, kDigits).passed());
  }
  const auto g = galois_act(M, Padic(M.base, 2));
  CHECK(close(g(K.law.law).at(1, 1).coeff(1), M.p0.mul_int(2)));
}

TEST_CASE("orientation composite is a homomorphism to the Lubin-Tate law") {
  for (const auto& d : {qp_descriptor(3), qp_descriptor(5), quad_ram(3)}) {
    CAPTURE(d.label);
    auto L = build_field(d, 0 + working_cap(d.p, 12, 30));
    const long q = L.q();
    const int D = static_cast<int>(q * q + 1);
    L = build_field(d, working_cap(d.p, D, 30));
    const auto O = orientation_composite(L, D, kDigits);
    for (const auto& c : O.certificates) CHECK_MESSAGE(c.passed(), to_json(c).dump());
    CHECK(O.stages.size() == 5);
    const auto& T = O.tilde;
    REQUIRE(O.psi[1].terms().size() == 1);
    CHECK(O.psi[1].terms()[0].first == -1);
    CHECK(close(O.psi[1].coeff(-1), T.pi0 * O.d));
  }
}

TEST_CASE("orientation composite at Omega_d = 1 over Q_p") {
  const int D = 12;
  auto L = build_field(qp_descriptor(5), working_cap(5, D, 30));
  const auto O = orientation_composite(L, D, kDigits);
  const auto& T = O.tilde;
  const auto Ft = fgl_rescale(fgl_special_lubin_tate(L, D), T.pi0, "pi0");
  const auto Gt = fgl_gm_tilde(T.p0, D);
  const auto want = compose(Ft.exp, Gt.log).scaled(T.pi0);
  const Padic one(T.ring, 1);
  const auto at_one = O.psi.map([&](const PadicPoly& c, int) { return c.evaluate(one); });
  CHECK(check_equal("Psi(1)", at_one, want, kDigits).passed());
}

TEST_CASE("Hirzebruch genus from log coefficients") {
  auto R = LocalRing::zp(5, 40);
  const auto Gm = fgl_multiplicative(R, 10);
  for (int i = 0; i < 10; ++i) CHECK(close(hirzebruch_genus(Gm, i).value, Padic(R, i % 2 ? -1 : 1)));
  CHECK_THROWS_AS(hirzebruch_genus(Gm, 10), std::out_of_range);

  for (long p : {3L, 5L}) {
    auto L = build_field(qp_descriptor(p), 40);
    const auto F = fgl_special_lubin_tate(L, static_cast<int>(p + 1));
    CHECK(close(hirzebruch_genus(F, 0).value, Padic(L.ring, 1)));
    const auto g = hirzebruch_genus(F, static_cast<int>(p - 1));
    mpz_class pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), p, p - 1);
    CHECK(close(g.value, Padic(L.ring, 1) / Padic(L.ring, 1 - pp)));
    CHECK(g.ord == Valuation::exact(Rational(0)));
  }
}
