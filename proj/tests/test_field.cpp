#include <random>

#include "doctest.h"
#include "fgl/field.hpp"

using namespace fgl;

namespace {

FieldDescriptor quad_ram() {
  FieldDescriptor d;
  d.p = 3;
  d.e = 2;
  d.eisenstein = {{"10"}, {"0"}};
  d.label = "Q_3(sqrt-3)";
  return d;
}

FieldDescriptor unram(long p, int f) {
  FieldDescriptor d;
  d.p = p;
  d.f = f;
  d.label = "unram";
  return d;
}

}  // namespace

TEST_CASE("Teichmuller lifts are roots of unity") {
  for (long p : {3L, 5L, 7L}) {
    for (int f : {1, 2, 3}) {
      auto L = build_field(unram(p, f), 30);
      const auto& F = L.W->residue_field();
      const long q = F.size();
      std::mt19937_64 rng(p * 10 + f);
      for (int t = 0; t < 100; ++t) {
        long idx = 1 + static_cast<long>(rng() % (q - 1));
        auto r = F.element(idx);
        if (F.is_zero(r)) continue;
        Padic w = teichmuller_lift(r, L.W);
        CHECK((w.pow(q - 1) - Padic(L.W, 1)).is_zero());
        CHECK(w.residue() == r);
      }
    }
  }
  auto Z5 = LocalRing::zp(5, 20);
  Padic w = teichmuller_lift({2}, Z5);
  // 2 + 1*5 + 2*5^2 + ...
  mpz_class c = w.coords()[0];
  CHECK(c % 5 == 2);
  CHECK((c / 5) % 5 == 1);
  CHECK((c / 25) % 5 == 2);
  CHECK(teichmuller_lift({1}, Z5).coords()[0] == 1);
  CHECK_THROWS_AS(teichmuller_lift({0}, Z5), std::domain_error);
}

TEST_CASE("Hensel roots") {
  const long p = 7;
  auto Z = LocalRing::zp(p, 30);
  std::vector<Padic> f{-Padic(Z, 1 + p), Padic::zero(Z), Padic(Z, 1)};
  Padic r = hensel_root(f, Padic(Z, 1));
  CHECK((r * r - Padic(Z, 1 + p)).is_zero());
  // r = 1 + p/2 mod p^2
  Padic half = Padic::from_rational(Z, Rational(1, 2));
  CHECK((r - Padic(Z, 1) - half * Padic(Z, p)).valuation().ge(2) == Tri::yes);
  // Linear case gives inverses.
  Padic u(Z, 10);
  Padic inv = hensel_root({Padic(Z, -1), u}, Padic(Z, 5));
  CHECK((inv * u - Padic(Z, 1)).is_zero());
  // Teichmuller agreement.
  auto L = build_field(unram(3, 2), 30);
  auto gen = L.W->residue_field().primitive_element();
  Padic seed = Padic::from_coords(L.W, L.W->lift_residue(gen));
  std::vector<Padic> g(9, Padic::zero(L.W));
  g[0] = Padic(L.W, -1);
  g[8] = Padic(L.W, 1);
  CHECK((hensel_root(g, seed) - teichmuller_lift(gen, L.W)).is_zero());
  CHECK_THROWS_AS(hensel_root(f, Padic(Z, 3)), std::domain_error);
}

TEST_CASE("adjoin_root valuations") {
  for (long p : {3L, 5L, 7L}) {
    auto Z = LocalRing::zp(p, 20);
    std::vector<Padic> E(p - 1, Padic::zero(Z));
    E[0] = Padic(Z, p);
    auto R = adjoin_root(Z, E);
    CHECK(Padic::generator(R).valuation() == Valuation::exact(Rational(1, p - 1)));
  }
  auto L = build_field(unram(3, 2), 20);
  auto T = build_tilde(L);
  CHECK(T.pi0.valuation() == Valuation::exact(Rational(1, 8)));
  CHECK((T.p0.pow(2) + Padic(T.ring, 3)).is_zero());
  auto Zq = LocalRing::zp(3, 20);
  CHECK_THROWS_AS(adjoin_root(Zq, {Padic(Zq, 9), Padic::zero(Zq)}), std::invalid_argument);
}

TEST_CASE("norm and trace") {
  const long p = 5;
  auto Z = LocalRing::zp(p, 20);
  std::vector<Padic> E(p - 1, Padic::zero(Z));
  E[0] = Padic(Z, p);
  auto R = adjoin_root(Z, E);
  Padic p0 = Padic::generator(R);
  auto [N, Tr] = norm_and_trace(p0, Z);
  CHECK((N - Padic(Z, p)).is_zero());
  CHECK(Tr.is_zero());
  auto [Ns, Ts] = norm_and_trace(Padic(R, 7), Z);
  CHECK((Ns - Padic(Z, 7 * 7 * 7 * 7)).is_zero());
  CHECK((Ts - Padic(Z, 28)).is_zero());

  auto L = build_field(quad_ram(), 24);
  auto T = build_tilde(L);
  std::mt19937_64 rng(3);
  auto rnd = [&](const RingPtr& ring) {
    std::vector<mpz_class> c(ring->degree());
    for (auto& x : c) x = static_cast<long>(rng() % 1000);
    return Padic::from_coords(ring, c);
  };
  Padic x = Padic(T.ring, 1) + T.pi0;
  for (int t = 0; t < 10; ++t) {
    Padic y = rnd(T.ring);
    auto nx = norm_and_trace(x, L.W).first, ny = norm_and_trace(y, L.W).first;
    auto nxy = norm_and_trace(x * y, L.W).first;
    CHECK((nxy - nx * ny).is_zero());
    auto tx = norm_and_trace(x, L.W).second, ty = norm_and_trace(y, L.W).second;
    CHECK((norm_and_trace(x + y, L.W).second - tx - ty).is_zero());
  }
  CHECK(norm_and_trace(x, L.W).first.valuation() == Valuation::exact(0));
}

TEST_CASE("different valuations") {
  for (long p : {3L, 5L, 7L}) {
    auto d = different_valuation(build_tilde(build_field(qp_descriptor(p), 20)).ring);
    CHECK(d.ord_p == Rational(p - 2, p - 1));
  }
  CHECK(different_valuation(build_field(unram(3, 2), 20).ring).ord_p == Rational(0));
  auto L = build_field(quad_ram(), 20);
  CHECK(different_valuation(L.ring).ord_p == Rational(1, 2));
  CHECK(L.different_generator().valuation() == Valuation::exact(Rational(1, 2)));
}

TEST_CASE("descriptor and scalar JSON round trips") {
  auto j = nlohmann::json::parse(R"J({"p":3,"f":1,"e":2,"eisenstein":["10","0"],"label":"Q_3(sqrt-3)"})J");
  auto d = field_descriptor_from_json(j);
  CHECK(d.e == 2);
  CHECK(field_descriptor_from_json(to_json(d)).eisenstein == d.eisenstein);
  auto L = build_field(d, 20);
  Padic x = L.pi.pow(3) * Padic(L.ring, 7) + Padic(L.ring, 9);
  Padic y = scalar_from_json(L.ring, scalar_to_json(x));
  CHECK((x - y).is_zero());
  CHECK(scalar_to_json(x)["val"] == "3/2");
  auto bad = field_descriptor_from_json(nlohmann::json::parse(R"({"p":3,"e":2,"eisenstein":["1","0"]})"));
  CHECK_THROWS_AS(build_field(bad, 10), std::invalid_argument);
  CHECK_THROWS(field_descriptor_from_json(nlohmann::json::parse(R"({"p":3,"e":3,"eisenstein":["10"]})")));
}
