#include <random>

#include "doctest.h"
#include "fgl/series.hpp"

using namespace fgl;

namespace {

using S = Series<Padic>;

S from_rationals(const RingPtr& R, int D, const std::vector<Rational>& c) {
  S s(D, Padic::zero(R));
  for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= D; ++i)
    if (c[i] != Rational(0)) s[static_cast<int>(i)] = Padic::from_rational(R, c[i]);
  return s;
}

S log1p(const RingPtr& R, int D) {
  S s(D, Padic::zero(R));
  for (int n = 1; n <= D; ++n) s[n] = Padic::from_rational(R, Rational(n % 2 ? 1 : -1, n));
  return s;
}

S expm1(const RingPtr& R, int D) {
  S s(D, Padic::zero(R));
  Padic f(R, 1);
  for (int n = 1; n <= D; ++n) {
    f = f * Padic(R, n);
    s[n] = Padic(R, 1) / f;
  }
  return s;
}

bool series_equal(const S& a, const S& b) {
  for (int i = 0; i <= a.D(); ++i)
    if (!(a[i] - b[i]).is_zero()) return false;
  return true;
}

S random_series(const RingPtr& R, int D, std::mt19937_64& rng, bool constant = true) {
  S s(D, Padic::zero(R));
  for (int i = constant ? 0 : 1; i <= D; ++i) s[i] = Padic(R, static_cast<long>(rng() % 2001) - 1000);
  return s;
}

}  // namespace

TEST_CASE("series multiplication") {
  auto R = LocalRing::zp(7, 40);
  const int D = 10;
  S a = from_rationals(R, D, {1, 1}), b = from_rationals(R, D, {1, -1});
  CHECK(series_equal(a * b, from_rationals(R, D, {1, 0, -1})));
  S t = S::variable(D, Padic::zero(R));
  S td = S::variable(D, Padic::zero(R)).shifted(D - 1);
  CHECK((t * td).order() == D + 1);
  std::mt19937_64 rng(1);
  S x = random_series(R, D, rng), y = random_series(R, D, rng), z = random_series(R, D, rng);
  S xy = x * y;
  for (int k = 0; k <= D; ++k) {
    Padic conv = Padic::zero(R);
    for (int i = 0; i <= k; ++i) conv += x[i] * y[k - i];
    CHECK((xy[k] - conv).is_zero());
  }
  CHECK(series_equal((x * y) * z, x * (y * z)));
  CHECK(series_equal(x * y, y * x));
  CHECK(series_equal(x * (y + z), x * y + x * z));
}

TEST_CASE("composition and reversion") {
  auto R = LocalRing::zp(5, 60);
  const int D = 16;
  S t = S::variable(D, Padic::zero(R));
  S L = log1p(R, D), E = expm1(R, D);
  CHECK(series_equal(compose(E, L), t));
  CHECK(series_equal(compose(L, E), t));
  CHECK(series_equal(reverse(L), E));
  CHECK(series_equal(reverse(t), t));
  // T + T^2 reverses to the signed Catalan series.
  S a = from_rationals(R, D, {0, 1, 1});
  S b = reverse(a);
  long cat = 1;
  for (int n = 1; n <= D; ++n) {
    long sign = n % 2 ? 1 : -1;
    CHECK((b[n] - Padic(R, sign * cat)).is_zero());
    cat = cat * 2 * (2 * n - 1) / (n + 1);
  }
  CHECK(series_equal(compose(a, b), t));
  CHECK(series_equal(compose(b, a), t));
  std::mt19937_64 rng(2);
  S f = random_series(R, D, rng), g = random_series(R, D, rng, false), h = random_series(R, D, rng, false);
  CHECK(series_equal(compose(compose(f, g), h), compose(f, compose(g, h))));
  CHECK_THROWS_AS(compose(f, f), std::invalid_argument);
  CHECK_THROWS_AS(reverse(from_rationals(R, D, {0, 5, 1})), std::domain_error);
}

TEST_CASE("dlog") {
  auto R = LocalRing::zp(3, 40);
  const int D = 12;
  S g = dlog(from_rationals(R, D, {1, 1}), DlogMode::multiplicative);
  for (int n = 0; n < D; ++n) CHECK((g[n] - Padic(R, n % 2 ? -1 : 1)).is_zero());
  S e = expm1(R, D);
  e[0] = Padic(R, 1);
  S h = dlog(e, DlogMode::multiplicative);
  CHECK((h[0] - Padic(R, 1)).is_zero());
  for (int n = 1; n < D; ++n) CHECK(h[n].is_zero());
  CHECK_THROWS_AS(dlog(from_rationals(R, D, {2, 1}), DlogMode::multiplicative), std::domain_error);
}

TEST_CASE("bivariate substitution and composition") {
  auto R = LocalRing::zp(5, 30);
  const int D = 8;
  Bivariate<Padic> F(D, Padic::zero(R));
  F.at(1, 0) = Padic(R, 1);
  F.at(0, 1) = Padic(R, 1);
  F.at(1, 1) = Padic(R, 1);
  Padic s(R, 7);
  S sx = S::variable(D, Padic::zero(R)).scaled(s);
  auto G = substitute(F, sx, sx);
  CHECK((G.at(1, 0) - s).is_zero());
  CHECK((G.at(0, 1) - s).is_zero());
  CHECK((G.at(1, 1) - s * s).is_zero());
  CHECK(G.support().size() == 3);
  // log(1 + F(X,Y)) = log(1+X) + log(1+Y)
  auto LF = compose(log1p(R, D), F);
  for (auto [i, j] : LF.support())
    if (i > 0 && j > 0) CHECK(LF.at(i, j).is_zero());
}

TEST_CASE("symbolic coefficients") {
  auto R = LocalRing::zp(5, 30);
  auto omega = make_symbol("W", 0, true);
  PadicPoly w = PadicPoly::symbol(omega, Padic::zero(R));
  PadicPoly one = one_like(w);
  CHECK(((w + one) * (w - one) - (w * w - one)).is_zero());
  CHECK((w * inverse(w) - one).is_zero());
  CHECK((w * w).scale_symbol(Padic(R, 3)).coeff(2).valuation() == Valuation::exact(0));
  CHECK(((w * w).scale_symbol(Padic(R, 3)).coeff(2) - Padic(R, 9)).is_zero());
  auto u = make_symbol("u", 2, false);
  PadicPoly uu = PadicPoly::symbol(u, Padic::zero(R));
  CHECK_THROWS_AS(inverse(uu), std::domain_error);
  // Series over the symbol: reversion divides only by the linear monomial.
  const int D = 6;
  Series<PadicPoly> a(D, w);
  a[1] = w;
  a[2] = w * w;
  auto b = reverse(a);
  auto t = compose(a, b);
  CHECK((t[1] - one).is_zero());
  for (int n = 2; n <= D; ++n) CHECK(t[n].is_zero());
}
