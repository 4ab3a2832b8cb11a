#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgl/sympoly.hpp"

namespace fgl {

/// Truncated power series sum_{i<=D} c_i T^i. Coefficient i is exact; nothing
/// beyond D is ever read or produced.
template <class C>
class Series {
 public:
  Series() = default;
  Series(int D, const C& proto) : D_(D), proto_(zero_like(proto)), c_(D + 1, proto_) {
    if (D < 0) throw std::invalid_argument("negative truncation degree");
  }

  static Series variable(int D, const C& proto) {
    Series s(D, proto);
    if (D >= 1) s.c_[1] = one_like(proto);
    return s;
  }
  static Series constant(int D, const C& c) {
    Series s(D, c);
    s.c_[0] = c;
    return s;
  }

  int D() const { return D_; }
  const C& proto() const { return proto_; }
  C& operator[](int i) { return c_.at(i); }
  const C& operator[](int i) const { return c_.at(i); }
  const std::vector<C>& coeffs() const { return c_; }
  bool nonzero(int i) const { return !is_exact_zero(c_[i]); }

  // Lowest index with a non-exact-zero coefficient (D+1 if none).
  int order() const {
    for (int i = 0; i <= D_; ++i)
      if (nonzero(i)) return i;
    return D_ + 1;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_)
      if (!is_exact_zero(x)) x = -x;
    return r;
  }
  Series operator+(const Series& o) const {
    check(o);
    Series r = *this;
    for (int i = 0; i <= D_; ++i)
      if (o.nonzero(i)) r.c_[i] = r.c_[i] + o.c_[i];
    return r;
  }
  Series operator-(const Series& o) const { return *this + (-o); }
  Series operator*(const Series& o) const {
    check(o);
    Series r(D_, proto_);
    std::vector<int> nzb;
    for (int j = 0; j <= D_; ++j)
      if (o.nonzero(j)) nzb.push_back(j);
    for (int i = 0; i <= D_; ++i) {
      if (!nonzero(i)) continue;
      for (int j : nzb) {
        if (i + j > D_) break;
        r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
      }
    }
    return r;
  }
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  template <class S>
  Series scaled(const S& s) const {
    Series r = *this;
    for (auto& x : r.c_)
      if (!is_exact_zero(x)) x = mul_scalar(x, s);
    return r;
  }

  // Coefficientwise transformation, possibly into another coefficient type.
  template <class F>
  auto map(F&& f) const -> Series<decltype(f(std::declval<C>(), 0))> {
    using R = decltype(f(std::declval<C>(), 0));
    std::vector<R> out;
    out.reserve(c_.size());
    for (int i = 0; i <= D_; ++i) out.push_back(f(c_[i], i));
    return Series<R>::from_coeffs(std::move(out));
  }

  static Series from_coeffs(std::vector<C> c) {
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    Series s;
    s.D_ = static_cast<int>(c.size()) - 1;
    s.proto_ = zero_like(c[0]);
    s.c_ = std::move(c);
    return s;
  }

  Series truncated(int D) const {
    Series r(D, proto_);
    for (int i = 0; i <= std::min(D, D_); ++i) r.c_[i] = c_[i];
    return r;
  }

  Series derivative() const {
    Series r(std::max(D_ - 1, 0), proto_);
    for (int i = 1; i <= D_; ++i)
      if (nonzero(i)) r.c_[i - 1] = mul_scalar(c_[i], from_int_like_scalar(i));
    return r;
  }

  // Series T^k * this, truncated.
  Series shifted(int k) const {
    Series r(D_, proto_);
    for (int i = 0; i + k <= D_; ++i) r.c_[i + k] = c_[i];
    return r;
  }

 private:
  void check(const Series& o) const {
    if (o.D_ != D_) throw std::invalid_argument("truncation degree mismatch");
  }
  Padic from_int_like_scalar(long n) const;

  int D_ = 0;
  C proto_{};
  std::vector<C> c_;
};

namespace detail {
inline const Padic& scalar_proto(const Padic& x) { return x; }
template <class C>
Padic scalar_proto(const SymPoly<C>& x) {
  return scalar_proto(x.base_zero());
}
}  // namespace detail

template <class C>
Padic Series<C>::from_int_like_scalar(long n) const {
  return Padic(detail::scalar_proto(proto_).ring(), n);
}

/// Bivariate series sum c_ij X^i Y^j over the triangle i + j <= D.
template <class C>
class Bivariate {
 public:
  Bivariate() = default;
  Bivariate(int D, const C& proto)
      : D_(D), proto_(zero_like(proto)), c_(static_cast<std::size_t>((D + 1) * (D + 2) / 2), proto_) {}

  int D() const { return D_; }
  const C& proto() const { return proto_; }
  C& at(int i, int j) { return c_[index(i, j)]; }
  const C& at(int i, int j) const { return c_[index(i, j)]; }
  bool nonzero(int i, int j) const { return !is_exact_zero(c_[index(i, j)]); }

  static Bivariate from_x(const Series<C>& a) {
    Bivariate r(a.D(), a.proto());
    for (int i = 0; i <= a.D(); ++i) r.at(i, 0) = a[i];
    return r;
  }
  static Bivariate from_y(const Series<C>& a) {
    Bivariate r(a.D(), a.proto());
    for (int j = 0; j <= a.D(); ++j) r.at(0, j) = a[j];
    return r;
  }
  // a(X) * b(Y)
  static Bivariate outer(const Series<C>& a, const Series<C>& b) {
    Bivariate r(a.D(), a.proto());
    for (int i = 0; i <= a.D(); ++i) {
      if (!a.nonzero(i)) continue;
      for (int j = 0; i + j <= a.D(); ++j)
        if (b.nonzero(j)) r.at(i, j) = a[i] * b[j];
    }
    return r;
  }

  struct Entry {
    int i, j;
  };
  // Non-exact-zero monomials in order of increasing total degree.
  std::vector<Entry> support() const {
    std::vector<Entry> s;
    for (int d = 0; d <= D_; ++d)
      for (int i = 0; i <= d; ++i)
        if (nonzero(i, d - i)) s.push_back({i, d - i});
    return s;
  }

  Bivariate operator-() const {
    Bivariate r = *this;
    for (auto& x : r.c_)
      if (!is_exact_zero(x)) x = -x;
    return r;
  }
  Bivariate operator+(const Bivariate& o) const {
    check(o);
    Bivariate r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!is_exact_zero(o.c_[k])) r.c_[k] = r.c_[k] + o.c_[k];
    return r;
  }
  Bivariate operator-(const Bivariate& o) const { return *this + (-o); }
  Bivariate operator*(const Bivariate& o) const {
    check(o);
    Bivariate r(D_, proto_);
    auto sa = support(), sb = o.support();
    for (const auto& a : sa) {
      const int da = a.i + a.j;
      const C& ca = at(a.i, a.j);
      for (const auto& b : sb) {
        if (da + b.i + b.j > D_) break;
        C& slot = r.at(a.i + b.i, a.j + b.j);
        slot = slot + ca * o.at(b.i, b.j);
      }
    }
    return r;
  }
  Bivariate& operator+=(const Bivariate& o) { return *this = *this + o; }
  Bivariate& operator*=(const Bivariate& o) { return *this = *this * o; }

  template <class S>
  Bivariate scaled(const S& s) const {
    Bivariate r = *this;
    for (auto& x : r.c_)
      if (!is_exact_zero(x)) x = mul_scalar(x, s);
    return r;
  }

  Bivariate swapped() const {
    Bivariate r(D_, proto_);
    for (int i = 0; i <= D_; ++i)
      for (int j = 0; i + j <= D_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Bivariate truncated(int D) const {
    Bivariate r(D, proto_);
    for (int i = 0; i <= std::min(D, D_); ++i)
      for (int j = 0; i + j <= std::min(D, D_); ++j) r.at(i, j) = at(i, j);
    return r;
  }

  template <class F>
  auto map(F&& f) const -> Bivariate<decltype(f(std::declval<C>(), 0, 0))> {
    using R = decltype(f(std::declval<C>(), 0, 0));
    Bivariate<R> r(D_, zero_like(f(proto_, 0, 0)));
    for (int i = 0; i <= D_; ++i)
      for (int j = 0; i + j <= D_; ++j) r.at(i, j) = f(at(i, j), i, j);
    return r;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > D_) throw std::out_of_range("bivariate index outside the triangle");
    return static_cast<std::size_t>(i * (D_ + 1) - i * (i - 1) / 2 + j);
  }
  void check(const Bivariate& o) const {
    if (o.D_ != D_) throw std::invalid_argument("truncation degree mismatch");
  }

  int D_ = 0;
  C proto_{};
  std::vector<C> c_;
};

// ---------------------------------------------------------------- algorithms

// Embeds a scalar of type A as a coefficient of type B.
inline Padic embed_coeff(const Padic& /*proto*/, const Padic& x) { return x; }
template <class C>
SymPoly<C> embed_coeff(const SymPoly<C>& proto, const Padic& x) {
  return embed(proto, x);
}
template <class C>
SymPoly<C> embed_coeff(const SymPoly<C>& /*proto*/, const SymPoly<C>& x) {
  return x;
}


// a^0, a^1, ..., a^kmax (truncated).
template <class C>
std::vector<Series<C>> powers(const Series<C>& a, int kmax) {
  std::vector<Series<C>> p;
  p.push_back(Series<C>::constant(a.D(), one_like(a.proto())));
  for (int k = 1; k <= kmax; ++k) p.push_back(p.back() * a);
  return p;
}

template <class C>
std::vector<Bivariate<C>> powers(const Bivariate<C>& a, int kmax) {
  std::vector<Bivariate<C>> p;
  Bivariate<C> one(a.D(), a.proto());
  one.at(0, 0) = one_like(a.proto());
  p.push_back(one);
  for (int k = 1; k <= kmax; ++k) p.push_back(p.back() * a);
  return p;
}

// outer(inner(T)); inner must have zero constant term. Scalars of type A act
// on coefficients of type B through mul_scalar.
template <class A, class B>
Series<B> compose(const Series<A>& outer, const Series<B>& inner) {
  if (inner.nonzero(0) && !is_zero(inner[0]))
    throw std::invalid_argument("composition needs an inner series without constant term");
  if (outer.D() != inner.D()) throw std::invalid_argument("truncation degree mismatch");
  const int D = inner.D();
  Series<B> result(D, inner.proto());
  if (outer.nonzero(0)) result[0] = embed_coeff(inner.proto(), outer[0]);
  Series<B> pw = inner;
  for (int k = 1; k <= D; ++k) {
    if (pw.order() > D) break;
    if (outer.nonzero(k)) result += pw.scaled(outer[k]);
    if (k < D) pw = pw * inner;
  }
  return result;
}

template <class A, class B>
Bivariate<B> compose(const Series<A>& outer, const Bivariate<B>& inner) {
  if (inner.nonzero(0, 0) && !is_zero(inner.at(0, 0)))
    throw std::invalid_argument("composition needs an inner series without constant term");
  const int D = inner.D();
  Bivariate<B> result(D, inner.proto());
  if (outer.nonzero(0)) result.at(0, 0) = embed_coeff(inner.proto(), outer[0]);
  Bivariate<B> pw = inner;
  for (int k = 1; k <= D; ++k) {
    if (outer.nonzero(k)) result += pw.scaled(outer[k]);
    if (k < D) pw = pw * inner;
  }
  return result;
}

// sum_k outer[k] * P[k] for a precomputed power table P of the inner series;
// the result takes the outer coefficient type.
template <class A, class B>
Series<A> compose_powers(const Series<A>& outer, const std::vector<Series<B>>& P) {
  const int D = outer.D();
  Series<A> result(D, outer.proto());
  if (outer.nonzero(0)) result[0] = outer[0];
  for (int k = 1; k <= D && k < static_cast<int>(P.size()); ++k) {
    if (!outer.nonzero(k)) continue;
    for (int n = k; n <= D; ++n)
      if (P[k].nonzero(n)) result[n] = result[n] + mul_scalar(outer[k], P[k][n]);
  }
  return result;
}

template <class A, class B>
Bivariate<A> compose_powers(const Series<A>& outer, const std::vector<Bivariate<B>>& P) {
  const int D = outer.D();
  Bivariate<A> result(D, outer.proto());
  if (outer.nonzero(0)) result.at(0, 0) = outer[0];
  for (int k = 1; k <= D && k < static_cast<int>(P.size()); ++k) {
    if (!outer.nonzero(k)) continue;
    for (const auto& e : P[k].support())
      result.at(e.i, e.j) = result.at(e.i, e.j) + mul_scalar(outer[k], P[k].at(e.i, e.j));
  }
  return result;
}

// G(a(X), b(Y)) for a bivariate G and univariate a, b without constant terms.
template <class C>
Bivariate<C> substitute(const Bivariate<C>& G, const Series<C>& a, const Series<C>& b) {
  const int D = G.D();
  auto pa = powers(a, D), pb = powers(b, D);
  Bivariate<C> r(D, G.proto());
  for (int k = 0; k <= D; ++k) {
    Series<C> h(D, G.proto());
    bool any = false;
    for (int l = 0; k + l <= D; ++l) {
      if (!G.nonzero(k, l)) continue;
      h += pb[l].scaled(G.at(k, l));
      any = true;
    }
    if (any) r += Bivariate<C>::outer(pa[k], h);
  }
  return r;
}

// Compositional inverse b with a(b(T)) = T, solved degree by degree.
template <class C>
Series<C> reverse(const Series<C>& a) {
  const int D = a.D();
  if (D < 1) throw std::invalid_argument("reversion needs degree >= 1");
  if (a.nonzero(0) && !is_zero(a[0])) throw std::invalid_argument("reversion needs zero constant term");
  if (!a.nonzero(1) || !(valuation(a[1]) == Valuation::exact(Rational(0))))
    throw std::domain_error("reversion needs a unit linear coefficient");
  const C inv1 = inverse(a[1]);
  // P[k][n] = coefficient of T^n in b^k.
  std::vector<std::vector<C>> P(D + 1, std::vector<C>(D + 1, zero_like(a.proto())));
  Series<C> b(D, a.proto());
  b[1] = inv1;
  P[1][1] = inv1;
  for (int n = 2; n <= D; ++n) {
    C acc = zero_like(a.proto());
    for (int k = 2; k <= n; ++k) {
      C s = zero_like(a.proto());
      for (int j = 1; j <= n - k + 1; ++j) {
        if (is_exact_zero(b[j]) || is_exact_zero(P[k - 1][n - j])) continue;
        s = s + b[j] * P[k - 1][n - j];
      }
      P[k][n] = s;
      if (a.nonzero(k) && !is_exact_zero(s)) acc = acc + a[k] * s;
    }
    if (!is_exact_zero(acc)) b[n] = -(acc * inv1);
    P[1][n] = b[n];
  }
  return b;
}

// 1/a for a with invertible constant term.
template <class C>
Series<C> series_inverse(const Series<C>& a) {
  const int D = a.D();
  if (!a.nonzero(0)) throw std::domain_error("series with zero constant term is not invertible");
  const C inv0 = inverse(a[0]);
  Series<C> b(D, a.proto());
  b[0] = inv0;
  for (int n = 1; n <= D; ++n) {
    C acc = zero_like(a.proto());
    for (int i = 1; i <= n; ++i)
      if (a.nonzero(i) && b.nonzero(n - i)) acc = acc + a[i] * b[n - i];
    if (!is_exact_zero(acc)) b[n] = -(acc * inv0);
  }
  return b;
}

enum class DlogMode { derivative, multiplicative };

// a' (derivative mode) or a'/a (multiplicative mode; constant term must be 1),
// through degree D-1.
template <class C>
Series<C> dlog(const Series<C>& a, DlogMode mode) {
  Series<C> d = a.derivative();
  if (mode == DlogMode::derivative) return d;
  if (!a.nonzero(0) || !is_zero(a[0] - one_like(a.proto())))
    throw std::domain_error("multiplicative dlog needs constant term 1");
  return d * series_inverse(a.truncated(d.D()));
}

template <class C>
std::vector<Valuation> valuation_profile(const Series<C>& a) {
  std::vector<Valuation> v;
  for (int i = 0; i <= a.D(); ++i) v.push_back(valuation(a[i]));
  return v;
}

}  // namespace fgl
