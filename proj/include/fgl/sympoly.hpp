#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fgl/padic.hpp"

namespace fgl {

struct SymbolInfo {
  std::string name;
  int degree = 0;        // grading degree, if any
  bool laurent = false;  // whether the symbol is invertible
};
using SymbolPtr = std::shared_ptr<const SymbolInfo>;

inline SymbolPtr make_symbol(std::string name, int degree = 0, bool laurent = false) {
  return std::make_shared<SymbolInfo>(SymbolInfo{std::move(name), degree, laurent});
}

// Scalar embedding and scalar multiplication hooks for generic series code.
inline Padic embed(const Padic& /*proto*/, const Padic& x) { return x; }
inline Padic mul_scalar(const Padic& x, const Padic& s) { return x * s; }
inline Padic inverse(const Padic& x) { return x.inverse(); }
inline bool is_zero(const Padic& x) { return x.is_zero(); }

/// Finitely supported (Laurent) polynomials sum_k a_k s^k in one symbol s.
/// Terms are kept sorted by exponent; exact-zero coefficients are dropped.
template <class C>
class SymPoly {
 public:
  using Term = std::pair<long, C>;

  SymPoly() = default;
  SymPoly(SymbolPtr sym, const C& proto) : sym_(std::move(sym)), zero_(zero_like(proto)) {}

  static SymPoly constant(SymbolPtr sym, const C& c) { return monomial(std::move(sym), c, 0); }
  static SymPoly monomial(SymbolPtr sym, const C& c, long k) {
    SymPoly r(std::move(sym), c);
    if (!fgl::is_exact_zero(c)) r.terms_.push_back({k, c});
    return r;
  }
  static SymPoly symbol(SymbolPtr sym, const C& proto) { return monomial(std::move(sym), one_like(proto), 1); }

  const SymbolPtr& sym() const { return sym_; }
  const C& base_zero() const { return zero_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_exact_zero() const { return terms_.empty(); }
  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return fgl::is_zero(t.second); });
  }
  long min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
  long max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

  C coeff(long k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, long e) { return t.first < e; });
    return it != terms_.end() && it->first == k ? it->second : zero_;
  }

  SymPoly operator-() const {
    SymPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  SymPoly operator+(const SymPoly& o) const {
    SymPoly r = shell(o);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        r.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        r.terms_.push_back(*b++);
      } else {
        C s = a->second + b->second;
        if (!fgl::is_exact_zero(s)) r.terms_.push_back({a->first, s});
        ++a;
        ++b;
      }
    }
    return r;
  }
  SymPoly operator-(const SymPoly& o) const { return *this + (-o); }

  SymPoly operator*(const SymPoly& o) const {
    SymPoly r = shell(o);
    if (terms_.empty() || o.terms_.empty()) return r;
    const long lo = min_exp() + o.min_exp();
    const long hi = max_exp() + o.max_exp();
    std::vector<C> acc(static_cast<std::size_t>(hi - lo + 1), r.zero_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
        slot = slot + ca * cb;
      }
    for (long k = lo; k <= hi; ++k) {
      auto& c = acc[static_cast<std::size_t>(k - lo)];
      if (!fgl::is_exact_zero(c)) r.terms_.push_back({k, std::move(c)});
    }
    return r;
  }
  SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
  SymPoly& operator-=(const SymPoly& o) { return *this = *this - o; }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

  SymPoly scaled(const C& s) const {
    SymPoly r = *this;
    r.terms_.clear();
    for (const auto& [e, c] : terms_) {
      C v = mul_scalar(c, s);
      if (!fgl::is_exact_zero(v)) r.terms_.push_back({e, v});
    }
    return r;
  }

  // The substitution s -> lambda * s.
  SymPoly scale_symbol(const C& lambda) const {
    SymPoly r = *this;
    r.terms_.clear();
    for (const auto& [e, c] : terms_) {
      C v = c * (e >= 0 ? pow_of(lambda, e) : inverse(pow_of(lambda, -e)));
      if (!fgl::is_exact_zero(v)) r.terms_.push_back({e, v});
    }
    return r;
  }

  C evaluate(const C& x) const {
    C acc = zero_;
    for (const auto& [e, c] : terms_) acc = acc + c * (e >= 0 ? pow_of(x, e) : inverse(pow_of(x, -e)));
    return acc;
  }

  SymPoly inverse_monomial() const {
    if (terms_.size() != 1) throw std::domain_error("only monomials are invertible in " + name());
    const auto& [e, c] = terms_[0];
    if (e != 0 && !(sym_ && sym_->laurent)) throw std::domain_error(name() + " is not invertible");
    return monomial(sym_, inverse(c), -e);
  }

  std::string name() const { return sym_ ? sym_->name : "s"; }

 private:
  SymPoly shell(const SymPoly& o) const {
    SymPoly r;
    r.sym_ = sym_ ? sym_ : o.sym_;
    r.zero_ = sym_ ? zero_ : o.zero_;
    return r;
  }
  static C pow_of(const C& x, long n) {
    C r = one_like(x);
    for (long i = 0; i < n; ++i) r = r * x;
    return r;
  }

  SymbolPtr sym_;
  C zero_{};
  std::vector<Term> terms_;
};

using PadicPoly = SymPoly<Padic>;

template <class C>
SymPoly<C> zero_like(const SymPoly<C>& x) {
  return SymPoly<C>(x.sym(), x.base_zero());
}
template <class C>
SymPoly<C> one_like(const SymPoly<C>& x) {
  return SymPoly<C>::constant(x.sym(), one_like(x.base_zero()));
}
template <class C>
SymPoly<C> from_int_like(const SymPoly<C>& x, long n) {
  return SymPoly<C>::constant(x.sym(), from_int_like(x.base_zero(), n));
}
template <class C>
bool is_exact_zero(const SymPoly<C>& x) {
  return x.is_exact_zero();
}
template <class C>
bool is_zero(const SymPoly<C>& x) {
  return x.is_zero();
}
// Gauss valuation: the minimum over coefficients.
template <class C>
Valuation valuation(const SymPoly<C>& x) {
  Valuation v = Valuation::infinite();
  for (const auto& t : x.terms()) v = Valuation::min(v, valuation(t.second));
  return v;
}
template <class C>
SymPoly<C> embed(const SymPoly<C>& proto, const Padic& x) {
  return SymPoly<C>::constant(proto.sym(), embed(proto.base_zero(), x));
}
template <class C>
SymPoly<C> mul_scalar(const SymPoly<C>& x, const Padic& s) {
  return x.scaled(embed(x.base_zero(), s));
}
template <class C>
SymPoly<C> mul_scalar(const SymPoly<C>& x, const SymPoly<C>& s) {
  return x * s;
}
template <class C>
SymPoly<C> inverse(const SymPoly<C>& x) {
  return x.inverse_monomial();
}

}  // namespace fgl
