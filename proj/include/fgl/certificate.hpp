#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgl/series.hpp"
#include "json.hpp"

namespace fgl {

enum class CertStatus { pass, fail, precision_exhausted };
std::string to_string(CertStatus s);

struct Failure {
  std::string location;
  std::string expected;
  std::string got;
};

/// A machine-checked assertion with first-failure reporting.
struct Certificate {
  std::string name;
  CertStatus status = CertStatus::pass;
  std::optional<Failure> first_failure;
  std::string note;

  bool passed() const { return status == CertStatus::pass; }
  // Combine: a definite failure wins over exhausted precision.
  void absorb(const Certificate& o);
};

nlohmann::json to_json(const Certificate& c);

Certificate make_pass(std::string name, std::string note = "");
Certificate make_fail(std::string name, Failure f, std::string note = "");

/// Thrown by constructors whose integrality certificate contradicts a theorem.
class CertificateFailure : public std::runtime_error {
 public:
  explicit CertificateFailure(Certificate c)
      : std::runtime_error(c.name + " failed" +
                           (c.first_failure ? " at " + c.first_failure->location + ": expected " +
                                                  c.first_failure->expected + ", got " + c.first_failure->got
                                            : std::string())),
        cert(std::move(c)) {}
  Certificate cert;
};

// Throws CertificateFailure unless c passed; PrecisionExhausted if it was inconclusive.
void require(const Certificate& c);

inline std::string scalar_str(const Padic& x) { return x.str(); }
template <class C>
std::string scalar_str(const SymPoly<C>& x) {
  if (x.terms().empty()) return "0";
  std::string s;
  for (const auto& [e, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + scalar_str(c) + ")";
    if (e != 0) s += "*" + x.name() + (e == 1 ? "" : "^" + std::to_string(e));
  }
  return s;
}

namespace detail {

// Folds one coefficient test into the certificate.
template <class C>
void record(Certificate& cert, const C& c, const Rational& bound, const std::string& where) {
  Tri t = valuation(c).ge(bound);
  if (t == Tri::yes) return;
  if (t == Tri::no) {
    if (cert.status != CertStatus::fail)
      cert.first_failure = Failure{where, "ord >= " + to_string(bound), "ord " + valuation(c).str()};
    cert.status = CertStatus::fail;
  } else if (cert.status == CertStatus::pass) {
    cert.status = CertStatus::precision_exhausted;
    cert.first_failure = Failure{where, "ord >= " + to_string(bound), "ord " + valuation(c).str()};
  }
}

inline std::string mono(int n) { return "T^" + std::to_string(n); }
inline std::string mono(int i, int j) { return "X^" + std::to_string(i) + "Y^" + std::to_string(j); }

}  // namespace detail

/// Every coefficient of degree in [from, D] has ord_p >= bound.
template <class C>
Certificate check_valuation(std::string name, const Series<C>& s, const Rational& bound, int from = 0) {
  Certificate cert;
  cert.name = std::move(name);
  for (int n = from; n <= s.D(); ++n)
    if (s.nonzero(n)) detail::record(cert, s[n], bound, detail::mono(n));
  return cert;
}

template <class C>
Certificate check_valuation(std::string name, const Bivariate<C>& s, const Rational& bound) {
  Certificate cert;
  cert.name = std::move(name);
  for (const auto& e : s.support()) detail::record(cert, s.at(e.i, e.j), bound, detail::mono(e.i, e.j));
  return cert;
}

/// a == b modulo p^digits, coefficientwise.
template <class C>
Certificate check_equal(std::string name, const Series<C>& a, const Series<C>& b, const Rational& digits) {
  Certificate cert = check_valuation(std::move(name), a - b, digits);
  if (cert.first_failure) {
    const int n = std::stoi(cert.first_failure->location.substr(2));
    cert.first_failure->expected = scalar_str(b[n]);
    cert.first_failure->got = scalar_str(a[n]);
  }
  return cert;
}

template <class C>
Certificate check_equal(std::string name, const Bivariate<C>& a, const Bivariate<C>& b, const Rational& digits) {
  Certificate cert;
  cert.name = std::move(name);
  const Bivariate<C> d = a - b;
  for (const auto& e : d.support()) {
    const bool had = cert.first_failure.has_value();
    const CertStatus before = cert.status;
    detail::record(cert, d.at(e.i, e.j), digits, detail::mono(e.i, e.j));
    if ((!had && cert.first_failure) || (before != CertStatus::fail && cert.status == CertStatus::fail)) {
      cert.first_failure->expected = scalar_str(b.at(e.i, e.j));
      cert.first_failure->got = scalar_str(a.at(e.i, e.j));
    }
  }
  return cert;
}

}  // namespace fgl
