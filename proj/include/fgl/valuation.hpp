#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// boost::rational's templated integer comparison recurses forever under the
// C++20 rewritten-operator rules; these exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<std::int64_t>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
}  // namespace boost

namespace fgl {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Result of a three-valued comparison against precision-limited data.
enum class Tri { yes, no, unknown };

/// A p-adic valuation as observed on a finite-precision value.
///
/// `exact` means the value is nonzero and its valuation is known.
/// `at_least` means the value is zero to the available precision, so only a
/// lower bound is known. `infinite` is an exact zero.
class Valuation {
 public:
  enum class Kind { exact, at_least, infinite };

  static Valuation exact(Rational v) { return Valuation(Kind::exact, v); }
  static Valuation at_least(Rational v) { return Valuation(Kind::at_least, v); }
  static Valuation infinite() { return Valuation(Kind::infinite, Rational(0)); }

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  bool is_exact() const { return kind_ == Kind::exact; }
  bool is_infinite() const { return kind_ == Kind::infinite; }

  // Is the valuation >= bound?
  Tri ge(const Rational& bound) const;

  // Gauss-norm style minimum of two valuations.
  static Valuation min(const Valuation& a, const Valuation& b);

  std::string str() const;

  bool operator==(const Valuation& o) const {
    return kind_ == o.kind_ && (kind_ == Kind::infinite || value_ == o.value_);
  }

 private:
  Valuation(Kind k, Rational v) : kind_(k), value_(v) {}
  Kind kind_;
  Rational value_;
};

}  // namespace fgl
