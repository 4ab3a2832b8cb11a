#include "fgl/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgl {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

Tri Valuation::ge(const Rational& bound) const {
  switch (kind_) {
    case Kind::infinite:
      return Tri::yes;
    case Kind::exact:
      return value_ >= bound ? Tri::yes : Tri::no;
    case Kind::at_least:
      return value_ >= bound ? Tri::yes : Tri::unknown;
  }
  return Tri::unknown;
}

Valuation Valuation::min(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.kind_ == Kind::exact && b.kind_ == Kind::exact)
    return a.value_ <= b.value_ ? a : b;
  // At least one side is only a bound: an exact value wins when it is
  // strictly below the bound, otherwise only the bound survives.
  if (a.kind_ == Kind::exact && a.value_ <= b.value_) return a;
  if (b.kind_ == Kind::exact && b.value_ <= a.value_) return b;
  return at_least(std::min(a.value_, b.value_));
}

std::string Valuation::str() const {
  switch (kind_) {
    case Kind::infinite:
      return "inf";
    case Kind::exact:
      return to_string(value_);
    case Kind::at_least:
      return ">=" + to_string(value_);
  }
  return "?";
}

}  // namespace fgl
