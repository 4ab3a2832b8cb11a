#pragma once

#include <string>
#include <vector>

#include "fgl/local_ring.hpp"
#include "fgl/valuation.hpp"

namespace fgl {

/// An element of Frac(R) for a tower ring R, at capped relative precision.
///
/// A nonzero value is p^shift * c where c is a coordinate vector known modulo
/// p^rel and not divisible by p. Additional states: an exact zero, and an
/// inexact zero O(p^shift) produced by cancellation. Exact zeros propagate
/// through products so that structurally sparse series stay sparse.
class Padic {
 public:
  Padic() = default;  // exact zero not yet bound to a ring
  Padic(RingPtr ring, long n);
  Padic(RingPtr ring, const mpz_class& n);

  static Padic zero(RingPtr ring);
  static Padic inexact_zero(RingPtr ring, long shift);
  static Padic from_rational(RingPtr ring, const Rational& r);
  // p^shift * coords, with coords known modulo p^rel (rel <= 0 means the cap).
  static Padic from_coords(RingPtr ring, std::vector<mpz_class> coords, long shift = 0, int rel = 0);
  // The class of the generator of `level`'s top step (p for Z_p), as an element of `level`.
  static Padic generator(RingPtr level);

  const RingPtr& ring() const { return ring_; }
  bool is_exact_zero() const { return rel_ < 0; }
  bool is_zero() const { return rel_ <= 0; }
  Valuation valuation() const;
  // ord in units of 1/e; only meaningful for nonzero values.
  long ord_units() const;
  long shift() const { return shift_; }
  int rel_precision() const { return rel_ < 0 ? 0 : rel_; }
  // Absolute precision in powers of p (LONG_MAX for an exact zero).
  long abs_precision() const;
  const std::vector<mpz_class>& coords() const { return c_; }

  Padic operator-() const;
  Padic operator+(const Padic& o) const;
  Padic operator-(const Padic& o) const;
  Padic operator*(const Padic& o) const;
  Padic operator/(const Padic& o) const;
  Padic& operator+=(const Padic& o) { return *this = *this + o; }
  Padic& operator-=(const Padic& o) { return *this = *this - o; }
  Padic& operator*=(const Padic& o) { return *this = *this * o; }

  Padic inverse() const;
  Padic pow(long n) const;
  Padic mul_p_power(long k) const;  // * p^k, exact
  Padic mul_int(long n) const;

  // Same value viewed in an overring (`ring` must have this ring as ancestor).
  Padic lift_to(const RingPtr& ring) const;
  // Same coordinates in a ring of identical shape but different cap.
  Padic transfer(const RingPtr& ring) const;
  // Same value in the smallest ancestor ring containing it.
  Padic compact() const;
  // Truncate the relative precision.
  Padic with_rel(int rel) const;

  // Residue of an integral element.
  ResidueField::Elem residue() const;

  // Does `finer` (same value computed at higher precision) agree with this
  // value to this value's declared precision?
  bool agrees_with(const Padic& finer) const;

  // Base-p digit strings of the coordinates of c, most significant digit first.
  std::vector<std::string> unit_digits() const;
  std::string str() const;

 private:
  Padic(RingPtr ring, long shift, int rel, std::vector<mpz_class> c)
      : ring_(std::move(ring)), shift_(shift), rel_(rel), c_(std::move(c)) {}
  void normalize();
  static const RingPtr& common_ring(const Padic& a, const Padic& b);

  RingPtr ring_;
  long shift_ = 0;
  int rel_ = -1;  // -1: exact zero, 0: inexact zero
  std::vector<mpz_class> c_;
};

// Helpers shared by generic series code.
inline Padic zero_like(const Padic& x) { return Padic::zero(x.ring()); }
inline Padic one_like(const Padic& x) { return Padic(x.ring(), 1); }
inline Padic from_int_like(const Padic& x, long n) { return Padic(x.ring(), n); }
inline Valuation valuation(const Padic& x) { return x.valuation(); }
inline bool is_exact_zero(const Padic& x) { return x.is_exact_zero(); }

// Base-p digits of a nonnegative integer, most significant first ("0" for 0).
std::string base_p_digits(const mpz_class& x, long p);
mpz_class parse_base_p_digits(const std::string& s, long p);

}  // namespace fgl
