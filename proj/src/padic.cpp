#include "fgl/padic.hpp"

#include <algorithm>

namespace fgl {

namespace {

bool all_divisible(const std::vector<mpz_class>& c, long p) {
  for (const auto& x : c)
    if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) return false;
  return true;
}

void reduce(std::vector<mpz_class>& c, const mpz_class& M) {
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
}

// out = a * b where a lives in the ancestor A of R; blockwise in R's tower.
void mul_by_ancestor(const LocalRing& A, const LocalRing& R, const mpz_class* a, const mpz_class* b,
                     mpz_class* out, int k) {
  if (&A == &R) {
    R.mul(a, b, out, k);
    return;
  }
  const LocalRing& P = *R.parent();
  const int d = P.degree();
  for (int i = 0; i < R.step_degree(); ++i) {
    const mpz_class* bi = b + static_cast<std::ptrdiff_t>(i) * d;
    mpz_class* oi = out + static_cast<std::ptrdiff_t>(i) * d;
    if (std::all_of(bi, bi + d, [](const mpz_class& x) { return sgn(x) == 0; })) {
      std::fill(oi, oi + d, 0);
      continue;
    }
    mul_by_ancestor(A, P, a, bi, oi, k);
  }
}

}  // namespace

std::string base_p_digits(const mpz_class& x, long p) {
  if (p > 62) throw std::invalid_argument("digit strings are only supported for p <= 62");
  return x.get_str(static_cast<int>(p));
}

mpz_class parse_base_p_digits(const std::string& s, long p) {
  if (p > 62) throw std::invalid_argument("digit strings are only supported for p <= 62");
  mpz_class x;
  if (x.set_str(s, static_cast<int>(p)) != 0)
    throw std::invalid_argument("malformed base-" + std::to_string(p) + " digit string: " + s);
  return x;
}

Padic::Padic(RingPtr ring, long n) : Padic(std::move(ring), mpz_class(n)) {}

Padic::Padic(RingPtr ring, const mpz_class& n) : ring_(std::move(ring)) {
  if (sgn(n) == 0) return;
  c_.assign(ring_->degree(), 0);
  c_[0] = n;
  shift_ = 0;
  rel_ = ring_->cap();
  normalize();
}

Padic Padic::zero(RingPtr ring) {
  Padic z;
  z.ring_ = std::move(ring);
  return z;
}

Padic Padic::inexact_zero(RingPtr ring, long shift) { return Padic(std::move(ring), shift, 0, {}); }

Padic Padic::from_rational(RingPtr ring, const Rational& r) {
  Padic num(ring, mpz_class(static_cast<long>(r.numerator())));
  if (r.denominator() == 1) return num;
  return num / Padic(ring, mpz_class(static_cast<long>(r.denominator())));
}

Padic Padic::from_coords(RingPtr ring, std::vector<mpz_class> coords, long shift, int rel) {
  if (static_cast<int>(coords.size()) != ring->degree())
    throw std::invalid_argument("coordinate vector has the wrong length");
  if (rel <= 0 || rel > ring->cap()) rel = ring->cap();
  if (std::all_of(coords.begin(), coords.end(), [](const mpz_class& x) { return sgn(x) == 0; }))
    return inexact_zero(ring, shift + rel);
  Padic x(std::move(ring), shift, rel, std::move(coords));
  x.normalize();
  return x;
}

Padic Padic::generator(RingPtr level) {
  if (level->kind() == LocalRing::Kind::base) return Padic(level, level->prime());
  std::vector<mpz_class> c(level->degree(), 0);
  c[level->parent()->degree()] = 1;
  return from_coords(std::move(level), std::move(c));
}

void Padic::normalize() {
  if (rel_ <= 0) return;
  const long p = ring_->prime();
  reduce(c_, ring_->p_pow(rel_));
  while (rel_ > 0 && all_divisible(c_, p)) {
    bool zero = true;
    for (auto& x : c_) {
      if (sgn(x) != 0) zero = false;
      mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    }
    ++shift_;
    --rel_;
    if (zero) {
      shift_ += rel_;
      rel_ = 0;
    }
  }
  if (rel_ == 0) c_.clear();
}

long Padic::ord_units() const {
  if (rel_ <= 0) throw std::logic_error("ord_units of a zero value");
  return shift_ * ring_->ramification() + ring_->ord(c_.data());
}

Valuation Padic::valuation() const {
  if (rel_ < 0) return Valuation::infinite();
  if (rel_ == 0) return Valuation::at_least(Rational(shift_));
  return Valuation::exact(Rational(ord_units(), ring_->ramification()));
}

long Padic::abs_precision() const { return rel_ < 0 ? LONG_MAX : shift_ + rel_; }

const RingPtr& Padic::common_ring(const Padic& a, const Padic& b) {
  if (!a.ring_) return b.ring_;
  if (!b.ring_ || a.ring_ == b.ring_) return a.ring_;
  if (a.ring_->is_ancestor_of(*b.ring_)) return b.ring_;
  if (b.ring_->is_ancestor_of(*a.ring_)) return a.ring_;
  throw std::invalid_argument("operands live in unrelated rings: " + a.ring_->label() + " and " +
                              b.ring_->label());
}

Padic Padic::lift_to(const RingPtr& ring) const {
  if (ring_ == ring || !ring) return *this;
  if (!ring_) return zero(ring);
  if (!ring_->is_ancestor_of(*ring))
    throw std::invalid_argument("cannot lift from " + ring_->label() + " to " + ring->label());
  Padic r = *this;
  r.ring_ = ring;
  if (rel_ > 0) r.c_.resize(ring->degree(), 0);
  return r;
}

Padic Padic::transfer(const RingPtr& ring) const {
  if (ring_ && !ring_->same_shape(*ring)) throw std::invalid_argument("transfer between different towers");
  Padic r = *this;
  r.ring_ = ring;
  if (rel_ > ring->cap()) {
    r.rel_ = ring->cap();
    r.normalize();
  }
  return r;
}

Padic Padic::with_rel(int rel) const {
  if (rel_ <= rel) return *this;
  Padic r = *this;
  r.rel_ = std::max(rel, 0);
  if (r.rel_ == 0) r.c_.clear();
  r.normalize();
  return r;
}

Padic Padic::operator-() const {
  if (rel_ <= 0) return *this;
  Padic r = *this;
  for (auto& x : r.c_) x = -x;
  reduce(r.c_, ring_->p_pow(rel_));
  return r;
}

Padic Padic::operator+(const Padic& o) const {
  if (rel_ < 0 && o.rel_ < 0) return zero(common_ring(*this, o));
  if (rel_ < 0) return o.ring_ ? o : o.lift_to(ring_);
  if (o.rel_ < 0) return *this;
  const RingPtr& R = common_ring(*this, o);
  const Padic& a0 = shift_ <= o.shift_ ? *this : o;
  const Padic& b0 = shift_ <= o.shift_ ? o : *this;
  const long gap = b0.shift_ - a0.shift_;
  // Inexact zeros only contribute a precision bound.
  if (a0.rel_ == 0 || b0.rel_ == 0) {
    long abs = std::min(a0.abs_precision(), b0.abs_precision());
    const Padic& nz = a0.rel_ == 0 ? b0 : a0;
    if (nz.rel_ == 0 || nz.shift_ >= abs) return inexact_zero(R, abs);
    return nz.lift_to(R).with_rel(static_cast<int>(abs - nz.shift_));
  }
  if (gap >= a0.rel_) return a0.lift_to(R);
  const int rel = static_cast<int>(std::min<long>(a0.rel_, gap + b0.rel_));
  Padic r(R, a0.shift_, rel, std::vector<mpz_class>(R->degree(), 0));
  const mpz_class& pg = R->p_pow(static_cast<int>(gap));
  for (std::size_t i = 0; i < a0.c_.size(); ++i) r.c_[i] = a0.c_[i];
  for (std::size_t i = 0; i < b0.c_.size(); ++i) mpz_addmul(r.c_[i].get_mpz_t(), b0.c_[i].get_mpz_t(), pg.get_mpz_t());
  r.normalize();
  return r;
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const {
  const RingPtr& R = common_ring(*this, o);
  if (rel_ < 0 || o.rel_ < 0) return zero(R);
  // O(p^a) * x has valuation >= a + shift(x).
  if (rel_ == 0 || o.rel_ == 0) return inexact_zero(R, shift_ + o.shift_);
  const int rel = std::min(rel_, o.rel_);
  Padic r(R, shift_ + o.shift_, rel, std::vector<mpz_class>(R->degree()));
  if (ring_ == o.ring_) {
    R->mul(c_.data(), o.c_.data(), r.c_.data(), rel);
  } else if (ring_->degree() == 1 || o.ring_->degree() == 1) {
    const Padic& s = ring_->degree() == 1 ? *this : o;
    const Padic& v = ring_->degree() == 1 ? o : *this;
    for (std::size_t i = 0; i < v.c_.size(); ++i) r.c_[i] = v.c_[i] * s.c_[0];
    r.c_.resize(R->degree(), 0);
  } else {
    const Padic& s = ring_ == R ? o : *this;
    const Padic& v = ring_ == R ? *this : o;
    mul_by_ancestor(*s.ring_, *R, s.c_.data(), v.c_.data(), r.c_.data(), rel);
  }
  r.normalize();
  return r;
}

Padic Padic::compact() const {
  if (rel_ <= 0) return *this;
  Padic r = *this;
  while (r.ring_->parent()) {
    const int d = r.ring_->parent()->degree();
    if (!std::all_of(r.c_.begin() + d, r.c_.end(), [](const mpz_class& x) { return sgn(x) == 0; })) break;
    r.c_.resize(d);
    r.ring_ = r.ring_->parent();
  }
  return r;
}

Padic Padic::inverse() const {
  if (rel_ < 0) throw std::domain_error("division by exact zero");
  if (rel_ == 0) throw PrecisionExhausted("division by a value indistinguishable from zero");
  const int e = ring_->ramification();
  const int s = ring_->ord(c_.data());
  if (s == 0) return Padic(ring_, -shift_, rel_, ring_->inverse_unit(c_.data(), rel_));
  // c has ord s in (0, e): c * varpi^(e-s) = p * u with u a unit known mod p^(rel-1).
  if (rel_ < 2) throw PrecisionExhausted("not enough precision to invert a ramified element");
  const int rel = rel_ - 1;
  auto wp = ring_->uniformizer_power(e - s, rel_);
  std::vector<mpz_class> t(ring_->degree());
  ring_->mul(c_.data(), wp.data(), t.data(), rel_);
  for (auto& x : t) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(ring_->prime()));
  auto uinv = ring_->inverse_unit(t.data(), rel);
  Padic r(ring_, -shift_ - 1, rel, std::vector<mpz_class>(ring_->degree()));
  ring_->mul(wp.data(), uinv.data(), r.c_.data(), rel);
  r.normalize();
  return r;
}

Padic Padic::operator/(const Padic& o) const {
  const RingPtr& R = common_ring(*this, o);
  if (o.rel_ < 0) throw std::domain_error("division by exact zero");
  if (rel_ < 0) return zero(R);
  return *this * o.lift_to(R).inverse();
}

Padic Padic::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Padic result(ring_, 1);
  Padic base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Padic Padic::mul_p_power(long k) const {
  Padic r = *this;
  if (rel_ >= 0) r.shift_ += k;
  return r;
}

Padic Padic::mul_int(long n) const {
  if (rel_ < 0) return *this;
  return *this * Padic(ring_, n);
}

ResidueField::Elem Padic::residue() const {
  if (rel_ < 0) return ring_->residue_field().zero();
  if (shift_ < 0) throw std::domain_error("residue of a non-integral element");
  if (shift_ > 0 || rel_ == 0) {
    if (rel_ == 0 && shift_ <= 0) throw PrecisionExhausted("residue of an unresolved value");
    return ring_->residue_field().zero();
  }
  return ring_->residue(c_.data());
}

bool Padic::agrees_with(const Padic& finer) const {
  if (rel_ < 0) return finer.rel_ < 0;
  if (finer.rel_ < 0) return true;
  if (rel_ == 0) return finer.shift_ >= shift_;
  if (finer.rel_ == 0) return finer.shift_ >= shift_ + rel_;
  if (finer.shift_ != shift_) return false;
  const mpz_class& M = ring_->p_pow(std::min(rel_, finer.rel_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    mpz_class d = c_[i] - finer.c_[i];
    if (!mpz_divisible_p(d.get_mpz_t(), M.get_mpz_t())) return false;
  }
  return true;
}

std::vector<std::string> Padic::unit_digits() const {
  std::vector<std::string> out;
  for (const auto& x : c_) out.push_back(base_p_digits(x, ring_->prime()));
  return out;
}

std::string Padic::str() const {
  if (rel_ < 0) return "0";
  const std::string ps = std::to_string(ring_ ? ring_->prime() : 0);
  if (rel_ == 0) return "O(" + ps + "^" + std::to_string(shift_) + ")";
  std::string body;
  if (c_.size() == 1) {
    body = c_[0].get_str();
  } else {
    body = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) body += (i ? "," : "") + c_[i].get_str();
    body += "]";
  }
  std::string s = shift_ == 0 ? body : ps + "^" + std::to_string(shift_) + "*" + body;
  return s + " + O(" + ps + "^" + std::to_string(shift_ + rel_) + ")";
}

}  // namespace fgl
