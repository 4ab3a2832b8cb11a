#include "fgl/local_ring.hpp"

#include <algorithm>

namespace fgl {

long padic_ord(const mpz_class& x, long p) {
  if (sgn(x) == 0) return LONG_MAX;
  if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) return 0;
  mpz_class t;
  mpz_class pp(p);
  return static_cast<long>(mpz_remove(t.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

// ---------------------------------------------------------------- F_q

ResidueField::ResidueField(long p, std::vector<long> modulus)
    : p_(p), f_(static_cast<int>(modulus.size())), g_(std::move(modulus)) {
  for (auto& c : g_) c = ((c % p_) + p_) % p_;
}

long ResidueField::size() const {
  long q = 1;
  for (int i = 0; i < f_; ++i) q *= p_;
  return q;
}

ResidueField::Elem ResidueField::one() const {
  Elem r(f_, 0);
  r[0] = 1;
  return r;
}

ResidueField::Elem ResidueField::from_int(long n) const {
  Elem r(f_, 0);
  r[0] = ((n % p_) + p_) % p_;
  return r;
}

bool ResidueField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (int i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

ResidueField::Elem ResidueField::sub(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (int i = 0; i < f_; ++i) r[i] = ((a[i] - b[i]) % p_ + p_) % p_;
  return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
  if (f_ == 1) return {(a[0] * b[0]) % p_};
  std::vector<long> t(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p_;
  for (int d = 2 * f_ - 2; d >= f_; --d) {
    if (t[d] == 0) continue;
    for (int i = 0; i < f_; ++i) t[d - f_ + i] = ((t[d - f_ + i] - t[d] * g_[i]) % p_ + p_) % p_;
    t[d] = 0;
  }
  return Elem(t.begin(), t.begin() + f_);
}

ResidueField::Elem ResidueField::pow(Elem a, unsigned long n) const {
  Elem r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

ResidueField::Elem ResidueField::inverse(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in residue field");
  return pow(a, static_cast<unsigned long>(size() - 2));
}

ResidueField::Elem ResidueField::element(long index) const {
  Elem r(f_, 0);
  for (int i = 0; i < f_; ++i) {
    r[i] = index % p_;
    index /= p_;
  }
  return r;
}

ResidueField::Elem ResidueField::primitive_element() const {
  const long order = size() - 1;
  std::vector<long> primes;
  long m = order;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  for (long i = 1; i < size(); ++i) {
    Elem a = element(i);
    if (is_zero(a)) continue;
    bool ok = true;
    for (long r : primes)
      if (pow(a, static_cast<unsigned long>(order / r)) == one()) ok = false;
    if (ok) return a;
  }
  throw std::logic_error("no primitive element found");
}

namespace {

// Remainder of a by monic b over F_p; both low-to-high, b includes leading 1.
std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& b, long p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    long c = a[d] % p;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) a[d - db + i] = ((a[d - db + i] - c * b[i]) % p + p) % p;
  }
  a.resize(std::max(db, 0));
  return a;
}

}  // namespace

bool is_irreducible_mod_p(long p, const std::vector<long>& low) {
  const int f = static_cast<int>(low.size());
  if (f <= 1) return true;
  std::vector<long> g(low);
  for (auto& c : g) c = ((c % p) + p) % p;
  g.push_back(1);
  // Trial division by every monic polynomial of degree <= f/2.
  for (int d = 1; d <= f / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<long> h(d + 1, 0);
      long t = idx;
      for (int i = 0; i < d; ++i) {
        h[i] = t % p;
        t /= p;
      }
      h[d] = 1;
      auto r = poly_rem(g, h, p);
      if (std::all_of(r.begin(), r.end(), [](long x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::vector<long> default_unramified_modulus(long p, int f) {
  if (f < 1) throw std::invalid_argument("residue degree must be positive");
  long count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    // idx's base-p digits, most significant first, give g_{f-1}, ..., g_0.
    std::vector<long> low(f, 0);
    long t = idx;
    for (int i = 0; i < f; ++i) {
      low[i] = t % p;
      t /= p;
    }
    if (f > 1 && low[0] == 0) continue;
    if (is_irreducible_mod_p(p, low)) return low;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// ---------------------------------------------------------------- towers

namespace {

// Per-depth scratch space; the multiplication kernel only recurses into
// strictly smaller depths, so one buffer set per depth suffices.
struct Scratch {
  std::vector<mpz_class> tmp;
  std::vector<mpz_class> part;
};

Scratch& scratch_for(int depth) {
  thread_local std::vector<Scratch> pool(8);
  if (depth >= static_cast<int>(pool.size())) pool.resize(depth + 1);
  return pool[depth];
}

std::shared_ptr<std::vector<mpz_class>> make_ppow(long p, int cap) {
  auto v = std::make_shared<std::vector<mpz_class>>();
  const int n = 2 * cap + 8;
  v->reserve(n);
  mpz_class x = 1;
  for (int i = 0; i < n; ++i) {
    v->push_back(x);
    x *= p;
  }
  return v;
}

}  // namespace

RingPtr LocalRing::zp(long p, int cap) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (cap < 1) throw std::invalid_argument("precision cap must be positive");
  auto r = std::shared_ptr<LocalRing>(new LocalRing());
  r->kind_ = Kind::base;
  r->p_ = p;
  r->cap_ = cap;
  r->ppow_ = make_ppow(p, cap);
  r->residue_ = std::make_shared<ResidueField>(p, std::vector<long>{0});
  r->label_ = "Q_" + std::to_string(p);
  return r;
}

RingPtr LocalRing::unramified(const RingPtr& base, std::vector<long> modulus) {
  if (base->kind_ != Kind::base) throw std::invalid_argument("unramified step must sit directly over Z_p");
  if (modulus.empty()) throw std::invalid_argument("empty unramified modulus");
  if (!is_irreducible_mod_p(base->p_, modulus))
    throw std::invalid_argument("unramified modulus is not irreducible mod p");
  auto r = std::shared_ptr<LocalRing>(new LocalRing(*base));
  r->kind_ = Kind::unramified;
  r->parent_ = base;
  r->m_ = static_cast<int>(modulus.size());
  r->n_ = r->m_;
  r->f_ = r->m_;
  r->e_ = 1;
  r->depth_ = 1;
  r->rel_.clear();
  for (long c : modulus) r->rel_.push_back({mpz_class(c)});
  r->unram_modulus_ = modulus;
  r->residue_ = std::make_shared<ResidueField>(base->p_, modulus);
  r->label_ = "W(F_" + std::to_string(r->residue_->size()) + ")";
  return r;
}

RingPtr LocalRing::eisenstein(const RingPtr& base, std::vector<std::vector<mpz_class>> coeffs,
                              std::string label) {
  const int m = static_cast<int>(coeffs.size());
  if (m < 1) throw std::invalid_argument("Eisenstein polynomial must have degree >= 1");
  for (auto& c : coeffs) {
    if (static_cast<int>(c.size()) > base->n_)
      throw std::invalid_argument("coefficient has too many coordinates");
    c.resize(base->n_, 0);
  }
  // Constant term must be a uniformizer of the base, the rest in its maximal ideal.
  if (base->ord(coeffs[0].data()) != 1)
    throw std::invalid_argument("not Eisenstein: constant term is not a uniformizer of the base");
  for (int i = 1; i < m; ++i)
    if (base->ord(coeffs[i].data()) < 1)
      throw std::invalid_argument("not Eisenstein: coefficient of x^" + std::to_string(i) +
                                  " is a unit");
  auto r = std::shared_ptr<LocalRing>(new LocalRing(*base));
  r->kind_ = Kind::eisenstein;
  r->parent_ = base;
  r->m_ = m;
  r->n_ = base->n_ * m;
  r->e_ = base->e_ * m;
  r->depth_ = base->depth_ + 1;
  r->rel_ = std::move(coeffs);
  r->unram_modulus_.clear();
  r->label_ = label.empty() ? base->label_ + "(x" + std::to_string(r->depth_) + ")" : label;
  return r;
}

RingPtr LocalRing::with_cap(int cap) const {
  switch (kind_) {
    case Kind::base: {
      auto r = zp(p_, cap);
      auto mr = std::const_pointer_cast<LocalRing>(r);
      mr->label_ = label_;
      return r;
    }
    case Kind::unramified: {
      auto r = unramified(parent_->with_cap(cap), unram_modulus_);
      std::const_pointer_cast<LocalRing>(r)->label_ = label_;
      return r;
    }
    case Kind::eisenstein:
      return eisenstein(parent_->with_cap(cap), rel_, label_);
  }
  return nullptr;
}

long LocalRing::residue_size() const { return residue_->size(); }

bool LocalRing::is_ancestor_of(const LocalRing& other) const {
  for (const LocalRing* r = &other; r != nullptr; r = r->parent_.get())
    if (r == this) return true;
  return false;
}

bool LocalRing::same_shape(const LocalRing& other) const {
  if (kind_ != other.kind_ || p_ != other.p_ || m_ != other.m_ || rel_ != other.rel_) return false;
  if (!parent_) return !other.parent_;
  return other.parent_ && parent_->same_shape(*other.parent_);
}

const mpz_class& LocalRing::p_pow(int k) const {
  if (k < 0 || k >= static_cast<int>(ppow_->size()))
    throw std::out_of_range("power of p outside the precomputed range");
  return (*ppow_)[k];
}

void LocalRing::mul(const mpz_class* a, const mpz_class* b, mpz_class* out, int k) const {
  mul_into(a, b, out, k);
}

void LocalRing::mul_into(const mpz_class* a, const mpz_class* b, mpz_class* out, int k) const {
  const mpz_class& M = p_pow(k);
  if (kind_ == Kind::base) {
    mpz_mul(out->get_mpz_t(), a->get_mpz_t(), b->get_mpz_t());
    mpz_fdiv_r(out->get_mpz_t(), out->get_mpz_t(), M.get_mpz_t());
    return;
  }
  const int nb = parent_->n_;
  const int m = m_;
  const bool flat = parent_->kind_ == Kind::base;
  Scratch& s = scratch_for(depth_);
  const std::size_t tsize = static_cast<std::size_t>(2 * m - 1) * nb;
  if (s.tmp.size() < tsize) s.tmp.resize(tsize);
  if (s.part.size() < static_cast<std::size_t>(nb)) s.part.resize(nb);
  for (std::size_t t = 0; t < tsize; ++t) s.tmp[t] = 0;

  auto block_zero = [nb](const mpz_class* x) {
    for (int t = 0; t < nb; ++t)
      if (sgn(x[t]) != 0) return false;
    return true;
  };
  char za[64], zb[64];
  std::vector<char> za_big, zb_big;
  char* zap = za;
  char* zbp = zb;
  if (m > 64) {
    za_big.resize(m);
    zb_big.resize(m);
    zap = za_big.data();
    zbp = zb_big.data();
  }
  for (int i = 0; i < m; ++i) {
    zap[i] = block_zero(a + i * nb);
    zbp[i] = block_zero(b + i * nb);
  }
  for (int i = 0; i < m; ++i) {
    if (zap[i]) continue;
    for (int j = 0; j < m; ++j) {
      if (zbp[j]) continue;
      if (flat) {
        mpz_addmul(s.tmp[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      } else {
        parent_->mul_into(a + i * nb, b + j * nb, s.part.data(), k);
        mpz_class* dst = &s.tmp[static_cast<std::size_t>(i + j) * nb];
        for (int t = 0; t < nb; ++t) dst[t] += s.part[t];
      }
    }
  }
  // x^m = -(E_0 + E_1 x + ... + E_{m-1} x^{m-1})
  for (int d = 2 * m - 2; d >= m; --d) {
    mpz_class* blk = &s.tmp[static_cast<std::size_t>(d) * nb];
    for (int t = 0; t < nb; ++t) mpz_fdiv_r(blk[t].get_mpz_t(), blk[t].get_mpz_t(), M.get_mpz_t());
    if (block_zero(blk)) continue;
    for (int i = 0; i < m; ++i) {
      const auto& E = rel_[i];
      if (block_zero(E.data())) continue;
      mpz_class* dst = &s.tmp[static_cast<std::size_t>(d - m + i) * nb];
      if (flat) {
        mpz_submul(dst->get_mpz_t(), blk->get_mpz_t(), E[0].get_mpz_t());
      } else {
        parent_->mul_into(blk, E.data(), s.part.data(), k);
        for (int t = 0; t < nb; ++t) dst[t] -= s.part[t];
      }
    }
  }
  for (int t = 0; t < m * nb; ++t)
    mpz_fdiv_r(out[t].get_mpz_t(), s.tmp[t].get_mpz_t(), M.get_mpz_t());
}

int LocalRing::ord(const mpz_class* c) const {
  if (kind_ == Kind::base) {
    long o = padic_ord(c[0], p_);
    return o == LONG_MAX ? kInfiniteOrd : static_cast<int>(o);
  }
  const int nb = parent_->n_;
  int best = kInfiniteOrd;
  for (int i = 0; i < m_; ++i) {
    int o = parent_->ord(c + i * nb);
    if (o == kInfiniteOrd) continue;
    int v = kind_ == Kind::eisenstein ? o * m_ + i : o;
    best = std::min(best, v);
  }
  return best;
}

ResidueField::Elem LocalRing::residue(const mpz_class* c) const {
  switch (kind_) {
    case Kind::base: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c[0].get_mpz_t(), static_cast<unsigned long>(p_));
      return {r.get_si()};
    }
    case Kind::unramified: {
      ResidueField::Elem out(m_);
      for (int i = 0; i < m_; ++i) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c[i].get_mpz_t(), static_cast<unsigned long>(p_));
        out[i] = r.get_si();
      }
      return out;
    }
    case Kind::eisenstein:
      return parent_->residue(c);
  }
  return {};
}

std::vector<mpz_class> LocalRing::lift_residue(const ResidueField::Elem& r) const {
  std::vector<mpz_class> out(n_, 0);
  if (kind_ == Kind::base) {
    out[0] = r.at(0);
  } else if (kind_ == Kind::unramified) {
    for (int i = 0; i < m_; ++i) out[i] = r.at(i);
  } else {
    auto lower = parent_->lift_residue(r);
    std::copy(lower.begin(), lower.end(), out.begin());
  }
  return out;
}

std::vector<mpz_class> LocalRing::inverse_unit(const mpz_class* c, int k) const {
  auto r = residue(c);
  if (residue_->is_zero(r)) throw std::domain_error("element is not a unit");
  std::vector<mpz_class> y = lift_residue(residue_->inverse(r));
  std::vector<mpz_class> t(n_), y2(n_);
  // Each step doubles the number of correct varpi-adic digits.
  const long target = static_cast<long>(e_) * k;
  long digits = 1;
  while (digits < target) {
    digits = std::min(2 * digits, target);
    const int prec = static_cast<int>(std::min<long>(k, (digits + e_ - 1) / e_));
    mul(c, y.data(), t.data(), prec);
    for (auto& x : t) x = -x;
    t[0] += 2;
    mul(y.data(), t.data(), y2.data(), prec);
    y.swap(y2);
  }
  const mpz_class& M = p_pow(k);
  for (auto& x : y) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
  return y;
}

std::vector<mpz_class> LocalRing::uniformizer_power(int j, int k) const {
  std::vector<mpz_class> g(n_, 0), acc(n_, 0), tmp(n_);
  acc[0] = 1;
  if (kind_ != Kind::eisenstein) {
    acc[0] = p_pow(j) % p_pow(k);
    return acc;
  }
  g[parent_->n_] = 1;
  for (int i = 0; i < j; ++i) {
    mul(acc.data(), g.data(), tmp.data(), k);
    acc.swap(tmp);
  }
  return acc;
}

}  // namespace fgl
