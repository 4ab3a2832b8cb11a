#pragma once

#include <climits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fgl {

/// Raised when a computation needs more p-adic digits than the working
/// precision still carries.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The residue field F_q = F_p[t]/(g), g monic irreducible mod p.
/// Elements are coefficient vectors of length f with entries in [0, p).
class ResidueField {
 public:
  using Elem = std::vector<long>;

  ResidueField(long p, std::vector<long> modulus);  // modulus: g_0..g_{f-1}, monic

  long prime() const { return p_; }
  int degree() const { return f_; }
  long size() const;

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const;
  Elem from_int(long n) const;
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, unsigned long n) const;
  Elem inverse(const Elem& a) const;
  // Enumerates F_q in a fixed order (index i <-> base-p digits of i).
  Elem element(long index) const;
  // A generator of the cyclic group F_q^x.
  Elem primitive_element() const;

 private:
  long p_;
  int f_;
  std::vector<long> g_;
};

// Smallest monic irreducible polynomial of degree f over F_p in lexicographic
// order of (g_{f-1}, ..., g_0); returned as g_0..g_{f-1}.
std::vector<long> default_unramified_modulus(long p, int f);
bool is_irreducible_mod_p(long p, const std::vector<long>& monic_low_coeffs);

class LocalRing;
using RingPtr = std::shared_ptr<const LocalRing>;

/// A node in a tower Z_p = R_0 < R_1 < ... of complete local rings.
///
/// Each non-base node is R_{k-1}[x]/(E(x)) for a monic E of degree m. The
/// first step above Z_p may be unramified (E lifts an irreducible polynomial
/// over F_p); every later step is Eisenstein. An element of R_k is stored as
/// m blocks of R_{k-1} coordinates, block i being the coefficient of x^i, so
/// R_j embeds in R_k as the leading run of coordinates.
///
/// All coordinate kernels work on integers reduced into [0, p^k).
class LocalRing {
 public:
  enum class Kind { base, unramified, eisenstein };
  static constexpr int kInfiniteOrd = INT_MAX;

  static RingPtr zp(long p, int cap);
  static RingPtr unramified(const RingPtr& base, std::vector<long> modulus);
  // coeffs[i] are the coordinates (over `base`) of the coefficient of x^i,
  // i < m; the polynomial is monic of degree coeffs.size().
  static RingPtr eisenstein(const RingPtr& base, std::vector<std::vector<mpz_class>> coeffs,
                            std::string label = "");

  // Same tower shape and relations, different relative precision cap.
  RingPtr with_cap(int cap) const;

  long prime() const { return p_; }
  int cap() const { return cap_; }
  int degree() const { return n_; }
  int ramification() const { return e_; }
  int residue_degree() const { return f_; }
  long residue_size() const;
  int step_degree() const { return m_; }
  Kind kind() const { return kind_; }
  const RingPtr& parent() const { return parent_; }
  int depth() const { return depth_; }
  const std::string& label() const { return label_; }
  const ResidueField& residue_field() const { return *residue_; }
  const std::vector<std::vector<mpz_class>>& relation() const { return rel_; }

  bool is_ancestor_of(const LocalRing& other) const;  // reflexive
  bool same_shape(const LocalRing& other) const;

  const mpz_class& p_pow(int k) const;

  // out = a*b reduced mod p^k; out may not alias a or b.
  void mul(const mpz_class* a, const mpz_class* b, mpz_class* out, int k) const;
  // Valuation of c in units of 1/e; kInfiniteOrd if c == 0.
  int ord(const mpz_class* c) const;
  // Reduction of an integral element modulo the maximal ideal.
  ResidueField::Elem residue(const mpz_class* c) const;
  std::vector<mpz_class> lift_residue(const ResidueField::Elem& r) const;
  // Inverse of a unit modulo p^k by Newton iteration from the residue inverse.
  std::vector<mpz_class> inverse_unit(const mpz_class* c, int k) const;
  // Coordinates of varpi^j where varpi is the top uniformizer.
  std::vector<mpz_class> uniformizer_power(int j, int k) const;

 private:
  LocalRing() = default;
  void mul_into(const mpz_class* a, const mpz_class* b, mpz_class* out, int k) const;

  Kind kind_ = Kind::base;
  long p_ = 2;
  int cap_ = 1;
  int n_ = 1;
  int e_ = 1;
  int f_ = 1;
  int m_ = 1;
  int depth_ = 0;
  RingPtr parent_;
  std::vector<std::vector<mpz_class>> rel_;
  std::vector<long> unram_modulus_;
  std::shared_ptr<const ResidueField> residue_;
  std::shared_ptr<std::vector<mpz_class>> ppow_;
  std::string label_;
};

long padic_ord(const mpz_class& x, long p);  // LONG_MAX for 0

}  // namespace fgl
