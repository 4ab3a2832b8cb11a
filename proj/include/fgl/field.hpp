#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fgl/padic.hpp"
#include "json.hpp"

namespace fgl {

/// Serialized description of L = W(F_q)[x]/(E(x)).
///
/// `eisenstein` lists E's coefficients c_0..c_{e-1} (monic term implicit);
/// each coefficient is f base-p digit strings, one per W(F_q)-coordinate.
/// When e = 1 the list may be empty, which means E(x) = x - p.
struct FieldDescriptor {
  long p = 5;
  int f = 1;
  int e = 1;
  std::vector<long> unramified_modulus;  // g_0..g_{f-1}; empty: default choice
  std::vector<std::vector<std::string>> eisenstein;
  std::string label;
};

FieldDescriptor field_descriptor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FieldDescriptor& d);
FieldDescriptor qp_descriptor(long p);

/// A valuation record for a fractional ideal; products add valuations.
struct FractionalIdealValuation {
  std::string generator_label;
  Rational ord_p;

  FractionalIdealValuation operator*(const FractionalIdealValuation& o) const {
    return {generator_label + "*" + o.generator_label, ord_p + o.ord_p};
  }
  FractionalIdealValuation inverse() const { return {"(" + generator_label + ")^-1", -ord_p}; }
};

struct LocalField {
  FieldDescriptor desc;
  RingPtr W;     // Z_p or W(F_q)
  RingPtr ring;  // O_L (equal to W when e = 1)
  Padic pi;      // the uniformizer pi_L
  std::vector<Padic> eisenstein;  // c_0..c_{e-1} as elements of W

  long p() const { return desc.p; }
  int e() const { return desc.e; }
  int f() const { return desc.f; }
  long q() const;
  const std::string& label() const { return desc.label; }
  // E'(pi_L), a generator of the different ideal.
  Padic different_generator() const;
};

LocalField build_field(const FieldDescriptor& d, int cap);

/// L~ = L(pi_0) with pi_0^{q-1} + pi_L = 0, together with p_0 in L~
/// (p_0^{p-1} + p = 0).
struct TildeField {
  RingPtr ring;
  Padic pi0;
  Padic p0;
};

TildeField build_tilde(const LocalField& L);

// Adjoin a root of the monic polynomial x^m + c_{m-1}x^{m-1} + ... + c_0
// (coefficients given low to high, all in `base`'s integers); must be Eisenstein.
RingPtr adjoin_root(const RingPtr& base, const std::vector<Padic>& coeffs, const std::string& label = "");

// Integral coordinate vector of an integral element, unreduced.
std::vector<mpz_class> integral_coords(const Padic& x);

Padic eval_poly(const std::vector<Padic>& coeffs, const Padic& x);
std::vector<Padic> poly_derivative(const std::vector<Padic>& coeffs);

// Newton iteration from `seed`; throws std::domain_error when the Hensel
// criterion v(f(seed)) > 2 v(f'(seed)) fails.
Padic hensel_root(const std::vector<Padic>& coeffs, const Padic& seed);

// The (q-1)-st root of unity in `W` reducing to `residue`, by iterating x -> x^q.
Padic teichmuller_lift(const ResidueField::Elem& residue, const RingPtr& W);

// Norm and trace from x's ring down to the ancestor `down_to`.
std::pair<Padic, Padic> norm_and_trace(const Padic& x, const RingPtr& down_to);

// Valuation of the different of the tower `ring` over its unramified base.
FractionalIdealValuation different_valuation(const RingPtr& ring, const std::string& label = "D");

nlohmann::json scalar_to_json(const Padic& x);
Padic scalar_from_json(const RingPtr& ring, const nlohmann::json& j);

}  // namespace fgl
