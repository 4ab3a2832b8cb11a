#pragma once

#include <random>
#include <string>
#include <vector>

#include "fgl/formal_group.hpp"

namespace fgl {

/// The pair (kappa_L(sigma), kappa_Qp(sigma)) with kappa_Qp the norm of kappa_L.
struct GaloisUnit {
  Padic kappa_L;
  Padic kappa_Qp;
};

RingPtr root_ring(const RingPtr& R);

GaloisUnit galois_unit(const LocalField& L, const Padic& kappa_L);
Padic random_unit(const RingPtr& R, std::mt19937_64& rng);
GaloisUnit random_galois_unit(const LocalField& L, std::mt19937_64& rng);

/// A period kept as a Laurent symbol of valuation zero. sigma rescales it by
/// kappa_L / kappa_Qp.
struct SymbolicPeriod {
  SymbolPtr symbol;
  Rational declared_valuation{0};

  Padic multiplier(const GaloisUnit& s) const { return s.kappa_L / s.kappa_Qp; }
};
SymbolicPeriod omega0_symbol(const std::string& name = "Omega0");

/// pi_0 with pi_0^{q-1} + pi = 0, certified to be a root of pi T + T^q.
std::pair<Padic, Certificate> primitive_torsion(const LocalField& L, const TildeField& T, const Rational& digits);

/// The laws and series entering eps^0 = exp_{G~m}(Omega0 log_{L~}(T)).
struct Epsilon0 {
  FormalGroupLaw F;   // special Lubin–Tate law of L
  FormalGroupLaw Ft;  // F rescaled by pi_0
  FormalGroupLaw Gt;  // multiplicative law rescaled by p_0
  SymbolicPeriod omega;
  Padic p0;
  Series<PadicPoly> series;
  std::vector<Certificate> certificates;
};

Epsilon0 epsilon0_series(const LocalField& L, const TildeField& T, int D, const Rational& digits,
                         const SymbolicPeriod& omega = omega0_symbol());

/// eps(F~(X,Y)) = eps(X) + eps(Y) + p_0 eps(X) eps(Y).
Certificate epsilon0_homomorphism_check(const Epsilon0& E, const Rational& digits);

/// ((1 + p0 S)^c - 1)/p0, the G~m endomorphism [c] applied to S.
Series<PadicPoly> gm_tilde_endomorphism_apply(const Padic& p0, const Padic& c, const Series<PadicPoly>& S);

/// [kappa_Qp]^{-1}_{G~m} ∘ eps^0 ∘ [kappa_L]_{L~} = sigma(eps^0).
Certificate equivariance_check(const Epsilon0& E, const GaloisUnit& sigma, const Rational& digits);

/// beta(T) = exp(c log_F(T)) with c symbolic, certified multiplicative on F.
std::pair<Series<PadicPoly>, Certificate> dual_character(const FormalGroupLaw& F, const Rational& digits,
                                                         const std::string& symbol = "c");

struct PeriodValuationRecord {
  Rational ord_pi0;
  Rational ord_p0;
  Rational ord_Omega;
  Rational ord_Omega0;          // ord(pi_0 p_0^{-1} Omega)
  Rational ord_literal_Omega0;  // ord(p_0 pi_0^{-1} Omega)
  Rational ord_different;
  Rational ord_Omega_partial;
};

PeriodValuationRecord period_valuations(const LocalField& L);
FractionalIdealValuation tate_twist_valuation(const LocalField& L);
// ord_p(h_n) for the level-n torsion point.
Rational torsion_valuation(const LocalField& L, int n);
nlohmann::json to_json(const PeriodValuationRecord& r);

}  // namespace fgl
