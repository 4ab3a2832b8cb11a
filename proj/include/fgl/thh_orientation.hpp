#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fgl/lubin_tate_galois.hpp"

namespace fgl {

/// O[gamma] with |gamma| = 2 and the trace image beta = p0 gamma.
struct GradedRingModel {
  RingPtr base;
  Padic p0;
  SymbolPtr gamma;

  PadicPoly zero() const { return PadicPoly(gamma, Padic::zero(base)); }
  PadicPoly beta() const { return PadicPoly::monomial(gamma, p0, 1); }
};

GradedRingModel thh_model(const TildeField& T);

struct TraceRecord {
  PadicPoly beta_image;
  std::string normalization = "variant";
  Rational ord_scalar;
};
TraceRecord trace_record(const GradedRingModel& M);

/// Delta kappa = kappa (x) 1 + 1 (x) kappa + p0 gamma kappa (x) kappa, as the multiplicative
/// law rescaled by p0 gamma.
struct HopfCoordinate {
  std::string name = "kappa";
  GradedLaw law;
  PadicPoly scale;
  std::vector<Certificate> certificates;
};
HopfCoordinate kappa_coproduct(const GradedRingModel& M, int D, const Rational& digits);

/// c(eta) = beta^{-1} log(1 + beta eta) and kappa(x) = beta^{-1}(exp(beta x) - 1).
struct ChernClass {
  Series<PadicPoly> c;
  Series<PadicPoly> kappa_exp;
  std::vector<Certificate> certificates;
};
ChernClass chern_class_series(const GradedRingModel& M, int D, const Rational& digits);

/// eta = etabar + sum_i a_i beta^i etabar^{i+1}.
Series<PadicPoly> eta_coordinate(const GradedRingModel& M, const std::vector<Padic>& a, int D);

/// The kappa law and Chern class transported to the eta coordinate agree with the originals.
Certificate coordinate_independence_check(const GradedRingModel& M, const std::vector<Padic>& a, int D,
                                          const Rational& digits);

/// The graded ring map gamma -> chi gamma.
struct GaloisAction {
  Padic chi;
  PadicPoly operator()(const PadicPoly& x) const { return x.scale_symbol(chi); }
  Series<PadicPoly> operator()(const Series<PadicPoly>& s) const;
  Bivariate<PadicPoly> operator()(const Bivariate<PadicPoly>& s) const;
};
GaloisAction galois_act(const GradedRingModel& M, const Padic& chi);

/// chi * act(F)(X, Y) = F(chi X, chi Y), and [chi] on the kappa law is integral.
Certificate galois_intertwining_check(const HopfCoordinate& K, const GaloisAction& g, const Rational& digits);
/// act(chi chi') = act(chi) o act(chi') on the law and the Chern class.
Certificate galois_multiplicativity_check(const HopfCoordinate& K, const ChernClass& c, const GaloisAction& g,
                                          const GaloisAction& h, const Rational& digits);

/// Psi(T) = pi0 exp_{L~}(Omega_d^{-1} log_{G~m}(d T)) with d a generator of the different.
struct OrientationComposite {
  TildeField tilde;
  Padic d;
  SymbolicPeriod omega;
  FormalGroupLaw kappa_d;  // X + Y + p0 d XY
  FormalGroupLaw target;   // special Lubin-Tate law of L
  std::vector<std::pair<std::string, Series<PadicPoly>>> stages;
  Series<PadicPoly> psi;
  std::vector<Certificate> certificates;
};
OrientationComposite orientation_composite(const LocalField& L, int D, const Rational& digits);

struct GenusValue {
  int i;
  Padic value;
  Valuation ord;
};
/// chi_L[CP^i] = (i + 1) times the T^{i+1} coefficient of log.
GenusValue hirzebruch_genus(const FormalGroupLaw& F, int i);

nlohmann::json to_json(const GenusValue& g);

}  // namespace fgl
