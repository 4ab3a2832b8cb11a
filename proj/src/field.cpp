#include "fgl/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fgl {

namespace {

long ipow(long b, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= b;
  return r;
}

std::vector<mpz_class> parse_coeff(const nlohmann::json& j, long p, int f) {
  std::vector<mpz_class> c(f, 0);
  if (j.is_string()) {
    c[0] = parse_base_p_digits(j.get<std::string>(), p);
  } else if (j.is_number_integer()) {
    c[0] = j.get<long>();
  } else if (j.is_array()) {
    if (static_cast<int>(j.size()) > f) throw std::invalid_argument("coefficient has more than f coordinates");
    for (std::size_t i = 0; i < j.size(); ++i)
      c[i] = j[i].is_string() ? parse_base_p_digits(j[i].get<std::string>(), p) : mpz_class(j[i].get<long>());
  } else {
    throw std::invalid_argument("malformed Eisenstein coefficient");
  }
  return c;
}

std::vector<mpz_class> coeff_coords(const std::vector<std::string>& digits, long p, int f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : digits) j.push_back(s);
  return parse_coeff(j, p, f);
}

}  // namespace

FieldDescriptor field_descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("field descriptor must be a JSON object");
  FieldDescriptor d;
  d.p = j.at("p").get<long>();
  d.f = j.value("f", 1);
  d.e = j.value("e", 1);
  d.label = j.value("label", std::string());
  if (j.contains("unramified")) d.unramified_modulus = j.at("unramified").get<std::vector<long>>();
  if (j.contains("eisenstein")) {
    for (const auto& c : j.at("eisenstein")) {
      std::vector<std::string> coords;
      if (c.is_array()) {
        for (const auto& s : c) coords.push_back(s.is_string() ? s.get<std::string>() : std::to_string(s.get<long>()));
      } else {
        coords.push_back(c.is_string() ? c.get<std::string>() : base_p_digits(mpz_class(c.get<long>()), d.p));
      }
      d.eisenstein.push_back(coords);
    }
  }
  if (d.f < 1 || d.e < 1) throw std::invalid_argument("f and e must be positive");
  if (!d.eisenstein.empty() && static_cast<int>(d.eisenstein.size()) != d.e)
    throw std::invalid_argument("Eisenstein polynomial degree " + std::to_string(d.eisenstein.size()) +
                                " does not match e = " + std::to_string(d.e));
  if (d.eisenstein.empty() && d.e != 1) throw std::invalid_argument("missing Eisenstein polynomial");
  if (!d.unramified_modulus.empty() && static_cast<int>(d.unramified_modulus.size()) != d.f)
    throw std::invalid_argument("unramified modulus degree does not match f");
  if (d.label.empty()) d.label = "L(p=" + std::to_string(d.p) + ",f=" + std::to_string(d.f) + ",e=" + std::to_string(d.e) + ")";
  return d;
}

nlohmann::json to_json(const FieldDescriptor& d) {
  nlohmann::json j;
  j["p"] = d.p;
  j["f"] = d.f;
  j["e"] = d.e;
  if (!d.unramified_modulus.empty()) j["unramified"] = d.unramified_modulus;
  nlohmann::json eis = nlohmann::json::array();
  for (const auto& c : d.eisenstein) {
    if (c.size() == 1) eis.push_back(c[0]);
    else eis.push_back(c);
  }
  j["eisenstein"] = eis;
  j["label"] = d.label;
  return j;
}

FieldDescriptor qp_descriptor(long p) {
  FieldDescriptor d;
  d.p = p;
  d.eisenstein = {{"-10"}};
  d.label = "Q_" + std::to_string(p);
  return d;
}

long LocalField::q() const { return ipow(desc.p, desc.f); }

Padic LocalField::different_generator() const {
  const int e = desc.e;
  if (e == 1) return Padic(ring, 1);
  Padic acc = pi.pow(e - 1).mul_int(e);
  for (int i = 1; i < e; ++i) acc += eisenstein[i].lift_to(ring) * pi.pow(i - 1).mul_int(i);
  return acc;
}

LocalField build_field(const FieldDescriptor& d, int cap) {
  LocalField L;
  L.desc = d;
  auto Z = LocalRing::zp(d.p, cap);
  if (d.f > 1) {
    auto g = d.unramified_modulus.empty() ? default_unramified_modulus(d.p, d.f) : d.unramified_modulus;
    L.desc.unramified_modulus = g;
    L.W = LocalRing::unramified(Z, g);
  } else {
    L.W = Z;
  }
  std::vector<std::vector<mpz_class>> coeffs;
  if (d.eisenstein.empty()) {
    coeffs.push_back(std::vector<mpz_class>(d.f, 0));
    coeffs[0][0] = -d.p;
    L.desc.eisenstein = {{"-10"}};
  } else {
    for (const auto& c : d.eisenstein) coeffs.push_back(coeff_coords(c, d.p, d.f));
  }
  for (const auto& c : coeffs) L.eisenstein.push_back(Padic::from_coords(L.W, c));
  if (d.e == 1) {
    if (L.W->ord(coeffs[0].data()) != 1)
      throw std::invalid_argument("not Eisenstein: constant term is not a uniformizer");
    L.ring = L.W;
    L.pi = -L.eisenstein[0];
  } else {
    L.ring = LocalRing::eisenstein(L.W, coeffs, d.label);
    L.pi = Padic::generator(L.ring);
  }
  return L;
}

std::vector<mpz_class> integral_coords(const Padic& x) {
  std::vector<mpz_class> c(x.ring()->degree(), 0);
  if (x.is_zero()) {
    if (!x.is_exact_zero() && x.shift() < 0) throw PrecisionExhausted("integrality of an unresolved value");
    return c;
  }
  if (x.shift() < 0) throw std::domain_error("element is not integral");
  const mpz_class& ps = x.ring()->p_pow(static_cast<int>(x.shift()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords()[i] * ps;
  return c;
}

RingPtr adjoin_root(const RingPtr& base, const std::vector<Padic>& coeffs, const std::string& label) {
  std::vector<std::vector<mpz_class>> c;
  for (const auto& a : coeffs) c.push_back(integral_coords(a.lift_to(base)));
  return LocalRing::eisenstein(base, c, label);
}

TildeField build_tilde(const LocalField& L) {
  TildeField T;
  const long q = L.q();
  const long p = L.p();
  if (q == 2) {
    // pi_0 + pi = 0 and p_0 + 2 = 0 already hold in L.
    T.ring = L.ring;
    T.pi0 = -L.pi;
    T.p0 = Padic(L.ring, -2);
    return T;
  }
  std::vector<Padic> coeffs(q - 1, Padic::zero(L.ring));
  coeffs[0] = L.pi;
  T.ring = adjoin_root(L.ring, coeffs, L.label() + "(pi0)");
  T.pi0 = Padic::generator(T.ring);
  // p_0 = pi_0^k * w with k = e(q-1)/(p-1) and w a unit solving w^{p-1} = z.
  const long k = L.e() * (q - 1) / (p - 1);
  Padic z = -Padic(T.ring, p) / T.pi0.pow(L.e() * (q - 1));
  const auto& F = T.ring->residue_field();
  auto zbar = z.residue();
  std::vector<Padic> poly(p, Padic::zero(T.ring));
  poly[0] = -z;
  poly[p - 1] = Padic(T.ring, 1);
  for (long i = 1; i < F.size(); ++i) {
    auto w = F.element(i);
    if (F.pow(w, static_cast<unsigned long>(p - 1)) != zbar) continue;
    Padic seed = Padic::from_coords(T.ring, T.ring->lift_residue(w));
    T.p0 = T.pi0.pow(k) * hensel_root(poly, seed);
    return T;
  }
  throw std::domain_error("p_0 does not lie in " + T.ring->label());
}

Padic eval_poly(const std::vector<Padic>& coeffs, const Padic& x) {
  Padic acc = Padic::zero(x.ring());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Padic> poly_derivative(const std::vector<Padic>& coeffs) {
  std::vector<Padic> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i].mul_int(static_cast<long>(i)));
  return d;
}

Padic hensel_root(const std::vector<Padic>& coeffs, const Padic& seed) {
  const auto deriv = poly_derivative(coeffs);
  Padic x = seed;
  Padic fx = eval_poly(coeffs, x);
  if (fx.is_zero()) return x;
  Padic dx = eval_poly(deriv, x);
  if (dx.is_zero()) throw std::domain_error("Hensel criterion fails: derivative vanishes at the seed");
  if (!(fx.valuation().value() > dx.valuation().value() * 2))
    throw std::domain_error("Hensel criterion fails at the seed");
  const int max_iter = 8 + 2 * static_cast<int>(std::log2(1.0 + seed.ring()->cap() * seed.ring()->ramification()));
  for (int it = 0; it < max_iter && !fx.is_zero(); ++it) {
    x = x - fx / dx;
    fx = eval_poly(coeffs, x);
    dx = eval_poly(deriv, x);
  }
  return x;
}

Padic teichmuller_lift(const ResidueField::Elem& residue, const RingPtr& W) {
  if (W->residue_field().is_zero(residue)) throw std::domain_error("Teichmuller lift of zero residue");
  const long q = W->residue_size();
  Padic x = Padic::from_coords(W, W->lift_residue(residue));
  for (int it = 0; it <= W->cap() + 2; ++it) {
    Padic y = x.pow(q);
    if ((y - x).is_zero()) return y;
    x = y;
  }
  return x;
}

namespace {

Padic determinant(std::vector<std::vector<Padic>> M) {
  const int n = static_cast<int>(M.size());
  const RingPtr& R = M[0][0].ring();
  Padic det(R, 1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (M[r][col].is_zero()) continue;
      if (piv < 0 || M[r][col].valuation().value() < M[piv][col].valuation().value()) piv = r;
    }
    if (piv < 0) {
      long s = 0;
      for (int r = col; r < n; ++r) s = std::max<long>(s, M[r][col].is_exact_zero() ? 0 : M[r][col].shift());
      return M[col][col].is_exact_zero() ? Padic::zero(R) : Padic::inexact_zero(R, s);
    }
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det = det * M[col][col];
    Padic inv = M[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (M[r][col].is_exact_zero()) continue;
      Padic factor = M[r][col] * inv;
      for (int c = col; c < n; ++c) M[r][c] -= factor * M[col][c];
    }
  }
  return det;
}

}  // namespace

std::pair<Padic, Padic> norm_and_trace(const Padic& x, const RingPtr& down_to) {
  const RingPtr& R = x.ring();
  if (R == down_to) return {x, x};
  if (!down_to->is_ancestor_of(*R)) throw std::invalid_argument("norm target is not below the element's ring");
  const RingPtr& P = R->parent();
  const int m = R->step_degree();
  const int nb = P->degree();
  Padic N, Tr;
  if (x.is_exact_zero()) {
    N = Padic::zero(P);
    Tr = Padic::zero(P);
  } else if (x.is_zero()) {
    N = Padic::inexact_zero(P, x.shift() * m);
    Tr = Padic::inexact_zero(P, x.shift());
  } else {
    const int rel = x.rel_precision();
    std::vector<std::vector<Padic>> M(m, std::vector<Padic>(m));
    std::vector<mpz_class> g(R->degree(), 0), v = x.coords(), t(R->degree());
    g[nb] = 1;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) {
        std::vector<mpz_class> blk(v.begin() + i * nb, v.begin() + (i + 1) * nb);
        M[i][j] = Padic::from_coords(P, blk, 0, rel);
      }
      if (j + 1 < m) {
        R->mul(v.data(), g.data(), t.data(), rel);
        v.swap(t);
      }
    }
    Tr = Padic::zero(P);
    for (int i = 0; i < m; ++i) Tr += M[i][i];
    Tr = Tr.mul_p_power(x.shift());
    N = determinant(M).mul_p_power(x.shift() * m);
  }
  if (P == down_to) return {N, Tr};
  return {norm_and_trace(N, down_to).first, norm_and_trace(Tr, down_to).second};
}

FractionalIdealValuation different_valuation(const RingPtr& ring, const std::string& label) {
  Rational total(0);
  for (const LocalRing* r = ring.get(); r && r->parent(); r = r->parent().get()) {
    if (r->kind() != LocalRing::Kind::eisenstein) continue;
    // Rebuild a shared handle for this level by walking from the top.
    RingPtr level = ring;
    while (level.get() != r) level = level->parent();
    const RingPtr& P = level->parent();
    const int m = level->step_degree();
    Padic x = Padic::generator(level);
    Padic d = x.pow(m - 1).mul_int(m);
    for (int i = 1; i < m; ++i) d += Padic::from_coords(P, level->relation()[i]).lift_to(level) * x.pow(i - 1).mul_int(i);
    if (d.is_zero()) throw PrecisionExhausted("different generator vanishes to working precision");
    total += d.valuation().value();
  }
  return {label, total};
}

nlohmann::json scalar_to_json(const Padic& x) {
  nlohmann::json j;
  if (x.is_exact_zero()) {
    j["val"] = "inf";
    j["unit"] = "0";
    j["exact_zero"] = true;
    return j;
  }
  if (x.is_zero()) {
    j["val"] = ">=" + std::to_string(x.shift());
    j["unit"] = "0";
    j["prec"] = 0;
    return j;
  }
  j["val"] = to_string(x.valuation().value());
  auto digits = x.unit_digits();
  if (digits.size() == 1) j["unit"] = digits[0];
  else j["unit"] = digits;
  j["prec"] = x.rel_precision();
  return j;
}

Padic scalar_from_json(const RingPtr& ring, const nlohmann::json& j) {
  if (j.value("exact_zero", false)) return Padic::zero(ring);
  const std::string vs = j.at("val").get<std::string>();
  if (vs.rfind(">=", 0) == 0) return Padic::inexact_zero(ring, std::stol(vs.substr(2)));
  Rational v = parse_rational(vs);
  long shift = v.numerator() / v.denominator();
  if (v.numerator() < 0 && v.numerator() % v.denominator() != 0) --shift;
  std::vector<mpz_class> c(ring->degree(), 0);
  const auto& u = j.at("unit");
  if (u.is_string()) {
    c[0] = parse_base_p_digits(u.get<std::string>(), ring->prime());
  } else {
    for (std::size_t i = 0; i < u.size() && i < c.size(); ++i)
      c[i] = parse_base_p_digits(u[i].get<std::string>(), ring->prime());
  }
  int prec = j.value("prec", ring->cap());
  return Padic::from_coords(ring, c, shift, prec);
}

}  // namespace fgl
