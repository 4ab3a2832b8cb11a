#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fgl/chromatic.hpp"
#include "fgl/suites.hpp"
#include "fgl/thh_orientation.hpp"

using namespace fgl;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string field_path;
  long p = 0;
  int n = 1;
  int degree = 0;
  int digits = 0;
  bool json = false;
  bool timing = false;
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--field", c.field_path, "field descriptor JSON file");
  app->add_option("--p", c.p, "prime (uses Q_p when no --field is given)");
  app->add_option("--n", c.n, "height for the chromatic objects");
  app->add_option("--degree", c.degree, "truncation degree D");
  app->add_option("--digits", c.digits, "p-adic digits asserted");
  app->add_flag("--json", c.json, "emit JSON");
  app->add_option("--out", c.out, "also write the output to this file");
}

PrecisionProfile load_profile(const Common& c) {
  PrecisionProfile prof;
  if (const char* path = std::getenv("FGL_PROFILE"); path && *path) {
    std::ifstream in(path);
    if (!in) throw UsageError(std::string("cannot read FGL_PROFILE ") + path);
    try {
      prof = profile_from_json(nlohmann::json::parse(in), prof);
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed FGL_PROFILE: ") + e.what());
    }
  }
  if (c.p) prof.p = c.p;
  if (c.degree) prof.trunc_degree = c.degree;
  if (c.digits) prof.n_digits = c.digits;
  if (prof.p < 2 || prof.n_digits < 1 || prof.trunc_degree < 2) throw UsageError("invalid precision profile");
  return prof;
}

FieldDescriptor load_field(const Common& c, PrecisionProfile& prof) {
  FieldDescriptor d;
  if (!c.field_path.empty()) {
    std::ifstream in(c.field_path);
    if (!in) throw UsageError("cannot read field descriptor " + c.field_path);
    try {
      d = field_descriptor_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      throw UsageError("malformed field descriptor: " + std::string(e.what()));
    }
    if (c.p && c.p != d.p) throw UsageError("--p disagrees with the field descriptor");
  } else {
    d = qp_descriptor(prof.p);
  }
  prof.p = d.p;
  return d;
}

void emit(const Common& c, const std::string& text) {
  std::cout << text;
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
  }
}

std::string render(const Common& c, const nlohmann::json& j, const std::string& text) {
  return c.json ? j.dump(2) + "\n" : text;
}

int status_code(const std::vector<Certificate>& cs) {
  bool exhausted = false;
  for (const auto& x : cs) {
    if (x.status == CertStatus::fail) return 1;
    if (x.status == CertStatus::precision_exhausted) exhausted = true;
  }
  return exhausted ? 3 : 0;
}

nlohmann::json certs_json(const std::vector<Certificate>& cs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : cs) a.push_back(to_json(x));
  return a;
}

std::string certs_text(const std::vector<Certificate>& cs) {
  std::string s;
  for (const auto& x : cs) {
    s += to_string(x.status) + "  " + x.name;
    if (x.first_failure)
      s += "  [at " + x.first_failure->location + ": expected " + x.first_failure->expected + ", got " +
           x.first_failure->got + "]";
    s += "\n";
  }
  return s;
}

// ------------------------------------------------------------ show

std::string residue_str(const Padic& x) {
  if (x.valuation().ge(Rational(0)) != Tri::yes) return "-";
  if (x.valuation().ge(Rational(1)) == Tri::yes) return "0";
  const auto r = x.residue();
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return r.size() > 1 ? "(" + s + ")" : s;
}

std::string residue_str(const PadicPoly& x) {
  std::string s;
  for (const auto& [e, c] : x.terms()) {
    const std::string r = residue_str(c);
    if (r == "-") return "-";
    if (r == "0") continue;
    if (!s.empty()) s += " + ";
    const std::string m = e == 0 ? "" : x.name() + (e == 1 ? "" : "^" + std::to_string(e));
    s += m.empty() ? r : (r == "1" ? m : r + m);
  }
  return s.empty() ? "0" : s;
}

template <class C>
std::string reduction_str(const Series<C>& s) {
  std::string out;
  for (int n = 0; n <= s.D(); ++n) {
    if (!s.nonzero(n)) continue;
    const std::string r = residue_str(s[n]);
    if (r == "-") return "not integral";
    if (r == "0") continue;
    const std::string m = n == 0 ? "" : (n == 1 ? "T" : "T^" + std::to_string(n));
    if (!out.empty()) out += " + ";
    out += r == "1" && !m.empty() ? m : (r.find(' ') != std::string::npos ? "(" + r + ")" : r) + m;
  }
  return out.empty() ? "0" : out;
}

template <class C>
nlohmann::json show_json(const Series<C>& s) {
  nlohmann::json j = series_to_json(s);
  nlohmann::json v = nlohmann::json::array();
  for (int n = 0; n <= s.D(); ++n) v.push_back(s.nonzero(n) ? valuation(s[n]).str() : "inf");
  j["valuations"] = v;
  j["mod_p"] = reduction_str(s);
  return j;
}

template <class C>
std::string show_text(const std::string& title, const Series<C>& s) {
  std::ostringstream out;
  out << title << "\nmod p: " << reduction_str(s) << "\n";
  out << "n\tord\tmod p\tcoefficient\n";
  for (int n = 0; n <= s.D(); ++n) {
    if (!s.nonzero(n)) continue;
    out << n << "\t" << valuation(s[n]).str() << "\t" << residue_str(s[n]) << "\t" << scalar_to_text(s[n]) << "\n";
  }
  return out.str();
}

template <class C>
std::string show_bivariate_text(const std::string& title, const Bivariate<C>& b) {
  std::ostringstream out;
  out << title << "\ni\tj\tord\tcoefficient\n";
  for (const auto& e : b.support())
    out << e.i << "\t" << e.j << "\t" << valuation(b.at(e.i, e.j)).str() << "\t" << scalar_to_text(b.at(e.i, e.j)) << "\n";
  return out.str();
}

template <class C>
std::pair<nlohmann::json, std::string> series_out(const std::string& name, const Series<C>& s) {
  nlohmann::json j{{"object", name}, {"series", show_json(s)}};
  return {j, show_text(name, s)};
}

int cmd_show(const std::string& object, const Common& c) {
  PrecisionProfile prof = load_profile(c);
  const FieldDescriptor d = load_field(c, prof);
  const int D = prof.trunc_degree;
  const int cap = working_cap(d.p, D, prof.n_digits);
  const Rational digits(prof.n_digits);
  std::pair<nlohmann::json, std::string> o;
  auto lt_field = [&](int need) {
    if (need > D) throw UsageError("object needs --degree >= " + std::to_string(need));
    return build_field(d, cap);
  };
  long q = 1;
  for (int i = 0; i < d.f; ++i) q *= d.p;

  if (object == "gm-log") {
    o = series_out(object, fgl_multiplicative(LocalRing::zp(d.p, cap), D).log);
  } else if (object == "rescaled-gm-log" || object == "rescaled-gm-exp") {
    const auto L = build_field(qp_descriptor(d.p), cap);
    const auto G = fgl_gm_tilde(build_tilde(L).p0, D);
    o = series_out(object, object == "rescaled-gm-log" ? G.log : G.exp);
  } else if (object == "honda-log") {
    o = series_out(object, fgl_honda(lt_field(static_cast<int>(q)), D).log);
  } else if (object == "lt-log") {
    o = series_out(object, fgl_special_lubin_tate(lt_field(static_cast<int>(q)), D).log);
  } else if (object == "p-series") {
    const auto L = lt_field(static_cast<int>(q));
    const auto F = fgl_special_lubin_tate(L, D);
    o = series_out(object, fgl_endomorphism(F, Padic(L.ring, d.p)).series);
  } else if (object == "lt-law") {
    const auto F = fgl_special_lubin_tate(lt_field(static_cast<int>(q)), D);
    o = {{{"object", object}, {"law", to_json(F)}}, show_bivariate_text(object, F.law)};
  } else if (object == "epsilon0") {
    const auto L = lt_field(static_cast<int>(q));
    const auto E = epsilon0_series(L, build_tilde(L), D, digits);
    o = series_out(object, E.series);
    o.first["certificates"] = certs_json(E.certificates);
    o.second += certs_text(E.certificates);
  } else if (object == "kn-law") {
    const auto K = kn_group_law(d.p, c.n, D, prof.n_digits);
    o = {{{"object", object}, {"law", to_json(K)}}, show_bivariate_text(object, K.law) + certs_text(K.certificates)};
  } else if (object == "kn-p-series") {
    const auto K = kn_group_law(d.p, c.n, D, prof.n_digits);
    const auto P = kn_p_series(K, d.p, c.n, digits);
    o = {{{"object", object},
          {"integral", to_json(P.integral)},
          {"mod_p", to_json(P.mod_p)},
          {"certificates", certs_json(P.certificates)}},
         show_text("[p] over Z_p[u]", P.integral.underlying) + show_text("[p] mod p", P.mod_p.underlying) +
             certs_text(P.certificates)};
  } else if (object == "chern-class") {
    const auto L = build_field(d, cap);
    const auto cc = chern_class_series(thh_model(build_tilde(L)), D, digits);
    o = series_out(object, cc.c);
    o.first["kappa"] = show_json(cc.kappa_exp);
    o.first["certificates"] = certs_json(cc.certificates);
    o.second += show_text("kappa", cc.kappa_exp) + certs_text(cc.certificates);
  } else {
    throw UsageError("unknown object " + object);
  }
  o.first["field"] = to_json(d);
  o.first["profile"] = to_json(prof);
  emit(c, render(c, o.first, o.second));
  return 0;
}

// ------------------------------------------------------------ certify

int cmd_certify(const std::string& suite, const Common& c) {
  if (suite != "fontaine" && !is_suite(suite)) throw UsageError("unknown suite " + suite);
  PrecisionProfile prof = load_profile(c);
  const FieldDescriptor d = load_field(c, prof);
  SuiteOptions opts;
  opts.height = c.n;
  const auto t0 = std::chrono::steady_clock::now();
  CertificateReport r = run_suite(suite == "fontaine" ? "fontaine-valuations" : suite, d, prof, opts);
  if (c.timing)
    r.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  emit(c, render(c, to_json(r), to_text(r)));
  return r.exit_code();
}

// ------------------------------------------------------------ orient

int cmd_orient(const Common& c) {
  PrecisionProfile prof = load_profile(c);
  const FieldDescriptor d = load_field(c, prof);
  long q = 1;
  for (int i = 0; i < d.f; ++i) q *= d.p;
  int D = prof.trunc_degree;
  nlohmann::json notes = nlohmann::json::array();
  if (D < q * q + 1) {
    notes.push_back("degree raised from " + std::to_string(D) + " to " + std::to_string(q * q + 1));
    D = static_cast<int>(q * q + 1);
  }
  const auto L = build_field(d, working_cap(d.p, D, prof.n_digits));
  const auto O = orientation_composite(L, D, Rational(prof.n_digits));
  nlohmann::json stages = nlohmann::json::array();
  std::string text = "orientation composite on " + d.label + " (D = " + std::to_string(D) + ")\n";
  for (const auto& n : notes) text += "note: " + n.get<std::string>() + "\n";
  for (const auto& [name, s] : O.stages) {
    stages.push_back({{"stage", name}, {"series", series_to_json(s)}});
    text += name + ": " + series_to_text(s) + "\n";
  }
  nlohmann::json genus = nlohmann::json::array();
  for (int i = 0; i + 1 <= std::min(D, 10); ++i) genus.push_back(to_json(hirzebruch_genus(O.target, i)));
  text += "hirzebruch genus: " + genus.dump() + "\n" + certs_text(O.certificates);
  const nlohmann::json j{{"field", to_json(d)},
                         {"profile", to_json(prof)},
                         {"effective_degree", D},
                         {"notes", notes},
                         {"different_generator", scalar_to_json(O.d)},
                         {"stages", stages},
                         {"hirzebruch_genus", genus},
                         {"certificates", certs_json(O.certificates)}};
  emit(c, render(c, j, text));
  return status_code(O.certificates);
}

// ------------------------------------------------------------ chromatic

int cmd_chromatic_kn(const Common& c) {
  PrecisionProfile prof = load_profile(c);
  const long p = prof.p;
  long q = 1;
  for (int i = 0; i < c.n; ++i) q *= p;
  const int D = std::max<long>(prof.trunc_degree, q + 3);
  const auto K = kn_group_law(p, c.n, D, prof.n_digits);
  const auto P = kn_p_series(K, p, c.n, Rational(prof.n_digits));
  std::vector<Certificate> all = K.certificates;
  all.insert(all.end(), P.certificates.begin(), P.certificates.end());
  const nlohmann::json j{{"p", p},
                         {"n", c.n},
                         {"D", D},
                         {"law", bivariate_to_json(K.law)},
                         {"p_series", to_json(P.integral)},
                         {"p_series_mod_p", to_json(P.mod_p)},
                         {"araki", to_json(araki_shape_note())},
                         {"certificates", certs_json(all)}};
  const std::string text = show_bivariate_text("k(" + std::to_string(c.n) + ") law", K.law) +
                           show_text("[p] over Z_p[u]", P.integral.underlying) +
                           show_text("[p] mod p", P.mod_p.underlying) + certs_text(all);
  emit(c, render(c, j, text));
  return status_code(all);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified computations with p-adic formal group laws"};
  app.require_subcommand(1);
  Common common;
  std::string suite, object, chromatic_kind;

  auto* certify = app.add_subcommand("certify", "run a certificate suite");
  certify->add_option("suite", suite, "suite name")->required();
  certify->add_flag("--timing", common.timing, "include wall_time_ms");
  add_common(certify, common);

  auto* show = app.add_subcommand("show", "print a series with its valuation profile");
  show->add_option("object", object, "object name")->required();
  add_common(show, common);

  auto* orient = app.add_subcommand("orient", "build and certify the orientation composite");
  add_common(orient, common);

  auto* chromatic = app.add_subcommand("chromatic", "integral Morava K-theory laws");
  chromatic->add_option("kind", chromatic_kind, "kn")->required()->check(CLI::IsMember({"kn"}));
  add_common(chromatic, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*certify) return cmd_certify(suite, common);
    if (*show) return cmd_show(object, common);
    if (*orient) return cmd_orient(common);
    if (*chromatic) return cmd_chromatic_kn(common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const CertificateFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
