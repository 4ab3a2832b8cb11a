#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgl/certificate.hpp"
#include "fgl/field.hpp"
#include "json.hpp"

namespace fgl {

struct PrecisionProfile {
  long p = 5;
  int n_digits = 64;
  int trunc_degree = 40;
};

nlohmann::json to_json(const PrecisionProfile& p);
// Fields absent from j keep their values in base.
PrecisionProfile profile_from_json(const nlohmann::json& j, PrecisionProfile base = {});

struct SuiteOptions {
  int height = 1;          // n for the chromatic suite
  int random_units = 10;   // sigma samples for equivariance
  unsigned long seed = 1;  // fixed for reproducible reports
};

struct CertificateReport {
  std::string suite;
  FieldDescriptor field;
  PrecisionProfile profile;
  int effective_degree = 0;
  std::vector<std::string> notes;
  std::vector<Certificate> results;
  nlohmann::json data = nlohmann::json::object();
  std::optional<long> wall_time_ms;

  bool all_passed() const;
  // 0 all pass, 1 some failure, 3 only precision exhaustion.
  int exit_code() const;
};

nlohmann::json to_json(const CertificateReport& r);
std::string to_text(const CertificateReport& r);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs a named suite; throws std::invalid_argument for an unknown name.
CertificateReport run_suite(const std::string& name, const FieldDescriptor& field, const PrecisionProfile& profile,
                            const SuiteOptions& opts = {});

/// ord_p of every coefficient n in [from, D] equals want(n) exactly.
template <class F>
Certificate check_exact_valuations(std::string name, const Series<Padic>& s, F&& want, int from = 1) {
  Certificate cert;
  cert.name = std::move(name);
  for (int n = from; n <= s.D(); ++n) {
    const Rational w = want(n);
    const Valuation v = s.nonzero(n) ? s[n].valuation() : Valuation::infinite();
    if (v == Valuation::exact(w)) continue;
    const bool inconclusive = !v.is_exact() && !v.is_infinite() && v.ge(w) != Tri::no;
    if (inconclusive && cert.status == CertStatus::pass) {
      cert.status = CertStatus::precision_exhausted;
      cert.first_failure = Failure{detail::mono(n), "ord " + to_string(w), "ord " + v.str()};
    } else if (!inconclusive && cert.status != CertStatus::fail) {
      cert.status = CertStatus::fail;
      cert.first_failure = Failure{detail::mono(n), "ord " + to_string(w), "ord " + v.str()};
    }
  }
  return cert;
}

}  // namespace fgl
