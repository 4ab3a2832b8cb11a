#include "fgl/certificate.hpp"

namespace fgl {

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::pass:
      return "pass";
    case CertStatus::fail:
      return "fail";
    case CertStatus::precision_exhausted:
      return "precision_exhausted";
  }
  return "unknown";
}

void Certificate::absorb(const Certificate& o) {
  if (o.status == CertStatus::pass) return;
  if (status == CertStatus::fail) return;
  if (o.status == CertStatus::fail || status == CertStatus::pass) {
    status = o.status;
    first_failure = o.first_failure;
    if (first_failure) first_failure->location = o.name + ": " + first_failure->location;
  }
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  if (c.first_failure) {
    j["first_failure"] = {{"location", c.first_failure->location},
                          {"expected", c.first_failure->expected},
                          {"got", c.first_failure->got}};
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Certificate make_pass(std::string name, std::string note) {
  return Certificate{std::move(name), CertStatus::pass, std::nullopt, std::move(note)};
}

Certificate make_fail(std::string name, Failure f, std::string note) {
  return Certificate{std::move(name), CertStatus::fail, std::move(f), std::move(note)};
}

void require(const Certificate& c) {
  if (c.status == CertStatus::pass) return;
  if (c.status == CertStatus::precision_exhausted)
    throw PrecisionExhausted(c.name + " is inconclusive at " + c.first_failure->location);
  throw CertificateFailure(c);
}

}  // namespace fgl
