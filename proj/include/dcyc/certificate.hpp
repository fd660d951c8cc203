#pragma once

// CycleCertificate and its on-disk document form.
//
// Document (JSON, keys sorted):
//   {
//     "alpha": "1234",
//     "beta": "2143",
//     "cycle": ["1234", "2143", ...],
//     "format": "dcyc-cycle-certificate",
//     "format_version": 1,
//     "length": 24,
//     "n": 4
//   }

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcyc/error.hpp"
#include "dcyc/perm.hpp"

namespace dcyc {

inline constexpr const char* kCertificateFormat = "dcyc-cycle-certificate";
inline constexpr int kCertificateFormatVersion = 1;

// Witness of a cycle of `length` vertices through the edge (alpha, beta).
// vertices[0] == alpha and vertices[1] == beta for well-formed certificates.
struct CycleCertificate {
  int n = 0;
  Perm alpha = Perm::identity(1);
  Perm beta = Perm::identity(1);
  std::uint64_t length = 0;
  std::vector<Perm> vertices;

  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

// Raised for documents that cannot be read as a certificate at all.
class CertificateFormatError : public InputError {
 public:
  using InputError::InputError;
};

inline nlohmann::json to_json(const CycleCertificate& c) {
  nlohmann::json cycle = nlohmann::json::array();
  for (const Perm& v : c.vertices) cycle.push_back(format_perm(v));
  return {
      {"format", kCertificateFormat},
      {"format_version", kCertificateFormatVersion},
      {"n", c.n},
      {"alpha", format_perm(c.alpha)},
      {"beta", format_perm(c.beta)},
      {"length", c.length},
      {"cycle", std::move(cycle)},
  };
}

inline std::string write_certificate(const CycleCertificate& c) { return to_json(c).dump(2) + "\n"; }

inline CycleCertificate certificate_from_json(const nlohmann::json& doc) {
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) {
      throw CertificateFormatError(std::string("certificate is missing field '") + key + "'");
    }
    return doc.at(key);
  };
  auto perm_field = [](const nlohmann::json& j, const std::string& where) {
    if (!j.is_string()) throw CertificateFormatError(where + " must be a permutation string");
    try {
      return parse_perm(j.get<std::string>());
    } catch (const InputError& e) {
      throw CertificateFormatError(where + ": " + e.what());
    }
  };

  const auto& format = field("format");
  if (!format.is_string() || format.get<std::string>() != kCertificateFormat) {
    throw CertificateFormatError("unrecognized certificate format");
  }
  const auto& version = field("format_version");
  if (!version.is_number_integer() || version.get<int>() != kCertificateFormatVersion) {
    throw CertificateFormatError("unsupported certificate format_version");
  }
  const auto& n = field("n");
  if (!n.is_number_integer() || n.get<int>() < 1) {
    throw CertificateFormatError("field 'n' must be a positive integer");
  }
  const auto& length = field("length");
  if (!length.is_number_unsigned()) {
    throw CertificateFormatError("field 'length' must be a non-negative integer");
  }
  const auto& cycle = field("cycle");
  if (!cycle.is_array()) throw CertificateFormatError("field 'cycle' must be an array");

  CycleCertificate c;
  c.n = n.get<int>();
  c.alpha = perm_field(field("alpha"), "alpha");
  c.beta = perm_field(field("beta"), "beta");
  c.length = length.get<std::uint64_t>();
  c.vertices.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    c.vertices.push_back(perm_field(cycle[i], "cycle[" + std::to_string(i) + "]"));
  }
  return c;
}

inline CycleCertificate read_certificate(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateFormatError(std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(doc);
}

}  // namespace dcyc
