#include "fixpoint/certificate.hpp"

#include "json.hpp"

#include <stdexcept>

namespace fixpoint {

const Nat* Certificate::find(const CertPath& path) const {
  auto it = entries_.find(path);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string path_to_string(const CertPath& path) {
  std::string s = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(path[i]);
  }
  return s + "]";
}

std::string to_json(const Certificate& cert) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [path, value] : cert.entries())
    entries.push_back({{"path", path}, {"value", to_decimal(value)}});
  nlohmann::ordered_json doc;
  doc["certificate"] = std::move(entries);
  return doc.dump(1);
}

Certificate certificate_from_json(std::string_view text) {
  Certificate cert;
  try {
    auto doc = nlohmann::json::parse(text);
    for (const auto& e : doc.at("certificate")) {
      CertPath path = e.at("path").get<CertPath>();
      auto value = parse_decimal(e.at("value").get<std::string>());
      if (!value) throw std::invalid_argument("certificate value is not a decimal natural");
      cert.set(std::move(path), std::move(*value));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed certificate: ") + ex.what());
  }
  return cert;
}

}  // namespace fixpoint
