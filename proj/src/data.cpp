#include "zicount/data.hpp"

#include "zicount/errors.hpp"

namespace zicount {

bool Dataset::has_covariate(const std::string& name) const {
  for (const auto& c : covariate_names)
    if (c == name) return true;
  return false;
}

const Eigen::VectorXd& Dataset::covariate(const std::string& name) const {
  for (std::size_t i = 0; i < covariate_names.size(); ++i)
    if (covariate_names[i] == name) return covariate_values[i];
  throw config_error("unknown covariate column: " + name);
}

Eigen::VectorXd& Dataset::covariate_mutable(const std::string& name) {
  for (std::size_t i = 0; i < covariate_names.size(); ++i)
    if (covariate_names[i] == name) return covariate_values[i];
  throw config_error("unknown covariate column: " + name);
}

bool Dataset::has_factor(const std::string& name) const {
  for (const auto& f : factors)
    if (f.name == name) return true;
  return false;
}

const FactorColumn& Dataset::factor(const std::string& name) const {
  for (const auto& f : factors)
    if (f.name == name) return f;
  throw config_error("unknown factor column: " + name);
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t Dataset::response_checksum() const {
  const std::uint64_t len = response.size();
  std::uint64_t h = fnv1a(&len, sizeof(len));
  h = fnv1a(response.data(), response.size() * sizeof(long long), h);
  return h;
}

}  // namespace zicount
