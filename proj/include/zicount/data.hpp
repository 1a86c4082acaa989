#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace zicount {

// Categorical column with dictionary-encoded levels. Codes follow first
// appearance order in the source file.
struct FactorColumn {
  std::string name;
  std::vector<std::int32_t> codes;  // in [0, levels.size())
  std::vector<std::string> levels;
};

// One rectangular batch of observations: a non-negative integer response,
// named numeric covariates, and named grouping factors. All columns share
// the same length and carry no missing values.
struct Dataset {
  std::string response_name;
  std::vector<long long> response;

  std::vector<std::string> covariate_names;
  std::vector<Eigen::VectorXd> covariate_values;  // parallel to names

  std::vector<FactorColumn> factors;

  std::size_t n() const { return response.size(); }

  bool has_covariate(const std::string& name) const;
  const Eigen::VectorXd& covariate(const std::string& name) const;
  Eigen::VectorXd& covariate_mutable(const std::string& name);

  bool has_factor(const std::string& name) const;
  const FactorColumn& factor(const std::string& name) const;

  // FNV-1a over n and the response values; used to assert that fits being
  // compared were computed on the same data.
  std::uint64_t response_checksum() const;
};

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 14695981039346656037ULL);

}  // namespace zicount
