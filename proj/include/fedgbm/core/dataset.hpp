#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace fedgbm::core {

// One party's view: unique opaque ids, a column-major float feature matrix
// (NaN = missing), and labels when the party holds them.
struct Dataset {
  std::string name;
  std::vector<std::string> ids;
  Eigen::MatrixXf features;  // rows = samples, cols = features
  std::vector<std::string> feature_names;
  std::optional<Eigen::VectorXi> labels;  // values in {0,1}

  Eigen::Index num_samples() const { return features.rows(); }
  Eigen::Index num_features() const { return features.cols(); }

  void validate() const;

  // Row subset in the given order (ids/features/labels aligned).
  Dataset subset(const std::vector<std::uint32_t>& rows) const;

  // Side-by-side feature join on identical id sequences.
  static Dataset join(const Dataset& left, const Dataset& right);
};

}  // namespace fedgbm::core
