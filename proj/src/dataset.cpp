#include "fedgbm/core/dataset.hpp"

#include <set>

#include "fedgbm/common/errors.hpp"

namespace fedgbm::core {

void Dataset::validate() const {
  const auto n = static_cast<std::size_t>(features.rows());
  if (ids.size() != n) {
    throw DataError("dataset '" + name + "': id count " + std::to_string(ids.size()) +
                    " != row count " + std::to_string(n));
  }
  if (labels && static_cast<std::size_t>(labels->size()) != n) {
    throw DataError("dataset '" + name + "': label count mismatch");
  }
  if (feature_names.size() != static_cast<std::size_t>(features.cols())) {
    throw DataError("dataset '" + name + "': feature name count mismatch");
  }
  std::set<std::string> seen(ids.begin(), ids.end());
  if (seen.size() != ids.size()) {
    throw DataError("dataset '" + name + "': duplicate ids");
  }
}

Dataset Dataset::subset(const std::vector<std::uint32_t>& rows) const {
  Dataset out;
  out.name = name;
  out.feature_names = feature_names;
  out.features.resize(static_cast<Eigen::Index>(rows.size()), features.cols());
  out.ids.reserve(rows.size());
  if (labels) out.labels.emplace(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(rows[i]);
    out.features.row(static_cast<Eigen::Index>(i)) = features.row(r);
    out.ids.push_back(ids[rows[i]]);
    if (labels) (*out.labels)(static_cast<Eigen::Index>(i)) = (*labels)(r);
  }
  return out;
}

Dataset Dataset::join(const Dataset& left, const Dataset& right) {
  if (left.ids != right.ids) {
    throw DataError("join requires identical id sequences");
  }
  Dataset out;
  out.name = left.name + "+" + right.name;
  out.ids = left.ids;
  out.features.resize(left.features.rows(), left.features.cols() + right.features.cols());
  out.features << left.features, right.features;
  out.feature_names = left.feature_names;
  out.feature_names.insert(out.feature_names.end(), right.feature_names.begin(),
                           right.feature_names.end());
  out.labels = left.labels ? left.labels : right.labels;
  return out;
}

}  // namespace fedgbm::core
