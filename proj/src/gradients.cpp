#include "fedgbm/core/gradients.hpp"

#include <algorithm>
#include <cmath>

#include "fedgbm/common/errors.hpp"

namespace fedgbm::core {

double sigmoid(double raw) { return 1.0 / (1.0 + std::exp(-raw)); }

double init_base_score(const Eigen::Ref<const Eigen::VectorXi>& labels) {
  if (labels.size() == 0) throw DataError("cannot initialize base score from empty labels");
  double positives = 0;
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    const int y = labels(i);
    if (y != 0 && y != 1) throw DataError("labels must be 0/1");
    positives += y;
  }
  double p = positives / static_cast<double>(labels.size());
  p = std::clamp(p, 1e-6, 1.0 - 1e-6);
  return std::log(p / (1.0 - p));
}

GradientBatch compute_gradients(const Eigen::Ref<const Eigen::VectorXi>& labels,
                                const Eigen::Ref<const Eigen::VectorXd>& raw_scores) {
  if (labels.size() != raw_scores.size()) {
    throw DataError("labels and scores must have equal length");
  }
  GradientBatch out;
  const Eigen::Index n = labels.size();
  out.g.resize(n);
  out.h.resize(n);
  out.eps.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = raw_scores(i);
    if (std::isnan(s)) throw DataError("NaN raw score at sample " + std::to_string(i));
    const double p = sigmoid(s);
    const double y = labels(i);
    out.g(i) = p - y;
    out.h(i) = p * (1.0 - p);
    const double pc = std::clamp(p, 1e-12, 1.0 - 1e-12);
    out.eps(i) = -(y * std::log(pc) + (1.0 - y) * std::log(1.0 - pc));
  }
  return out;
}

std::vector<std::uint32_t> sample_batch(Rng& rng, std::size_t n_intersection,
                                        double fraction) {
  if (fraction <= 0.0 || fraction > 1.0) {
    throw ConfigError("batch fraction must lie in (0, 1]");
  }
  std::size_t k = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n_intersection)));
  k = std::clamp<std::size_t>(k, 1, n_intersection);
  auto picked = rng.sample_without_replacement(n_intersection, k);
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace fedgbm::core
