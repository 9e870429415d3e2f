#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "fedgbm/common/rng.hpp"

namespace fedgbm::core {

// Second-order cross-entropy statistics per sample. eps is the per-sample
// cross-entropy residual; it is logged for monitoring, trees fit (g, h).
struct GradientBatch {
  Eigen::VectorXd g;    // p - y, in [-1, 1]
  Eigen::VectorXd h;    // p (1 - p), in (0, 0.25]
  Eigen::VectorXd eps;  // -[y log p + (1-y) log(1-p)], p clamped
};

double init_base_score(const Eigen::Ref<const Eigen::VectorXi>& labels);

GradientBatch compute_gradients(const Eigen::Ref<const Eigen::VectorXi>& labels,
                                const Eigen::Ref<const Eigen::VectorXd>& raw_scores);

double sigmoid(double raw);

// Uniform sample without replacement of round(fraction * n) indices, at
// least one; output sorted ascending.
std::vector<std::uint32_t> sample_batch(Rng& rng, std::size_t n_intersection,
                                        double fraction);

}  // namespace fedgbm::core
