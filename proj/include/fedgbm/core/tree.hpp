#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fedgbm/core/histogram.hpp"

namespace fedgbm::core {

enum class Party : std::uint8_t { a = 0, b = 1 };

// Internal nodes carry (owner, feature, threshold); feature/threshold are
// only meaningful at the owner. Leaves carry the weight (held at A in the
// federated setting).
struct TreeNode {
  std::int32_t id = 0;
  bool is_leaf = true;
  Party owner = Party::a;
  std::int32_t feature = -1;    // owner-local feature index
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  double weight = 0.0;
};

struct Tree {
  std::vector<TreeNode> nodes;  // indexed by node id; root is 0
  int internal_count() const {
    int n = 0;
    for (const auto& nd : nodes) n += nd.is_leaf ? 0 : 1;
    return n;
  }
};

// F = base_score + learning_rate * sum of tree outputs; trees[0] is the base
// model F0 (grown on A's features only), trees[1..] are the boosted rounds.
struct Ensemble {
  double base_score = 0.0;
  double learning_rate = 0.1;
  std::vector<Tree> trees;

  int iterations_completed() const {
    return trees.empty() ? 0 : static_cast<int>(trees.size()) - 1;
  }
};

void update_ensemble(Ensemble& ensemble, Tree tree);

// Routes one sample through a tree given full feature access; returns the
// leaf weight. Missing (NaN) routes right.
double tree_output(const Tree& tree, const Eigen::Ref<const Eigen::RowVectorXf>& row,
                   const std::function<int(const TreeNode&, const Eigen::Ref<const Eigen::RowVectorXf>&)>*
                       route_override = nullptr);

double raw_prediction(const Ensemble& ensemble,
                      const Eigen::Ref<const Eigen::RowVectorXf>& row);

double predict_probability(const Ensemble& ensemble,
                           const Eigen::Ref<const Eigen::RowVectorXf>& row);

// Canonical topology fingerprint over (id, kind, owner, children) of every
// node of every tree; split parameters are excluded so both parties can
// compute it from their own model part.
std::string topology_hash(const Ensemble& ensemble);

}  // namespace fedgbm::core
