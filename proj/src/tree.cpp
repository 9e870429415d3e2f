#include "fedgbm/core/tree.hpp"

#include <cmath>

#include "fedgbm/common/errors.hpp"
#include "fedgbm/common/hash.hpp"

namespace fedgbm::core {

void update_ensemble(Ensemble& ensemble, Tree tree) {
  for (const auto& nd : tree.nodes) {
    if (nd.is_leaf && !std::isfinite(nd.weight)) {
      throw ModelError("non-finite leaf weight in finished tree");
    }
  }
  ensemble.trees.push_back(std::move(tree));
}

double tree_output(const Tree& tree, const Eigen::Ref<const Eigen::RowVectorXf>& row,
                   const std::function<int(const TreeNode&, const Eigen::Ref<const Eigen::RowVectorXf>&)>*
                       route_override) {
  const TreeNode* node = &tree.nodes[0];
  while (!node->is_leaf) {
    int next;
    if (route_override != nullptr) {
      next = (*route_override)(*node, row);
    } else {
      const float x = row(node->feature);
      const bool left = !std::isnan(x) && x <= node->threshold;
      next = left ? node->left : node->right;
    }
    node = &tree.nodes[static_cast<std::size_t>(next)];
  }
  return node->weight;
}

double raw_prediction(const Ensemble& ensemble,
                      const Eigen::Ref<const Eigen::RowVectorXf>& row) {
  double raw = ensemble.base_score;
  for (const auto& tree : ensemble.trees) {
    raw += ensemble.learning_rate * tree_output(tree, row);
  }
  return raw;
}

double predict_probability(const Ensemble& ensemble,
                           const Eigen::Ref<const Eigen::RowVectorXf>& row) {
  return 1.0 / (1.0 + std::exp(-raw_prediction(ensemble, row)));
}

std::string topology_hash(const Ensemble& ensemble) {
  std::string canon;
  canon.reserve(ensemble.trees.size() * 64);
  for (const auto& tree : ensemble.trees) {
    canon += "T";
    for (const auto& nd : tree.nodes) {
      canon += std::to_string(nd.id);
      canon += nd.is_leaf ? "L" : (nd.owner == Party::a ? "A" : "B");
      if (!nd.is_leaf) {
        canon += ":" + std::to_string(nd.left) + "," + std::to_string(nd.right);
      }
      canon += ";";
    }
  }
  return hex_digest(sha256(canon));
}

}  // namespace fedgbm::core
