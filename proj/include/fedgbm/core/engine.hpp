#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fedgbm/core/histogram.hpp"
#include "fedgbm/core/tree.hpp"

namespace fedgbm::core {

// One frontier leaf during growth. positions index the batch arrays (g, h),
// kept in ascending order so both parties enumerate leaf members
// identically.
struct LeafState {
  std::int32_t node_id = 0;
  std::vector<std::uint32_t> positions;
  double g_sum = 0.0;
  double h_sum = 0.0;
  std::optional<SplitCandidate> best;
};

struct GrowthHooks {
  // Best admissible split for a freshly created leaf, across every feature
  // view in scope (local only for centralized growth, local + remote for the
  // federated coordinator). Empty when the leaf cannot be split.
  std::function<std::optional<SplitCandidate>(const LeafState&)> search;

  // Commit the winning split and return the left-side flags aligned with
  // leaf.positions. The federated coordinator announces the winner and
  // exchanges the partition here.
  std::function<std::vector<bool>(const LeafState&, const SplitCandidate&,
                                  std::int32_t left_id, std::int32_t right_id)>
      commit;

  // Growth ended (after `rounds` splits; early = frontier exhausted before
  // tree_size rounds). The coordinator tells the peer to finalize.
  std::function<void(int rounds, bool early)> finished;
};

// Leaf-wise growth: tree_size rounds, each splitting the frontier leaf with
// the highest cached best-gain; leaf weight = -G/(H+lambda). Returns a valid
// single-leaf tree when the root admits no split.
Tree grow_tree_leafwise(int tree_size, std::size_t batch_size,
                        const Eigen::Ref<const Eigen::VectorXd>& g,
                        const Eigen::Ref<const Eigen::VectorXd>& h, double lambda,
                        const GrowthHooks& hooks);

}  // namespace fedgbm::core
