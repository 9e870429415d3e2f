#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

namespace fedgbm::core {

// Candidate thresholds for one feature. edges are strictly increasing;
// value bin j holds x <= edges[j] (first match), overflow bin holds
// x > edges.back(), NaN goes to the dedicated missing bin and is routed
// right by every split.
struct FeatureBins {
  std::vector<double> edges;
  std::size_t value_bins() const { return edges.size() + 1; }
};

// Up to max_bins quantile bins per feature, computed on the full column.
FeatureBins quantile_bins(const Eigen::Ref<const Eigen::VectorXf>& column, int max_bins);

std::vector<FeatureBins> quantile_bins_all(const Eigen::Ref<const Eigen::MatrixXf>& features,
                                           int max_bins);

// Bin index for a value: [0, edges.size()] for finite x, missing bin index
// (= value_bins()) for NaN.
std::size_t bin_index(const FeatureBins& bins, float x);

struct BinStats {
  double g = 0.0;
  double h = 0.0;
  std::uint32_t count = 0;
};

struct FeatureHistogram {
  std::vector<BinStats> bins;  // value bins, then one missing bin at the end
  std::size_t value_bins() const { return bins.size() - 1; }
  const BinStats& missing() const { return bins.back(); }
};

FeatureHistogram build_histogram(const Eigen::Ref<const Eigen::VectorXf>& column,
                                 const FeatureBins& bins,
                                 const std::vector<std::uint32_t>& sample_indices,
                                 const Eigen::Ref<const Eigen::VectorXd>& g,
                                 const Eigen::Ref<const Eigen::VectorXd>& h);

// A proposed split: samples with x <= threshold go left, everything else
// (including missing) goes right. Gains are second-order:
//   gain = 1/2 [G_L^2/(H_L+l) + G_R^2/(H_R+l) - (G_L+G_R)^2/(H_L+H_R+l)].
struct SplitCandidate {
  int owner = 0;           // 0 = party A, 1 = party B
  int feature_index = 0;   // local to the owner
  int edge_index = 0;
  double threshold = 0.0;  // meaningful only at the owner
  double gain = 0.0;
  std::uint32_t left_count = 0;
  std::uint32_t right_count = 0;
  double g_left = 0.0;
  double h_left = 0.0;
};

double split_gain(double g_left, double h_left, double g_total, double h_total,
                  double lambda);

// Best admissible split of one feature histogram; nothing when no edge has
// positive gain with both sides >= min_leaf. Ties break toward the lowest
// edge index.
std::optional<SplitCandidate> best_split_from_histogram(const FeatureHistogram& hist,
                                                        const FeatureBins& bins,
                                                        double lambda, int min_leaf,
                                                        int feature_index, int owner);

// Best over several features; ties break toward the lowest feature index
// (then lowest edge), matching the candidate ordering rules used during
// federated selection.
std::optional<SplitCandidate> best_split_over_features(
    const std::vector<FeatureHistogram>& hists, const std::vector<FeatureBins>& bins,
    double lambda, int min_leaf, int owner);

}  // namespace fedgbm::core
