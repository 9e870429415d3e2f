#include "fedgbm/core/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "fedgbm/common/errors.hpp"

namespace fedgbm::core {

FeatureBins quantile_bins(const Eigen::Ref<const Eigen::VectorXf>& column, int max_bins) {
  if (max_bins < 2 || max_bins > 255) {
    throw ConfigError("bin count must lie in [2, 255]");
  }
  std::vector<float> values;
  values.reserve(static_cast<std::size_t>(column.size()));
  for (Eigen::Index i = 0; i < column.size(); ++i) {
    if (!std::isnan(column(i))) values.push_back(column(i));
  }
  FeatureBins out;
  if (values.empty()) return out;
  std::sort(values.begin(), values.end());

  // Candidate thresholds sit midway between adjacent quantile values, so a
  // threshold never coincides with a data value.
  std::vector<double> cuts;
  for (int q = 1; q < max_bins; ++q) {
    const std::size_t pos = static_cast<std::size_t>(
        static_cast<double>(q) * static_cast<double>(values.size()) / max_bins);
    const std::size_t idx = std::min(pos, values.size() - 1);
    if (idx == 0) continue;
    const double lo = values[idx - 1];
    const double hi = values[idx];
    if (lo < hi) cuts.push_back(lo + (hi - lo) / 2.0);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  out.edges = std::move(cuts);
  return out;
}

std::vector<FeatureBins> quantile_bins_all(const Eigen::Ref<const Eigen::MatrixXf>& features,
                                           int max_bins) {
  std::vector<FeatureBins> out(static_cast<std::size_t>(features.cols()));
  for (Eigen::Index f = 0; f < features.cols(); ++f) {
    out[static_cast<std::size_t>(f)] = quantile_bins(features.col(f), max_bins);
  }
  return out;
}

std::size_t bin_index(const FeatureBins& bins, float x) {
  if (std::isnan(x)) return bins.value_bins();  // missing bin
  const auto it = std::lower_bound(bins.edges.begin(), bins.edges.end(),
                                   static_cast<double>(x));
  return static_cast<std::size_t>(it - bins.edges.begin());
}

FeatureHistogram build_histogram(const Eigen::Ref<const Eigen::VectorXf>& column,
                                 const FeatureBins& bins,
                                 const std::vector<std::uint32_t>& sample_indices,
                                 const Eigen::Ref<const Eigen::VectorXd>& g,
                                 const Eigen::Ref<const Eigen::VectorXd>& h) {
  for (std::size_t e = 1; e < bins.edges.size(); ++e) {
    if (!(bins.edges[e - 1] < bins.edges[e])) {
      throw ConfigError("bin edges must be strictly increasing");
    }
  }
  if (bins.value_bins() > 256) throw ConfigError("too many bins");
  FeatureHistogram hist;
  hist.bins.assign(bins.value_bins() + 1, BinStats{});
  for (std::size_t pos = 0; pos < sample_indices.size(); ++pos) {
    const auto row = static_cast<Eigen::Index>(sample_indices[pos]);
    const std::size_t b = bin_index(bins, column(row));
    auto& stats = hist.bins[b];
    stats.g += g(static_cast<Eigen::Index>(pos));
    stats.h += h(static_cast<Eigen::Index>(pos));
    stats.count += 1;
  }
  return hist;
}

double split_gain(double g_left, double h_left, double g_total, double h_total,
                  double lambda) {
  const double g_right = g_total - g_left;
  const double h_right = h_total - h_left;
  const double parent = g_total * g_total / (h_total + lambda);
  return 0.5 * (g_left * g_left / (h_left + lambda) +
                g_right * g_right / (h_right + lambda) - parent);
}

std::optional<SplitCandidate> best_split_from_histogram(const FeatureHistogram& hist,
                                                        const FeatureBins& bins,
                                                        double lambda, int min_leaf,
                                                        int feature_index, int owner) {
  if (lambda < 0) throw ConfigError("lambda must be non-negative");
  double g_total = 0, h_total = 0;
  std::uint64_t total_count = 0;
  for (const auto& b : hist.bins) {
    g_total += b.g;
    h_total += b.h;
    total_count += b.count;
  }

  std::optional<SplitCandidate> best;
  double gl = 0, hl = 0;
  std::uint64_t cl = 0;
  // Split after value bin e puts bins [0..e] left; missing always right.
  for (std::size_t e = 0; e + 1 < hist.value_bins(); ++e) {
    gl += hist.bins[e].g;
    hl += hist.bins[e].h;
    cl += hist.bins[e].count;
    const std::uint64_t cr = total_count - cl;
    if (cl < static_cast<std::uint64_t>(min_leaf) || cr < static_cast<std::uint64_t>(min_leaf)) {
      continue;
    }
    const double gain = split_gain(gl, hl, g_total, h_total, lambda);
    if (gain > 0 && (!best || gain > best->gain)) {
      SplitCandidate c;
      c.owner = owner;
      c.feature_index = feature_index;
      c.edge_index = static_cast<int>(e);
      c.threshold = e < bins.edges.size() ? bins.edges[e] : 0.0;
      c.gain = gain;
      c.left_count = static_cast<std::uint32_t>(cl);
      c.right_count = static_cast<std::uint32_t>(cr);
      c.g_left = gl;
      c.h_left = hl;
      best = c;
    }
  }
  return best;
}

std::optional<SplitCandidate> best_split_over_features(
    const std::vector<FeatureHistogram>& hists, const std::vector<FeatureBins>& bins,
    double lambda, int min_leaf, int owner) {
  std::optional<SplitCandidate> best;
  for (std::size_t f = 0; f < hists.size(); ++f) {
    auto c = best_split_from_histogram(hists[f], bins[f], lambda, min_leaf,
                                       static_cast<int>(f), owner);
    if (c && (!best || c->gain > best->gain)) best = c;
  }
  return best;
}

}  // namespace fedgbm::core
