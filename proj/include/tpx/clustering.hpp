#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tpx/pipeline.hpp"

namespace tpx {

struct KMeansResult {
    /// Cluster per row, numbered by first appearance.
    std::vector<int> labels;
    /// Within-cluster sum of squares in standardized coordinates.
    double inertia = 0.0;
};

/// Per-column zero mean and unit population variance; constant columns become 0.
std::vector<std::vector<double>> standardize_columns(const FeatureMatrix& m);

/// k-means++ seeding and Lloyd iterations on the standardized rows; the run with the
/// smallest inertia among `restarts` wins. ParameterError when k is 0 or exceeds the
/// row count.
KMeansResult kmeans(const FeatureMatrix& m, std::size_t k, std::uint64_t seed, unsigned restarts = 10);

/// Adjusted Rand index, or nullopt when it is undefined (fewer than two items, or
/// both labelings trivial so that the expected and maximal index coincide).
/// ParameterError on a length mismatch.
std::optional<double> adjusted_rand_index(std::span<const int> a, std::span<const int> b);

}  // namespace tpx
