#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tpx/digraph.hpp"
#include "tpx/spike_train.hpp"

namespace tpx {

/// Homogeneous Poisson firing, one rate (Hz) per neuron, times in ms on a grid of
/// `resolution_ms` and strictly below `duration_ms`.
SpikeTrain poisson_spike_train(const std::vector<double>& rates_hz, double duration_ms, std::uint64_t seed,
                               double resolution_ms = 0.1);

struct ErExperimentConfig {
    std::size_t n_vertices = 100;
    double p = 0.25;
    std::vector<double> qs{0.0, 0.025, 0.05, 0.075};
    std::size_t per_group = 20;
    std::size_t max_order = 6;
    std::size_t d = 6;
    /// Cluster count; 0 means one per group.
    std::size_t k = 0;
    unsigned restarts = 10;
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

struct SpikeExperimentConfig {
    std::size_t n_vertices = 100;
    double structural_p = 0.1;
    /// Firing rate of every neuron, one entry per class.
    std::vector<double> class_rates_hz{10.0, 30.0};
    std::size_t repetitions = 5;
    double duration_ms = 250.0;
    double t1 = 50.0;
    double t2 = 5.0;
    std::size_t m = 6;
    /// Betti numbers per bin for the comparison features.
    std::size_t betti_d = 3;
    std::size_t max_order = 8;
    std::size_t k = 0;
    unsigned restarts = 10;
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

struct ClusterReport {
    std::vector<int> truth;
    std::vector<int> tournaplex_labels;
    std::optional<double> tournaplex_ari;
    std::vector<int> betti_labels;
    std::optional<double> betti_ari;
};

/// Biased random digraphs, one group per q: tournaplex bar-count features against
/// directed flag Betti features, each clustered by k-means.
ClusterReport run_er_experiment(const ErExperimentConfig& config);

/// Poisson spike trains of two or more rate classes on one random structural graph:
/// binned bar-count features against binned Betti features.
ClusterReport run_spike_experiment(const SpikeExperimentConfig& config);

/// Human-readable summary plus one `row,truth,tournaplex,betti` line per item.
void write_cluster_report(std::ostream& out, const ClusterReport& report);

}  // namespace tpx
