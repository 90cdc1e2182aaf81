#include "tpx/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tpx/clustering.hpp"
#include "tpx/errors.hpp"
#include "tpx/parallel.hpp"
#include "tpx/pipeline.hpp"
#include "tpx/random.hpp"

namespace tpx {

SpikeTrain poisson_spike_train(const std::vector<double>& rates_hz, double duration_ms, std::uint64_t seed,
                               double resolution_ms) {
    if (!(duration_ms > 0.0)) throw ParameterError("duration must be positive");
    if (!(resolution_ms > 0.0)) throw ParameterError("resolution must be positive");
    SpikeTrain out;
    out.duration = duration_ms;
    for (std::size_t neuron = 0; neuron < rates_hz.size(); ++neuron) {
        const double rate_per_ms = rates_hz[neuron] / 1000.0;
        if (rate_per_ms < 0.0) throw ParameterError("firing rates must be non-negative");
        if (rate_per_ms == 0.0) continue;
        Rng rng(derive_seed(seed, neuron));
        double t = exponential(rng, rate_per_ms);
        while (t < duration_ms) {
            const double snapped = std::floor(t / resolution_ms) * resolution_ms;
            out.events.push_back({snapped, static_cast<VertexId>(neuron)});
            t += exponential(rng, rate_per_ms);
        }
    }
    std::sort(out.events.begin(), out.events.end(),
              [](const SpikeEvent& a, const SpikeEvent& b) { return a.time != b.time ? a.time < b.time : a.neuron < b.neuron; });
    return out;
}

namespace {

// Seed streams, kept apart so changing one stage leaves the others' draws intact.
constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kTournaplexClusterStream = 1;
constexpr std::uint64_t kBettiClusterStream = 2;
constexpr std::uint64_t kStructureStream = 3;
constexpr std::uint64_t kSpikeStream = 4;

void cluster_both(ClusterReport& report, const FeatureMatrix& tournaplex, const FeatureMatrix& betti, std::size_t k,
                  std::uint64_t seed, unsigned restarts) {
    report.tournaplex_labels = kmeans(tournaplex, k, derive_seed(seed, kTournaplexClusterStream), restarts).labels;
    report.betti_labels = kmeans(betti, k, derive_seed(seed, kBettiClusterStream), restarts).labels;
    report.tournaplex_ari = adjusted_rand_index(report.truth, report.tournaplex_labels);
    report.betti_ari = adjusted_rand_index(report.truth, report.betti_labels);
}

}  // namespace

ClusterReport run_er_experiment(const ErExperimentConfig& config) {
    if (config.qs.empty() || config.per_group == 0) throw ParameterError("experiment needs at least one graph");
    const std::size_t total = config.qs.size() * config.per_group;
    const std::uint64_t graph_seed = derive_seed(config.seed, kGraphStream);
    std::vector<Digraph> graphs(total);
    ClusterReport report;
    for (std::size_t i = 0; i < total; ++i) report.truth.push_back(static_cast<int>(i / config.per_group));
    parallel_for(total, config.threads, [&](std::size_t i) {
        graphs[i] = er_biased(config.n_vertices, config.p, config.qs[i / config.per_group], derive_seed(graph_seed, i));
    });

    PipelineOptions options{config.max_order, config.threads};
    const FeatureMatrix tournaplex = algorithm1(graphs, config.d, options);
    const FeatureMatrix betti = betti_feature_matrix(graphs, config.d, options);
    const std::size_t k = config.k == 0 ? config.qs.size() : config.k;
    cluster_both(report, tournaplex, betti, k, config.seed, config.restarts);
    return report;
}

ClusterReport run_spike_experiment(const SpikeExperimentConfig& config) {
    if (config.class_rates_hz.empty() || config.repetitions == 0) {
        throw ParameterError("experiment needs at least one spike train");
    }
    const Digraph structure = er_biased(config.n_vertices, config.structural_p, config.structural_p,
                                        derive_seed(config.seed, kStructureStream));
    const std::uint64_t spike_seed = derive_seed(config.seed, kSpikeStream);
    std::vector<SpikeTrain> trains;
    ClusterReport report;
    for (std::size_t c = 0; c < config.class_rates_hz.size(); ++c) {
        const std::vector<double> rates(config.n_vertices, config.class_rates_hz[c]);
        for (std::size_t r = 0; r < config.repetitions; ++r) {
            trains.push_back(poisson_spike_train(rates, config.duration_ms, derive_seed(spike_seed, trains.size())));
            report.truth.push_back(static_cast<int>(c));
        }
    }
    PipelineOptions options{config.max_order, config.threads};
    const FeatureMatrix tournaplex = algorithm2(trains, structure, config.m, config.t1, config.t2, options);
    const FeatureMatrix betti =
        algorithm3(trains, structure, config.betti_d, config.m, config.t1, config.t2, options);
    const std::size_t k = config.k == 0 ? config.class_rates_hz.size() : config.k;
    cluster_both(report, tournaplex, betti, k, config.seed, config.restarts);
    return report;
}

void write_cluster_report(std::ostream& out, const ClusterReport& report) {
    auto ari = [](const std::optional<double>& v) { return v ? std::to_string(*v) : std::string("undefined"); };
    out << "# tournaplex ARI: " << ari(report.tournaplex_ari) << '\n';
    out << "# betti ARI: " << ari(report.betti_ari) << '\n';
    out << "row,truth,tournaplex,betti\n";
    for (std::size_t i = 0; i < report.truth.size(); ++i) {
        out << i << ',' << report.truth[i] << ',' << report.tournaplex_labels[i] << ',' << report.betti_labels[i] << '\n';
    }
}

}  // namespace tpx
