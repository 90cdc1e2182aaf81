#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "tpx/clustering.hpp"
#include "tpx/digraph.hpp"
#include "tpx/directionality.hpp"
#include "tpx/errors.hpp"
#include "tpx/experiments.hpp"
#include "tpx/persistence.hpp"
#include "tpx/pipeline.hpp"
#include "tpx/random.hpp"
#include "tpx/spike_train.hpp"
#include "tpx/tournaplex.hpp"

namespace tpx::cli {
namespace {

namespace fs = std::filesystem;

const std::vector<Weight> kDefaultDrLevels{0,  2,  10, 12, 20, 28,  36,  44,  52,  60, 62,
                                           70, 78, 86, 94, 102, 110, 134, 142, 150, 208};
const std::vector<Weight> kDefaultC3Levels{0, 1, 2, 3, 4, 5, 6, 9};

struct Options {
    std::string input;
    std::string out;
    std::string weight = "dr";
    std::size_t max_order = kDefaultMaxOrder;
    std::uint64_t seed = 0;
    bool csv = false;
    bool transitive = false;
    double p = 0.25;
    double q = 0.0;
    std::vector<double> qs;
    std::vector<double> rates{10.0, 30.0};
    std::size_t n_vertices = 100;
    std::size_t groups = 4;
    std::size_t per_group = 20;
    std::size_t count = 1;
    std::size_t k = 0;
    std::size_t d = 6;
    std::size_t m = 6;
    unsigned restarts = 10;
    unsigned threads = 1;
    double t1 = 50.0;
    double t2 = 5.0;
    double duration = -1.0;
    std::string labels;
    std::string algorithm = "tournaplex";
    std::vector<Weight> dr_levels = kDefaultDrLevels;
    std::vector<Weight> c3_levels = kDefaultC3Levels;
};

// Writes to --out when given, otherwise to the command's stdout stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot write '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

Tournaplex build_complex(const Digraph& g, const Options& o, std::ostream& err) {
    EnumerationOptions enumeration;
    enumeration.threads = o.threads;
    enumeration.diagnostics = [&err](std::string_view message) { err << "warning: " << message << '\n'; };
    return o.transitive ? directed_flag_complex(g, o.max_order, enumeration)
                        : flag_tournaplex(g, o.max_order, enumeration);
}

WeightFunction weight_for(const Options& o, const Tournaplex& complex) {
    if (o.weight == "global") {
        const Digraph skeleton = one_skeleton(complex);
        return WeightFunction::parse(o.weight, &skeleton);
    }
    return WeightFunction::parse(o.weight);
}

void cmd_ph(const Options& o, std::ostream& out, std::ostream& err) {
    const Digraph g = read_digraph_file(o.input);
    const Tournaplex complex = build_complex(g, o, err);
    const Barcode barcode = compute_persistence(build_filtration(complex, weight_for(o, complex)));
    Sink sink(o.out, out);
    write_barcode(*sink, barcode, o.csv);
}

void cmd_dump(const Options& o, std::ostream& out, std::ostream& err) {
    const Digraph g = read_digraph_file(o.input);
    const Tournaplex complex = build_complex(g, o, err);
    Sink sink(o.out, out);
    dump_tournaplex(*sink, complex, weight_for(o, complex));
}

void cmd_bigrid(const Options& o, std::ostream& out, std::ostream& err) {
    const Digraph g = read_digraph_file(o.input);
    const Tournaplex complex = build_complex(g, o, err);
    const auto grid = bifiltration_betti(complex, o.dr_levels, o.c3_levels, o.threads);
    Sink sink(o.out, out);
    write_betti_grid(*sink, grid);
}

void cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
    const Digraph g = read_digraph_file(o.input);
    const Tournaplex complex = build_complex(g, o, err);
    std::map<std::pair<std::size_t, std::int64_t>, std::size_t> histogram;
    complex.for_each([&](const Tournament& t) { ++histogram[{t.order(), three_cycle_count(t)}]; });
    Sink sink(o.out, out);
    *sink << "order,c3,count\n";
    for (const auto& [key, count] : histogram) *sink << key.first << ',' << key.second << ',' << count << '\n';
}

void cmd_gen_er(const Options& o, std::ostream& out) {
    if (o.count == 0) throw ParameterError("--count must be at least 1");
    if (o.count == 1) {
        const Digraph g = er_biased(o.n_vertices, o.p, o.q, o.seed);
        Sink sink(o.out, out);
        write_digraph(*sink, g);
        return;
    }
    if (o.out.empty()) throw ParameterError("--out must name a directory when --count exceeds 1");
    fs::create_directories(o.out);
    for (std::size_t i = 0; i < o.count; ++i) {
        std::ostringstream name;
        name << "graph_" << i << ".flag";
        write_digraph_file((fs::path(o.out) / name.str()).string(), er_biased(o.n_vertices, o.p, o.q, derive_seed(o.seed, i)));
    }
}

std::vector<double> experiment_qs(const Options& o) {
    if (!o.qs.empty()) return o.qs;
    std::vector<double> qs;
    for (std::size_t g = 0; g < o.groups; ++g) qs.push_back(0.025 * static_cast<double>(g));
    return qs;
}

void cmd_experiment_er(const Options& o, std::ostream& out) {
    ErExperimentConfig config;
    config.n_vertices = o.n_vertices;
    config.p = o.p;
    config.qs = experiment_qs(o);
    config.per_group = o.per_group;
    config.max_order = o.max_order;
    config.d = o.d;
    config.k = o.k;
    config.restarts = o.restarts;
    config.threads = o.threads;
    config.seed = o.seed;
    const ClusterReport report = run_er_experiment(config);
    Sink sink(o.out, out);
    write_cluster_report(*sink, report);
}

void cmd_experiment_spikes(const Options& o, std::ostream& out) {
    SpikeExperimentConfig config;
    config.n_vertices = o.n_vertices;
    config.structural_p = o.p;
    config.class_rates_hz = o.rates;
    config.repetitions = o.per_group;
    config.duration_ms = o.duration > 0.0 ? o.duration : 250.0;
    config.t1 = o.t1;
    config.t2 = o.t2;
    config.m = o.m;
    config.betti_d = o.d;
    config.max_order = o.max_order;
    config.k = o.k;
    config.restarts = o.restarts;
    config.threads = o.threads;
    config.seed = o.seed;
    const ClusterReport report = run_spike_experiment(config);
    Sink sink(o.out, out);
    write_cluster_report(*sink, report);
}

struct Manifest {
    std::vector<std::string> graphs;
    std::string structure;
    std::vector<std::string> spikes;
};

// Lines `graph <path>`, `structure <path>` or `spikes <path>`; relative paths are
// resolved against the manifest's directory.
Manifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    const fs::path base = fs::path(path).parent_path();
    Manifest m;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string kind;
        std::string file;
        if (!(fields >> kind) || kind.front() == '#') continue;
        if (!(fields >> file)) throw ParseError(line_no, "missing path after '" + kind + "'");
        const std::string resolved = fs::path(file).is_absolute() ? file : (base / file).string();
        if (kind == "graph") m.graphs.push_back(resolved);
        else if (kind == "spikes") m.spikes.push_back(resolved);
        else if (kind == "structure") m.structure = resolved;
        else throw ParseError(line_no, "unknown manifest entry '" + kind + "'");
    }
    if (!m.graphs.empty() && (!m.spikes.empty() || !m.structure.empty())) {
        throw ValidationError("manifest mixes graph entries with spike-train entries");
    }
    if (!m.spikes.empty() && m.structure.empty()) throw ValidationError("spike-train manifest lacks a structure entry");
    if (m.graphs.empty() && m.spikes.empty()) throw ValidationError("manifest lists no inputs");
    return m;
}

void cmd_features(const Options& o, std::ostream& out) {
    if (o.algorithm != "tournaplex" && o.algorithm != "betti") {
        throw ParameterError("--algorithm must be tournaplex or betti");
    }
    const Manifest manifest = read_manifest(o.input);
    PipelineOptions options{o.max_order, o.threads};
    FeatureMatrix features;
    if (!manifest.graphs.empty()) {
        std::vector<Digraph> graphs;
        for (const auto& path : manifest.graphs) graphs.push_back(read_digraph_file(path));
        features = o.algorithm == "tournaplex" ? algorithm1(graphs, o.d, options)
                                               : betti_feature_matrix(graphs, o.d, options);
    } else {
        const Digraph structure = read_digraph_file(manifest.structure);
        std::vector<SpikeTrain> trains;
        for (const auto& path : manifest.spikes) trains.push_back(read_spike_csv_file(path, o.duration));
        features = o.algorithm == "tournaplex" ? algorithm2(trains, structure, o.m, o.t1, o.t2, options)
                                               : algorithm3(trains, structure, o.d, o.m, o.t1, o.t2, options);
    }
    Sink sink(o.out, out);
    write_feature_csv(*sink, features);
}

std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<int> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            std::size_t used = 0;
            labels.push_back(std::stoi(line, &used));
            if (used != line.size()) throw std::invalid_argument(line);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected one integer label per line");
        }
    }
    return labels;
}

void cmd_cluster(const Options& o, std::ostream& out) {
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot open '" + o.input + "'");
    const FeatureMatrix features = read_feature_csv(in);
    std::vector<int> truth;
    if (!o.labels.empty()) {
        truth = read_labels(o.labels);
        if (truth.size() != features.rows()) {
            throw ValidationError("label file has " + std::to_string(truth.size()) + " entries for " +
                                  std::to_string(features.rows()) + " rows");
        }
    }
    const std::size_t k = o.k == 0 ? 2 : o.k;
    const KMeansResult result = kmeans(features, k, o.seed, o.restarts);
    Sink sink(o.out, out);
    if (!o.labels.empty()) {
        const auto ari = adjusted_rand_index(truth, result.labels);
        *sink << "# ARI: " << (ari ? std::to_string(*ari) : std::string("undefined")) << '\n';
    }
    *sink << "row_index,cluster\n";
    for (std::size_t i = 0; i < result.labels.size(); ++i) *sink << i << ',' << result.labels[i] << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flag tournaplexes, directionality filtrations and persistent homology"};
    app.require_subcommand(1);
    Options o;

    auto add_weight = [&](CLI::App* cmd) {
        cmd->add_option("--weight", o.weight, "dr, c3, global, motif:<order>:<hex>, combined:<a>:<b>")
            ->capture_default_str();
    };
    auto add_complex = [&](CLI::App* cmd) {
        cmd->add_option("graph", o.input, "digraph file")->required();
        cmd->add_option("--max-order", o.max_order, "largest tournament order enumerated")->capture_default_str();
        cmd->add_flag("--transitive", o.transitive, "use the directed flag complex (transitive tournaments only)");
        cmd->add_option("--threads", o.threads, "worker threads")->capture_default_str();
        cmd->add_option("--out", o.out, "output file (default stdout)");
    };

    auto* ph = app.add_subcommand("ph", "barcode of the filtered flag tournaplex");
    add_complex(ph);
    add_weight(ph);
    ph->add_flag("--csv", o.csv, "CSV output with header");

    auto* dump = app.add_subcommand("dump", "list every tournament with its weight");
    add_complex(dump);
    add_weight(dump);

    auto* bigrid = app.add_subcommand("bigrid", "Betti numbers over the (w_dr, w_c3) grid");
    add_complex(bigrid);
    bigrid->add_option("--dr-levels", o.dr_levels, "w_dr thresholds")->delimiter(',');
    bigrid->add_option("--c3-levels", o.c3_levels, "w_c3 thresholds")->delimiter(',');

    auto* stats = app.add_subcommand("stats", "histogram of tournaments by order and 3-cycle count");
    add_complex(stats);

    auto* gen = app.add_subcommand("gen-er", "biased Erdos-Renyi digraphs");
    gen->add_option("--n-vertices", o.n_vertices)->capture_default_str();
    gen->add_option("--p", o.p, "probability of (i,j) for i > j")->capture_default_str();
    gen->add_option("--q", o.q, "probability of (i,j) for i < j")->capture_default_str();
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("--count", o.count, "graphs to generate; above 1, --out is a directory")->capture_default_str();
    gen->add_option("--out", o.out, "output file or directory");

    auto add_experiment = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed)->required();
        cmd->add_option("--n-vertices", o.n_vertices)->capture_default_str();
        cmd->add_option("--per-group", o.per_group)->capture_default_str();
        cmd->add_option("--max-order", o.max_order)->capture_default_str();
        cmd->add_option("--k", o.k, "clusters (default: number of groups)");
        cmd->add_option("--d", o.d)->capture_default_str();
        cmd->add_option("--restarts", o.restarts)->capture_default_str();
        cmd->add_option("--threads", o.threads)->capture_default_str();
        cmd->add_option("--out", o.out);
    };
    auto* exp_er = app.add_subcommand("experiment-er", "cluster biased ER digraphs by q");
    add_experiment(exp_er);
    exp_er->add_option("--p", o.p)->capture_default_str();
    exp_er->add_option("--q", o.qs, "q per group (default 0, 0.025, ... for --groups groups)")->delimiter(',');
    exp_er->add_option("--groups", o.groups)->capture_default_str();

    auto* exp_spikes = app.add_subcommand("experiment-spikes", "cluster synthetic spike trains by firing rate");
    add_experiment(exp_spikes);
    exp_spikes->add_option("--p", o.p, "structural edge probability")->capture_default_str();
    exp_spikes->add_option("--rates", o.rates, "firing rate (Hz) per class")->delimiter(',');
    exp_spikes->add_option("--m", o.m)->capture_default_str();
    exp_spikes->add_option("--t1", o.t1, "bin width (ms)")->capture_default_str();
    exp_spikes->add_option("--t2", o.t2, "response window (ms)")->capture_default_str();
    exp_spikes->add_option("--duration", o.duration, "spike train length (ms), default 250");

    auto* features = app.add_subcommand("features", "feature matrix for the inputs of a manifest");
    features->add_option("manifest", o.input)->required();
    features->add_option("--algorithm", o.algorithm, "tournaplex or betti")->capture_default_str();
    features->add_option("--max-order", o.max_order)->capture_default_str();
    features->add_option("--d", o.d, "selected columns (graphs) or Betti numbers per bin (spikes)")->capture_default_str();
    features->add_option("--m", o.m, "selected columns for spike trains")->capture_default_str();
    features->add_option("--t1", o.t1)->capture_default_str();
    features->add_option("--t2", o.t2)->capture_default_str();
    features->add_option("--duration", o.duration, "spike train length (ms); default: last spike");
    features->add_option("--threads", o.threads)->capture_default_str();
    features->add_option("--out", o.out);

    auto* cluster = app.add_subcommand("cluster", "k-means on a feature CSV");
    cluster->add_option("features", o.input)->required();
    cluster->add_option("--k", o.k, "clusters (default 2)");
    cluster->add_option("--seed", o.seed)->required();
    cluster->add_option("--restarts", o.restarts)->capture_default_str();
    cluster->add_option("--labels", o.labels, "ground-truth labels, one integer per line");
    cluster->add_option("--out", o.out);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*ph) cmd_ph(o, out, err);
        else if (*dump) cmd_dump(o, out, err);
        else if (*bigrid) cmd_bigrid(o, out, err);
        else if (*stats) cmd_stats(o, out, err);
        else if (*gen) cmd_gen_er(o, out);
        else if (*exp_er) cmd_experiment_er(o, out);
        else if (*exp_spikes) cmd_experiment_spikes(o, out);
        else if (*features) cmd_features(o, out);
        else if (*cluster) cmd_cluster(o, out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kSuccess;
}

}  // namespace tpx::cli
