#include "tpx/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tpx/errors.hpp"
#include "tpx/parallel.hpp"

namespace tpx {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::vector<std::string> column_labels)
    : rows_(rows), labels_(std::move(column_labels)), values_(rows * labels_.size(), 0.0) {}

FeatureMatrix FeatureMatrix::select(std::span<const std::size_t> columns) const {
    std::vector<std::string> labels;
    for (std::size_t c : columns) {
        if (c >= this->columns()) throw RangeError("column " + std::to_string(c) + " out of range");
        labels.push_back(labels_[c]);
    }
    FeatureMatrix out(rows_, std::move(labels));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < columns.size(); ++k) out.at(r, k) = at(r, columns[k]);
    }
    return out;
}

std::vector<double> column_deviations(const FeatureMatrix& m) {
    std::vector<double> out(m.columns(), 0.0);
    if (m.rows() == 0) return out;
    const auto n = static_cast<double>(m.rows());
    for (std::size_t c = 0; c < m.columns(); ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) mean += m.at(r, c);
        mean /= n;
        double ss = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) ss += (m.at(r, c) - mean) * (m.at(r, c) - mean);
        out[c] = std::sqrt(ss / n);
    }
    return out;
}

std::vector<std::size_t> top_deviation_columns(const FeatureMatrix& m, std::size_t count) {
    if (count == 0) throw ParameterError("feature count must be at least 1");
    if (m.columns() < count) {
        throw ParameterError("degenerate features: " + std::to_string(count) + " columns requested but only " +
                             std::to_string(m.columns()) + " candidates exist");
    }
    const auto sd = column_deviations(m);
    std::vector<std::size_t> order(m.columns());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sd[a] > sd[b]; });
    order.resize(count);
    std::sort(order.begin(), order.end());
    return order;
}

std::string to_string(const BarTriple& t) {
    return std::to_string(t.dimension) + ":" + std::to_string(t.birth) + ":" +
           (t.death == kInfinity ? std::string("inf") : std::to_string(t.death));
}

std::map<BarTriple, std::size_t> count_bar_triples(const Barcode& barcode) {
    std::map<BarTriple, std::size_t> counts;
    for (const PersistencePair& p : barcode.pairs()) ++counts[{p.dimension, p.birth, p.death}];
    return counts;
}

Barcode local_directionality_barcode(const Digraph& g, std::size_t max_order) {
    EnumerationOptions quiet;
    quiet.diagnostics = nullptr;
    const Tournaplex complex = flag_tournaplex(g, max_order, quiet);
    return compute_persistence(build_filtration(complex, WeightFunction::local_directionality()));
}

std::vector<std::size_t> directed_flag_betti(const Digraph& g, std::size_t count, std::size_t max_order) {
    const std::size_t order = std::min(std::max(max_order, count + 1), kMaxTournamentOrder);
    auto betti = betti_numbers(directed_flag_complex(g, order));
    betti.resize(count, 0);
    return betti;
}

namespace {

// Column (key, label) pairs in key order, filled from per-row maps.
template <typename Key>
FeatureMatrix assemble(const std::vector<std::map<Key, std::size_t>>& rows,
                       const std::function<std::string(const Key&)>& label) {
    std::map<Key, std::size_t> universe;
    for (const auto& row : rows) {
        for (const auto& [key, count] : row) universe.emplace(key, 0);
    }
    std::vector<std::string> labels;
    std::size_t column = 0;
    for (auto& [key, index] : universe) {
        index = column++;
        labels.push_back(label(key));
    }
    FeatureMatrix out(rows.size(), std::move(labels));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [key, count] : rows[r]) out.at(r, universe.at(key)) = static_cast<double>(count);
    }
    return out;
}

struct BinnedTriple {
    BarTriple triple;
    std::size_t bin = 0;
    friend auto operator<=>(const BinnedTriple&, const BinnedTriple&) = default;
};

struct BinnedBetti {
    std::size_t dimension = 0;
    std::size_t bin = 0;
    friend auto operator<=>(const BinnedBetti&, const BinnedBetti&) = default;
};

}  // namespace

FeatureMatrix bar_count_candidates(std::span<const Digraph> graphs, const PipelineOptions& options) {
    std::vector<std::map<BarTriple, std::size_t>> rows(graphs.size());
    parallel_for(graphs.size(), options.threads, [&](std::size_t i) {
        rows[i] = count_bar_triples(local_directionality_barcode(graphs[i], options.max_order));
    });
    return assemble<BarTriple>(rows, [](const BarTriple& t) { return to_string(t); });
}

FeatureMatrix algorithm1(std::span<const Digraph> graphs, std::size_t d, const PipelineOptions& options) {
    if (graphs.empty()) throw ParameterError("no graphs given");
    const FeatureMatrix candidates = bar_count_candidates(graphs, options);
    return candidates.select(top_deviation_columns(candidates, d));
}

FeatureMatrix betti_feature_matrix(std::span<const Digraph> graphs, std::size_t count, const PipelineOptions& options) {
    if (count == 0) throw ParameterError("Betti feature count must be at least 1");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < count; ++k) labels.push_back("beta" + std::to_string(k));
    FeatureMatrix out(graphs.size(), std::move(labels));
    std::vector<std::vector<std::size_t>> betti(graphs.size());
    parallel_for(graphs.size(), options.threads,
                 [&](std::size_t i) { betti[i] = directed_flag_betti(graphs[i], count, options.max_order); });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t k = 0; k < count; ++k) out.at(i, k) = static_cast<double>(betti[i][k]);
    }
    return out;
}

std::vector<std::vector<Digraph>> transmission_response_batch(std::span<const SpikeTrain> spike_sets,
                                                              const Digraph& structure, double t1, double t2) {
    std::vector<std::vector<Digraph>> out;
    out.reserve(spike_sets.size());
    for (const SpikeTrain& s : spike_sets) out.push_back(transmission_response(structure, s, t1, t2));
    return out;
}

namespace {

// Flattens (spike train, bin) into one work list.
struct BinJob {
    std::size_t train;
    std::size_t bin;
};

std::vector<BinJob> bin_jobs(const std::vector<std::vector<Digraph>>& graphs) {
    std::vector<BinJob> jobs;
    for (std::size_t s = 0; s < graphs.size(); ++s) {
        for (std::size_t b = 0; b < graphs[s].size(); ++b) jobs.push_back({s, b});
    }
    return jobs;
}

}  // namespace

FeatureMatrix binned_bar_count_candidates(std::span<const SpikeTrain> spike_sets, const Digraph& structure, double t1,
                                          double t2, const PipelineOptions& options) {
    const auto graphs = transmission_response_batch(spike_sets, structure, t1, t2);
    const auto jobs = bin_jobs(graphs);
    std::vector<std::map<BarTriple, std::size_t>> per_job(jobs.size());
    parallel_for(jobs.size(), options.threads, [&](std::size_t k) {
        per_job[k] = count_bar_triples(local_directionality_barcode(graphs[jobs[k].train][jobs[k].bin], options.max_order));
    });
    std::vector<std::map<BinnedTriple, std::size_t>> rows(spike_sets.size());
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        for (const auto& [triple, count] : per_job[k]) rows[jobs[k].train][{triple, jobs[k].bin}] = count;
    }
    return assemble<BinnedTriple>(
        rows, [](const BinnedTriple& t) { return "bin" + std::to_string(t.bin) + "/" + to_string(t.triple); });
}

FeatureMatrix algorithm2(std::span<const SpikeTrain> spike_sets, const Digraph& structure, std::size_t m, double t1,
                         double t2, const PipelineOptions& options) {
    if (spike_sets.empty()) throw ParameterError("no spike trains given");
    const FeatureMatrix candidates = binned_bar_count_candidates(spike_sets, structure, t1, t2, options);
    return candidates.select(top_deviation_columns(candidates, m));
}

FeatureMatrix binned_betti_candidates(std::span<const SpikeTrain> spike_sets, const Digraph& structure, std::size_t d,
                                      double t1, double t2, const PipelineOptions& options) {
    if (d == 0) throw ParameterError("Betti feature count must be at least 1");
    const auto graphs = transmission_response_batch(spike_sets, structure, t1, t2);
    const auto jobs = bin_jobs(graphs);
    std::vector<std::vector<std::size_t>> per_job(jobs.size());
    parallel_for(jobs.size(), options.threads, [&](std::size_t k) {
        per_job[k] = directed_flag_betti(graphs[jobs[k].train][jobs[k].bin], d, options.max_order);
    });
    // Every (index, bin) slot that exists for some spike train is a candidate, even
    // when its value is zero everywhere.
    std::vector<std::map<BinnedBetti, std::size_t>> rows(spike_sets.size());
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) rows[jobs[k].train][{i, jobs[k].bin}] = per_job[k][i];
    }
    return assemble<BinnedBetti>(rows, [](const BinnedBetti& b) {
        return "bin" + std::to_string(b.bin) + "/beta" + std::to_string(b.dimension);
    });
}

FeatureMatrix algorithm3(std::span<const SpikeTrain> spike_sets, const Digraph& structure, std::size_t d,
                         std::size_t m, double t1, double t2, const PipelineOptions& options) {
    if (spike_sets.empty()) throw ParameterError("no spike trains given");
    const FeatureMatrix candidates = binned_betti_candidates(spike_sets, structure, d, t1, t2, options);
    return candidates.select(top_deviation_columns(candidates, m));
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& m) {
    for (std::size_t c = 0; c < m.columns(); ++c) out << (c ? "," : "") << m.column_labels()[c];
    out << '\n';
    std::ostringstream cell;
    cell.precision(17);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.columns(); ++c) {
            cell.str({});
            cell << m.at(r, c);
            out << (c ? "," : "") << cell.str();
        }
        out << '\n';
    }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

FeatureMatrix read_feature_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_csv(line);
        if (!header) {
            labels = std::move(fields);
            header = true;
            continue;
        }
        if (fields.size() != labels.size()) {
            throw ParseError(line_no, "expected " + std::to_string(labels.size()) + " fields, found " +
                                          std::to_string(fields.size()));
        }
        std::vector<double> row;
        for (const auto& f : fields) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(f, &used));
                if (used != f.size()) throw std::invalid_argument(f);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad number '" + f + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (!header) throw ParseError(line_no, "missing header line");
    FeatureMatrix out(rows.size(), std::move(labels));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < out.columns(); ++c) out.at(r, c) = rows[r][c];
    }
    return out;
}

}  // namespace tpx
