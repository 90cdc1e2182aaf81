#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tpx/digraph.hpp"
#include "tpx/persistence.hpp"
#include "tpx/spike_train.hpp"

namespace tpx {

/// Dense row-major matrix with one label per column.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::vector<std::string> column_labels);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t columns() const noexcept { return labels_.size(); }
    const std::vector<std::string>& column_labels() const noexcept { return labels_; }

    double& at(std::size_t row, std::size_t column) { return values_[row * columns() + column]; }
    double at(std::size_t row, std::size_t column) const { return values_[row * columns() + column]; }
    std::span<const double> row(std::size_t r) const { return {values_.data() + r * columns(), columns()}; }

    /// The listed columns, in the given order.
    FeatureMatrix select(std::span<const std::size_t> columns) const;

    friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<std::string> labels_;
    std::vector<double> values_;
};

/// Population standard deviation of every column.
std::vector<double> column_deviations(const FeatureMatrix& m);

/// Indices of the `count` columns with the largest population standard deviation, ties
/// going to the earlier column, returned in ascending column order. Throws
/// ParameterError ("degenerate features") when fewer than `count` columns exist.
std::vector<std::size_t> top_deviation_columns(const FeatureMatrix& m, std::size_t count);

/// A bar (dimension, birth, death); death kInfinity for an essential class.
struct BarTriple {
    int dimension = 0;
    Weight birth = 0;
    Weight death = 0;
    friend auto operator<=>(const BarTriple&, const BarTriple&) = default;
};

std::string to_string(const BarTriple& t);

/// Multiplicity of every distinct bar.
std::map<BarTriple, std::size_t> count_bar_triples(const Barcode& barcode);

/// Barcode of the flag tournaplex of g under the local directionality weight.
Barcode local_directionality_barcode(const Digraph& g, std::size_t max_order);

/// Betti numbers b_0..b_{count-1} of the directed flag complex of g, computed with
/// enough vertices per simplex for every listed number to be exact.
std::vector<std::size_t> directed_flag_betti(const Digraph& g, std::size_t count, std::size_t max_order);

struct PipelineOptions {
    std::size_t max_order = 8;
    unsigned threads = 1;
};

/// One row per graph, one candidate column per distinct bar over the whole batch.
FeatureMatrix bar_count_candidates(std::span<const Digraph> graphs, const PipelineOptions& options = {});

/// Local directionality feature matrix: the `d` candidate columns of largest deviation.
FeatureMatrix algorithm1(std::span<const Digraph> graphs, std::size_t d, const PipelineOptions& options = {});

/// Raw Betti vectors b_0..b_{count-1} of the directed flag complexes.
FeatureMatrix betti_feature_matrix(std::span<const Digraph> graphs, std::size_t count,
                                   const PipelineOptions& options = {});

/// Transmission-response graphs of every spike train (outer index: spike train).
std::vector<std::vector<Digraph>> transmission_response_batch(std::span<const SpikeTrain> spike_sets,
                                                              const Digraph& structure, double t1, double t2);

/// Candidate columns (bar, bin) over every bin of every spike train.
FeatureMatrix binned_bar_count_candidates(std::span<const SpikeTrain> spike_sets, const Digraph& structure,
                                          double t1, double t2, const PipelineOptions& options = {});

FeatureMatrix algorithm2(std::span<const SpikeTrain> spike_sets, const Digraph& structure, std::size_t m, double t1,
                         double t2, const PipelineOptions& options = {});

/// Candidate columns (Betti index, bin) with b_0..b_{d-1} per bin.
FeatureMatrix binned_betti_candidates(std::span<const SpikeTrain> spike_sets, const Digraph& structure, std::size_t d,
                                      double t1, double t2, const PipelineOptions& options = {});

FeatureMatrix algorithm3(std::span<const SpikeTrain> spike_sets, const Digraph& structure, std::size_t d,
                         std::size_t m, double t1, double t2, const PipelineOptions& options = {});

/// CSV with the column labels as header and one line per row.
void write_feature_csv(std::ostream& out, const FeatureMatrix& m);
FeatureMatrix read_feature_csv(std::istream& in);

}  // namespace tpx
