#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tpx/digraph.hpp"

namespace tpx {

struct SpikeEvent {
    double time;  // milliseconds
    VertexId neuron;

    friend auto operator<=>(const SpikeEvent&, const SpikeEvent&) = default;
};

/// A recording of spike events over [0, duration] ms. Events need not be sorted.
struct SpikeTrain {
    std::vector<SpikeEvent> events;
    double duration = 0.0;
};

/// Throws ValidationError when an event time lies outside [0, duration] or a
/// neuron index is not a vertex of `structure`.
void validate_spike_train(const SpikeTrain& spikes, const Digraph& structure);

/// Reads CSV with header `time,neuron`. Duration is taken from `duration` when
/// given (>= 0), otherwise from the latest event time.
SpikeTrain parse_spike_csv(std::istream& in, double duration = -1.0);
SpikeTrain read_spike_csv_file(const std::string& path, double duration = -1.0);
void write_spike_csv(std::ostream& out, const SpikeTrain& spikes);

/// Number of time bins of width `bin_width` covering [0, duration]: ceil(duration / bin_width).
std::size_t bin_count(double duration, double bin_width);

/// Transmission-response graphs, one per bin of width `bin_width`. Graph r (0-based)
/// contains (i,j) iff (i,j) is an edge of `structure`, i fired at some t0 in
/// [r*bin_width, (r+1)*bin_width), and j fired at some t with t0 < t <= t0 + window.
/// The response spike may fall in a later bin. Throws ParameterError for
/// non-positive widths.
std::vector<Digraph> transmission_response(const Digraph& structure, const SpikeTrain& spikes,
                                           double bin_width, double window);

}  // namespace tpx
