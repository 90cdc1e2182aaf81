#include "tpx/spike_train.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tpx/errors.hpp"

namespace tpx {

void validate_spike_train(const SpikeTrain& spikes, const Digraph& structure) {
    for (const SpikeEvent& e : spikes.events) {
        if (!(e.time >= 0.0 && e.time <= spikes.duration)) {
            throw ValidationError("spike time " + std::to_string(e.time) + " outside [0, " +
                                  std::to_string(spikes.duration) + "]");
        }
        if (e.neuron >= structure.vertex_count()) {
            throw ValidationError("spike from neuron " + std::to_string(e.neuron) +
                                  " which is not a vertex of the structural graph");
        }
    }
}

SpikeTrain parse_spike_csv(std::istream& in, double duration) {
    SpikeTrain spikes;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    double latest = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != "time,neuron") throw ParseError(line_no, "expected header 'time,neuron'");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError(line_no, "expected 'time,neuron'");
        try {
            std::size_t used_t = 0;
            std::size_t used_n = 0;
            const std::string t_field = line.substr(0, comma);
            const std::string n_field = line.substr(comma + 1);
            const double t = std::stod(t_field, &used_t);
            const long long neuron = std::stoll(n_field, &used_n);
            if (used_t != t_field.size() || used_n != n_field.size() || neuron < 0) {
                throw std::invalid_argument(line);
            }
            spikes.events.push_back({t, static_cast<VertexId>(neuron)});
            latest = std::max(latest, t);
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed spike record '" + line + "'");
        }
    }
    if (!header_seen) throw ParseError(line_no, "missing header 'time,neuron'");
    spikes.duration = duration >= 0.0 ? duration : latest;
    return spikes;
}

SpikeTrain read_spike_csv_file(const std::string& path, double duration) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_spike_csv(in, duration);
}

void write_spike_csv(std::ostream& out, const SpikeTrain& spikes) {
    out << "time,neuron\n";
    std::ostringstream buf;
    for (const SpikeEvent& e : spikes.events) {
        buf.str({});
        buf << e.time;
        out << buf.str() << ',' << e.neuron << '\n';
    }
}

std::size_t bin_count(double duration, double bin_width) {
    if (!(bin_width > 0.0)) throw ParameterError("bin width must be positive");
    if (duration <= 0.0) return 0;
    return static_cast<std::size_t>(std::ceil(duration / bin_width));
}

std::vector<Digraph> transmission_response(const Digraph& structure, const SpikeTrain& spikes,
                                           double bin_width, double window) {
    if (!(bin_width > 0.0)) throw ParameterError("t1 (bin width) must be positive");
    if (!(window > 0.0)) throw ParameterError("t2 (response window) must be positive");
    validate_spike_train(spikes, structure);

    const std::size_t bins = bin_count(spikes.duration, bin_width);
    const std::size_t n = structure.vertex_count();

    std::vector<std::vector<double>> fire_times(n);
    for (const SpikeEvent& e : spikes.events) fire_times[e.neuron].push_back(e.time);
    for (auto& times : fire_times) std::sort(times.begin(), times.end());

    auto responds = [&](VertexId j, double t0) {
        const auto& times = fire_times[j];
        auto it = std::upper_bound(times.begin(), times.end(), t0);
        return it != times.end() && *it <= t0 + window;
    };

    std::vector<std::vector<Edge>> bin_edges(bins);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j : structure.out_neighbours(i)) {
            // Existential over source spikes: one qualifying (t0, t) pair per bin suffices.
            std::size_t last_bin = bins;
            for (double t0 : fire_times[i]) {
                const auto r = static_cast<std::size_t>(std::floor(t0 / bin_width));
                if (r >= bins || r == last_bin) continue;
                if (responds(j, t0)) {
                    bin_edges[r].push_back({i, j});
                    last_bin = r;
                }
            }
        }
    }

    std::vector<Digraph> graphs;
    graphs.reserve(bins);
    for (auto& edges : bin_edges) graphs.emplace_back(n, std::move(edges));
    return graphs;
}

}  // namespace tpx
