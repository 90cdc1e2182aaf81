#include "tpx/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tpx/errors.hpp"
#include "tpx/random.hpp"

namespace tpx {

Digraph::Digraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), out_(vertex_count), in_(vertex_count), undirected_(vertex_count) {
    for (const Edge& e : edges_) {
        if (e.source >= vertex_count || e.target >= vertex_count) {
            throw RangeError("edge (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                             ") has an endpoint outside [0," + std::to_string(vertex_count) + ")");
        }
        if (e.source == e.target) {
            throw ValidationError("self-loop at vertex " + std::to_string(e.source));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw ValidationError("duplicate edge (" + std::to_string(dup->source) + "," +
                              std::to_string(dup->target) + ")");
    }
    for (const Edge& e : edges_) {
        out_[e.source].push_back(e.target);
        in_[e.target].push_back(e.source);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        std::sort(in_[v].begin(), in_[v].end());
        auto& nb = undirected_[v];
        std::set_union(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(),
                       std::back_inserter(nb));
    }
}

void Digraph::check_vertex(VertexId v) const {
    if (v >= vertex_count()) {
        throw RangeError("vertex " + std::to_string(v) + " out of range (graph has " +
                         std::to_string(vertex_count()) + " vertices)");
    }
}

std::span<const VertexId> Digraph::out_neighbours(VertexId v) const {
    check_vertex(v);
    return out_[v];
}

std::span<const VertexId> Digraph::in_neighbours(VertexId v) const {
    check_vertex(v);
    return in_[v];
}

std::span<const VertexId> Digraph::neighbours(VertexId v) const {
    check_vertex(v);
    return undirected_[v];
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::size_t Digraph::reciprocal_pair_count() const {
    std::size_t count = 0;
    for (const Edge& e : edges_) {
        if (e.source < e.target && has_edge(e.target, e.source)) ++count;
    }
    return count;
}

int signed_degree(const Digraph& g, VertexId v) {
    return static_cast<int>(g.in_degree(v)) - static_cast<int>(g.out_degree(v));
}

std::vector<int> signed_degrees(const Digraph& g) {
    std::vector<int> sd(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) sd[v] = signed_degree(g, v);
    return sd;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    enum class Section { none, vertices, edges };
    Section section = Section::none;
    bool have_vertices = false;
    bool weights_read = false;
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.rfind("dim", 0) == 0) {
            std::istringstream ss(line.substr(3));
            long long d = -1;
            std::string rest;
            if (!(ss >> d) || (ss >> rest)) throw ParseError(line_no, "malformed dim header '" + line + "'");
            if (d == 0) {
                if (have_vertices) throw ParseError(line_no, "repeated 'dim 0' section");
                have_vertices = true;
                section = Section::vertices;
            } else if (d == 1) {
                if (!have_vertices) throw ParseError(line_no, "'dim 1' before vertex weights");
                section = Section::edges;
            } else {
                throw ParseError(line_no, "unsupported section 'dim " + std::to_string(d) + "'");
            }
            continue;
        }

        std::istringstream ss(line);
        switch (section) {
        case Section::none:
            throw ParseError(line_no, "data before any 'dim' header");
        case Section::vertices: {
            if (weights_read) throw ParseError(line_no, "vertex weights must be on a single line");
            std::string token;
            while (ss >> token) {
                try {
                    std::size_t used = 0;
                    (void)std::stod(token, &used);
                    if (used != token.size()) throw std::invalid_argument(token);
                } catch (const std::exception&) {
                    throw ParseError(line_no, "bad vertex weight '" + token + "'");
                }
                ++vertex_count;
            }
            weights_read = true;
            break;
        }
        case Section::edges: {
            long long u = 0;
            long long v = 0;
            std::string extra;
            if (!(ss >> u >> v) || (ss >> extra)) throw ParseError(line_no, "expected 'u v', got '" + line + "'");
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
                static_cast<std::size_t>(v) >= vertex_count) {
                throw RangeError("line " + std::to_string(line_no) + ": edge endpoint out of range in '" +
                                 line + "'");
            }
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
            break;
        }
        }
    }
    if (!have_vertices) throw ParseError(line_no, "missing 'dim 0' section");
    return Digraph(vertex_count, std::move(edges));
}

Digraph parse_digraph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& g) {
    out << "dim 0\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out << (v == 0 ? "" : " ") << 0;
    out << "\ndim 1\n";
    for (const Edge& e : g.edges()) out << e.source << ' ' << e.target << '\n';
}

void write_digraph_file(const std::string& path, const Digraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_digraph(out, g);
}

Digraph er_biased(std::size_t n, double p, double q, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
        throw ParameterError("edge probabilities must lie in [0,1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (bernoulli(rng, i > j ? p : q)) {
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
            }
        }
    }
    return Digraph(n, std::move(edges));
}

}  // namespace tpx
