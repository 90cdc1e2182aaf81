#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tpx {

using VertexId = std::uint32_t;

struct Edge {
    VertexId source;
    VertexId target;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite simple digraph. Loops are forbidden, each ordered pair carries at most
/// one edge, and reciprocal pairs (u,v), (v,u) are allowed. Immutable once built.
class Digraph {
public:
    Digraph() = default;

    /// Validates and builds the graph. Throws RangeError for an endpoint
    /// >= vertex_count and ValidationError for a self-loop or repeated edge.
    Digraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges sorted by (source, target).
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Sorted out-/in-neighbours of v.
    std::span<const VertexId> out_neighbours(VertexId v) const;
    std::span<const VertexId> in_neighbours(VertexId v) const;

    bool has_edge(VertexId u, VertexId v) const;
    bool is_reciprocal(VertexId u, VertexId v) const { return has_edge(u, v) && has_edge(v, u); }

    std::size_t out_degree(VertexId v) const { return out_neighbours(v).size(); }
    std::size_t in_degree(VertexId v) const { return in_neighbours(v).size(); }

    /// Sorted neighbours of v in the underlying undirected graph.
    std::span<const VertexId> neighbours(VertexId v) const;

    std::size_t reciprocal_pair_count() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    void check_vertex(VertexId v) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::vector<std::vector<VertexId>> undirected_;
};

/// indeg(v) - outdeg(v). Throws RangeError when v is not a vertex of g.
int signed_degree(const Digraph& g, VertexId v);

/// Signed degree of every vertex, indexed by vertex id.
std::vector<int> signed_degrees(const Digraph& g);

/// Reads the flagser-style text format:
///
///     dim 0
///     w0 w1 ... w(n-1)      one weight per vertex; only the count matters
///     dim 1
///     u v                   one edge per line, 0-indexed
///
/// Blank lines and lines starting with '#' are skipped. Edges may also follow
/// on additional `dim 1` lines; higher `dim` sections are rejected.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_string(const std::string& text);
Digraph read_digraph_file(const std::string& path);

/// Writes g in the format accepted by parse_digraph (all vertex weights 0).
void write_digraph(std::ostream& out, const Digraph& g);
void write_digraph_file(const std::string& path, const Digraph& g);

/// Biased Erdős–Rényi digraph on n vertices: (i,j) is an edge with probability p
/// when i > j and q when i < j, all draws independent.
///
/// Stream layout, fixed for cross-implementation reproducibility: one Rng
/// (MT19937-64) seeded with `seed`; ordered pairs visited row-major (i outer,
/// j inner, both ascending, i == j skipped); each pair consumes one output x and
/// the edge is kept iff (x >> 11) * 2^-53 < probability.
Digraph er_biased(std::size_t n, double p, double q, std::uint64_t seed);

}  // namespace tpx
