#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/dense_homology.hpp"
#include "tpx/digraph.hpp"
#include "tpx/persistence.hpp"
#include "tpx/random.hpp"
#include "tpx/tournament.hpp"
#include "tpx/tournaplex.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(TPX_FIXTURE_DIR) + "/" + name; }

inline tpx::Digraph load(const std::string& name) { return tpx::read_digraph_file(fixture(name)); }

inline oracle::Cell to_cell(const tpx::Tournament& t) {
    oracle::Cell c;
    c.vertices.assign(t.vertices().begin(), t.vertices().end());
    for (const auto& e : t.arcs()) c.arcs.push_back({e.source, e.target});
    std::sort(c.arcs.begin(), c.arcs.end());
    return c;
}

inline std::set<oracle::Arc> arc_set(const tpx::Digraph& g) {
    std::set<oracle::Arc> out;
    for (const auto& e : g.edges()) out.insert({e.source, e.target});
    return out;
}

/// Each ordered pair independently with probability p.
inline tpx::Digraph random_digraph(std::size_t n, double p, tpx::Rng& rng) {
    std::vector<tpx::Edge> edges;
    for (tpx::VertexId i = 0; i < n; ++i)
        for (tpx::VertexId j = 0; j < n; ++j)
            if (i != j && tpx::bernoulli(rng, p)) edges.push_back({i, j});
    return tpx::Digraph(n, edges);
}

inline tpx::Tournament random_tournament(std::size_t n, tpx::Rng& rng) {
    std::vector<tpx::VertexId> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<tpx::VertexId>(3 * i + 1);
    tpx::PairMask mask;
    for (std::size_t b = 0; b < n * (n - 1) / 2; ++b) {
        if (tpx::bernoulli(rng, 0.5)) mask.set(b);
    }
    return tpx::Tournament(vs, mask);
}

/// Tournament on 0..n-1 from the low bits of `bits`.
inline tpx::Tournament tournament_from_bits(std::size_t n, std::uint64_t bits) {
    std::vector<tpx::VertexId> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<tpx::VertexId>(i);
    tpx::PairMask mask;
    for (std::size_t b = 0; b < n * (n - 1) / 2; ++b) {
        if ((bits >> b) & 1U) mask.set(b);
    }
    return tpx::Tournament(vs, mask);
}

inline tpx::Tournament cyclic_triangle() { return tpx::Tournament::induced_by(tpx::parse_digraph_string("dim 0\n0 0 0\ndim 1\n0 1\n1 2\n2 0\n"), {0, 1, 2}); }

// Expected w_dr barcode of the G1/G2 fixtures: (dimension, birth, death, multiplicity).
struct Bar {
    int dim;
    tpx::Weight birth;
    tpx::Weight death;
    int multiplicity;
};

inline const std::vector<Bar>& fixture_dr_barcode() {
    static const std::vector<Bar> bars{
        {0, 0, 2, 7},     {0, 0, tpx::kInfinity, 1},
        {1, 2, 10, 12},
        {2, 10, 12, 13},  {2, 10, 20, 14},   {2, 10, 28, 8},
        {3, 20, 28, 5},   {3, 28, 36, 6},    {3, 28, 44, 16},  {3, 28, 52, 6},  {3, 28, 60, 2},
        {4, 44, 62, 3},   {4, 52, 70, 2},    {4, 52, 78, 6},   {4, 60, 86, 6},  {4, 60, 94, 3}, {4, 60, 102, 1},
        {5, 78, 110, 1},  {5, 94, 134, 3},   {5, 102, 142, 2}, {5, 102, 150, 1},
        {6, 150, 208, 1},
    };
    return bars;
}

inline tpx::Barcode expand(const std::vector<Bar>& bars) {
    std::vector<tpx::PersistencePair> pairs;
    for (const Bar& b : bars)
        for (int i = 0; i < b.multiplicity; ++i) pairs.push_back({b.dim, b.birth, b.death});
    return tpx::Barcode(pairs);
}

// Homotopy types of the bifiltration stages shared by G1 and G2, rows by w_dr level,
// columns by w_c3 level. "*n" is n points, "*" one point, "m_n" a wedge of n m-spheres,
// '+' joins wedge summands. The (44, 3) cell differs and is listed separately.
inline const std::vector<tpx::Weight>& grid_dr_levels() {
    static const std::vector<tpx::Weight> v{0, 2, 10, 12, 20, 28, 36, 44, 52, 60, 62, 70, 78, 86, 94, 102, 110, 134, 142, 150, 208};
    return v;
}
inline const std::vector<tpx::Weight>& grid_c3_levels() {
    static const std::vector<tpx::Weight> v{0, 1, 2, 3, 4, 5, 6, 9};
    return v;
}
inline const std::vector<std::vector<std::string>>& grid_homotopy_types() {
    static const std::vector<std::vector<std::string>> rows{
        {"*8", "*8", "*8", "*8", "*8", "*8", "*8", "*8"},
        {"1_21", "1_12", "1_12", "1_12", "1_12", "1_12", "1_12", "1_12"},
        {"2_26", "2_35", "2_35", "2_35", "2_35", "2_35", "2_35", "2_35"},
        {"2_26", "2_35", "2_22", "2_22", "2_22", "2_22", "2_22", "2_22"},
        {"2_26", "2_16", "2_8+3_5", "2_8+3_5", "2_8+3_5", "2_8+3_5", "2_8+3_5", "2_8+3_5"},
        {"3_12", "3_22", "3_35", "3_35", "3_30", "3_30", "3_30", "3_30"},
        {"3_12", "3_22", "3_35", "3_29", "3_24", "3_24", "3_24", "3_24"},
        {"3_12", "3_22", "3_16", "?", "3_8+4_3", "3_8+4_3", "3_8+4_3", "3_8+4_3"},
        {"3_12", "3_8", "3_4+4_2", "3_2+4_6", "3_2+4_11", "3_2+4_11", "3_2+4_11", "3_2+4_11"},
        {"*", "4_4", "4_10", "4_16", "4_21", "4_21", "4_21", "4_21"},
        {"*", "4_4", "4_10", "4_16", "4_21", "4_21", "4_18", "4_18"},
        {"*", "4_4", "4_10", "4_16", "4_21", "4_19", "4_16", "4_16"},
        {"*", "4_4", "4_10", "4_16", "4_14", "4_12", "4_10+5_1", "4_10+5_1"},
        {"*", "4_4", "4_10", "4_10", "4_8", "4_6", "4_4+5_1", "4_4+5_1"},
        {"*", "4_4", "4_4", "4_4", "4_2", "4_1+5_1", "4_1+5_4", "4_1+5_4"},
        {"*", "*", "*", "*", "5_2", "5_4", "5_7", "5_7"},
        {"*", "*", "*", "*", "5_2", "5_4", "5_7", "5_6"},
        {"*", "*", "*", "*", "5_2", "5_4", "5_4", "5_3"},
        {"*", "*", "*", "*", "5_2", "5_2", "5_2", "5_1"},
        {"*", "*", "*", "*", "*", "*", "*", "6_1"},
        {"*", "*", "*", "*", "*", "*", "*", "*"},
    };
    return rows;
}
inline const std::string kG1DivergentCell = "3_11+4_1";
inline const std::string kG2DivergentCell = "3_10";

/// Betti vector of a homotopy type in the notation above.
inline std::vector<std::size_t> betti_of(const std::string& type) {
    if (type == "*") return {1};
    if (type.front() == '*') return {static_cast<std::size_t>(std::stoul(type.substr(1)))};
    std::vector<std::size_t> betti{1};
    std::stringstream ss(type);
    std::string summand;
    while (std::getline(ss, summand, '+')) {
        const auto underscore = summand.find('_');
        const auto dim = std::stoul(summand.substr(0, underscore));
        const auto count = std::stoul(summand.substr(underscore + 1));
        if (betti.size() <= dim) betti.resize(dim + 1, 0);
        betti[dim] += count;
    }
    return betti;
}

}  // namespace testing
