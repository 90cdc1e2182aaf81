#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tpx/digraph.hpp"

namespace tpx {

/// Largest supported tournament order (number of vertices).
inline constexpr std::size_t kMaxTournamentOrder = 16;

/// One orientation bit per vertex pair of a tournament, up to C(16,2) = 120 bits.
///
/// Pairs are numbered colexicographically by position: pair (i, j) with i < j has
/// index j*(j-1)/2 + i, so the order is (0,1), (0,2), (1,2), (0,3), (1,3), ...
/// A set bit means the arc runs from position i to position j (lower to higher);
/// a clear bit means j -> i. The numbering does not depend on the tournament order,
/// so appending a vertex only appends bits.
class PairMask {
public:
    static constexpr std::size_t index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

    constexpr bool test(std::size_t bit) const {
        return bit < 64 ? (lo_ >> bit) & 1U : (hi_ >> (bit - 64)) & 1U;
    }
    constexpr void set(std::size_t bit) {
        if (bit < 64) lo_ |= std::uint64_t{1} << bit;
        else hi_ |= std::uint64_t{1} << (bit - 64);
    }

    constexpr std::uint64_t low_word() const { return lo_; }
    constexpr std::uint64_t high_word() const { return hi_; }

    /// Lower-case hex without leading zeros ("0" for the empty mask).
    std::string to_hex() const;
    static PairMask from_hex(const std::string& hex);

    // hi_ is declared first so the defaulted comparison is numeric.
    friend constexpr auto operator<=>(const PairMask&, const PairMask&) = default;

private:
    std::uint64_t hi_ = 0;
    std::uint64_t lo_ = 0;
};

/// An n-tournament: a strictly increasing vertex tuple plus one orientation per pair.
/// Identity is (vertices, orientation). Faces follow the vertex order.
class Tournament {
public:
    Tournament() = default;

    /// Throws ParameterError unless vertices are strictly increasing and
    /// 1 <= size <= kMaxTournamentOrder. Bits beyond C(n,2) must be clear.
    Tournament(std::span<const VertexId> vertices, PairMask orientation);
    Tournament(std::initializer_list<VertexId> vertices, PairMask orientation)
        : Tournament(std::span<const VertexId>(vertices.begin(), vertices.size()), orientation) {}

    /// Tournament on `vertices` (sorted on entry) taking, for each pair, the arc present
    /// in `arcs`. Throws ValidationError when a pair has no arc or both arcs.
    static Tournament from_arcs(std::vector<VertexId> vertices, std::span<const Edge> arcs);

    /// The sub-tournament of g on `vertices` when exactly one arc joins every pair
    /// (ValidationError otherwise).
    static Tournament induced_by(const Digraph& g, std::vector<VertexId> vertices);

    /// Transitive tournament on 0..n-1 with i -> j for i < j.
    static Tournament transitive(std::size_t n);

    std::size_t order() const noexcept { return order_; }
    std::size_t dimension() const noexcept { return order_ - 1; }
    std::span<const VertexId> vertices() const noexcept { return {vertices_.data(), order_}; }
    VertexId vertex(std::size_t position) const { return vertices_[position]; }
    PairMask orientation() const noexcept { return orientation_; }

    /// True iff the arc between positions a != b runs a -> b.
    bool arc(std::size_t a, std::size_t b) const {
        return a < b ? orientation_.test(PairMask::index(a, b)) : !orientation_.test(PairMask::index(b, a));
    }

    int out_degree(std::size_t position) const;
    int in_degree(std::size_t position) const { return static_cast<int>(order_) - 1 - out_degree(position); }
    /// indeg - outdeg inside the tournament.
    int signed_degree(std::size_t position) const { return in_degree(position) - out_degree(position); }

    /// The face omitting the vertex at `position`. Throws RangeError when
    /// position >= order() or order() < 2.
    Tournament face(std::size_t position) const;

    /// Sub-tournament on the given strictly increasing positions.
    Tournament restrict_to(std::span<const std::size_t> positions) const;

    /// This tournament with `v` (greater than every current vertex) appended; bit i of
    /// `forward` set means vertex(i) -> v.
    Tournament extended(VertexId v, std::uint32_t forward) const;

    bool is_transitive() const;
    bool is_regular() const;
    bool is_semiregular() const;

    /// Every arc as an edge between global vertex ids.
    std::vector<Edge> arcs() const;

    friend bool operator==(const Tournament& a, const Tournament& b) {
        return a.order_ == b.order_ && a.orientation_ == b.orientation_ &&
               std::equal(a.vertices_.begin(), a.vertices_.begin() + a.order_, b.vertices_.begin());
    }
    /// Order, then vertex tuple lexicographically, then orientation mask.
    friend std::strong_ordering operator<=>(const Tournament& a, const Tournament& b);

private:
    std::array<VertexId, kMaxTournamentOrder> vertices_{};
    PairMask orientation_{};
    std::uint8_t order_ = 0;
};

struct TournamentHash {
    std::size_t operator()(const Tournament& t) const noexcept;
};

/// "(v0 v1 ...)/<mask hex>", for messages.
std::string to_string(const Tournament& t);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace tpx
