#include "tpx/tournament.hpp"

#include <algorithm>
#include <cstdlib>

#include "tpx/errors.hpp"

namespace tpx {

std::string PairMask::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (int nibble = 31; nibble >= 0; --nibble) {
        const std::uint64_t word = nibble >= 16 ? hi_ : lo_;
        const unsigned d = static_cast<unsigned>((word >> ((nibble % 16) * 4)) & 0xF);
        if (out.empty() && d == 0) continue;
        out.push_back(digits[d]);
    }
    return out.empty() ? "0" : out;
}

PairMask PairMask::from_hex(const std::string& hex) {
    if (hex.empty() || hex.size() > 32) throw ParameterError("bad orientation mask '" + hex + "'");
    PairMask mask;
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const char c = *it;
        unsigned d = 0;
        if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') d = static_cast<unsigned>(c - 'A' + 10);
        else throw ParameterError("bad orientation mask '" + hex + "'");
        for (unsigned b = 0; b < 4; ++b) {
            if ((d >> b) & 1U) mask.set(bit + b);
        }
    }
    return mask;
}

Tournament::Tournament(std::span<const VertexId> vertices, PairMask orientation) : orientation_(orientation) {
    if (vertices.empty() || vertices.size() > kMaxTournamentOrder) {
        throw ParameterError("tournament order must be in [1, " + std::to_string(kMaxTournamentOrder) + "]");
    }
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i - 1] >= vertices[i]) throw ParameterError("tournament vertices must be strictly increasing");
    }
    const std::size_t pairs = binomial(vertices.size(), 2);
    for (std::size_t bit = pairs; bit < 128; ++bit) {
        if (orientation.test(bit)) throw ParameterError("orientation mask has bits beyond the pair count");
    }
    std::copy(vertices.begin(), vertices.end(), vertices_.begin());
    order_ = static_cast<std::uint8_t>(vertices.size());
}

Tournament Tournament::from_arcs(std::vector<VertexId> vertices, std::span<const Edge> arcs) {
    std::sort(vertices.begin(), vertices.end());
    auto position = [&](VertexId v) -> std::size_t {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) throw ValidationError("arc endpoint " + std::to_string(v) + " not in vertex set");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    const std::size_t n = vertices.size();
    std::vector<int> seen(binomial(n, 2), 0);
    PairMask mask;
    for (const Edge& e : arcs) {
        const std::size_t a = position(e.source);
        const std::size_t b = position(e.target);
        if (a == b) throw ValidationError("tournament arc is a loop");
        const std::size_t bit = PairMask::index(std::min(a, b), std::max(a, b));
        if (seen[bit]++) throw ValidationError("pair {" + std::to_string(e.source) + "," + std::to_string(e.target) + "} has two arcs");
        if (a < b) mask.set(bit);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ValidationError("some vertex pair has no arc");
    return Tournament(vertices, mask);
}

Tournament Tournament::induced_by(const Digraph& g, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<Edge> arcs;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = 0; b < vertices.size(); ++b) {
            if (a != b && g.has_edge(vertices[a], vertices[b])) arcs.push_back({vertices[a], vertices[b]});
        }
    }
    return from_arcs(std::move(vertices), arcs);
}

Tournament Tournament::transitive(std::size_t n) {
    std::vector<VertexId> vertices(n);
    PairMask mask;
    for (std::size_t j = 0; j < n; ++j) {
        vertices[j] = static_cast<VertexId>(j);
        for (std::size_t i = 0; i < j; ++i) mask.set(PairMask::index(i, j));
    }
    return Tournament(vertices, mask);
}

int Tournament::out_degree(std::size_t position) const {
    int out = 0;
    for (std::size_t other = 0; other < order_; ++other) {
        if (other != position && arc(position, other)) ++out;
    }
    return out;
}

Tournament Tournament::face(std::size_t position) const {
    if (order_ < 2) throw RangeError("a single vertex has no faces");
    if (position >= order_) {
        throw RangeError("face index " + std::to_string(position) + " out of range for order " + std::to_string(order_));
    }
    std::array<std::size_t, kMaxTournamentOrder> keep{};
    std::size_t n = 0;
    for (std::size_t p = 0; p < order_; ++p) {
        if (p != position) keep[n++] = p;
    }
    return restrict_to({keep.data(), n});
}

Tournament Tournament::restrict_to(std::span<const std::size_t> positions) const {
    Tournament out;
    out.order_ = static_cast<std::uint8_t>(positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) {
        out.vertices_[j] = vertices_[positions[j]];
        for (std::size_t i = 0; i < j; ++i) {
            if (orientation_.test(PairMask::index(positions[i], positions[j]))) out.orientation_.set(PairMask::index(i, j));
        }
    }
    return out;
}

Tournament Tournament::extended(VertexId v, std::uint32_t forward) const {
    if (order_ >= kMaxTournamentOrder) throw ParameterError("tournament order limit reached");
    if (v <= vertices_[order_ - 1]) throw ParameterError("appended vertex must exceed every current vertex");
    Tournament out = *this;
    const std::size_t j = order_;
    out.vertices_[j] = v;
    out.order_ = static_cast<std::uint8_t>(j + 1);
    for (std::size_t i = 0; i < j; ++i) {
        if ((forward >> i) & 1U) out.orientation_.set(PairMask::index(i, j));
    }
    return out;
}

bool Tournament::is_transitive() const {
    // Transitive iff the out-degrees are exactly {0, 1, ..., n-1}.
    std::uint32_t seen = 0;
    for (std::size_t p = 0; p < order_; ++p) seen |= std::uint32_t{1} << out_degree(p);
    return seen == (std::uint32_t{1} << order_) - 1;
}

bool Tournament::is_regular() const {
    for (std::size_t p = 0; p < order_; ++p) {
        if (signed_degree(p) != 0) return false;
    }
    return true;
}

bool Tournament::is_semiregular() const {
    for (std::size_t p = 0; p < order_; ++p) {
        if (std::abs(signed_degree(p)) > 1) return false;
    }
    return true;
}

std::vector<Edge> Tournament::arcs() const {
    std::vector<Edge> out;
    for (std::size_t j = 0; j < order_; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (arc(i, j)) out.push_back({vertices_[i], vertices_[j]});
            else out.push_back({vertices_[j], vertices_[i]});
        }
    }
    return out;
}

std::strong_ordering operator<=>(const Tournament& a, const Tournament& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    for (std::size_t i = 0; i < a.order_; ++i) {
        if (auto c = a.vertices_[i] <=> b.vertices_[i]; c != 0) return c;
    }
    return a.orientation_ <=> b.orientation_;
}

std::size_t TournamentHash::operator()(const Tournament& t) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ t.order();
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (VertexId v : t.vertices()) mix(v);
    mix(t.orientation().low_word());
    mix(t.orientation().high_word());
    return static_cast<std::size_t>(h);
}

std::string to_string(const Tournament& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.order(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(t.vertex(i));
    }
    return out + ")/" + t.orientation().to_hex();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

}  // namespace tpx
