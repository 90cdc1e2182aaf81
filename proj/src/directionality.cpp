#include "tpx/directionality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "tpx/errors.hpp"

namespace tpx {

std::int64_t local_directionality(const Tournament& t) {
    std::int64_t sum = 0;
    for (std::size_t p = 0; p < t.order(); ++p) {
        const std::int64_t sd = t.signed_degree(p);
        sum += sd * sd;
    }
    return sum;
}

std::int64_t three_cycle_count(const Tournament& t) {
    std::int64_t cycles = 0;
    const std::size_t n = t.order();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                // a<b<c is cyclic iff the two "forward" arcs agree with the closing one.
                const bool ab = t.arc(a, b);
                const bool bc = t.arc(b, c);
                const bool ca = t.arc(c, a);
                if (ab == bc && bc == ca) ++cycles;
            }
        }
    }
    return cycles;
}

bool directionality_identity_holds(const Tournament& t) {
    const auto n = static_cast<std::int64_t>(t.order());
    return local_directionality(t) == 2 * static_cast<std::int64_t>(binomial(n + 1, 3)) - 8 * three_cycle_count(t);
}

std::int64_t w_dr(const Tournament& t) {
    return local_directionality(t) + 2 * static_cast<std::int64_t>(binomial(t.order(), 3));
}

std::int64_t w_c3(const Tournament& t) { return three_cycle_count(t); }

std::int64_t w_global(const std::vector<int>& skeleton_signed_degrees, const Tournament& t) {
    std::int64_t sum = 0;
    for (VertexId v : t.vertices()) {
        if (v >= skeleton_signed_degrees.size()) {
            throw RangeError("vertex " + std::to_string(v) + " is not in the skeleton");
        }
        const std::int64_t sd = skeleton_signed_degrees[v];
        sum += sd * sd;
    }
    return sum;
}

std::int64_t w_global(const Digraph& skeleton, const Tournament& t) {
    return w_global(signed_degrees(skeleton), t);
}

namespace {

PairMask permuted_mask(const Tournament& t, const std::array<std::size_t, kMaxPatternOrder>& perm) {
    PairMask mask;
    for (std::size_t j = 1; j < t.order(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (t.arc(perm[i], perm[j])) mask.set(PairMask::index(i, j));
        }
    }
    return mask;
}

}  // namespace

PairMask canonical_mask(const Tournament& t) {
    if (t.order() > kMaxPatternOrder) {
        throw ParameterError("canonical form is limited to order " + std::to_string(kMaxPatternOrder));
    }
    std::array<std::size_t, kMaxPatternOrder> perm{};
    std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(t.order()), std::size_t{0});
    PairMask best = t.orientation();
    do {
        best = std::min(best, permuted_mask(t, perm));
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(t.order())));
    return best;
}

namespace {

std::int64_t count_matching_subsets(const Tournament& t, std::size_t k, const PairMask& target) {
    const std::size_t n = t.order();
    if (k > n) return 0;
    std::array<std::size_t, kMaxPatternOrder> positions{};
    std::iota(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(k), std::size_t{0});
    std::int64_t count = 0;
    while (true) {
        const Tournament sub = t.restrict_to({positions.data(), k});
        if (canonical_mask(sub) == target) ++count;
        // Next k-subset in lexicographic order.
        std::size_t i = k;
        while (i > 0 && positions[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++positions[i - 1];
        for (std::size_t j = i; j < k; ++j) positions[j] = positions[j - 1] + 1;
    }
    return count;
}

}  // namespace

std::int64_t motif_count(const Tournament& t, const Tournament& pattern) {
    return count_matching_subsets(t, pattern.order(), canonical_mask(pattern));
}

std::map<int, std::uint64_t> three_cycle_distribution(int n) {
    switch (n) {
        case 1: return {{0, 1}};
        case 2: return {{0, 2}};
        case 3: return {{0, 6}, {1, 2}};
        case 4: return {{0, 24}, {1, 16}, {2, 24}};
        case 5: return {{0, 120}, {1, 120}, {2, 240}, {3, 240}, {4, 280}, {5, 24}};
        default: throw ParameterError("tabulated 3-cycle distribution covers 1 <= n <= 5");
    }
}

std::map<int, std::uint64_t> enumerate_three_cycle_distribution(int n) {
    if (n < 1 || n > 6) throw ParameterError("enumerated 3-cycle distribution covers 1 <= n <= 6");
    const auto pairs = binomial(static_cast<std::uint64_t>(n), 2);
    std::vector<VertexId> vertices(static_cast<std::size_t>(n));
    std::iota(vertices.begin(), vertices.end(), VertexId{0});
    std::map<int, std::uint64_t> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        PairMask mask;
        for (std::size_t b = 0; b < pairs; ++b) {
            if ((bits >> b) & 1U) mask.set(b);
        }
        ++out[static_cast<int>(three_cycle_count(Tournament(vertices, mask)))];
    }
    return out;
}

std::int64_t max_three_cycles(std::int64_t n) {
    if (n < 1) throw ParameterError("tournament order must be positive");
    return n % 2 == 1 ? (n * n * n - n) / 24 : (n * n * n - 4 * n) / 24;
}

ExpectedTournamentCounts expected_tournament_counts(std::int64_t n, int k, double p) {
    if (k < 1 || k > 5) throw ParameterError("expected counts need 1 <= k <= 5");
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0, 1]");
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    const auto pairs = static_cast<double>(binomial(static_cast<std::uint64_t>(k), 2));
    const auto subsets = static_cast<double>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
    const double arcs_present = std::pow(p, pairs);
    ExpectedTournamentCounts out;
    out.total = subsets * std::pow(2.0, pairs) * arcs_present;
    for (const auto& [j, count] : three_cycle_distribution(k)) {
        out.by_three_cycles[j] = subsets * static_cast<double>(count) * arcs_present;
    }
    return out;
}

std::int64_t combined_filtration_value(const Tournament& t, std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) throw ParameterError("combined filtration coefficients must be positive");
    return std::max(a * w_dr(t), b * w_c3(t));
}

WeightFunction WeightFunction::local_directionality() { return {}; }

WeightFunction WeightFunction::three_cycle() {
    WeightFunction w;
    w.kind_ = Kind::ThreeCycle;
    return w;
}

WeightFunction WeightFunction::global(const Digraph& skeleton) {
    WeightFunction w;
    w.kind_ = Kind::Global;
    w.signed_degrees_ = signed_degrees(skeleton);
    return w;
}

WeightFunction WeightFunction::motif(const Tournament& pattern) {
    WeightFunction w;
    w.kind_ = Kind::MotifCount;
    w.pattern_canonical_ = canonical_mask(pattern);
    w.pattern_ = pattern;
    return w;
}

WeightFunction WeightFunction::combined(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) throw ParameterError("combined filtration coefficients must be positive");
    WeightFunction w;
    w.kind_ = Kind::Combined;
    w.a_ = a;
    w.b_ = b;
    return w;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::int64_t parse_int(const std::string& field, const std::string& spec) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(field, &used);
        if (used == field.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParameterError("bad weight '" + spec + "'");
}

}  // namespace

WeightFunction WeightFunction::parse(const std::string& spec, const Digraph* skeleton) {
    const auto parts = split(spec, ':');
    const std::string& head = parts.front();
    if (parts.size() == 1 && head == "dr") return local_directionality();
    if (parts.size() == 1 && head == "c3") return three_cycle();
    if (parts.size() == 1 && head == "global") {
        if (skeleton == nullptr) throw ParameterError("weight 'global' needs a structural graph");
        return global(*skeleton);
    }
    if (parts.size() == 3 && head == "motif") {
        const std::int64_t order = parse_int(parts[1], spec);
        if (order < 1 || order > static_cast<std::int64_t>(kMaxPatternOrder)) {
            throw ParameterError("motif order must be in [1, " + std::to_string(kMaxPatternOrder) + "]");
        }
        std::vector<VertexId> vertices(static_cast<std::size_t>(order));
        std::iota(vertices.begin(), vertices.end(), VertexId{0});
        return motif(Tournament(vertices, PairMask::from_hex(parts[2])));
    }
    if (parts.size() == 3 && head == "combined") {
        return combined(parse_int(parts[1], spec), parse_int(parts[2], spec));
    }
    throw ParameterError("unknown weight '" + spec + "' (expected dr, c3, global, motif:<order>:<hex>, combined:<a>:<b>)");
}

std::string WeightFunction::name() const {
    switch (kind_) {
        case Kind::LocalDirectionality: return "dr";
        case Kind::ThreeCycle: return "c3";
        case Kind::Global: return "global";
        case Kind::MotifCount:
            return "motif:" + std::to_string(pattern_->order()) + ":" + pattern_->orientation().to_hex();
        case Kind::Combined: return "combined:" + std::to_string(a_) + ":" + std::to_string(b_);
    }
    return {};
}

std::int64_t WeightFunction::operator()(const Tournament& t) const {
    switch (kind_) {
        case Kind::LocalDirectionality: return w_dr(t);
        case Kind::ThreeCycle: return w_c3(t);
        case Kind::Global: return w_global(signed_degrees_, t);
        case Kind::MotifCount: return count_matching_subsets(t, pattern_->order(), pattern_canonical_);
        case Kind::Combined: return std::max(a_ * w_dr(t), b_ * w_c3(t));
    }
    return 0;
}

}  // namespace tpx
