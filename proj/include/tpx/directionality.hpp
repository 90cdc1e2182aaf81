#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpx/digraph.hpp"
#include "tpx/tournament.hpp"

namespace tpx {

/// Sum over the vertices of the squared signed degree inside the tournament.
std::int64_t local_directionality(const Tournament& t);

/// Number of vertex triples spanning a directed 3-cycle.
std::int64_t three_cycle_count(const Tournament& t);

/// Dr(t) == 2*C(n+1,3) - 8*c3(t), evaluated from the two independent definitions.
bool directionality_identity_holds(const Tournament& t);

/// Local directionality shifted by 2*C(n,3) so that faces never weigh more.
std::int64_t w_dr(const Tournament& t);
std::int64_t w_c3(const Tournament& t);

/// Sum of squared signed degrees taken in an ambient digraph.
/// Throws RangeError for a vertex outside the skeleton.
std::int64_t w_global(const std::vector<int>& skeleton_signed_degrees, const Tournament& t);
std::int64_t w_global(const Digraph& skeleton, const Tournament& t);

inline constexpr std::size_t kMaxPatternOrder = 5;

/// Smallest orientation mask over every relabelling of the positions.
/// Order at most kMaxPatternOrder (ParameterError otherwise).
PairMask canonical_mask(const Tournament& t);

/// Number of sub-tournaments of t (on any pattern.order() of its vertices) isomorphic
/// to pattern. ParameterError when the pattern has more than kMaxPatternOrder vertices.
std::int64_t motif_count(const Tournament& t, const Tournament& pattern);

/// Tabulated number of labelled n-tournaments by 3-cycle count, 1 <= n <= 5.
std::map<int, std::uint64_t> three_cycle_distribution(int n);

/// The same distribution by exhaustive enumeration, 1 <= n <= 6.
std::map<int, std::uint64_t> enumerate_three_cycle_distribution(int n);

/// Largest possible 3-cycle count of an n-tournament.
std::int64_t max_three_cycles(std::int64_t n);

struct ExpectedTournamentCounts {
    double total = 0.0;
    std::map<int, double> by_three_cycles;
};

/// Expected number of k-tournaments (overall and by 3-cycle count) in a digraph on n
/// vertices where each ordered pair carries an edge independently with probability p.
/// Requires 1 <= k <= 5.
ExpectedTournamentCounts expected_tournament_counts(std::int64_t n, int k, double p);

/// A monotone filtering weight on tournaments.
class WeightFunction {
public:
    enum class Kind { LocalDirectionality, ThreeCycle, Global, MotifCount, Combined };

    static WeightFunction local_directionality();
    static WeightFunction three_cycle();
    static WeightFunction global(const Digraph& skeleton);
    static WeightFunction motif(const Tournament& pattern);
    /// max(a*w_dr, b*w_c3); a and b must be positive.
    static WeightFunction combined(std::int64_t a, std::int64_t b);

    /// Parses dr, c3, global, motif:<order>:<hex mask>, combined:<a>:<b>. `global` needs
    /// the skeleton, which the caller supplies. Throws ParameterError on bad syntax.
    static WeightFunction parse(const std::string& spec, const Digraph* skeleton = nullptr);

    Kind kind() const noexcept { return kind_; }
    std::string name() const;
    std::int64_t operator()(const Tournament& t) const;

private:
    Kind kind_ = Kind::LocalDirectionality;
    std::vector<int> signed_degrees_;
    std::optional<Tournament> pattern_;
    PairMask pattern_canonical_{};
    std::int64_t a_ = 1;
    std::int64_t b_ = 1;
};

std::int64_t combined_filtration_value(const Tournament& t, std::int64_t a, std::int64_t b);

}  // namespace tpx
