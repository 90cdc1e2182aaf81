#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tpx/digraph.hpp"
#include "tpx/tournament.hpp"

namespace tpx {

using DiagnosticSink = std::function<void(std::string_view)>;

/// Writes "warning: <message>" to stderr.
void stderr_diagnostics(std::string_view message);

struct EnumerationOptions {
    /// A clique whose reciprocal pairs expand it into more than this many
    /// orientation variants triggers one summary warning per construction.
    std::uint64_t blowup_warning_threshold = 1024;
    DiagnosticSink diagnostics = stderr_diagnostics;
    /// Worker threads; clique roots are split between them.
    unsigned threads = 1;
};

inline constexpr std::size_t kDefaultMaxOrder = 8;

/// A face-closed collection of tournaments, stored per dimension in sorted order
/// (vertex tuple, then orientation mask). Immutable.
class Tournaplex {
public:
    Tournaplex() = default;

    /// Sorts the input. Throws ValidationError on a duplicate tournament and
    /// InvariantError when some face of a member is missing.
    static Tournaplex from_simplices(std::vector<Tournament> simplices);

    /// Highest dimension present, or -1 when empty.
    int max_dimension() const noexcept { return static_cast<int>(grades_.size()) - 1; }
    std::span<const Tournament> grade(std::size_t dimension) const;
    std::size_t size() const noexcept;
    bool empty() const noexcept { return grades_.empty(); }
    std::vector<std::size_t> counts() const;

    /// Position of t inside grade(t.dimension()).
    std::optional<std::size_t> find(const Tournament& t) const;
    bool contains(const Tournament& t) const { return find(t).has_value(); }

    /// Members satisfying `keep`; the result must itself be face-closed
    /// (InvariantError otherwise).
    Tournaplex subcomplex(const std::function<bool(const Tournament&)>& keep) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& g : grades_)
            for (const auto& t : g) fn(t);
    }

private:
    friend class TournaplexBuilder;
    std::vector<std::vector<Tournament>> grades_;
};

/// All tournaments of g with at most max_order vertices: every ordered clique of the
/// underlying undirected graph expanded into its 2^r orientations, where r counts the
/// reciprocal pairs inside the clique.
Tournaplex flag_tournaplex(const Digraph& g, std::size_t max_order = kDefaultMaxOrder,
                           const EnumerationOptions& options = {});

/// The transitive members of flag_tournaplex(g, max_order), enumerated directly.
Tournaplex directed_flag_complex(const Digraph& g, std::size_t max_order = kDefaultMaxOrder,
                                 const EnumerationOptions& options = {});

/// The 1-skeleton as a digraph on vertex ids 0..max id. Reciprocal pairs keep both arcs.
Digraph one_skeleton(const Tournaplex& complex);

/// One line per tournament in grade order:
///   dim d : v0 v1 ... vn : <orientation mask hex> : <weight>
void dump_tournaplex(std::ostream& out, const Tournaplex& complex,
                     const std::function<std::int64_t(const Tournament&)>& weight);

}  // namespace tpx
