#include "tpx/tournaplex.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <thread>

#include "tpx/errors.hpp"

namespace tpx {

void stderr_diagnostics(std::string_view message) {
    std::cerr << "warning: " << message << '\n';
}

class TournaplexBuilder {
public:
    static Tournaplex from_grades(std::vector<std::vector<Tournament>> grades) {
        while (!grades.empty() && grades.back().empty()) grades.pop_back();
        for (auto& g : grades) std::sort(g.begin(), g.end());
        Tournaplex out;
        out.grades_ = std::move(grades);
        return out;
    }
};

namespace {

void check_face_closed(const Tournaplex& complex) {
    for (int d = 1; d <= complex.max_dimension(); ++d) {
        for (const Tournament& t : complex.grade(static_cast<std::size_t>(d))) {
            for (std::size_t i = 0; i < t.order(); ++i) {
                if (!complex.contains(t.face(i))) {
                    std::ostringstream msg;
                    msg << "tournaplex is not face-closed: face " << i << " of " << to_string(t) << " is missing";
                    throw InvariantError(msg.str());
                }
            }
        }
    }
}

// Per-worker output of the clique enumeration.
struct EnumerationShard {
    std::vector<std::vector<Tournament>> grades;
    std::uint64_t blowup_cliques = 0;
    std::uint64_t largest_blowup = 0;
};

class CliqueExpander {
public:
    CliqueExpander(const Digraph& g, std::size_t max_order, bool transitive_only, std::uint64_t warn_threshold,
                   EnumerationShard& shard)
        : g_(g), max_order_(max_order), transitive_only_(transitive_only), warn_threshold_(warn_threshold),
          shard_(shard) {
        shard_.grades.resize(max_order);
    }

    void expand_root(VertexId root) {
        const VertexId members[] = {root};
        const Tournament vertex(std::span<const VertexId>(members, 1), PairMask{});
        shard_.grades[0].push_back(vertex);
        if (max_order_ < 2) return;
        std::vector<VertexId> members_so_far{root};
        std::vector<VertexId> candidates;
        for (VertexId v : g_.neighbours(root)) {
            if (v > root) candidates.push_back(v);
        }
        extend(members_so_far, {vertex}, candidates);
    }

private:
    // `variants` are the orientations of the clique `members`; `candidates` are the
    // common neighbours of all members that exceed the last member.
    void extend(std::vector<VertexId>& members, const std::vector<Tournament>& variants,
                std::span<const VertexId> candidates) {
        const std::size_t order = members.size() + 1;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            const VertexId c = candidates[ci];
            std::uint32_t fixed_forward = 0;
            std::vector<std::size_t> reciprocal;
            for (std::size_t i = 0; i < members.size(); ++i) {
                const bool forward = g_.has_edge(members[i], c);
                const bool backward = g_.has_edge(c, members[i]);
                if (forward && backward) reciprocal.push_back(i);
                else if (forward) fixed_forward |= std::uint32_t{1} << i;
            }

            const std::uint64_t choices = std::uint64_t{1} << reciprocal.size();
            std::vector<Tournament> next;
            next.reserve(variants.size() * choices);
            for (const Tournament& base : variants) {
                for (std::uint64_t choice = 0; choice < choices; ++choice) {
                    std::uint32_t forward = fixed_forward;
                    for (std::size_t r = 0; r < reciprocal.size(); ++r) {
                        if ((choice >> r) & 1U) forward |= std::uint32_t{1} << reciprocal[r];
                    }
                    Tournament t = base.extended(c, forward);
                    if (transitive_only_ && !t.is_transitive()) continue;
                    next.push_back(t);
                }
            }
            if (next.empty()) continue;
            if (next.size() > warn_threshold_) {
                ++shard_.blowup_cliques;
                shard_.largest_blowup = std::max<std::uint64_t>(shard_.largest_blowup, next.size());
            }
            auto& grade = shard_.grades[order - 1];
            grade.insert(grade.end(), next.begin(), next.end());

            if (order < max_order_) {
                std::vector<VertexId> deeper;
                const auto nb = g_.neighbours(c);
                std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(ci) + 1, candidates.end(),
                                      nb.begin(), nb.end(), std::back_inserter(deeper));
                if (!deeper.empty()) {
                    members.push_back(c);
                    extend(members, next, deeper);
                    members.pop_back();
                }
            }
        }
    }

    const Digraph& g_;
    std::size_t max_order_;
    bool transitive_only_;
    std::uint64_t warn_threshold_;
    EnumerationShard& shard_;
};

Tournaplex enumerate(const Digraph& g, std::size_t max_order, bool transitive_only, const EnumerationOptions& options) {
    if (max_order < 1) throw ParameterError("max_order must be at least 1");
    if (max_order > kMaxTournamentOrder) {
        throw ParameterError("max_order may not exceed " + std::to_string(kMaxTournamentOrder));
    }
    const unsigned workers = std::max(1U, options.threads);
    std::vector<EnumerationShard> shards(workers);

    auto work = [&](unsigned w) {
        CliqueExpander expander(g, max_order, transitive_only, options.blowup_warning_threshold, shards[w]);
        for (VertexId root = w; root < g.vertex_count(); root += workers) expander.expand_root(root);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    std::vector<std::vector<Tournament>> grades(max_order);
    std::uint64_t blowups = 0;
    std::uint64_t largest = 0;
    for (auto& shard : shards) {
        for (std::size_t d = 0; d < max_order; ++d) {
            grades[d].insert(grades[d].end(), shard.grades[d].begin(), shard.grades[d].end());
        }
        blowups += shard.blowup_cliques;
        largest = std::max(largest, shard.largest_blowup);
    }
    if (blowups > 0 && options.diagnostics) {
        std::ostringstream msg;
        msg << blowups << " clique(s) expanded into more than " << options.blowup_warning_threshold
            << " orientation variants because of reciprocal edges (largest: " << largest << ")";
        options.diagnostics(msg.str());
    }
    return TournaplexBuilder::from_grades(std::move(grades));
}

}  // namespace

Tournaplex Tournaplex::from_simplices(std::vector<Tournament> simplices) {
    std::vector<std::vector<Tournament>> grades;
    for (const Tournament& t : simplices) {
        if (t.order() == 0) throw ValidationError("empty tournament");
        if (grades.size() < t.order()) grades.resize(t.order());
        grades[t.dimension()].push_back(t);
    }
    Tournaplex out = TournaplexBuilder::from_grades(std::move(grades));
    for (int d = 0; d <= out.max_dimension(); ++d) {
        const auto g = out.grade(static_cast<std::size_t>(d));
        if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw ValidationError("duplicate tournament");
    }
    check_face_closed(out);
    return out;
}

std::span<const Tournament> Tournaplex::grade(std::size_t dimension) const {
    if (dimension >= grades_.size()) return {};
    return grades_[dimension];
}

std::size_t Tournaplex::size() const noexcept {
    std::size_t n = 0;
    for (const auto& g : grades_) n += g.size();
    return n;
}

std::vector<std::size_t> Tournaplex::counts() const {
    std::vector<std::size_t> out;
    for (const auto& g : grades_) out.push_back(g.size());
    return out;
}

std::optional<std::size_t> Tournaplex::find(const Tournament& t) const {
    if (t.order() == 0 || t.dimension() >= grades_.size()) return std::nullopt;
    const auto& g = grades_[t.dimension()];
    auto it = std::lower_bound(g.begin(), g.end(), t);
    if (it == g.end() || !(*it == t)) return std::nullopt;
    return static_cast<std::size_t>(it - g.begin());
}

Tournaplex Tournaplex::subcomplex(const std::function<bool(const Tournament&)>& keep) const {
    std::vector<std::vector<Tournament>> grades(grades_.size());
    for (std::size_t d = 0; d < grades_.size(); ++d) {
        std::copy_if(grades_[d].begin(), grades_[d].end(), std::back_inserter(grades[d]), keep);
    }
    Tournaplex out = TournaplexBuilder::from_grades(std::move(grades));
    check_face_closed(out);
    return out;
}

Tournaplex flag_tournaplex(const Digraph& g, std::size_t max_order, const EnumerationOptions& options) {
    return enumerate(g, max_order, false, options);
}

Tournaplex directed_flag_complex(const Digraph& g, std::size_t max_order, const EnumerationOptions& options) {
    return enumerate(g, max_order, true, options);
}

Digraph one_skeleton(const Tournaplex& complex) {
    std::size_t vertex_count = 0;
    for (const Tournament& v : complex.grade(0)) vertex_count = std::max<std::size_t>(vertex_count, v.vertex(0) + 1);
    std::vector<Edge> edges;
    for (const Tournament& e : complex.grade(1)) {
        const auto arcs = e.arcs();
        edges.insert(edges.end(), arcs.begin(), arcs.end());
    }
    return Digraph(vertex_count, std::move(edges));
}

void dump_tournaplex(std::ostream& out, const Tournaplex& complex,
                     const std::function<std::int64_t(const Tournament&)>& weight) {
    complex.for_each([&](const Tournament& t) {
        out << "dim " << t.dimension() << " :";
        for (VertexId v : t.vertices()) out << ' ' << v;
        out << " : " << t.orientation().to_hex() << " : " << weight(t) << '\n';
    });
}

}  // namespace tpx
