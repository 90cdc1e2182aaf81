#include "tpx/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "tpx/errors.hpp"
#include "tpx/parallel.hpp"

namespace tpx {

FilteredComplex build_filtration(const Tournaplex& complex, const std::function<Weight(const Tournament&)>& weight) {
    struct Entry {
        Weight weight;
        std::size_t dimension;
        std::size_t grade_index;
    };
    std::vector<Entry> entries;
    entries.reserve(complex.size());
    std::vector<std::vector<Weight>> grade_weights(static_cast<std::size_t>(complex.max_dimension() + 1));
    for (int d = 0; d <= complex.max_dimension(); ++d) {
        const auto grade = complex.grade(static_cast<std::size_t>(d));
        auto& weights = grade_weights[static_cast<std::size_t>(d)];
        weights.reserve(grade.size());
        for (std::size_t i = 0; i < grade.size(); ++i) {
            weights.push_back(weight(grade[i]));
            entries.push_back({weights.back(), static_cast<std::size_t>(d), i});
        }
    }
    // Within one grade the members are already sorted by (vertices, mask), so the
    // grade index is the tie-break.
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.grade_index < b.grade_index;
    });

    std::vector<std::vector<std::uint32_t>> position(grade_weights.size());
    for (std::size_t d = 0; d < grade_weights.size(); ++d) position[d].resize(grade_weights[d].size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        position[entries[k].dimension][entries[k].grade_index] = static_cast<std::uint32_t>(k);
    }

    FilteredComplex out;
    out.max_dimension_ = complex.max_dimension();
    out.simplices_.reserve(entries.size());
    out.weights_.reserve(entries.size());
    for (const Entry& e : entries) {
        const Tournament& t = complex.grade(e.dimension)[e.grade_index];
        out.simplices_.push_back(t);
        out.weights_.push_back(e.weight);
        if (e.dimension > 0) {
            for (std::size_t i = 0; i < t.order(); ++i) {
                const Tournament f = t.face(i);
                const auto at = complex.find(f);
                if (!at) throw InvariantError("face " + to_string(f) + " of " + to_string(t) + " is missing");
                const Weight fw = grade_weights[e.dimension - 1][*at];
                if (fw > e.weight) {
                    throw InvariantError("weight is not monotone: face " + to_string(f) + " weighs " + std::to_string(fw) +
                                         " but " + to_string(t) + " weighs " + std::to_string(e.weight));
                }
                out.faces_.push_back(position[e.dimension - 1][*at]);
            }
        }
        out.face_offsets_.push_back(static_cast<std::uint32_t>(out.faces_.size()));
    }
    return out;
}

Barcode::Barcode(std::vector<PersistencePair> pairs) : pairs_(std::move(pairs)) {
    std::erase_if(pairs_, [](const PersistencePair& p) { return p.birth == p.death; });
    std::sort(pairs_.begin(), pairs_.end());
}

std::vector<std::size_t> Barcode::betti_at(Weight t) const {
    std::vector<std::size_t> betti;
    for (const PersistencePair& p : pairs_) {
        if (p.birth <= t && t < p.death) {
            const auto d = static_cast<std::size_t>(p.dimension);
            if (betti.size() <= d) betti.resize(d + 1, 0);
            ++betti[d];
        }
    }
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
    return betti;
}

Barcode compute_persistence(const FilteredComplex& f) {
    const std::size_t n = f.size();
    std::vector<std::vector<std::uint32_t>> by_dimension(static_cast<std::size_t>(f.max_dimension() + 1));
    for (std::size_t i = 0; i < n; ++i) by_dimension[f.dimension(i)].push_back(static_cast<std::uint32_t>(i));

    std::vector<std::vector<std::uint32_t>> reduced(n);
    std::vector<char> killed(n, 0);    // paired as the pivot row of a later column
    std::vector<char> negative(n, 0);  // column reduced to a non-zero chain
    std::unordered_map<std::uint32_t, std::uint32_t> pivot_column;
    std::vector<PersistencePair> pairs;
    std::vector<std::uint32_t> column;
    std::vector<std::uint32_t> scratch;

    for (int d = f.max_dimension(); d >= 1; --d) {
        for (std::uint32_t j : by_dimension[static_cast<std::size_t>(d)]) {
            // Clearing: a simplex already used as a pivot row has a zero column.
            if (killed[j]) continue;
            const auto faces = f.faces(j);
            column.assign(faces.begin(), faces.end());
            std::sort(column.begin(), column.end());
            while (!column.empty()) {
                const auto it = pivot_column.find(column.back());
                if (it == pivot_column.end()) break;
                const auto& other = reduced[it->second];
                scratch.clear();
                std::set_symmetric_difference(column.begin(), column.end(), other.begin(), other.end(),
                                              std::back_inserter(scratch));
                column.swap(scratch);
            }
            if (column.empty()) continue;
            const std::uint32_t pivot = column.back();
            pivot_column.emplace(pivot, j);
            killed[pivot] = 1;
            negative[j] = 1;
            pairs.push_back({d - 1, f.weight(pivot), f.weight(j)});
            reduced[j] = column;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!killed[i] && !negative[i]) pairs.push_back({static_cast<int>(f.dimension(i)), f.weight(i), kInfinity});
    }
    return Barcode(std::move(pairs));
}

std::vector<std::size_t> betti_numbers(const Tournaplex& complex) {
    const auto barcode = compute_persistence(build_filtration(complex, [](const Tournament&) { return Weight{0}; }));
    return barcode.betti_at(0);
}

std::vector<BettiGridCell> bifiltration_betti(const Tournaplex& complex, std::span<const Weight> dr_levels,
                                              std::span<const Weight> c3_levels, unsigned threads) {
    if (!std::is_sorted(dr_levels.begin(), dr_levels.end()) || !std::is_sorted(c3_levels.begin(), c3_levels.end())) {
        throw ParameterError("bifiltration levels must be sorted ascending");
    }
    std::vector<BettiGridCell> grid(dr_levels.size() * c3_levels.size());
    parallel_for(grid.size(), threads, [&](std::size_t cell) {
        const Weight r = dr_levels[cell / c3_levels.size()];
        const Weight c = c3_levels[cell % c3_levels.size()];
        const Tournaplex stage = complex.subcomplex([&](const Tournament& t) { return w_dr(t) <= r && w_c3(t) <= c; });
        grid[cell] = {r, c, betti_numbers(stage)};
    });
    return grid;
}

void write_barcode(std::ostream& out, const Barcode& barcode, bool csv) {
    const char sep = csv ? ',' : ' ';
    if (csv) out << "dim,birth,death\n";
    for (const PersistencePair& p : barcode.pairs()) {
        out << p.dimension << sep << p.birth << sep;
        if (p.infinite()) out << "inf";
        else out << p.death;
        out << '\n';
    }
}

void write_betti_grid(std::ostream& out, std::span<const BettiGridCell> grid) {
    std::size_t width = 1;
    for (const auto& cell : grid) width = std::max(width, cell.betti.size());
    out << "dr_level,c3_level";
    for (std::size_t d = 0; d < width; ++d) out << ",b" << d;
    out << '\n';
    for (const auto& cell : grid) {
        out << cell.dr_level << ',' << cell.c3_level;
        for (std::size_t d = 0; d < width; ++d) out << ',' << (d < cell.betti.size() ? cell.betti[d] : 0);
        out << '\n';
    }
}

}  // namespace tpx
