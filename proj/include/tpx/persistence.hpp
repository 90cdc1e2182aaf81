#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "tpx/directionality.hpp"
#include "tpx/tournaplex.hpp"

namespace tpx {

using Weight = std::int64_t;

/// Death value of a bar that never dies.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

/// A tournaplex with one weight per member, sorted by (weight, dimension, vertex
/// tuple, orientation mask). Faces always precede their cofaces.
class FilteredComplex {
public:
    std::size_t size() const noexcept { return simplices_.size(); }
    const Tournament& simplex(std::size_t i) const { return simplices_[i]; }
    Weight weight(std::size_t i) const { return weights_[i]; }
    std::size_t dimension(std::size_t i) const { return simplices_[i].dimension(); }
    /// Filtration indices of the codimension-1 faces of simplex i, by face position.
    std::span<const std::uint32_t> faces(std::size_t i) const {
        return {faces_.data() + face_offsets_[i], faces_.data() + face_offsets_[i + 1]};
    }
    int max_dimension() const noexcept { return max_dimension_; }

private:
    friend FilteredComplex build_filtration(const Tournaplex&, const std::function<Weight(const Tournament&)>&);
    std::vector<Tournament> simplices_;
    std::vector<Weight> weights_;
    std::vector<std::uint32_t> face_offsets_{0};
    std::vector<std::uint32_t> faces_;
    int max_dimension_ = -1;
};

/// Throws InvariantError naming the simplex and face when a face weighs more than
/// its coface.
FilteredComplex build_filtration(const Tournaplex& complex, const std::function<Weight(const Tournament&)>& weight);

struct PersistencePair {
    int dimension = 0;
    Weight birth = 0;
    Weight death = kInfinity;

    bool infinite() const noexcept { return death == kInfinity; }
    friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

/// Bars sorted by (dimension, birth, death); zero-length bars omitted.
class Barcode {
public:
    Barcode() = default;
    explicit Barcode(std::vector<PersistencePair> pairs);

    std::span<const PersistencePair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    /// Bars alive at t (birth <= t < death), per dimension, trailing zeros trimmed.
    std::vector<std::size_t> betti_at(Weight t) const;

    friend bool operator==(const Barcode&, const Barcode&) = default;

private:
    std::vector<PersistencePair> pairs_;
};

/// Z/2 persistent homology of the sublevel filtration.
Barcode compute_persistence(const FilteredComplex& filtration);

/// Z/2 Betti numbers of the whole complex, trailing zeros trimmed.
std::vector<std::size_t> betti_numbers(const Tournaplex& complex);

struct BettiGridCell {
    Weight dr_level = 0;
    Weight c3_level = 0;
    std::vector<std::size_t> betti;
};

/// Betti numbers of {t : w_dr(t) <= r and w_c3(t) <= c} for every (r, c), row-major in
/// dr_levels. Each cell is reduced from scratch.
std::vector<BettiGridCell> bifiltration_betti(const Tournaplex& complex, std::span<const Weight> dr_levels,
                                              std::span<const Weight> c3_levels, unsigned threads = 1);

/// `dim birth death` per line (`inf` for an infinite death), or CSV with a
/// `dim,birth,death` header.
void write_barcode(std::ostream& out, const Barcode& barcode, bool csv = false);

/// CSV `dr_level,c3_level,b0,b1,...`, padded with zeros to the longest Betti vector.
void write_betti_grid(std::ostream& out, std::span<const BettiGridCell> grid);

}  // namespace tpx
