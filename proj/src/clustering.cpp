#include "tpx/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tpx/errors.hpp"
#include "tpx/random.hpp"

namespace tpx {

std::vector<std::vector<double>> standardize_columns(const FeatureMatrix& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.columns(), 0.0));
    const auto sd = column_deviations(m);
    for (std::size_t c = 0; c < m.columns(); ++c) {
        if (sd[c] == 0.0) continue;
        double mean = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) mean += m.at(r, c);
        mean /= static_cast<double>(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) rows[r][c] = (m.at(r, c) - mean) / sd[c];
    }
    return rows;
}

namespace {

using Point = std::vector<double>;

double squared_distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

std::vector<Point> seed_centres(const std::vector<Point>& points, std::size_t k, Rng& rng) {
    const std::size_t n = points.size();
    std::vector<Point> centres;
    std::vector<char> chosen(n, 0);
    const std::size_t first = uniform_below(rng, n);
    centres.push_back(points[first]);
    chosen[first] = 1;
    std::vector<double> nearest(n);
    for (std::size_t i = 0; i < n; ++i) nearest[i] = squared_distance(points[i], centres[0]);
    while (centres.size() < k) {
        double total = 0.0;
        for (double d : nearest) total += d;
        std::size_t pick = n;
        if (total > 0.0) {
            const double target = unit_interval(rng) * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += nearest[i];
                if (nearest[i] > 0.0 && target < acc) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) {
                for (std::size_t i = n; i-- > 0;) {
                    if (nearest[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        } else {
            // Every point coincides with a centre; take the next unused row.
            pick = static_cast<std::size_t>(std::find(chosen.begin(), chosen.end(), 0) - chosen.begin());
        }
        chosen[pick] = 1;
        centres.push_back(points[pick]);
        for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], squared_distance(points[i], centres.back()));
    }
    return centres;
}

KMeansResult lloyd(const std::vector<Point>& points, std::vector<Point> centres) {
    const std::size_t n = points.size();
    const std::size_t k = centres.size();
    const std::size_t dim = points.empty() ? 0 : points[0].size();
    std::vector<int> labels(n, -1);
    constexpr int kMaxIterations = 300;
    for (int iteration = 0; iteration < kMaxIterations; ++iteration) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < k; ++c) {
                const double d = squared_distance(points[i], centres[c]);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(c);
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }
        std::vector<Point> sums(k, Point(dim, 0.0));
        std::vector<std::size_t> sizes(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = static_cast<std::size_t>(labels[i]);
            ++sizes[c];
            for (std::size_t j = 0; j < dim; ++j) sums[c][j] += points[i][j];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (sizes[c] == 0) {
                // Refill an empty cluster with the point farthest from its centre.
                std::size_t far = 0;
                double far_d = -1.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double d = squared_distance(points[i], centres[static_cast<std::size_t>(labels[i])]);
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                centres[c] = points[far];
                labels[far] = static_cast<int>(c);
                changed = true;
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) centres[c][j] = sums[c][j] / static_cast<double>(sizes[c]);
        }
        if (!changed) break;
    }
    KMeansResult out;
    for (std::size_t i = 0; i < n; ++i) out.inertia += squared_distance(points[i], centres[static_cast<std::size_t>(labels[i])]);
    std::map<int, int> renumber;
    for (int l : labels) {
        renumber.emplace(l, static_cast<int>(renumber.size()));
        out.labels.push_back(renumber.at(l));
    }
    return out;
}

}  // namespace

KMeansResult kmeans(const FeatureMatrix& m, std::size_t k, std::uint64_t seed, unsigned restarts) {
    if (k == 0) throw ParameterError("k must be at least 1");
    if (k > m.rows()) {
        throw ParameterError("k = " + std::to_string(k) + " exceeds the row count " + std::to_string(m.rows()));
    }
    const auto points = standardize_columns(m);
    KMeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (unsigned r = 0; r < std::max(1U, restarts); ++r) {
        Rng rng(derive_seed(seed, r));
        KMeansResult run = lloyd(points, seed_centres(points, k, rng));
        if (run.inertia < best.inertia) best = std::move(run);
    }
    return best;
}

std::optional<double> adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw ParameterError("labelings have different lengths");
    const std::size_t n = a.size();
    if (n < 2) return std::nullopt;
    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> rows;
    std::map<int, double> cols;
    for (std::size_t i = 0; i < n; ++i) {
        ++joint[{a[i], b[i]}];
        ++rows[a[i]];
        ++cols[b[i]];
    }
    auto pairs = [](double x) { return x * (x - 1.0) / 2.0; };
    double index = 0.0;
    for (const auto& [key, count] : joint) index += pairs(count);
    double sum_a = 0.0;
    for (const auto& [key, count] : rows) sum_a += pairs(count);
    double sum_b = 0.0;
    for (const auto& [key, count] : cols) sum_b += pairs(count);
    const double expected = sum_a * sum_b / pairs(static_cast<double>(n));
    const double maximum = 0.5 * (sum_a + sum_b);
    if (maximum == expected) return std::nullopt;
    return (index - expected) / (maximum - expected);
}

}  // namespace tpx
