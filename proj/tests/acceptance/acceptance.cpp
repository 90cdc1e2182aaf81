// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "support.hpp"
#include "tpx/clustering.hpp"
#include "tpx/directionality.hpp"
#include "tpx/experiments.hpp"
#include "tpx/persistence.hpp"

using namespace tpx;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(Outcome o, const std::string& why) {
    o.pass = false;
    if (o.detail.empty()) o.detail = why;
    return o;
}

EnumerationOptions quiet() {
    EnumerationOptions o;
    o.diagnostics = nullptr;
    return o;
}

std::string cli_ph(const std::string& file, const std::string& weight) {
    std::ostringstream out, err;
    const int code = cli::run({"tournaplex", "ph", testing::fixture(file), "--weight", weight}, out, err);
    return code == 0 ? out.str() : "exit " + std::to_string(code) + ": " + err.str();
}

Outcome golden_barcode() {
    std::ostringstream expected;
    write_barcode(expected, testing::expand(testing::fixture_dr_barcode()));
    Outcome o;
    for (const char* file : {"g1.flag", "g2.flag"}) {
        if (cli_ph(file, "dr") != expected.str()) o = fail(o, std::string(file) + " barcode differs");
    }
    o.detail = o.pass ? "G1 and G2 match all " + std::to_string(testing::expand(testing::fixture_dr_barcode()).size()) + " bars" : o.detail;
    return o;
}

Outcome bifiltration_grid() {
    const auto& dr = testing::grid_dr_levels();
    const auto& c3 = testing::grid_c3_levels();
    const auto& types = testing::grid_homotopy_types();
    Outcome o;
    std::size_t cells = 0;
    for (const auto& [file, divergent] :
         {std::pair{"g1.flag", testing::kG1DivergentCell}, std::pair{"g2.flag", testing::kG2DivergentCell}}) {
        const auto grid = bifiltration_betti(flag_tournaplex(testing::load(file)), dr, c3);
        for (std::size_t r = 0; r < dr.size(); ++r)
            for (std::size_t c = 0; c < c3.size(); ++c) {
                const std::string& type = types[r][c] == "?" ? divergent : types[r][c];
                ++cells;
                if (grid[r * c3.size() + c].betti != testing::betti_of(type)) {
                    o = fail(o, std::string(file) + " cell (" + std::to_string(dr[r]) + "," + std::to_string(c3[c]) + ")");
                }
            }
    }
    if (o.pass) o.detail = std::to_string(cells) + " cells, (44,3) = 3_11+4_1 vs 3_10";
    return o;
}

Outcome one_parameter() {
    Outcome o;
    if (cli_ph("g1.flag", "dr") != cli_ph("g2.flag", "dr")) o = fail(o, "w_dr barcodes differ");
    const std::string c3_1 = cli_ph("g1.flag", "c3");
    if (c3_1 != cli_ph("g2.flag", "c3")) o = fail(o, "w_c3 barcodes differ");
    if (c3_1 != "0 0 inf\n") o = fail(o, "w_c3 barcode is not that of a point");
    if (cli_ph("g1.flag", "combined:3:44") == cli_ph("g2.flag", "combined:3:44")) {
        o = fail(o, "combined (3,44) barcodes coincide");
    }
    if (o.pass) o.detail = "dr equal, c3 equal and contractible, combined:3:44 differ";
    return o;
}

Outcome t_table() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        if (enumerate_three_cycle_distribution(n) != three_cycle_distribution(n)) {
            o = fail(o, "n = " + std::to_string(n) + " differs");
        }
    }
    if (o.pass) o.detail = "n = 1..5 exact";
    return o;
}

Outcome exhaustive_invariants() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        const std::int64_t max_dr = 2 * static_cast<std::int64_t>(binomial(n + 1, 3));
        const std::int64_t gap_bound_x4 = (nn - 1) * (nn - 1);
        std::set<std::int64_t> realised;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
            const Tournament t = testing::tournament_from_bits(n, bits);
            ++checked;
            const std::int64_t dr = local_directionality(t);
            const std::int64_t c3 = three_cycle_count(t);
            realised.insert(c3);
            if (dr != max_dr - 8 * c3 || !directionality_identity_holds(t)) o = fail(o, "identity violated");
            if (dr > max_dr || (dr == max_dr) != t.is_transitive()) o = fail(o, "transitivity maximum violated");
            for (std::size_t i = 0; n > 1 && i < n; ++i) {
                const Tournament f = t.face(i);
                if (4 * (c3 - three_cycle_count(f)) > gap_bound_x4) o = fail(o, "codim-1 3-cycle gap exceeded");
                if (w_dr(f) > w_dr(t)) o = fail(o, "w_dr not monotone");
            }
        }
        for (std::int64_t j = 0; j <= max_three_cycles(nn); ++j) {
            if (!realised.contains(j)) o = fail(o, "3-cycle count " + std::to_string(j) + " not realised at n = " + std::to_string(n));
        }
        if (static_cast<std::int64_t>(*realised.rbegin()) != max_three_cycles(nn)) o = fail(o, "3-cycle maximum exceeded");
    }
    if (o.pass) o.detail = std::to_string(checked) + " tournaments, zero violations";
    return o;
}

Outcome expectations() {
    const std::int64_t n = 20;
    const double p = 0.3;
    const int graphs = 500;
    Outcome o;
    double worst = 0.0;
    for (int k : {3, 4}) {
        const auto expected = expected_tournament_counts(n, k, p);
        std::map<int, std::vector<double>> samples;  // key -1 holds X_k
        for (int i = 0; i < graphs; ++i) {
            const Tournaplex complex =
                flag_tournaplex(er_biased(static_cast<std::size_t>(n), p, p, derive_seed(2024, static_cast<std::uint64_t>(i))),
                                static_cast<std::size_t>(k), quiet());
            std::map<int, double> by_j;
            double total = 0;
            if (complex.max_dimension() >= k - 1) {
                for (const Tournament& t : complex.grade(static_cast<std::size_t>(k - 1))) {
                    ++by_j[static_cast<int>(three_cycle_count(t))];
                    ++total;
                }
            }
            samples[-1].push_back(total);
            for (const auto& [j, e] : expected.by_three_cycles) samples[j].push_back(by_j[j]);
        }
        for (const auto& [j, xs] : samples) {
            const double target = j < 0 ? expected.total : expected.by_three_cycles.at(j);
            double mean = 0, sq = 0;
            for (double x : xs) mean += x;
            mean /= static_cast<double>(xs.size());
            for (double x : xs) sq += (x - mean) * (x - mean);
            const double se = std::sqrt(sq / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
            const double z = se > 0 ? std::abs(mean - target) / se : (mean == target ? 0.0 : INFINITY);
            worst = std::max(worst, z);
            if (z > 4.0) {
                o = fail(o, "k = " + std::to_string(k) + (j < 0 ? " total" : " j = " + std::to_string(j)) + ": mean " +
                                std::to_string(mean) + " vs " + std::to_string(target));
            }
        }
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "largest deviation %.2f standard errors", worst);
        o.detail = buf;
    }
    return o;
}

std::string ari_text(const std::optional<double>& a) {
    if (!a) return "undef";
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", *a);
    return buf;
}

Outcome er_experiment() {
    int good = 0;
    std::string list;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ErExperimentConfig config;
        config.k = 4;
        config.seed = seed;
        const ClusterReport r = run_er_experiment(config);
        const bool ok = r.tournaplex_ari && *r.tournaplex_ari >= 0.8 &&
                        (!r.betti_ari || *r.tournaplex_ari > *r.betti_ari);
        good += ok;
        list += (seed > 1 ? " " : "") + ari_text(r.tournaplex_ari) + "/" + ari_text(r.betti_ari);
    }
    Outcome o;
    o.pass = good >= 8;
    o.detail = std::to_string(good) + "/10 seeds pass (tournaplex/betti ARI: " + list + ")";
    return o;
}

Outcome spike_experiment() {
    int good = 0;
    std::string list;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SpikeExperimentConfig config;
        config.k = 2;
        config.seed = seed;
        const ClusterReport r = run_spike_experiment(config);
        good += r.tournaplex_ari && *r.tournaplex_ari >= 0.9;
        list += (seed > 1 ? " " : "") + ari_text(r.tournaplex_ari);
    }
    Outcome o;
    o.pass = good == 10;
    o.detail = std::to_string(good) + "/10 seeds with ARI >= 0.9 (" + list + ")";
    return o;
}

Outcome reduction_oracle() {
    Rng rng(9001);
    Outcome o;
    std::size_t thresholds_checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Digraph g = testing::random_digraph(1 + uniform_below(rng, 8), 0.4, rng);
        const Tournaplex k = flag_tournaplex(g, 8, quiet());
        const std::vector<WeightFunction> weights{WeightFunction::local_directionality(), WeightFunction::three_cycle(),
                                                  WeightFunction::global(g),
                                                  WeightFunction::motif(Tournament::transitive(3))};
        for (const auto& w : weights) {
            const FilteredComplex f = build_filtration(k, w);
            const Barcode b = compute_persistence(f);
            std::set<Weight> levels;
            for (std::size_t i = 0; i < f.size(); ++i) levels.insert(f.weight(i));
            for (Weight t : levels) {
                ++thresholds_checked;
                std::vector<oracle::Cell> cells;
                std::int64_t chi_cells = 0;
                k.for_each([&](const Tournament& s) {
                    if (w(s) > t) return;
                    cells.push_back(testing::to_cell(s));
                    chi_cells += s.dimension() % 2 ? -1 : 1;
                });
                const auto betti = b.betti_at(t);
                if (betti != oracle::betti(cells)) o = fail(o, "trial " + std::to_string(trial) + " " + w.name() + " at " + std::to_string(t));
                std::int64_t chi_betti = 0;
                for (std::size_t d = 0; d < betti.size(); ++d) chi_betti += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(betti[d]);
                if (chi_betti != chi_cells) o = fail(o, "Euler characteristic mismatch in trial " + std::to_string(trial));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(thresholds_checked) + " sublevel complexes, zero mismatches";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 golden w_dr barcode of G1 and G2", golden_barcode},
        {"2 bifiltration Betti grid", bifiltration_grid},
        {"3 one-parameter indistinguishability", one_parameter},
        {"4 3-cycle distribution table", t_table},
        {"5 exhaustive invariants n <= 6", exhaustive_invariants},
        {"6 ER expectations of X_k and X_k,j", expectations},
        {"7 ER clustering experiment", er_experiment},
        {"8 synthetic spike clustering", spike_experiment},
        {"9 reduction against dense homology", reduction_oracle},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = fail(o, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", seconds);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << timing << "]  " << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
