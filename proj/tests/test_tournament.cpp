#include <catch_amalgamated.hpp>

#include "oracles/brute_flag.hpp"
#include "support.hpp"
#include "tpx/errors.hpp"

using namespace tpx;

namespace {

Tournament from_arcs(std::vector<VertexId> vs, std::vector<Edge> arcs) { return Tournament::from_arcs(std::move(vs), arcs); }

}  // namespace

TEST_CASE("face of the cyclic triangle") {
    const Tournament t = from_arcs({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    const Tournament f = t.face(1);
    CHECK(f == from_arcs({0, 2}, {{2, 0}}));
}

TEST_CASE("face of the transitive triangle") {
    const Tournament t = from_arcs({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(t.face(0) == from_arcs({1, 2}, {{1, 2}}));
    CHECK(t.face(2) == from_arcs({0, 1}, {{0, 1}}));
}

TEST_CASE("face index errors") {
    const Tournament t = Tournament::transitive(3);
    CHECK_THROWS_AS(t.face(3), RangeError);
    CHECK_THROWS_AS(Tournament::transitive(1).face(0), RangeError);
}

TEST_CASE("simplicial identity for faces") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + uniform_below(rng, 8);
        const Tournament t = testing::random_tournament(n, rng);
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) CHECK(t.face(j).face(i) == t.face(i).face(j - 1));
    }
}

TEST_CASE("faces agree with deleting a vertex from the arc list") {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Tournament t = testing::random_tournament(2 + uniform_below(rng, 9), rng);
        for (std::size_t i = 0; i < t.order(); ++i)
            CHECK(testing::to_cell(t.face(i)) == oracle::drop_vertex(testing::to_cell(t), t.vertex(i)));
    }
}

TEST_CASE("transitivity, regularity and semiregularity") {
    const Tournament cyclic = from_arcs({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(cyclic.is_transitive());
    CHECK(cyclic.is_regular());
    CHECK(cyclic.is_semiregular());
    const Tournament t4 = Tournament::transitive(4);
    CHECK(t4.is_transitive());
    CHECK_FALSE(t4.is_regular());
    CHECK_FALSE(t4.is_semiregular());
}

TEST_CASE("transitive iff no 3-cycle, regular only in odd order") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
            const Tournament t = testing::tournament_from_bits(n, bits);
            CHECK(t.is_transitive() == oracle::acyclic_triples(testing::to_cell(t)));
            if (t.is_regular()) {
                CHECK(n % 2 == 1);
                CHECK(t.is_semiregular());
            }
        }
    }
}

TEST_CASE("from_arcs validation") {
    CHECK_THROWS_AS(from_arcs({0, 1, 2}, {{0, 1}, {1, 2}}), ValidationError);
    CHECK_THROWS_AS(from_arcs({0, 1}, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(from_arcs({0, 1}, {{0, 5}}), ValidationError);
    CHECK(from_arcs({4, 2}, {{4, 2}}).vertex(0) == 2);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Tournament({2, 1}, PairMask{}), ParameterError);
    CHECK_THROWS_AS(Tournament({1, 1}, PairMask{}), ParameterError);
    PairMask extra;
    extra.set(3);
    CHECK_THROWS_AS(Tournament({0, 1, 2}, extra), ParameterError);
    std::vector<VertexId> too_many(17);
    for (std::size_t i = 0; i < too_many.size(); ++i) too_many[i] = static_cast<VertexId>(i);
    CHECK_THROWS_AS(Tournament(too_many, PairMask{}), ParameterError);
}

TEST_CASE("arcs and induced_by round trip") {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Tournament t = testing::random_tournament(2 + uniform_below(rng, 10), rng);
        const auto arcs = t.arcs();
        std::vector<VertexId> vs(t.vertices().begin(), t.vertices().end());
        CHECK(Tournament::from_arcs(vs, arcs) == t);
        const Digraph g(vs.back() + 1, arcs);
        CHECK(Tournament::induced_by(g, vs) == t);
    }
}

TEST_CASE("signed degree inside a tournament") {
    const Tournament t = Tournament::transitive(4);
    CHECK(t.signed_degree(0) == -3);
    CHECK(t.signed_degree(3) == 3);
    CHECK(t.out_degree(1) == 2);
}

TEST_CASE("extended appends arcs") {
    const Tournament base = Tournament::transitive(2);
    const Tournament t = Tournament({0, 1}, base.orientation()).extended(5, 0b01);
    CHECK(t.vertex(2) == 5);
    CHECK(t.arc(0, 2));
    CHECK(t.arc(2, 1));
    CHECK_THROWS_AS(t.extended(5, 0), ParameterError);
}

TEST_CASE("PairMask hex round trip and ordering") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        PairMask m;
        for (std::size_t b = 0; b < 120; ++b) {
            if (bernoulli(rng, 0.3)) m.set(b);
        }
        CHECK(PairMask::from_hex(m.to_hex()) == m);
    }
    CHECK(PairMask{}.to_hex() == "0");
    PairMask low;
    low.set(63);
    PairMask high;
    high.set(64);
    CHECK(low < high);
    CHECK(high.to_hex() == "10000000000000000");
    CHECK_THROWS_AS(PairMask::from_hex("xyz"), ParameterError);
}

TEST_CASE("tournament ordering is by order, then vertices, then mask") {
    const Tournament a({0, 1}, PairMask{});
    PairMask one;
    one.set(0);
    const Tournament b({0, 1}, one);
    const Tournament c({0, 2}, PairMask{});
    const Tournament d({0, 1, 2}, PairMask{});
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK(TournamentHash{}(a) != TournamentHash{}(b));
}
