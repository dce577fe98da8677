#include <doctest.h>

#include "oracles.hpp"
#include "rp3/khovanov.hpp"
#include "test_util.hpp"

using namespace rp3;

namespace {
BettiTable table(std::map<std::pair<int, int>, int> m) {
    BettiTable b;
    b.dims = std::move(m);
    return b;
}
}  // namespace

TEST_CASE("unknot and unlink") {
    CHECK(khovanov_betti(orient(parse_virtual("loop 1\n"))) == table({{{0, -1}, 1}, {{0, 1}, 1}}));
    CHECK(khovanov_betti(fixture_p("unlink2.pkd")).total() == 4);
    CHECK(khovanov_betti(fixture_p("omega.pkd")) == table({{{0, -1}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("trefoil table") {
    auto want = table({{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}});
    CHECK(khovanov_betti(fixture_p("trefoil.pkd")) == want);
    CHECK(khovanov_betti(fixture_p("trefoil_proj.pkd")) == want);
    CHECK(khovanov_betti(fixture_p("trefoil.pkd")).rows() == "0 1 1\n0 3 1\n2 5 1\n3 9 1\n");
}

TEST_CASE("source-sink decoration puts an even number of cut points on each circle") {
    for (std::string n : {"trefoil.pkd", "J.pkd", "K1.pkd", "class1_link.pkd"}) {
        auto v = fixture_pi(n);
        auto cube = build_cube(v);
        for (const auto& st : cube.states)
            for (const auto& c : st.circles) CHECK_MESSAGE(c.cut_points % 2 == 0, n);
    }
    auto u = source_sink_decoration(orient(parse_virtual("loop 1\n")));
    CHECK(u.cut_arcs.empty());
}

TEST_CASE("cube shape") {
    auto kink = orient(parse_virtual("crossing 1 1 1 2 2\n"));
    CHECK(build_cube(kink).states.size() == 2);
    auto pk = build_cube(fixture_v("probknot.vpd"));
    bool eta = false;
    for (unsigned v = 0; v < pk.states.size(); ++v)
        for (int i = 0; i < pk.C; ++i)
            if (!((v >> i) & 1) && pk.bifurcation(v, i) == Bifurcation::Eta) eta = true;
    CHECK(eta);
    CHECK(build_cube(fixture_pi("class1_link.pkd")).max_marked_per_state() <= 1);
}

TEST_CASE("d o d = 0 on fixtures, also with a 1-1 bifurcation") {
    for (std::string n : {"J.pkd", "K1.pkd", "W2.pkd", "fig21.pkd", "class1_link.pkd"})
        CHECK_MESSAGE(d_squared_zero(build_complex(build_cube(fixture_pi(n)), false)), n);
    CHECK(d_squared_zero(build_complex(build_cube(fixture_v("probknot.vpd")), false)));
}

TEST_CASE("affine fixtures match the textbook computation") {
    for (std::string n : {"trefoil.pkd", "figure8.pkd", "unlink2.pkd"}) {
        auto v = fixture_pi(n);
        CHECK_MESSAGE(khovanov_betti(v).dims == oracle::classical_khovanov(v), n);
    }
}

TEST_CASE("marked and unmarked tables agree") {
    for (std::string n : {"J.pkd", "omega.pkd", "class1_link.pkd", "trefoil.pkd", "trefoil_proj.pkd"}) {
        auto m = marked_betti(fixture_p(n));
        CHECK_MESSAGE(m.table == khovanov_betti(fixture_p(n)), n);
        CHECK(m.max_marked_per_state <= 1);
    }
    CHECK(marked_betti(fixture_p("trefoil.pkd")).marked_generators.empty());
    CHECK_FALSE(marked_betti(fixture_p("omega.pkd")).marked_generators.empty());
}

TEST_CASE("Lee homology dimensions") {
    CHECK(lee_homology(orient(parse_virtual("loop 1\n"))).total == 2);
    CHECK(lee_homology(fixture_p("trefoil.pkd")).total == 2);
    CHECK(lee_homology(fixture_p("unlink2.pkd")).total == 4);
}

TEST_CASE("Rasmussen invariant") {
    CHECK(rasmussen_s(fixture_p("unknot.pkd")) == 0);
    CHECK(rasmussen_s(fixture_p("trefoil.pkd")) == 2);
    CHECK(rasmussen_s(fixture_p("figure8.pkd")) == 0);
    CHECK(rasmussen_s(fixture_p("fig21.pkd")) == 2);
    CHECK_THROWS_AS(rasmussen_s(fixture_p("unlink2.pkd")), DiagramError);
}

TEST_CASE("threads do not change results") {
    auto v = fixture_pi("W2.pkd");
    CHECK(khovanov_betti(v, {}, 1) == khovanov_betti(v, {}, 3));
}

TEST_CASE("grid rendering lists every row") {
    auto g = khovanov_betti(fixture_p("trefoil.pkd")).grid();
    CHECK(g.find('9') != std::string::npos);
}
