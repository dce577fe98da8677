#include <doctest.h>

#include "rp3/bracket.hpp"
#include "rp3/khovanov.hpp"
#include "rp3/moves.hpp"
#include "test_util.hpp"

using namespace rp3;

namespace {
std::string code(VirtualDiagram v) {
    v.orientation.reset();
    return canonical_code(v);
}
}  // namespace

TEST_CASE("site enumeration") {
    auto u = orient(parse_virtual("loop 1\n"));
    CHECK(enumerate_sites(u, MoveKind::R1, false).size() == 1);
    CHECK_FALSE(enumerate_sites(fixture_pi("J.pkd"), MoveKind::flype, false).empty());
    CHECK(enumerate_sites(fixture_pi("J.pkd"), MoveKind::R3, false).empty());
    CHECK(enumerate_sites(u, MoveKind::R2, true).empty());
}

TEST_CASE("move specs round-trip through text") {
    MoveSpec m{MoveKind::R2, false, {{3, 7}}, 2};
    CHECK(m.str() == "R2 3,7/2 apply");
    CHECK(MoveSpec::parse(m.str()) == m);
    MoveSpec e{MoveKind::vR1, true, {}, 0};
    CHECK(MoveSpec::parse(e.str()) == e);
    CHECK_THROWS_AS(MoveSpec::parse("R9 1 apply"), std::exception);
}

TEST_CASE("R1 then its inverse restores the diagram") {
    auto v = fixture_pi("trefoil.pkd");
    for (const auto& s : enumerate_sites(v, MoveKind::R1, false))
        for (int var = 0; var < variant_count(MoveKind::R1, false); ++var) {
            auto w = apply_move(v, {MoveKind::R1, false, s, var});
            CHECK(w.crossings.size() == 4);
            bool back = false;
            for (const auto& t : enumerate_sites(w, MoveKind::R1, true))
                if (code(apply_move(w, {MoveKind::R1, true, t, 0})) == code(v)) back = true;
            CHECK(back);
        }
}

TEST_CASE("R2 then its inverse restores the diagram") {
    auto v = fixture_pi("J.pkd");
    auto sites = enumerate_sites(v, MoveKind::R2, false);
    REQUIRE_FALSE(sites.empty());
    auto w = apply_move(v, {MoveKind::R2, false, sites.front(), 0});
    CHECK(w.crossings.size() == 4);
    bool back = false;
    for (const auto& t : enumerate_sites(w, MoveKind::R2, true))
        if (code(apply_move(w, {MoveKind::R2, true, t, 0})) == code(v)) back = true;
    CHECK(back);
}

TEST_CASE("flype keeps the bracket and the table") {
    auto v = fixture_pi("J.pkd");
    auto f = normalized_bracket(v);
    auto kh = khovanov_betti(v);
    for (const auto& s : enumerate_sites(v, MoveKind::flype, false)) {
        auto w = apply_move(v, {MoveKind::flype, false, s, 0});
        CHECK(validate(w).empty());
        CHECK(normalized_bracket(w) == f);
        CHECK(khovanov_betti(w) == kh);
    }
}

TEST_CASE("R3 keeps the bracket") {
    // walk until an R3 site appears, then apply every one
    auto v = fixture_pi("trefoil.pkd");
    int applied = 0;
    for (std::uint64_t seed = 1; seed < 40 && applied == 0; ++seed) {
        auto w = random_walk(v, 3, seed).diagram;
        for (const auto& s : enumerate_sites(w, MoveKind::R3, false)) {
            auto x = apply_move(w, {MoveKind::R3, false, s, 0});
            CHECK(validate(x).empty());
            CHECK(normalized_bracket(x) == normalized_bracket(v));
            ++applied;
        }
    }
    CHECK(applied > 0);
}

TEST_CASE("stale sites are rejected") {
    auto v = fixture_pi("J.pkd");
    CHECK_THROWS_AS(apply_move(v, {MoveKind::R2, false, {{999, 998}}, 0}), DiagramError);
    CHECK_THROWS_AS(apply_move(v, {MoveKind::flype, false, {{12345}}, 0}), DiagramError);
    CHECK_THROWS_AS(apply_move(fixture_p("J.pkd"), {MoveKind::R3, false, {}, 0}), DiagramError);
}

TEST_CASE("walks are deterministic and respect the crossing cap") {
    auto v = fixture_pi("J.pkd");
    CHECK(code(random_walk(v, 0, 5).diagram) == code(v));
    auto a = random_walk(v, 12, 77), b = random_walk(v, 12, 77);
    CHECK(a.trace == b.trace);
    CHECK(code(a.diagram) == code(b.diagram));
    for (std::uint64_t s = 0; s < 30; ++s)
        CHECK(random_walk(v, 15, s).diagram.crossings.size() <= v.crossings.size() + 3);
}

TEST_CASE("replaying a trace reproduces the walk") {
    auto v = fixture_pi("trefoil.pkd");
    auto w = random_walk(v, 8, 2024);
    VirtualDiagram x = v;
    for (const auto& m : w.trace) x = apply_move(x, MoveSpec::parse(m.str()));
    CHECK(code(x) == code(w.diagram));
}

TEST_CASE("projective walks keep class and polynomial") {
    auto d = fixture_p("K1.pkd");
    auto f = f_projective(d);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto w = random_walk(d, 4, s);
        CHECK(validate(w.diagram).empty());
        CHECK(homotopy_class(w.diagram) == 1);
        CHECK(f_projective(w.diagram) == f);
    }
}

TEST_CASE("move vocabulary by diagram type") {
    for (auto k : projective_move_kinds()) CHECK((k == MoveKind::R1 || k == MoveKind::slideI || k == MoveKind::slideII));
    for (auto k : virtual_move_kinds()) CHECK((k != MoveKind::slideI && k != MoveKind::slideII));
    CHECK(move_kind_from_string(to_string(MoveKind::detour)) == MoveKind::detour);
}
