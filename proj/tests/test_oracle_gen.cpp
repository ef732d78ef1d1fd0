#include "doctest.h"
#include "fixtures.hpp"
#include "iccolor/color.hpp"
#include "iccolor/gen.hpp"
#include "iccolor/oracle.hpp"
#include "iccolor/planarize.hpp"
#include "iccolor/validate.hpp"

using namespace icc;

TEST_CASE("prism over K3 needs six colors") {
    auto g = fixtures::prism_k3();
    CHECK(!oracle_color(g, 5).feasible);
    CHECK(oracle_color(g, 6).feasible);
}

TEST_CASE("tetrahedron oracle") {
    auto g = fixtures::tetrahedron();
    CHECK(!oracle_color(g, 3).feasible);
    CHECK(oracle_color(g, 4).feasible);
}

TEST_CASE("icosahedron oracle at k=4") {
    auto res = oracle_color(fixtures::icosahedron(), 4);
    CHECK(res.feasible);
    CHECK(res.nodes > 0);
}

TEST_CASE("oracle monotonicity in k") {
    for (std::uint64_t seed : {3, 4}) {
        PlaneGraph g = gen_instance({10, 1, seed, GenMode::WithQuads});
        bool prev = oracle_color(g, 4).feasible;
        for (int k = 5; k <= 7; ++k) {
            bool cur = oracle_color(g, k).feasible;
            if (prev) CHECK(cur);
            prev = cur;
        }
    }
}

TEST_CASE("oracle size guard") {
    PlaneGraph g = gen_instance({30, 0, 5, GenMode::Triangulation});
    CHECK_THROWS_AS(oracle_color(g, 5), invalid_input_error);
    CHECK(oracle_color(g, 5, 40).feasible);
}

TEST_CASE("generator base case is the tetrahedron") {
    for (std::uint64_t seed : {1, 9, 42}) {
        PlaneGraph g = gen_instance({4, 0, seed, GenMode::Triangulation});
        CHECK(g.n_vertices() == 4);
        CHECK(g.n_edges() == 6);
    }
}

TEST_CASE("generator determinism: same seed, same bytes") {
    GenSpec spec{50, 5, 1, GenMode::WithQuads};
    CHECK(to_pg_string(gen_instance(spec)) == to_pg_string(gen_instance(spec)));
    GenSpec draw{40, 3, 2, GenMode::ICDrawing};
    std::ostringstream a, b;
    write_icd(a, gen_drawing(draw));
    write_icd(b, gen_drawing(draw));
    CHECK(a.str() == b.str());
}

TEST_CASE("generator with quads places exactly the requested count") {
    PlaneGraph g = gen_instance({50, 5, 1, GenMode::WithQuads});
    REQUIRE(validate_hypotheses(g).admissible());
    int quads = 0;
    for (int f = 0; f < g.n_faces(); ++f)
        if (g.face(f).size() == 4) ++quads;
    CHECK(quads == 5);
}

TEST_CASE("generator validity over a seed sweep") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        PlaneGraph g = gen_instance({12 + (int)seed, (int)(seed % 3), seed, GenMode::WithQuads});
        CHECK(validate_hypotheses(g).admissible());
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ICDrawing d = gen_drawing({25, 2, seed, GenMode::ICDrawing});
        check_drawing(d);
    }
}

TEST_CASE("oracle and reduction colorer agree at desk scale") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 8 + (int)(seed % 5);
        PlaneGraph g = gen_instance({n, seed % 2 ? 1 : 0, seed, GenMode::WithQuads});
        CHECK(oracle_color(g, 5).feasible);
        Coloring c = color(g);
        CHECK(is_valid_cyclic_coloring(g, c));
    }
}

TEST_CASE("big-face generator") {
    PlaneGraph g = gen_with_big_faces(40, 2, 5, 3);
    REQUIRE(validate_disjoint_big_faces(g).admissible());
    int big = 0, max_face = 0;
    for (int f = 0; f < g.n_faces(); ++f) {
        max_face = std::max(max_face, g.face(f).size());
        if (g.face(f).size() >= 4) ++big;
    }
    CHECK(big == 2);
    CHECK(max_face == 5);
    auto c = color_degenerate(g);
    CHECK(c.palette_size <= 5 + 3);
}
