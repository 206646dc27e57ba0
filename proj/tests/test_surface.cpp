#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "alfkit/surface.hpp"
#include "test_util.hpp"

using namespace alfkit;

namespace {

HClass hc(std::initializer_list<int> v) {
    HClass h(v.size());
    std::size_t i = 0;
    for (int x : v) h.coords[i++] = x;
    return h;
}

}  // namespace

TEST_CASE("standard_surface basics") {
    SurfaceFiber f = standard_surface(2, 1);
    REQUIRE(f.euler_characteristic() == -3);
    REQUIRE(f.h1_rank() == 4);

    SurfaceFiber disk = standard_surface(0, 1);
    REQUIRE(disk.euler_characteristic() == 1);
    REQUIRE(disk.h1_rank() == 0);

    SurfaceFiber closed3 = standard_surface(3, 0);
    REQUIRE(closed3.euler_characteristic() == -4);
    REQUIRE(closed3.h1_rank() == 6);

    REQUIRE_THROWS_AS(standard_surface(-1, 0), input_error);
    // construction with m >= 2 is fine, homology rank is not
    SurfaceFiber pants = standard_surface(0, 3);
    REQUIRE(pants.euler_characteristic() == -1);
    REQUIRE_THROWS_AS(pants.h1_rank(), input_error);
}

TEST_CASE("Humphreys system for genus 2 matches the fixed homology model") {
    CurveSystem sys = humphreys_system(standard_surface(2, 1));
    REQUIRE(sys.curves.size() == 5);
    REQUIRE(sys.find("a1")->hclass == hc({1, 0, 0, 0}));
    REQUIRE(sys.find("b1")->hclass == hc({0, 1, 0, 0}));
    REQUIRE(sys.find("c1")->hclass == hc({0, 1, 0, 1}));
    REQUIRE(sys.find("a2")->hclass == hc({0, 0, 1, 0}));
    REQUIRE(sys.find("b2")->hclass == hc({0, 0, 0, 1}));

    // [b1] + [c1] = [b2] mod 2, and their pairing is even
    HClass s = sys.find("b1")->hclass + sys.find("c1")->hclass;
    REQUIRE(s.reduced_mod2() == sys.find("b2")->hclass.reduced_mod2());
    REQUIRE(intersection(sys.find("b1")->hclass, sys.find("c1")->hclass) % 2 ==
            0);
}

TEST_CASE("Humphreys system for genus 1") {
    CurveSystem sys = humphreys_system(standard_surface(1, 1));
    REQUIRE(sys.curves.size() == 2);
    REQUIRE(sys.find("a1")->hclass == hc({1, 0}));
    REQUIRE(sys.find("b1")->hclass == hc({0, 1}));
    REQUIRE(sys.find("b2") == nullptr);
    REQUIRE(sys.find("c1") == nullptr);
}

TEST_CASE("Humphreys adjacency chain") {
    CurveSystem sys = humphreys_system(standard_surface(3, 1));
    REQUIRE(sys.adjacency("b1", "a1") == 1);
    REQUIRE(sys.adjacency("a1", "c1") == 1);
    REQUIRE(sys.adjacency("c1", "a2") == 1);
    REQUIRE(sys.adjacency("a2", "c2") == 1);
    REQUIRE(sys.adjacency("c2", "a3") == 1);
    REQUIRE(sys.adjacency("b2", "a2") == 1);
    REQUIRE(sys.adjacency("b1", "c1") == 0);
    REQUIRE(sys.adjacency("b1", "b2") == 0);
    REQUIRE(sys.adjacency("a1", "a2") == 0);
}

TEST_CASE("Humphreys system rejects bad fibers") {
    REQUIRE_THROWS_AS(humphreys_system(standard_surface(0, 1)), input_error);
    REQUIRE_THROWS_AS(humphreys_system(standard_surface(2, 2)), input_error);
}

TEST_CASE("generator count, primitivity, and mod-2 adjacency for g = 1..6") {
    for (int g = 1; g <= 6; ++g) {
        CurveSystem sys = humphreys_system(standard_surface(g, 1));
        REQUIRE(sys.curves.size() == (g == 1 ? 2u : 2u * g + 1));
        for (const auto& c : sys.curves) REQUIRE(!c.hclass.is_zero());
        // symmetric, zero diagonal, and compatible with the algebraic pairing
        for (std::size_t i = 0; i < sys.curves.size(); ++i) {
            REQUIRE(sys.geometric_adjacency[i][i] == 0);
            for (std::size_t j = 0; j < sys.curves.size(); ++j) {
                REQUIRE(sys.geometric_adjacency[i][j] ==
                        sys.geometric_adjacency[j][i]);
                Int alg = intersection(sys.curves[i].hclass,
                                       sys.curves[j].hclass);
                REQUIRE((alg - sys.geometric_adjacency[i][j]) % 2 == 0);
            }
        }
    }
}

TEST_CASE("doubling pads coordinates and preserves the pairing") {
    DoubledSurface d = double_surface(standard_surface(2, 1));
    REQUIRE(d.fiber == standard_surface(4, 0));
    REQUIRE(d.inclusion(hc({0, 1, 0, 1})) == hc({0, 1, 0, 1, 0, 0, 0, 0}));

    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
        HClass x = testutil::random_class(rng, 4, -5, 5);
        HClass y = testutil::random_class(rng, 4, -5, 5);
        REQUIRE(intersection(d.inclusion(x), d.inclusion(y)) ==
                intersection(x, y));
        if (!(x == HClass(std::size_t(4))))
            REQUIRE(!d.inclusion(x).is_zero());  // injective
    }

    DoubledSurface d1 = double_surface(standard_surface(1, 1));
    REQUIRE(d1.fiber == standard_surface(2, 0));

    REQUIRE_THROWS_AS(double_surface(standard_surface(2, 0)), input_error);
    REQUIRE_THROWS_AS(double_surface(standard_surface(2, 2)), input_error);
}
