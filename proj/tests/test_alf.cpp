#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "alfkit/alf.hpp"
#include "test_util.hpp"

using namespace alfkit;

namespace {

ALF alf_of(int g, int m, const TwistWord& w) {
    return make_alf(standard_surface(g, m), w);
}

}  // namespace

TEST_CASE("make_alf validates the word against the fiber") {
    ALF a = alf_of(2, 1, {{"b1", +1}, {"c1", +1}, {"b2", +1}});
    REQUIRE(a.critical_points() == 3);

    ALF trivial = alf_of(2, 1, {});
    REQUIRE(trivial.critical_points() == 0);

    REQUIRE_THROWS_AS(alf_of(1, 1, {{"b2", +1}}), input_error);
    REQUIRE_THROWS_AS(alf_of(1, 1, {{"c1", +1}}), input_error);
    REQUIRE_THROWS_AS(alf_of(2, 1, {{"a3", +1}}), input_error);
}

TEST_CASE("euler characteristic counts handles") {
    REQUIRE(euler_characteristic(alf_of(2, 1, {{"b1", 1}, {"c1", 1}, {"b2", 1}})) == 0);
    REQUIRE(euler_characteristic(alf_of(3, 1, {})) == -5);
    REQUIRE(euler_characteristic(alf_of(1, 1, {{"a1", 1}, {"a1", 1}})) == 1);
}

TEST_CASE("total space H1 kills the letters' classes") {
    H1Report empty = total_space_h1(alf_of(2, 1, {}));
    REQUIRE(empty == H1Report{4, {}});

    H1Report v0 = total_space_h1(alf_of(2, 1, {{"b1", 1}, {"c1", 1}, {"b2", 1}}));
    REQUIRE(v0 == H1Report{2, {}});

    H1Report rep = total_space_h1(alf_of(1, 1, {{"a1", 1}, {"a1", 1}}));
    REQUIRE(rep == H1Report{1, {}});
}

TEST_CASE("total space H1 ignores letter order and chirality") {
    std::mt19937 rng(21);
    for (int it = 0; it < 50; ++it) {
        TwistWord w = testutil::random_word(rng, 3, 8);
        ALF a = alf_of(3, 1, w);
        H1Report base = total_space_h1(a);

        ALF shuffled = a;
        std::shuffle(shuffled.letters.begin(), shuffled.letters.end(), rng);
        REQUIRE(total_space_h1(shuffled) == base);

        ALF flipped = a;
        for (auto& l : flipped.letters) l.chirality = -l.chirality;
        REQUIRE(total_space_h1(flipped) == base);
    }
}

TEST_CASE("boundary open book keeps page and word") {
    ALF a = alf_of(2, 1, {{"b1", 1}, {"c1", 1}, {"b2", 1}});
    OpenBook ob = boundary_open_book(a);
    REQUIRE(ob.page == a.fiber);
    REQUIRE(ob.monodromy == a.word());

    ALF closed = double_alf(alf_of(1, 1, {}));
    REQUIRE_THROWS_AS(boundary_open_book(closed), input_error);
}

TEST_CASE("open book H1 examples") {
    for (int g = 1; g <= 5; ++g) {
        H1Report rep = open_book_h1({standard_surface(g, 1), {}});
        REQUIRE(rep == H1Report{2 * g, {}});
    }

    H1Report one = open_book_h1({standard_surface(1, 1), {{"a1", 1}}});
    REQUIRE(one == H1Report{1, {}});

    // (tau_a tau_b)^3 acts by -I on H1, so the cokernel of phi_* - I is
    // (Z/2)^2
    TwistWord six = {{"a1", 1}, {"b1", 1}, {"a1", 1},
                     {"b1", 1}, {"a1", 1}, {"b1", 1}};
    H1Report torsion = open_book_h1({standard_surface(1, 1), six});
    REQUIRE(torsion == H1Report{0, {2, 2}});

    REQUIRE_THROWS_AS(open_book_h1({standard_surface(1, 0), {}}), input_error);
}

TEST_CASE("open book H1 is invariant under conjugation") {
    std::mt19937 rng(22);
    for (int it = 0; it < 40; ++it) {
        TwistWord w = testutil::random_word(rng, 2, 8);
        TwistWord g = testutil::random_word(rng, 2, 1);
        if (g.empty()) g = {{"a1", 1}};
        TwistWord conj;
        conj.push_back({g[0].curve, -g[0].chirality});
        conj.insert(conj.end(), w.begin(), w.end());
        conj.push_back(g[0]);
        REQUIRE(open_book_h1({standard_surface(2, 1), conj}) ==
                open_book_h1({standard_surface(2, 1), w}));
    }
}

TEST_CASE("doubling an ALF pads classes and preserves structure") {
    ALF a = alf_of(2, 1, {{"b1", 1}, {"c1", 1}, {"b2", 1}});
    ALF d = double_alf(a);
    REQUIRE(d.fiber == standard_surface(4, 0));
    REQUIRE(d.critical_points() == 3);
    REQUIRE(d.letters[0].hclass.coords ==
            std::vector<Int>{0, 1, 0, 0, 0, 0, 0, 0});
    REQUIRE(d.letters[1].hclass.coords ==
            std::vector<Int>{0, 1, 0, 1, 0, 0, 0, 0});
    REQUIRE(d.letters[2].hclass.coords ==
            std::vector<Int>{0, 0, 0, 1, 0, 0, 0, 0});
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(d.letters[i].chirality == a.letters[i].chirality);
        for (std::size_t j = 0; j < 3; ++j)
            REQUIRE(intersection(d.letters[i].hclass, d.letters[j].hclass) ==
                    intersection(a.letters[i].hclass, a.letters[j].hclass));
    }

    ALF d1 = double_alf(alf_of(1, 1, {}));
    REQUIRE(d1.fiber == standard_surface(2, 0));
    REQUIRE(d1.critical_points() == 0);

    REQUIRE_THROWS_AS(double_alf(d1), input_error);
}
