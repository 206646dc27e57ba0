#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "alfkit/spin.hpp"
#include "test_util.hpp"

using namespace alfkit;

namespace {

HClass hc(std::vector<int> v) {
    HClass h(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) h.coords[i] = v[i];
    return h;
}

ALF doubled_v0(int g) {
    TwistWord w = {{"b1", 1}, {"c1", 1}, {"b2", 1}};
    return double_alf(make_alf(standard_surface(g, 1), w));
}

ALF closed_alf(int g, std::vector<HClass> classes) {
    ALF a;
    a.fiber = standard_surface(g, 0);
    int i = 0;
    for (auto& c : classes)
        a.letters.push_back({"x" + std::to_string(i++), +1, std::move(c)});
    return a;
}

}  // namespace

TEST_CASE("stipsicz parity") {
    ALF d = doubled_v0(2);
    // S = {b1, c1}: two elements, pairing 0 -> parity 0
    REQUIRE(stipsicz_parity({0, 1}, d.letters) == 0);
    REQUIRE(stipsicz_parity({}, d.letters) == 0);
    REQUIRE_THROWS_AS(stipsicz_parity({0, 0}, d.letters), input_error);

    // one null-homologous letter: parity 1
    ALF sep = closed_alf(1, {hc({0, 0})});
    REQUIRE(stipsicz_parity({0}, sep.letters) == 1);
}

TEST_CASE("brute force on the doubled b1 c1 b2 word") {
    SpinStatus s = not_spin_bruteforce(doubled_v0(2));
    REQUIRE(!s.spin);
    REQUIRE(s.witness.has_value());
    REQUIRE(s.witness->subset == std::vector<std::size_t>{0, 1});
    REQUIRE(s.witness->target == 2);
    REQUIRE(witness_valid(*s.witness, doubled_v0(2).letters));
}

TEST_CASE("a separating vanishing cycle forces non-spin") {
    for (int g : {1, 2, 3}) {
        ALF a = closed_alf(g, {hc(std::vector<int>(2 * g, 0))});
        SpinStatus s = not_spin_bruteforce(a);
        REQUIRE(!s.spin);
        REQUIRE(s.witness->subset.empty());
        REQUIRE(s.witness->target == 0);
    }
}

TEST_CASE("two copies of beta_2 on the closed genus-4 fiber are spin") {
    HClass beta2(std::size_t(8));
    beta2.coords[3] = 1;
    ALF a = closed_alf(4, {beta2, beta2});
    REQUIRE(not_spin_bruteforce(a).spin);
    REQUIRE(not_spin_linear(a).spin);
}

TEST_CASE("brute force rejects bounded fibers and oversize words") {
    ALF bounded = make_alf(standard_surface(2, 1), {{"b1", 1}});
    REQUIRE_THROWS_AS(not_spin_bruteforce(bounded), input_error);
    REQUIRE_THROWS_AS(not_spin_linear(bounded), input_error);

    std::vector<HClass> many(25, hc({1, 0}));
    REQUIRE_THROWS_AS(not_spin_bruteforce(closed_alf(1, many)), input_error);
}

TEST_CASE("linear method matches on the worked examples") {
    SpinStatus s = not_spin_linear(doubled_v0(2));
    REQUIRE(!s.spin);
    REQUIRE(s.witness.has_value());
    REQUIRE(witness_valid(*s.witness, doubled_v0(2).letters));

    REQUIRE(not_spin_linear(closed_alf(2, {})).spin);  // empty word
}

TEST_CASE("oracle equivalence on random instances") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 500) {
        std::uniform_int_distribution<int> gd(1, 3);
        ALF a = testutil::random_closed_alf(rng, gd(rng), 12);
        SpinStatus brute = not_spin_bruteforce(a);
        SpinStatus lin = not_spin_linear(a);
        REQUIRE(brute.spin == lin.spin);
        if (!brute.spin) {
            REQUIRE(witness_valid(*brute.witness, a.letters));
            REQUIRE(witness_valid(*lin.witness, a.letters));
        }
        ++done;
    }
}

TEST_CASE("duplicating a letter never turns non-spin into spin") {
    std::mt19937 rng(32);
    for (int it = 0; it < 200; ++it) {
        ALF a = testutil::random_closed_alf(rng, 2, 8);
        if (a.letters.empty()) continue;
        bool before = spin_status(a).spin;
        a.letters.push_back(a.letters[0]);
        bool after = spin_status(a).spin;
        if (!before) REQUIRE(!after);
    }
}

TEST_CASE("verdict is invariant under permutation and chirality flips") {
    std::mt19937 rng(33);
    for (int it = 0; it < 100; ++it) {
        ALF a = testutil::random_closed_alf(rng, 2, 8);
        bool base = spin_status(a).spin;

        ALF shuffled = a;
        std::shuffle(shuffled.letters.begin(), shuffled.letters.end(), rng);
        REQUIRE(spin_status(shuffled).spin == base);

        ALF flipped = a;
        for (auto& l : flipped.letters) l.chirality = -l.chirality;
        REQUIRE(spin_status(flipped).spin == base);
    }
}

TEST_CASE("spin_status method dispatch") {
    SpinStatus both = spin_status(doubled_v0(2));
    REQUIRE(both.method == SpinMethod::both);
    REQUIRE(!both.spin);

    REQUIRE(spin_status(closed_alf(1, {})).spin);

    std::mt19937 rng(34);
    ALF big;
    big.fiber = standard_surface(3, 0);
    for (int i = 0; i < 25; ++i)
        big.letters.push_back(
            {"x" + std::to_string(i), 1, testutil::random_class(rng, 6, 0, 1)});
    SpinStatus lin_only = spin_status(big);
    REQUIRE(lin_only.method == SpinMethod::linear);
}
