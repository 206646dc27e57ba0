#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "alfkit/core.hpp"
#include "alfkit/homology.hpp"
#include "alfkit/matrix.hpp"
#include "alfkit/surface.hpp"

namespace alfkit {

struct Twist {
    std::string curve;
    int chirality = +1;  // +1 ordinary, -1 achiral

    bool operator==(const Twist& o) const {
        return curve == o.curve && chirality == o.chirality;
    }
};

// Leftmost letter acts first.
using TwistWord = std::vector<Twist>;

inline std::string format_word(const TwistWord& w) {
    if (w.empty()) return "id";
    std::string out;
    for (const auto& t : w) {
        if (!out.empty()) out += ' ';
        out += t.curve;
        if (t.chirality < 0) out += "^-1";
    }
    return out;
}

// Induced map on H1 as a matrix; leftmost letter applied first, so the
// composite is T_k * ... * T_1.
inline IntMat word_action(const TwistWord& word, const CurveSystem& sys) {
    IntMat m = IntMat::identity(sys.fiber.h1_rank());
    for (const auto& t : word) {
        const GeneratorCurve* c = sys.find(t.curve);
        if (!c) throw input_error("unknown curve name '" + t.curve + "'");
        m = transvection_matrix(c->hclass, t.chirality) * m;
    }
    return m;
}

namespace detail {

// mod-2 class as a bitmask in basis order; rank <= 64
inline std::uint64_t mod2_mask(const HClass& h) {
    if (h.rank() > 64) throw input_error("mod-2 search limited to rank 64");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < h.rank(); ++i)
        if (h.coords[i] % 2 != 0) m |= std::uint64_t(1) << i;
    return m;
}

inline bool pairing_mod2(std::uint64_t x, std::uint64_t y) {
    // <x,y> mod 2 = popcount(x & swap_adjacent_bits(y)) mod 2
    std::uint64_t even = y & 0x5555555555555555ull;
    std::uint64_t swapped = (even << 1) | ((y >> 1) & 0x5555555555555555ull);
    return __builtin_popcountll(x & swapped) & 1;
}

inline std::uint64_t transvect_mod2(std::uint64_t c, std::uint64_t x) {
    return pairing_mod2(x, c) ? x ^ c : x;
}

}  // namespace detail

// Shortest word in the system's generators whose mod-2 action sends v into
// span(alpha_1..alpha_g) (all beta coordinates zero). Breadth-first search
// over the 2^{2g} mod-2 classes; ties resolved by generating words in
// (curve index, +1 before -1) order, which mod 2 means all-positive words.
inline TwistWord clean_class(const HClass& v, const CurveSystem& sys,
                             int max_len = 16) {
    const std::size_t rank = sys.fiber.h1_rank();
    std::uint64_t beta_mask = 0;
    for (std::size_t i = 1; i < rank; i += 2) beta_mask |= std::uint64_t(1) << i;

    const std::uint64_t start = detail::mod2_mask(v);
    if ((start & beta_mask) == 0) return {};  // already clean (incl. v = 0)

    std::vector<std::uint64_t> gen;
    gen.reserve(sys.curves.size());
    for (const auto& c : sys.curves) gen.push_back(detail::mod2_mask(c.hclass));

    // parent pointers over the 2^{2g} state space
    const std::size_t nstates = std::size_t(1) << rank;
    std::vector<std::int32_t> prev_state(nstates, -1);
    std::vector<std::int32_t> prev_gen(nstates, -1);
    std::vector<std::int32_t> depth(nstates, -1);

    std::queue<std::uint64_t> q;
    q.push(start);
    depth[start] = 0;
    while (!q.empty()) {
        std::uint64_t s = q.front();
        q.pop();
        if (depth[s] >= max_len)
            throw input_error("clean_class: search bound exceeded");
        for (std::size_t gi = 0; gi < gen.size(); ++gi) {
            std::uint64_t t = detail::transvect_mod2(gen[gi], s);
            if (depth[t] != -1) continue;
            depth[t] = depth[s] + 1;
            prev_state[t] = static_cast<std::int32_t>(s);
            prev_gen[t] = static_cast<std::int32_t>(gi);
            if ((t & beta_mask) == 0) {
                TwistWord w;
                for (std::uint64_t cur = t; cur != start;
                     cur = static_cast<std::uint64_t>(prev_state[cur]))
                    w.push_back({sys.curves[prev_gen[cur]].name, +1});
                std::reverse(w.begin(), w.end());
                return w;
            }
            q.push(t);
        }
    }
    throw input_error("clean_class: target unreachable");
}

}  // namespace alfkit
