#pragma once

#include <cstddef>
#include <vector>

#include "alfkit/core.hpp"
#include "alfkit/matrix.hpp"

namespace alfkit {

// Class in H1 of a fiber, integer coordinates in the fixed symplectic basis
// (alpha_1, beta_1, alpha_2, beta_2, ...). Length is 2g.
struct HClass {
    std::vector<Int> coords;

    HClass() = default;
    explicit HClass(std::vector<Int> c) : coords(std::move(c)) {}
    explicit HClass(std::size_t rank) : coords(rank) {}

    std::size_t rank() const { return coords.size(); }

    bool operator==(const HClass& o) const { return coords == o.coords; }

    bool is_zero() const {
        for (const auto& x : coords)
            if (x != 0) return false;
        return true;
    }

    bool is_zero_mod2() const {
        for (const auto& x : coords)
            if (x % 2 != 0) return false;
        return true;
    }

    HClass reduced_mod2() const {
        HClass r(rank());
        for (std::size_t i = 0; i < rank(); ++i)
            r.coords[i] = (coords[i] % 2 + 2) % 2;
        return r;
    }

    HClass operator+(const HClass& o) const {
        HClass r(*this);
        for (std::size_t i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
        return r;
    }
};

// Standard skew form, 2x2 blocks [[0,1],[-1,0]]: <alpha_i, beta_i> = +1.
inline IntMat intersection_form(std::size_t rank) {
    IntMat j(rank, rank);
    for (std::size_t i = 0; i + 1 < rank; i += 2) {
        j(i, i + 1) = 1;
        j(i + 1, i) = -1;
    }
    return j;
}

// Algebraic intersection number x^T J y.
inline Int intersection(const HClass& x, const HClass& y) {
    if (x.rank() != y.rank())
        throw input_error("intersection: classes on different fibers");
    Int s = 0;
    for (std::size_t i = 0; i + 1 < x.rank(); i += 2)
        s += x.coords[i] * y.coords[i + 1] - x.coords[i + 1] * y.coords[i];
    return s;
}

inline bool intersection_mod2(const HClass& x, const HClass& y) {
    return intersection(x, y) % 2 != 0;
}

// Picard-Lefschetz transvection: x -> x + chirality * <x,c> * c.
inline HClass twist_action(const HClass& curve, int chirality,
                           const HClass& x) {
    if (curve.rank() != x.rank())
        throw input_error("twist_action: classes on different fibers");
    Int coef = chirality * intersection(x, curve);
    HClass r = x;
    for (std::size_t i = 0; i < r.rank(); ++i)
        r.coords[i] += coef * curve.coords[i];
    return r;
}

// Matrix of the transvection above: I - chirality * c c^T J.
inline IntMat transvection_matrix(const HClass& curve, int chirality) {
    const std::size_t n = curve.rank();
    IntMat j = intersection_form(n);
    IntMat t = IntMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Int jk = 0;
            for (std::size_t l = 0; l < n; ++l)
                jk += curve.coords[l] * j(l, k);
            t(i, k) -= chirality * curve.coords[i] * jk;
        }
    return t;
}

}  // namespace alfkit
