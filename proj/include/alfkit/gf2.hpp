#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alfkit/core.hpp"

namespace alfkit {

// Bit vector over GF(2), packed into 64-bit words.
class Gf2Vec {
  public:
    Gf2Vec() : n_(0) {}
    explicit Gf2Vec(std::size_t n) : n_(n), w_((n + 63) / 64) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    Gf2Vec& operator^=(const Gf2Vec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    bool is_zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool operator==(const Gf2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

    // parity of the AND with another vector
    bool dot(const Gf2Vec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return __builtin_popcountll(acc) & 1;
    }

    std::size_t lowest_set() const {  // n_ if zero
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + __builtin_ctzll(w_[k]);
        return n_;
    }

  private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

// Either a solution of Ax = b, or a set of row indices whose rows sum to
// zero while their right-hand sides sum to one.
struct Gf2Solve {
    std::optional<Gf2Vec> solution;
    std::optional<std::vector<std::size_t>> certificate;
};

inline Gf2Solve gf2_solve(std::vector<Gf2Vec> rows, std::vector<bool> rhs,
                          std::size_t ncols) {
    const std::size_t nrows = rows.size();
    if (rhs.size() != nrows) throw input_error("gf2_solve: rhs size mismatch");

    // combo[i] tracks which original rows were xor-ed into rows[i]
    std::vector<Gf2Vec> combo(nrows, Gf2Vec(nrows));
    for (std::size_t i = 0; i < nrows; ++i) combo[i].set(i, true);

    std::vector<std::size_t> pivot_row(ncols, nrows);
    std::size_t next = 0;
    for (std::size_t col = 0; col < ncols && next < nrows; ++col) {
        std::size_t p = next;
        while (p < nrows && !rows[p].get(col)) ++p;
        if (p == nrows) continue;
        std::swap(rows[p], rows[next]);
        std::swap(combo[p], combo[next]);
        std::swap(rhs[p], rhs[next]);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == next || !rows[i].get(col)) continue;
            rows[i] ^= rows[next];
            combo[i] ^= combo[next];
            rhs[i] = rhs[i] ^ rhs[next];
        }
        pivot_row[col] = next;
        ++next;
    }

    for (std::size_t i = next; i < nrows; ++i) {
        if (rhs[i]) {
            std::vector<std::size_t> cert;
            for (std::size_t j = 0; j < nrows; ++j)
                if (combo[i].get(j)) cert.push_back(j);
            return {std::nullopt, cert};
        }
    }

    Gf2Vec x(ncols);
    for (std::size_t col = 0; col < ncols; ++col)
        if (pivot_row[col] < nrows && rhs[pivot_row[col]]) x.set(col, true);
    return {x, std::nullopt};
}

}  // namespace alfkit
