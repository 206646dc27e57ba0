#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alfkit/core.hpp"
#include "alfkit/homology.hpp"
#include "alfkit/matrix.hpp"
#include "alfkit/surface.hpp"
#include "alfkit/word.hpp"

namespace alfkit {

// One critical point: a vanishing cycle with its homology class resolved on
// the fiber, plus the chirality of the twist it contributes.
struct Letter {
    std::string curve;
    int chirality = +1;
    HClass hclass;
};

// Achiral Lefschetz fibration over the disk: fiber plus ordered vanishing
// cycles. Doubled fibrations keep the bounded fiber's curve names with
// padded classes.
struct ALF {
    SurfaceFiber fiber;
    std::vector<Letter> letters;

    std::size_t critical_points() const { return letters.size(); }

    TwistWord word() const {
        TwistWord w;
        w.reserve(letters.size());
        for (const auto& l : letters) w.push_back({l.curve, l.chirality});
        return w;
    }
};

struct OpenBook {
    SurfaceFiber page;
    TwistWord monodromy;
};

// Free rank plus torsion divisibility chain of a finitely generated
// abelian group.
struct H1Report {
    int free_rank = 0;
    std::vector<Int> torsion;  // entries > 1, each dividing the next

    bool operator==(const H1Report& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

inline ALF make_alf(const SurfaceFiber& fiber, const TwistWord& word) {
    if (fiber.genus < 1) throw input_error("make_alf: genus must be at least 1");
    if (fiber.boundary_components > 1)
        throw input_error("make_alf: at most one boundary component");
    CurveSystem sys = humphreys_system(fiber);
    ALF alf;
    alf.fiber = fiber;
    for (const auto& t : word) {
        const GeneratorCurve* c = sys.find(t.curve);
        if (!c)
            throw input_error("unknown curve name '" + t.curve +
                              "' on genus " + std::to_string(fiber.genus));
        alf.letters.push_back({t.curve, t.chirality, c->hclass});
    }
    return alf;
}

// chi(Sigma) + k: one 2-handle per critical point.
inline int euler_characteristic(const ALF& alf) {
    return alf.fiber.euler_characteristic() +
           static_cast<int>(alf.critical_points());
}

namespace detail {

// cokernel of the integer matrix whose columns span the killed subgroup
inline H1Report cokernel_report(const IntMat& m) {
    SmithResult snf = smith_normal_form(m);
    H1Report rep;
    std::size_t n = m.rows() < m.cols() ? m.rows() : m.cols();
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = snf.d(i, i);
        if (d == 0) break;
        ++nonzero;
        if (d > 1) rep.torsion.push_back(d);
    }
    rep.free_rank = static_cast<int>(m.rows() - nonzero);
    return rep;
}

}  // namespace detail

// H1 of the total space: Z^{2g} modulo the letters' integer classes.
// Chirality does not matter, a class and its negative span the same
// subgroup.
inline H1Report total_space_h1(const ALF& alf) {
    const std::size_t rank = alf.fiber.h1_rank();
    IntMat m(rank, alf.letters.size());
    for (std::size_t j = 0; j < alf.letters.size(); ++j)
        for (std::size_t i = 0; i < rank; ++i)
            m(i, j) = alf.letters[j].hclass.coords[i];
    return detail::cokernel_report(m);
}

inline OpenBook boundary_open_book(const ALF& alf) {
    if (alf.fiber.boundary_components < 1)
        throw input_error("boundary_open_book: fiber must have boundary");
    return {alf.fiber, alf.word()};
}

// H1 of the open book's total 3-manifold: coker(phi_* - I) on H1 of the
// page. Restricted to one binding component.
inline H1Report open_book_h1(const OpenBook& ob) {
    if (ob.page.boundary_components != 1)
        throw input_error("open_book_h1: page must have exactly one boundary component");
    CurveSystem sys = humphreys_system(ob.page);
    IntMat m = word_action(ob.monodromy, sys) -
               IntMat::identity(ob.page.h1_rank());
    return detail::cokernel_report(m);
}

// Extend over the closed double Sigma_{2g}: same word, classes padded.
inline ALF double_alf(const ALF& alf) {
    DoubledSurface d = double_surface(alf.fiber);
    ALF out;
    out.fiber = d.fiber;
    for (const auto& l : alf.letters)
        out.letters.push_back({l.curve, l.chirality, d.inclusion(l.hclass)});
    return out;
}

}  // namespace alfkit
