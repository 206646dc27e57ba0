#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "alfkit/core.hpp"
#include "alfkit/homology.hpp"

namespace alfkit {

// Standard fiber Sigma_{g,m}. Homology operations require m <= 1; fibers
// with more boundary components can be represented but not worked on.
struct SurfaceFiber {
    int genus = 0;
    int boundary_components = 0;

    int euler_characteristic() const {
        return 2 - 2 * genus - boundary_components;
    }

    // 2g, valid only for m <= 1
    std::size_t h1_rank() const {
        if (boundary_components > 1)
            throw input_error(
                "homology operations require at most one boundary component");
        return 2 * static_cast<std::size_t>(genus);
    }

    bool operator==(const SurfaceFiber& o) const {
        return genus == o.genus && boundary_components == o.boundary_components;
    }
};

inline SurfaceFiber standard_surface(int g, int m) {
    if (g < 0 || m < 0) throw input_error("standard_surface: negative g or m");
    return SurfaceFiber{g, m};
}

struct GeneratorCurve {
    std::string name;  // a1..ag, b1, b2, c1..c(g-1)
    HClass hclass;
};

// The Humphreys configuration on Sigma_{g,<=1} with its fixed homology
// model and geometric adjacency.
struct CurveSystem {
    SurfaceFiber fiber;
    std::vector<GeneratorCurve> curves;
    // geometric intersection counts, indexed like `curves`
    std::vector<std::vector<int>> geometric_adjacency;

    const GeneratorCurve* find(const std::string& name) const {
        for (const auto& c : curves)
            if (c.name == name) return &c;
        return nullptr;
    }

    int adjacency(const std::string& x, const std::string& y) const {
        std::size_t ix = index_of(x), iy = index_of(y);
        return geometric_adjacency[ix][iy];
    }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (curves[i].name == name) return i;
        throw input_error("unknown curve name '" + name + "'");
    }
};

// Homology model: [a_i] = alpha_i, [b_1] = beta_1, [b_2] = beta_2,
// [c_i] = beta_i + beta_{i+1}. Adjacency is the chain
// b1-a1-c1-a2-c2-...-a_g plus b2-a2, consecutive pairs meeting once.
inline CurveSystem humphreys_system(const SurfaceFiber& fiber) {
    const int g = fiber.genus;
    if (g < 1) throw input_error("humphreys_system: genus must be at least 1");
    if (fiber.boundary_components > 1)
        throw input_error("humphreys_system: at most one boundary component");

    const std::size_t rank = fiber.h1_rank();
    auto basis = [&](std::size_t i) {
        HClass h(rank);
        h.coords[i] = 1;
        return h;
    };
    auto alpha = [&](int i) { return basis(2 * (i - 1)); };
    auto beta = [&](int i) { return basis(2 * (i - 1) + 1); };

    CurveSystem sys;
    sys.fiber = fiber;
    for (int i = 1; i <= g; ++i)
        sys.curves.push_back({"a" + std::to_string(i), alpha(i)});
    sys.curves.push_back({"b1", beta(1)});
    if (g >= 2) {
        sys.curves.push_back({"b2", beta(2)});
        for (int i = 1; i <= g - 1; ++i)
            sys.curves.push_back(
                {"c" + std::to_string(i), beta(i) + beta(i + 1)});
    }

    const std::size_t n = sys.curves.size();
    sys.geometric_adjacency.assign(n, std::vector<int>(n, 0));
    auto meet_once = [&](const std::string& x, const std::string& y) {
        std::size_t ix = sys.index_of(x), iy = sys.index_of(y);
        sys.geometric_adjacency[ix][iy] = 1;
        sys.geometric_adjacency[iy][ix] = 1;
    };
    meet_once("b1", "a1");
    for (int i = 1; i <= g - 1; ++i) {
        meet_once("a" + std::to_string(i), "c" + std::to_string(i));
        meet_once("c" + std::to_string(i), "a" + std::to_string(i + 1));
    }
    if (g >= 2) meet_once("b2", "a2");
    return sys;
}

// Doubling Sigma_{g,1} -> Sigma_{2g,0}. Homology includes by padding with
// 2g zero coordinates; the symplectic form is block diagonal, so pairings
// are preserved.
struct DoubledSurface {
    SurfaceFiber fiber;  // Sigma_{2g,0}
    std::function<HClass(const HClass&)> inclusion;
};

inline DoubledSurface double_surface(const SurfaceFiber& fiber) {
    if (fiber.boundary_components != 1)
        throw input_error("double_surface: fiber must have one boundary component");
    if (fiber.genus < 1)
        throw input_error("double_surface: genus must be at least 1");
    const std::size_t rank = fiber.h1_rank();
    SurfaceFiber closed{2 * fiber.genus, 0};
    auto incl = [rank](const HClass& x) {
        if (x.rank() != rank)
            throw input_error("double_surface inclusion: rank mismatch");
        HClass y(2 * rank);
        for (std::size_t i = 0; i < rank; ++i) y.coords[i] = x.coords[i];
        return y;
    };
    return {closed, incl};
}

}  // namespace alfkit
