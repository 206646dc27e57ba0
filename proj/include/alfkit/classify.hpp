#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alfkit/alf.hpp"
#include "alfkit/core.hpp"
#include "alfkit/spin.hpp"
#include "alfkit/surface.hpp"

namespace alfkit {

enum class D6Verdict { embeds, obstructed, unknown };

inline const char* to_string(D6Verdict v) {
    switch (v) {
        case D6Verdict::embeds: return "embeds";
        case D6Verdict::obstructed: return "obstructed";
        default: return "unknown";
    }
}

struct EmbeddingReport {
    ALF input;
    // codimension-2 target (S^2 x S^2 - D^4) x D^2: unconditional
    std::string ambient_s2s2 = "embeds";
    D6Verdict d6_verdict = D6Verdict::unknown;
    bool hyperelliptic = false;
    SpinStatus double_spin;
    std::optional<SpinWitness> witness;
    std::vector<std::string> notes;
};

// Syntactic test: every letter is a Humphreys generator other than b2.
// Monodromies are taken as presented; no word-problem semantics.
inline bool is_hyperelliptic_word(const TwistWord& word, const CurveSystem& sys) {
    for (const auto& t : word) {
        if (t.curve == "b2") return false;
        if (!sys.find(t.curve)) return false;
    }
    return true;
}

inline bool is_hyperelliptic_word(const ALF& alf) {
    CurveSystem sys = humphreys_system(alf.fiber);
    for (const auto& l : alf.letters) {
        if (l.curve == "b2") return false;
        const GeneratorCurve* c = sys.find(l.curve);
        if (!c || !(c->hclass == l.hclass)) return false;
    }
    return true;
}

inline std::vector<std::string> report_citations(D6Verdict v) {
    std::vector<std::string> notes;
    notes.push_back(
        "Theorem 1.1: every bounded-fiber achiral Lefschetz fibration admits a "
        "relative LF embedding in (S^2 x S^2 - D^4) x D^2.");
    switch (v) {
        case D6Verdict::embeds:
            notes.push_back(
                "Theorem 1.3(2): hyperelliptic monodromy gives a relative LF "
                "embedding in D^6.");
            break;
        case D6Verdict::obstructed:
            notes.push_back(
                "Theorem 1.3(1) via doubling: a proper embedding in D^6 would "
                "make the closed double embed in S^6, hence in R^6, hence spin; "
                "the double is not spin (Stipsicz criterion).");
            break;
        case D6Verdict::unknown:
            notes.push_back(
                "No theorem applies: the presentation uses b2 and the double "
                "is spin, so both Theorem 1.3(1) and 1.3(2) are silent.");
            break;
    }
    notes.push_back(
        "Corollary 1.2 (context): every closed orientable 4-manifold embeds "
        "in S^2 x S^2 x S^2.");
    return notes;
}

inline EmbeddingReport classify(const ALF& alf,
                                std::size_t brute_bound = kDefaultBruteBound) {
    if (alf.fiber.boundary_components != 1)
        throw input_error("classify: fiber must have exactly one boundary component");
    if (alf.fiber.genus < 1)
        throw input_error("classify: genus must be at least 1");

    EmbeddingReport rep;
    rep.input = alf;
    rep.hyperelliptic = is_hyperelliptic_word(alf);
    rep.double_spin = spin_status(double_alf(alf), brute_bound);

    if (rep.hyperelliptic) {
        if (!rep.double_spin.spin)
            throw internal_error(
                "hyperelliptic monodromy with non-spin double: model inconsistency");
        rep.d6_verdict = D6Verdict::embeds;
    } else if (!rep.double_spin.spin) {
        rep.d6_verdict = D6Verdict::obstructed;
        rep.witness = rep.double_spin.witness;
    } else {
        rep.d6_verdict = D6Verdict::unknown;
    }
    rep.notes = report_citations(rep.d6_verdict);
    return rep;
}

}  // namespace alfkit
