#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "alfkit/alf.hpp"
#include "alfkit/classify.hpp"
#include "alfkit/core.hpp"
#include "alfkit/matrix.hpp"
#include "alfkit/spin.hpp"

namespace alfkit {

// Fixed key order everywhere so identical inputs produce byte-identical
// output.
using ojson = nlohmann::ordered_json;

inline std::int64_t to_i64(const Int& x) {
    if (x < std::numeric_limits<std::int64_t>::min() ||
        x > std::numeric_limits<std::int64_t>::max())
        throw input_error("integer too large for JSON output");
    return x.convert_to<std::int64_t>();
}

inline ojson to_json(const IntMat& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_i64(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline ojson to_json(const HClass& h) {
    ojson a = ojson::array();
    for (const auto& x : h.coords) a.push_back(to_i64(x));
    return a;
}

inline ojson to_json(const H1Report& r) {
    ojson j;
    j["free_rank"] = r.free_rank;
    ojson t = ojson::array();
    for (const auto& d : r.torsion) t.push_back(to_i64(d));
    j["torsion"] = t;
    return j;
}

inline ojson word_to_json(const TwistWord& w) {
    ojson a = ojson::array();
    for (const auto& t : w)
        a.push_back(ojson{{"curve", t.curve}, {"chirality", t.chirality}});
    return a;
}

inline ojson alf_to_json(const ALF& alf) {
    ojson j;
    j["genus"] = alf.fiber.genus;
    j["boundary"] = alf.fiber.boundary_components;
    j["word"] = word_to_json(alf.word());
    return j;
}

inline TwistWord word_from_json(const ojson& a) {
    if (!a.is_array()) throw input_error("word must be a JSON array");
    TwistWord w;
    for (const auto& e : a) {
        if (!e.is_object() || !e.contains("curve") || !e.contains("chirality"))
            throw input_error("word letters need \"curve\" and \"chirality\"");
        int chi = e["chirality"].get<int>();
        if (chi != 1 && chi != -1)
            throw input_error("chirality must be +1 or -1");
        w.push_back({e["curve"].get<std::string>(), chi});
    }
    return w;
}

inline ALF alf_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("boundary") ||
        !j.contains("word"))
        throw input_error("ALF object needs \"genus\", \"boundary\", \"word\"");
    SurfaceFiber fiber =
        standard_surface(j["genus"].get<int>(), j["boundary"].get<int>());
    return make_alf(fiber, word_from_json(j["word"]));
}

inline const char* to_string(SpinMethod m) {
    switch (m) {
        case SpinMethod::brute: return "brute";
        case SpinMethod::linear: return "linear";
        default: return "both";
    }
}

inline SpinMethod spin_method_from_string(const std::string& s) {
    if (s == "brute") return SpinMethod::brute;
    if (s == "linear") return SpinMethod::linear;
    if (s == "both") return SpinMethod::both;
    throw input_error("unknown spin method '" + s + "'");
}

inline ojson to_json(const SpinWitness& w) {
    ojson j;
    ojson s = ojson::array();
    for (auto i : w.subset) s.push_back(i);
    j["subset"] = s;
    j["target"] = w.target;
    return j;
}

inline ojson to_json(const SpinStatus& s) {
    ojson j;
    j["spin"] = s.spin;
    j["witness"] = s.witness ? to_json(*s.witness) : ojson(nullptr);
    j["method"] = to_string(s.method);
    return j;
}

inline SpinStatus spin_status_from_json(const ojson& j) {
    SpinStatus s;
    s.spin = j.at("spin").get<bool>();
    if (!j.at("witness").is_null()) {
        SpinWitness w;
        for (const auto& e : j["witness"].at("subset"))
            w.subset.push_back(e.get<std::size_t>());
        w.target = j["witness"].at("target").get<std::size_t>();
        s.witness = w;
    }
    s.method = spin_method_from_string(j.at("method").get<std::string>());
    return s;
}

inline ojson report_to_json(const EmbeddingReport& r) {
    ojson j;
    j["input"] = alf_to_json(r.input);
    j["s2s2xd2"] = r.ambient_s2s2;
    j["d6"] = to_string(r.d6_verdict);
    j["hyperelliptic"] = r.hyperelliptic;
    j["double_spin"] = to_json(r.double_spin);
    j["witness"] = r.witness ? to_json(*r.witness) : ojson(nullptr);
    j["citations"] = r.notes;
    return j;
}

inline D6Verdict d6_from_string(const std::string& s) {
    if (s == "embeds") return D6Verdict::embeds;
    if (s == "obstructed") return D6Verdict::obstructed;
    if (s == "unknown") return D6Verdict::unknown;
    throw input_error("unknown d6 verdict '" + s + "'");
}

inline EmbeddingReport report_from_json(const ojson& j) {
    EmbeddingReport r;
    r.input = alf_from_json(j.at("input"));
    r.ambient_s2s2 = j.at("s2s2xd2").get<std::string>();
    r.d6_verdict = d6_from_string(j.at("d6").get<std::string>());
    r.hyperelliptic = j.at("hyperelliptic").get<bool>();
    r.double_spin = spin_status_from_json(j.at("double_spin"));
    if (!j.at("witness").is_null()) {
        SpinWitness w;
        for (const auto& e : j["witness"].at("subset"))
            w.subset.push_back(e.get<std::size_t>());
        w.target = j["witness"].at("target").get<std::size_t>();
        r.witness = w;
    }
    r.notes = j.at("citations").get<std::vector<std::string>>();
    return r;
}

inline std::string report_to_text(const EmbeddingReport& r) {
    std::string out;
    out += "fibration: genus " + std::to_string(r.input.fiber.genus) +
           ", boundary " + std::to_string(r.input.fiber.boundary_components) +
           ", word " + format_word(r.input.word()) + "\n";
    out += "(S^2 x S^2 - D^4) x D^2: " + r.ambient_s2s2 + "\n";
    out += std::string("D^6: ") + to_string(r.d6_verdict) + "\n";
    out += std::string("hyperelliptic: ") + (r.hyperelliptic ? "yes" : "no") + "\n";
    out += std::string("double spin: ") + (r.double_spin.spin ? "yes" : "no") + "\n";
    if (r.witness) {
        out += "witness: S = {";
        for (std::size_t i = 0; i < r.witness->subset.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(r.witness->subset[i]);
        }
        out += "}, target = " + std::to_string(r.witness->target) + "\n";
    }
    for (const auto& n : r.notes) out += "note: " + n + "\n";
    return out;
}

// render/parse pair used by the CLI and by round-trip tests
inline std::string report_render(const EmbeddingReport& r, bool as_json) {
    return as_json ? report_to_json(r).dump() : report_to_text(r);
}

}  // namespace alfkit
