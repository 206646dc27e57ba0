// Command-line front end: classify, spin, invariants, action, clean, batch.
// Exit 0 on success, 1 on input error, 2 on internal cross-check failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "alfkit/alfkit.hpp"

namespace {

using namespace alfkit;

ALF alf_from_flags(int genus, const std::string& word_text, int boundary) {
    ParsedWord pw = parse_word(word_text);
    return make_alf(standard_surface(genus, boundary), pw.word());
}

int run_classify(int genus, const std::string& word, bool as_json) {
    EmbeddingReport rep = classify(alf_from_flags(genus, word, 1),
                                   brute_bound_from_env());
    std::cout << report_render(rep, as_json);
    if (as_json) std::cout << "\n";
    return 0;
}

int run_spin(int genus, const std::string& word, bool doubled) {
    ALF alf;
    if (doubled)
        alf = double_alf(alf_from_flags(genus, word, 1));
    else
        alf = alf_from_flags(genus, word, 0);
    SpinStatus s = spin_status(alf, brute_bound_from_env());
    std::cout << to_json(s).dump() << "\n";
    return 0;
}

int run_invariants(int genus, const std::string& word) {
    ALF alf = alf_from_flags(genus, word, 1);
    ojson j;
    j["euler"] = euler_characteristic(alf);
    j["total_space_h1"] = to_json(total_space_h1(alf));
    j["boundary_open_book_h1"] = to_json(open_book_h1(boundary_open_book(alf)));
    std::cout << j.dump() << "\n";
    return 0;
}

int run_action(int genus, const std::string& word) {
    ALF alf = alf_from_flags(genus, word, 1);
    CurveSystem sys = humphreys_system(alf.fiber);
    ojson j;
    j["matrix"] = to_json(word_action(alf.word(), sys));
    std::cout << j.dump() << "\n";
    return 0;
}

int run_clean(int genus, const std::string& csv) {
    SurfaceFiber fiber = standard_surface(genus, 1);
    CurveSystem sys = humphreys_system(fiber);
    HClass v(fiber.h1_rank());
    std::stringstream ss(csv);
    std::string item;
    std::size_t idx = 0;
    while (std::getline(ss, item, ',')) {
        if (idx >= v.rank()) throw input_error("class vector too long");
        try {
            v.coords[idx++] = Int(item);
        } catch (const std::exception&) {
            throw input_error("bad coordinate '" + item + "'");
        }
    }
    if (idx != v.rank())
        throw input_error("class vector must have " + std::to_string(v.rank()) +
                          " coordinates");
    TwistWord w = clean_class(v, sys);
    ojson j;
    j["word"] = format_word(w);
    std::cout << j.dump() << "\n";
    return 0;
}

std::string process_batch_line(const std::string& line, std::size_t bound) {
    try {
        ojson in = ojson::parse(line);
        ALF alf = alf_from_json(in);
        return report_to_json(classify(alf, bound)).dump();
    } catch (const internal_error&) {
        throw;  // a cross-check failure aborts the batch: it is a bug
    } catch (const std::exception& e) {
        ojson err;
        err["error"] = e.what();
        return err.dump();
    }
}

int run_batch(const std::string& path, int jobs) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open batch file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    const std::size_t bound = brute_bound_from_env();
    std::vector<std::string> out(lines.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            out[i] = process_batch_line(lines[i], bound);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < lines.size(); i += jobs)
                        out[i] = process_batch_line(lines[i], bound);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (const auto& o : out) std::cout << o << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"achiral Lefschetz fibration toolkit"};
    app.require_subcommand(1);

    int genus = 1;
    std::string word, csv, path;
    bool as_json = false, spin_double = false, spin_closed = false;
    int jobs = 1;

    auto* c_classify = app.add_subcommand(
        "classify", "embeddability report for LF(Sigma_{g,1}, word)");
    c_classify->add_option("--genus", genus)->required();
    c_classify->add_option("--word", word)->required();
    c_classify->add_flag("--json", as_json);

    auto* c_spin = app.add_subcommand(
        "spin", "Stipsicz spin verdict for a closed-fiber fibration");
    c_spin->add_option("--genus", genus)->required();
    c_spin->add_option("--word", word)->required();
    c_spin->add_flag("--double", spin_double,
                     "double LF(Sigma_{g,1}, word) first");
    c_spin->add_flag("--closed", spin_closed,
                     "word is over the closed fiber Sigma_{g,0}");

    auto* c_inv = app.add_subcommand(
        "invariants", "Euler characteristic and H1 reports over Sigma_{g,1}");
    c_inv->add_option("--genus", genus)->required();
    c_inv->add_option("--word", word)->required();

    auto* c_action = app.add_subcommand("action", "homology action matrix");
    c_action->add_option("--genus", genus)->required();
    c_action->add_option("--word", word)->required();

    auto* c_clean = app.add_subcommand(
        "clean", "word moving a mod-2 class into span(alpha)");
    c_clean->add_option("--genus", genus)->required();
    c_clean->add_option("--class", csv, "comma-separated 2g coordinates")
        ->required();

    auto* c_batch =
        app.add_subcommand("batch", "classify ALF JSON objects, one per line");
    c_batch->add_option("--file", path)->required();
    c_batch->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
        if (c_classify->parsed()) return run_classify(genus, word, as_json);
        if (c_spin->parsed()) {
            if (spin_double == spin_closed)
                throw alfkit::input_error(
                    "spin needs exactly one of --double or --closed");
            return run_spin(genus, word, spin_double);
        }
        if (c_inv->parsed()) return run_invariants(genus, word);
        if (c_action->parsed()) return run_action(genus, word);
        if (c_clean->parsed()) return run_clean(genus, csv);
        if (c_batch->parsed()) return run_batch(path, jobs);
        return 1;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const alfkit::internal_error& e) {
        std::cerr << "error: internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
