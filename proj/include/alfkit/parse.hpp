#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "alfkit/core.hpp"
#include "alfkit/word.hpp"

namespace alfkit {

// Letter with its source location, for error reporting.
struct ParsedLetter {
    Twist twist;
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct ParsedWord {
    std::vector<ParsedLetter> letters;

    TwistWord word() const {
        TwistWord w;
        w.reserve(letters.size());
        for (const auto& l : letters) w.push_back(l.twist);
        return w;
    }
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what, std::size_t begin,
                                    std::size_t end) {
    throw input_error(what + " at " + std::to_string(begin) + ".." +
                      std::to_string(end));
}

}  // namespace detail

// Grammar (tokens separated by whitespace):
//   word     := "id" | letter+
//   letter   := curve exponent?
//   curve    := ("a" | "b" | "c") digits
//   exponent := "^" "-"? digits
// Exponent n expands to |n| copies with chirality sign(n); 0 is an error.
inline ParsedWord parse_word(const std::string& text) {
    ParsedWord out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool saw_token = false, saw_id = false;
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= n) break;
        std::size_t begin = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t end = i;
        std::string tok = text.substr(begin, end - begin);
        saw_token = true;

        if (tok == "id") {
            saw_id = true;
            continue;
        }

        std::size_t p = 0;
        if (p >= tok.size() ||
            (tok[p] != 'a' && tok[p] != 'b' && tok[p] != 'c'))
            detail::parse_fail("malformed token '" + tok + "'", begin, end);
        std::size_t name_start = p++;
        if (p >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[p])))
            detail::parse_fail("malformed token '" + tok + "'", begin, end);
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p])))
            ++p;
        std::string name = tok.substr(name_start, p - name_start);

        long exponent = 1;
        if (p < tok.size()) {
            if (tok[p] != '^')
                detail::parse_fail("malformed token '" + tok + "'", begin, end);
            ++p;
            bool neg = false;
            if (p < tok.size() && tok[p] == '-') {
                neg = true;
                ++p;
            }
            if (p >= tok.size() ||
                !std::isdigit(static_cast<unsigned char>(tok[p])))
                detail::parse_fail("malformed exponent in '" + tok + "'", begin, end);
            exponent = 0;
            for (; p < tok.size(); ++p) {
                if (!std::isdigit(static_cast<unsigned char>(tok[p])))
                    detail::parse_fail("malformed exponent in '" + tok + "'",
                                       begin, end);
                exponent = exponent * 10 + (tok[p] - '0');
                if (exponent > 1000000)
                    detail::parse_fail("exponent too large in '" + tok + "'",
                                       begin, end);
            }
            if (exponent == 0)
                detail::parse_fail("exponent 0 in '" + tok + "'", begin, end);
            if (neg) exponent = -exponent;
        }

        int chirality = exponent > 0 ? +1 : -1;
        for (long r = 0; r < (exponent > 0 ? exponent : -exponent); ++r)
            out.letters.push_back({{name, chirality}, begin, end});
    }
    if (!saw_token) throw input_error("empty word (use \"id\" for the identity)");
    if (saw_id && !out.letters.empty())
        throw input_error("'id' cannot be mixed with letters");
    return out;
}

}  // namespace alfkit
