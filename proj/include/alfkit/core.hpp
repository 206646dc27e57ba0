#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace alfkit {

// Exact integers everywhere; transvection products and Smith reductions
// overflow 64 bits already at modest word lengths.
using Int = boost::multiprecision::cpp_int;

// Bad user input (unknown curve, wrong fiber, malformed word). CLI exit 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cross-check failure between two routes that must agree. CLI exit 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace alfkit
