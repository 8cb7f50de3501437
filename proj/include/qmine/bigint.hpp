#pragma once

#include <ios>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmine {

// Exact integer type for 256-bit targets and search-space sizes.
using BigUint = boost::multiprecision::cpp_int;

inline BigUint parse_biguint(const std::string& text) {
    // cpp_int understands both decimal and 0x-prefixed hex.
    return BigUint(text);
}

inline std::string to_hex_string(const BigUint& v) {
    return "0x" + v.str(0, std::ios_base::hex);
}

}  // namespace qmine
