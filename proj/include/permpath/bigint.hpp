#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace permpath {

/// Exact integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace permpath
