#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hodge {

/// Exact integer used for every Hodge number and every derived count.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace hodge
