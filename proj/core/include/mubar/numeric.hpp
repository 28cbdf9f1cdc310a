#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace mubar {

/// Exact integer type for Magnus coefficients and gcd arithmetic.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline std::optional<std::int64_t> to_int64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    return v.convert_to<std::int64_t>();
}

inline std::string to_string(const Int& v) { return v.str(); }

} // namespace mubar
