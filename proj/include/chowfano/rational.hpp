#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace chowfano {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denom(r) == 1; }

// "p/q" with "/1" suppressed; this is the wire format used everywhere.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

inline std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) return std::nullopt;
        return Rat(p, q);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline long long rat_to_ll(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rat_to_ll: not an integer: " + rat_to_string(r));
    return numer(r).convert_to<long long>();
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (long long i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

}  // namespace chowfano
