#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "dsc/errors.hpp"

namespace dsc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// Stirling number of the second kind S(n, k): partitions of an n-set into
/// k non-empty blocks.  S(n,k) = k*S(n-1,k) + S(n-1,k-1).
inline Integer stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (n == 0) return 1; // S(0,0) = 1
    if (k == 0) return 0;
    std::vector<Integer> row(k + 1, 0);
    row[0] = 1; // row for n = 0
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] = Integer(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Integer& n) { return n.convert_to<double>(); }

inline std::string to_string(const Integer& n) { return n.str(); }

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/// Parses "p" or "p/q" with optional leading minus signs on either part.
inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { throw invalid_input_error("malformed rational '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
        Integer p{std::string(s.substr(0, slash))};
        Integer q{std::string(s.substr(slash + 1))};
        if (q == 0) bad();
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0); // unreachable
}

} // namespace dsc
