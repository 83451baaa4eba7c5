#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "motives/errors.hpp"

namespace motives {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. boost::multiprecision::cpp_rational keeps every
/// value canonical (positive denominator, coprime numerator/denominator)
/// after each operation, which is the invariant the whole engine relies on.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// n/d with the sign moved onto the numerator (cpp_rational requires a
/// positive denominator in its two-argument constructor).
inline Rational make_rational(Integer n, Integer d) {
    if (d == 0) throw SingularMatrix("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(std::move(n), std::move(d));
}

inline Rational frac(long long n, long long d) { return make_rational(Integer(n), Integer(d)); }

/// Canonical text form: "p/q" in lowest terms, plain "p" for integers.
inline std::string to_string(const Rational& x) {
    Integer n = numerator_of(x);
    Integer d = denominator_of(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

namespace detail {

inline bool canonical_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-') {
        if (s.size() == 1) return false;
        i = 1;
    }
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    // no leading zeros, no "-0"
    if (s[i] == '0' && s.size() > i + 1) return false;
    if (s[0] == '-' && s.size() == 2 && s[1] == '0') return false;
    return true;
}

}  // namespace detail

/// Strict parse of the canonical form. Rejects "+", leading zeros,
/// zero denominators and fractions not in lowest terms, so that
/// serialization round-trips are byte-identical.
inline Rational parse_rational(std::string_view s, const std::string& where = "rational") {
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (den.find('/') != std::string_view::npos)
            throw ParseError("malformed rational '" + std::string(s) + "'", where);
    }
    if (!detail::canonical_integer_text(num))
        throw ParseError("malformed rational '" + std::string(s) + "'", where);
    if (den.empty()) return Rational(Integer(std::string(num)));
    if (!detail::canonical_integer_text(den) || den[0] == '-')
        throw ParseError("malformed rational '" + std::string(s) + "'", where);
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'", where);
    if (d == 1) throw ParseError("non-canonical denominator 1 in '" + std::string(s) + "'", where);
    if (gcd(abs(n), d) != 1)
        throw ParseError("'" + std::string(s) + "' is not in lowest terms", where);
    return Rational(n, d);
}

/// Canonical-form guard used by property tests.
inline bool is_canonical(const Rational& x) {
    return denominator_of(x) > 0 && gcd(abs(numerator_of(x)), denominator_of(x)) == 1;
}

}  // namespace motives
