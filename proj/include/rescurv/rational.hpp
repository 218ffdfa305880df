#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rescurv {

/// Arbitrary-precision rational. All exact computations run on this type.
using Rational = mpq_class;

enum class Backend { exact, floating };

std::string_view to_string(Backend b);
Backend parse_backend(std::string_view s);

/// Parses "p/q", an integer, or a decimal with optional exponent ("0.25",
/// "-1.5e-3") into an exact rational. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// GMP leaves p/q as given when built from two integers; arithmetic and
/// equality assume lowest terms.
inline Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}
inline double canonical(double x) { return x; }

double to_double(const Rational& q);
inline double to_double(double x) { return x; }

/// Shortest round-trip decimal for doubles.
std::string to_string(double x);

/// Lets templated code convert a rational input (edge resistance, bound
/// parameter) to the working scalar.
template <class T>
T from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }

template <>
inline double from_rational<double>(const Rational& q) { return q.get_d(); }

} // namespace rescurv
