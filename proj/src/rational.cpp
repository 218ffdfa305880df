#include "rescurv/rational.hpp"

#include "rescurv/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace rescurv {

std::string_view to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend parse_backend(std::string_view s) {
    if (s == "exact") return Backend::exact;
    if (s == "float" || s == "floating" || s == "double") return Backend::floating;
    throw Error(ErrorCode::ParseError, "unknown backend '" + std::string(s) + "'");
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

Rational parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) bad(whole);
    mpz_class z(std::string(s), 10);
    return Rational(neg ? mpz_class(-z) : z);
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Rational num = parse_integer(s.substr(0, slash), text);
        Rational den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) bad(text);
        Rational q = num / den;
        q.canonicalize();
        return q;
    }

    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        if (!es.empty() && es[0] == '+') es.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), exponent);
        if (ec != std::errc() || ptr != es.data() + es.size()) bad(text);
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad(text);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(text);
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) bad(text);
        digits = std::string(s);
    }
    if (exponent > 4096 || exponent < -4096) bad(text);

    mpz_class mant(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(mant, scale) : Rational(mant * scale);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

} // namespace rescurv
