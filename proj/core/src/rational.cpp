#include "hopfgate/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace hopfgate {

namespace {

// Accept a unicode minus sign so patterns copied from typeset sources parse.
std::string normalize_minus(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() + 1 && (unsigned char)s[i] == 0xE2 && i + 2 < s.size() &&
            (unsigned char)s[i + 1] == 0x88 && (unsigned char)s[i + 2] == 0x92) {
            out += '-';
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

} // namespace

Rational rational_from_string(const std::string& raw) {
    std::string s = normalize_minus(raw);
    // trim whitespace
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty rational literal");
    s = s.substr(a, b - a + 1);
    if (!s.empty() && s[0] == '+') s = s.substr(1);

    size_t dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("mixed decimal and fraction: " + raw);
        bool neg = !s.empty() && s[0] == '-';
        std::string digits = (neg ? s.substr(1) : s);
        size_t d = digits.find('.');
        std::string ip = digits.substr(0, d);
        std::string fp = digits.substr(d + 1);
        if (ip.empty() && fp.empty()) throw std::invalid_argument("bad decimal: " + raw);
        for (char c : ip + fp)
            if (!isdigit((unsigned char)c)) throw std::invalid_argument("bad decimal: " + raw);
        mpz_class num(ip.empty() ? "0" : ip);
        mpz_class den(1);
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rational q(num, den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }

    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + raw);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational rationalize(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize non-finite value");
    const double scale = 1048576.0; // 2^20
    double v = std::round(x * scale);
    Rational q{mpz_class(v), mpz_class(scale)};
    q.canonicalize();
    return q;
}

} // namespace hopfgate
