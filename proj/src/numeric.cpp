#include "cfdyn/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace cfdyn {

std::string format_rational(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

namespace {

// Shared a+bi assembly: re/im rendered by `fmt`, zero tests by `is_zero`.
template <typename Part, typename Fmt, typename IsZero, typename IsNeg>
std::string format_parts(const Part& re, const Part& im, Fmt fmt, IsZero is_zero, IsNeg is_neg) {
    if (is_zero(im)) return fmt(re);
    std::string imag = fmt(im);
    if (imag == "1") imag.clear();
    else if (imag == "-1") imag = "-";
    if (is_zero(re)) return imag + "i";
    return fmt(re) + (is_neg(im) ? "" : "+") + imag + "i";
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

std::string format_gaussian(const GaussianInt& g) {
    return format_parts(g.re, g.im,
                        [](const Integer& x) { return x.str(); },
                        [](const Integer& x) { return x == 0; },
                        [](const Integer& x) { return x < 0; });
}

std::string format_rational_complex(const RationalComplex& z) {
    return format_parts(z.re, z.im, format_rational,
                        [](const Rational& x) { return x == 0; },
                        [](const Rational& x) { return x < 0; });
}

std::string format_float_complex(const FloatComplex& z) {
    return format_parts(z.real(), z.imag(), format_double,
                        [](double x) { return x == 0.0; },
                        [](double x) { return x < 0.0; });
}

namespace {

struct NumberToken {
    bool is_float = false;
    Rational exact;
    double value = 0.0;
    bool negative = false;
};

// number := [sign] (digits[.digits] | digits/digits | .digits)
// Returns position after the token.
size_t parse_number(const std::string& s, size_t pos, NumberToken& out, bool allow_empty_mag) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        out.negative = (s[pos] == '-');
        ++pos;
    }
    size_t mag_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == mag_start + 1) throw ParseError("bare '.' in complex literal: '" + s + "'");
        out.is_float = true;
        out.value = std::strtod(s.substr(start, pos - start).c_str(), nullptr);
        return pos;
    }
    if (pos == mag_start) {
        if (allow_empty_mag) {
            // bare "i" / "+i" / "-i"
            out.exact = out.negative ? Rational(-1) : Rational(1);
            out.value = out.negative ? -1.0 : 1.0;
            return pos;
        }
        throw ParseError("expected a number at position " + std::to_string(start) +
                         " in '" + s + "'");
    }
    if (pos < s.size() && s[pos] == '/') {
        size_t den_start = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start) throw ParseError("missing denominator in '" + s + "'");
        Integer num(s.substr(mag_start, den_start - 1 - mag_start));
        Integer den(s.substr(den_start, pos - den_start));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        out.exact = Rational(num, den);
        if (out.negative) out.exact = -out.exact;
        out.value = to_double(out.exact);
        return pos;
    }
    Integer num(s.substr(mag_start, pos - mag_start));
    out.exact = Rational(num);
    if (out.negative) out.exact = -out.exact;
    out.value = to_double(out.exact);
    return pos;
}

} // namespace

ParsedComplex parse_complex_literal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty complex literal");

    ParsedComplex result;
    std::vector<std::pair<NumberToken, bool>> terms; // (number, has_i)

    size_t pos = 0;
    while (pos < s.size()) {
        NumberToken tok;
        // A magnitude may be omitted only directly before 'i'.
        bool next_is_i_only = false;
        {
            size_t look = pos;
            if (look < s.size() && (s[look] == '+' || s[look] == '-')) ++look;
            next_is_i_only = (look < s.size() && s[look] == 'i');
        }
        pos = parse_number(s, pos, tok, next_is_i_only);
        bool has_i = false;
        if (pos < s.size() && s[pos] == 'i') {
            has_i = true;
            ++pos;
        }
        terms.emplace_back(tok, has_i);
        if (terms.size() > 2) throw ParseError("too many terms in complex literal '" + text + "'");
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw ParseError(std::string("unexpected token '") + s[pos] + "' in '" + text + "'");
    }
    if (terms.empty()) throw ParseError("empty complex literal");
    if (terms.size() == 2 && terms[0].second == terms[1].second)
        throw ParseError("duplicate real or imaginary part in '" + text + "'");

    bool any_float = false;
    Rational re(0), im(0);
    double fre = 0.0, fim = 0.0;
    for (auto& [tok, has_i] : terms) {
        any_float |= tok.is_float;
        if (has_i) {
            im += tok.exact;
            fim += tok.value;
        } else {
            re += tok.exact;
            fre += tok.value;
        }
    }
    result.exact = !any_float;
    result.value_float = {fre, fim};
    if (result.exact) {
        result.value_exact = {re, im};
        result.value_float = result.value_exact.to_complex();
    }
    return result;
}

GaussianInt parse_gaussian(const std::string& text) {
    ParsedComplex p = parse_complex_literal(text);
    if (!p.exact || !p.value_exact.is_gaussian_integer())
        throw ParseError("not a Gaussian integer literal: '" + text + "'");
    return p.value_exact.to_gaussian();
}

} // namespace cfdyn
