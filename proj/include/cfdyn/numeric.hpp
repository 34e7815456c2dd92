#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "cfdyn/errors.hpp"

namespace cfdyn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using FloatComplex = std::complex<double>;

inline double to_double(const Integer& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Largest integer n with n <= r.
inline Integer rat_floor(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline Integer rat_ceil(const Rational& r) { return -rat_floor(-r); }

/// Element of Z[i] with unbounded integer parts.
struct GaussianInt {
    Integer re;
    Integer im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i = 0) : re(r), im(i) {}

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt& operator+=(const GaussianInt& o) { re += o.re; im += o.im; return *this; }
    GaussianInt& operator-=(const GaussianInt& o) { re -= o.re; im -= o.im; return *this; }
    GaussianInt& operator*=(const GaussianInt& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianInt& o) const = default;

    GaussianInt conj() const { return {re, -im}; }
    Integer norm() const { return re * re + im * im; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    FloatComplex to_complex() const { return {to_double(re), to_double(im)}; }
};

/// Element of Q(i): exact rational real and imaginary parts.
struct RationalComplex {
    Rational re;
    Rational im;

    RationalComplex() = default;
    RationalComplex(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(long r, long i = 0) : re(r), im(i) {}
    RationalComplex(const GaussianInt& g) : re(g.re), im(g.im) {}

    RationalComplex operator+(const RationalComplex& o) const { return {re + o.re, im + o.im}; }
    RationalComplex operator-(const RationalComplex& o) const { return {re - o.re, im - o.im}; }
    RationalComplex operator-() const { return {-re, -im}; }
    RationalComplex operator*(const RationalComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RationalComplex operator*(const Rational& s) const { return {re * s, im * s}; }

    bool operator==(const RationalComplex& o) const = default;

    RationalComplex conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    RationalComplex inverse() const {
        if (is_zero()) throw DivisionByZero(0);
        Rational n = norm();
        return {re / n, -im / n};
    }
    RationalComplex operator/(const RationalComplex& o) const { return *this * o.inverse(); }

    bool is_gaussian_integer() const { return rat_den(re) == 1 && rat_den(im) == 1; }
    GaussianInt to_gaussian() const {
        if (!is_gaussian_integer()) throw Error("not a Gaussian integer: " + to_string());
        return {rat_num(re), rat_num(im)};
    }

    FloatComplex to_complex() const { return {to_double(re), to_double(im)}; }

    std::string to_string() const;
};

std::string format_rational(const Rational& r);
std::string format_gaussian(const GaussianInt& g);
std::string format_rational_complex(const RationalComplex& z);
std::string format_float_complex(const FloatComplex& z);

inline std::string RationalComplex::to_string() const { return format_rational_complex(*this); }

/// Result of parsing an `a+bi` literal. Fraction and integer literals are
/// exact (Q(i) carrier); literals with a decimal point are binary64.
struct ParsedComplex {
    bool exact = false;
    RationalComplex value_exact;
    FloatComplex value_float;
};

ParsedComplex parse_complex_literal(const std::string& text);
GaussianInt parse_gaussian(const std::string& text);

} // namespace cfdyn
