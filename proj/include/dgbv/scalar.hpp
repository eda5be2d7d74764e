#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace dgbv {

using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational re + im*sqrt(-1).  All engine arithmetic runs
/// over this field; equality is decidable and there is no rounding anywhere.
struct Scalar {
    Rational re{0};
    Rational im{0};

    Scalar() = default;
    Scalar(int v) : re(v) {}
    Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar zero() { return Scalar{}; }
    static Scalar one() { return Scalar{1}; }
    static Scalar i() { return Scalar{Rational{0}, Rational{1}}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar{re, -im}; }
    /// re^2 + im^2, a nonnegative rational; zero only for the zero scalar.
    Rational norm() const { return re * re + im * im; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rational n = b.norm();
        Scalar c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Renders "p/q", "p/q*i", "p/q+r/s*i" etc.; parse_scalar round-trips exactly.
std::string to_string(const Scalar& s);

/// Parses the exact-rational literal grammar used by model files:
///   scalar  := complex | real | imag
///   real    := rat
///   imag    := rat "*i" | "i" | "-i"
///   complex := real ("+"|"-") unsigned-imag
///   rat     := ["-"] digits ["/" digits]
/// Returns nullopt on malformed input (including zero denominators).
std::optional<Scalar> parse_scalar(const std::string& text);

}  // namespace dgbv
