#include "dgbv/scalar.hpp"

#include <cctype>

namespace dgbv {

namespace {

std::string rat_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

// Parses ["-"] digits ["/" digits] starting at pos; advances pos.
std::optional<Rational> parse_rat(const std::string& t, size_t& pos) {
    size_t p = pos;
    bool neg = false;
    if (p < t.size() && (t[p] == '-' || t[p] == '+')) {
        neg = t[p] == '-';
        ++p;
    }
    size_t d0 = p;
    while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
    if (p == d0) return std::nullopt;
    boost::multiprecision::cpp_int num(t.substr(d0, p - d0));
    boost::multiprecision::cpp_int den = 1;
    if (p < t.size() && t[p] == '/') {
        ++p;
        size_t e0 = p;
        while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
        if (p == e0) return std::nullopt;
        den = boost::multiprecision::cpp_int(t.substr(e0, p - e0));
        if (den == 0) return std::nullopt;
    }
    pos = p;
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace

std::string to_string(const Scalar& s) {
    if (s.im == 0) return rat_str(s.re);
    std::string imag = s.im == 1    ? "i"
                       : s.im == -1 ? "-i"
                                    : rat_str(s.im) + "*i";
    if (s.re == 0) return imag;
    if (s.im > 0 && imag[0] != '-') return rat_str(s.re) + "+" + imag;
    return rat_str(s.re) + imag;
}

std::optional<Scalar> parse_scalar(const std::string& text) {
    size_t pos = 0;
    // bare "i" / "-i" / "+i"
    auto imag_unit = [&](size_t p) -> bool {
        return p + 1 == text.size() && text[p] == 'i';
    };
    if (text == "i") return Scalar::i();
    if (text == "-i") return -Scalar::i();

    auto first = parse_rat(text, pos);
    if (!first) return std::nullopt;
    if (pos == text.size()) return Scalar{*first};
    if (text.compare(pos, 2, "*i") == 0 && pos + 2 == text.size())
        return Scalar{Rational{0}, *first};
    // complex: rat (+|-) (rat "*i" | "i")
    if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
    bool neg = text[pos] == '-';
    size_t p2 = pos + 1;
    if (imag_unit(p2)) {
        Rational im = neg ? Rational{-1} : Rational{1};
        return Scalar{*first, im};
    }
    auto second = parse_rat(text, p2);
    if (!second || *second < 0) return std::nullopt;
    if (text.compare(p2, 2, "*i") != 0 || p2 + 2 != text.size()) return std::nullopt;
    Rational im = neg ? Rational(-*second) : *second;
    return Scalar{*first, im};
}

}  // namespace dgbv
