#include "hopfwave/gaussian_rational.hpp"

#include <ostream>

namespace hopfwave {

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return z.re.get_str();
    std::string imag = z.im.get_str() + "i";
    if (z.re == 0) return imag;
    if (z.im > 0) return z.re.get_str() + "+" + imag;
    return z.re.get_str() + imag; // minus sign carried by im
}

namespace {

// Splits "a+bi" / "a-bi" at the sign separating the two parts; the leading
// character and any sign directly after '/' belong to the current part.
bool split_complex(const std::string& s, std::string& first, std::string& second) {
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
            first = s.substr(0, k);
            second = s.substr(k);
            return true;
        }
    }
    return false;
}

Rational parse_imag_part(std::string part) {
    // part ends in 'i'; "i" and "-i" mean +/-1
    part.pop_back();
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return parse_rational(part);
}

} // namespace

GaussianRational parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("GaussianRational: empty input");

    std::string first, second;
    if (split_complex(s, first, second)) {
        if (second.back() != 'i')
            throw std::invalid_argument("GaussianRational: cannot parse '" + text + "'");
        return {parse_rational(first), parse_imag_part(second)};
    }
    if (s.back() == 'i') return {Rational(0), parse_imag_part(s)};
    return {parse_rational(s), Rational(0)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

} // namespace hopfwave
