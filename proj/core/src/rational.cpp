#include "latorus/rational.hpp"

#include <cctype>
#include <ostream>

namespace latorus {

void Rational::set_ll(long long n) {
    v_ = mpq_class(mpz_class(std::to_string(n)));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw ParseError("rational: empty string");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw ParseError("rational: bad character in '" + std::string(text) + "'");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("rational: cannot parse '" + std::string(text) + "'");
    if (v.get_den() == 0) throw ConstraintViolation("rational: zero denominator in '" + std::string(text) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ConstraintViolation("rational: 0 raised to negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long long mag =
        invert ? (static_cast<unsigned long long>(-(e + 1)) + 1ULL) : static_cast<unsigned long long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(mag));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(mag));
    mpq_class r(num, den);
    r.canonicalize();
    Rational out(std::move(r));
    return invert ? out.inverse() : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace latorus
