#include "repwords/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace repwords {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class num = v_.get_num();
    mpz_class den = v_.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class ip = num / den;
    mpz_class rem = num % den;
    std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            mpz_class dgt = rem / den;
            rem %= den;
            out += static_cast<char>('0' + dgt.get_si());
        }
    }
    return out;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        mpq_class q(num, den);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace repwords
