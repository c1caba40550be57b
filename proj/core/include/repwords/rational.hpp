#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace repwords {

// Exact rational. Always reduced, denominator > 0. No floating point:
// geometry compares and maps these values exactly.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                // NOLINT: implicit by design
    Rational(long n, long d);                  // d != 0, any sign
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);   // o != 0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // canonical "num/den" form, e.g. "5/1", "-31/6"
    std::string str() const;
    // exact decimal with `digits` places, round-toward-zero (for SVG coordinates)
    std::string decimal(int digits) const;
    static Rational parse(const std::string& s);  // "num/den" or "num"

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace repwords
