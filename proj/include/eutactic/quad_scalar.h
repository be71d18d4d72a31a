#ifndef EUTACTIC_QUAD_SCALAR_H
#define EUTACTIC_QUAD_SCALAR_H

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace eutactic {

using Rational = boost::multiprecision::cpp_rational;

/// An exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Both components are arbitrary-precision rationals kept in lowest terms with a
/// positive denominator. Since sqrt(2) is irrational, a + b*sqrt(2) == 0 iff a == b == 0,
/// so equality and ordering are decided exactly.
class QuadScalar {
   public:
    QuadScalar() = default;
    QuadScalar(int a) : a_(a) {
    }
    QuadScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    }

    static QuadScalar sqrt2() {
        return QuadScalar(0, 1);
    }
    /// p/q as a rational element.
    static QuadScalar ratio(long long p, long long q);

    const Rational &rational_part() const {
        return a_;
    }
    const Rational &sqrt2_part() const {
        return b_;
    }

    bool is_zero() const {
        return a_ == 0 && b_ == 0;
    }
    /// -1, 0 or +1; decided exactly.
    int sign() const;
    /// a - b*sqrt(2).
    QuadScalar conjugate() const {
        return QuadScalar(a_, -b_);
    }
    /// Field norm a^2 - 2 b^2 (product with the conjugate).
    Rational norm() const {
        return a_ * a_ - 2 * b_ * b_;
    }
    /// Throws DomainError on zero.
    QuadScalar inverse() const;
    double to_double() const;

    /// Canonical text form: `0`, `p/q`, `p/q*s2`, `p/q + r/s*s2` or `p/q - r/s*s2`.
    std::string str() const;
    /// Parses the canonical grammar, tolerating extra whitespace and a leading `+`.
    static QuadScalar parse(std::string_view text);

    QuadScalar operator-() const {
        return QuadScalar(-a_, -b_);
    }
    QuadScalar &operator+=(const QuadScalar &o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadScalar &operator-=(const QuadScalar &o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadScalar &operator*=(const QuadScalar &o);
    QuadScalar &operator/=(const QuadScalar &o) {
        return *this *= o.inverse();
    }

    friend QuadScalar operator+(QuadScalar x, const QuadScalar &y) {
        return x += y;
    }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar &y) {
        return x -= y;
    }
    friend QuadScalar operator*(QuadScalar x, const QuadScalar &y) {
        return x *= y;
    }
    friend QuadScalar operator/(QuadScalar x, const QuadScalar &y) {
        return x /= y;
    }
    friend bool operator==(const QuadScalar &x, const QuadScalar &y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QuadScalar &x, const QuadScalar &y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

   private:
    Rational a_;
    Rational b_;
};

QuadScalar abs(const QuadScalar &x);

/// Square root inside Q(sqrt 2), if it exists there. Negative input yields nullopt.
std::optional<QuadScalar> exact_sqrt(const QuadScalar &x);

/// Square root of a non-negative rational, if it is rational.
std::optional<Rational> rational_sqrt(const Rational &x);

std::ostream &operator<<(std::ostream &out, const QuadScalar &x);

}  // namespace eutactic

#endif
