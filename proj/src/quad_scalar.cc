#include "eutactic/quad_scalar.h"

#include <cctype>
#include <cmath>
#include <sstream>

#include "eutactic/errors.h"

namespace eutactic {

namespace {

using boost::multiprecision::cpp_int;

int rational_sign(const Rational &r) {
    return r < 0 ? -1 : (r > 0 ? 1 : 0);
}

std::optional<cpp_int> integer_sqrt(const cpp_int &n) {
    if (n < 0) {
        return std::nullopt;
    }
    cpp_int root = boost::multiprecision::sqrt(n);
    if (root * root != n) {
        return std::nullopt;
    }
    return root;
}

std::string rational_str(const Rational &r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) {
        out << '/' << denominator(r);
    }
    return out.str();
}

class TermReader {
   public:
    explicit TermReader(std::string_view text) : text_(text) {
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void advance() {
        ++pos_;
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(what + " in scalar '" + std::string(text_) + "'", 1, pos_ + 1);
    }

    cpp_int digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return cpp_int(std::string(text_.substr(start, pos_ - start)));
    }

    /// One term `[sign] p[/q][*s2]` or `[sign] s2`; sets `is_sqrt2` when the term carries s2.
    Rational term(bool allow_sign, bool &is_sqrt2) {
        int sign = 1;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            sign = peek() == '-' ? -1 : 1;
            advance();
        }
        is_sqrt2 = false;
        char c = peek();
        if (c == 's') {
            expect_s2();
            is_sqrt2 = true;
            return Rational(sign);
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            fail("expected a number");
        }
        cpp_int num = digits();
        cpp_int den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            advance();
            den = digits();
            if (den == 0) {
                fail("zero denominator");
            }
        }
        if (peek() == '*') {
            advance();
            skip_space();
            expect_s2();
            is_sqrt2 = true;
        }
        return Rational(num, den) * sign;
    }

   private:
    void expect_s2() {
        if (text_.substr(pos_, 2) != "s2") {
            fail("expected 's2'");
        }
        pos_ += 2;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

QuadScalar QuadScalar::ratio(long long p, long long q) {
    if (q == 0) {
        throw DomainError("zero denominator");
    }
    return QuadScalar(Rational(p, q));
}

int QuadScalar::sign() const {
    int sa = rational_sign(a_);
    int sb = rational_sign(b_);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: the component with the larger square dominates.
    Rational a2 = a_ * a_;
    Rational b2 = 2 * b_ * b_;
    return a2 > b2 ? sa : sb;
}

QuadScalar &QuadScalar::operator*=(const QuadScalar &o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    Rational n = norm();
    return QuadScalar(a_ / n, -b_ / n);
}

double QuadScalar::to_double() const {
    double a = a_.convert_to<double>();
    double b = b_.convert_to<double>();
    if (rational_sign(a_) * rational_sign(b_) < 0) {
        // a + b*sqrt2 = (a^2 - 2b^2) / (a - b*sqrt2) avoids cancellation.
        return norm().convert_to<double>() / (a - b * std::sqrt(2.0));
    }
    return a + b * std::sqrt(2.0);
}

std::string QuadScalar::str() const {
    if (b_ == 0) {
        return rational_str(a_);
    }
    if (a_ == 0) {
        return rational_str(b_) + "*s2";
    }
    if (b_ < 0) {
        return rational_str(a_) + " - " + rational_str(-b_) + "*s2";
    }
    return rational_str(a_) + " + " + rational_str(b_) + "*s2";
}

QuadScalar QuadScalar::parse(std::string_view text) {
    TermReader reader(text);
    bool first_s2 = false;
    Rational first = reader.term(true, first_s2);
    if (reader.at_end()) {
        return first_s2 ? QuadScalar(0, first) : QuadScalar(first);
    }
    char op = reader.peek();
    if (op != '+' && op != '-') {
        reader.fail("expected '+' or '-'");
    }
    if (first_s2) {
        reader.fail("the s2 term must come second");
    }
    reader.advance();
    bool second_s2 = false;
    Rational second = reader.term(false, second_s2);
    if (!second_s2) {
        reader.fail("second term must carry s2");
    }
    if (!reader.at_end()) {
        reader.fail("trailing characters");
    }
    return QuadScalar(first, op == '-' ? Rational(-second) : second);
}

QuadScalar abs(const QuadScalar &x) {
    return x.sign() < 0 ? -x : x;
}

std::optional<Rational> rational_sqrt(const Rational &x) {
    if (x < 0) {
        return std::nullopt;
    }
    auto n = integer_sqrt(numerator(x));
    auto d = integer_sqrt(denominator(x));
    if (!n || !d) {
        return std::nullopt;
    }
    return Rational(*n, *d);
}

std::optional<QuadScalar> exact_sqrt(const QuadScalar &x) {
    if (x.sign() < 0) {
        return std::nullopt;
    }
    if (x.is_zero()) {
        return QuadScalar();
    }
    const Rational &a = x.rational_part();
    const Rational &b = x.sqrt2_part();
    if (b == 0) {
        if (auto r = rational_sqrt(a)) {
            return QuadScalar(*r);
        }
        if (auto r = rational_sqrt(a / 2)) {
            return QuadScalar(0, *r);
        }
        return std::nullopt;
    }
    // (c + d*sqrt2)^2 = a + b*sqrt2  <=>  c^2 + 2 d^2 = a, 2 c d = b.
    auto t = rational_sqrt(x.norm());
    if (!t) {
        return std::nullopt;
    }
    for (const Rational &c2 : {Rational((a + *t) / 2), Rational((a - *t) / 2)}) {
        auto c = rational_sqrt(c2);
        if (!c || *c == 0) {
            continue;
        }
        QuadScalar root(*c, b / (2 * *c));
        if (root.sign() < 0) {
            root = -root;
        }
        if (root * root == x) {
            return root;
        }
    }
    return std::nullopt;
}

std::ostream &operator<<(std::ostream &out, const QuadScalar &x) {
    return out << x.str();
}

}  // namespace eutactic
