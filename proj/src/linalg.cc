#include "eutactic/linalg.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace eutactic {

Angle Angle::quarter_turns(int k) {
    int r = ((k % 8) + 8) % 8;
    if (r > 4) {
        r -= 8;
    }
    Angle a;
    a.quarter_ = r;
    a.radians_ = r * std::numbers::pi / 4;
    return a;
}

double Angle::to_radians() const {
    return radians_;
}

Angle Angle::operator-() const {
    if (quarter_) {
        return quarter_turns(-*quarter_);
    }
    return radians(-radians_);
}

namespace {

// (cos, sin) of k*pi/4 as coefficients of {1, sqrt2/2}: entry = unit * (sqrt2/2 if diagonal).
struct QuarterEntry {
    int cos_sign;
    int sin_sign;
    bool diagonal;
};

QuarterEntry quarter_entry(int k) {
    switch (((k % 8) + 8) % 8) {
        case 0:
            return {1, 0, false};
        case 1:
            return {1, 1, true};
        case 2:
            return {0, 1, false};
        case 3:
            return {-1, 1, true};
        case 4:
            return {-1, 0, false};
        case 5:
            return {-1, -1, true};
        case 6:
            return {0, -1, false};
        default:
            return {1, -1, true};
    }
}

}  // namespace

template <>
std::pair<double, double> Angle::cos_sin<double>() const {
    if (quarter_) {
        QuarterEntry e = quarter_entry(*quarter_);
        double unit = e.diagonal ? std::numbers::sqrt2 / 2 : 1.0;
        return {e.cos_sign * unit, e.sin_sign * unit};
    }
    return {std::cos(radians_), std::sin(radians_)};
}

template <>
std::pair<QuadScalar, QuadScalar> Angle::cos_sin<QuadScalar>() const {
    if (!quarter_) {
        if (radians_ == 0) {
            return {QuadScalar(1), QuadScalar(0)};
        }
        throw NotRepresentable("angle " + format_double(radians_) +
                               " rad is not a multiple of pi/4");
    }
    QuarterEntry e = quarter_entry(*quarter_);
    QuadScalar unit = e.diagonal ? QuadScalar(0, Rational(1, 2)) : QuadScalar(1);
    return {QuadScalar(e.cos_sign) * unit, QuadScalar(e.sin_sign) * unit};
}

std::string Angle::str() const {
    if (quarter_) {
        return std::to_string(2 * *quarter_) + "/8*pi";
    }
    return format_double(radians_);
}

Angle Angle::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    constexpr std::string_view suffix = "/8*pi";
    if (text.size() > suffix.size() && text.ends_with(suffix)) {
        std::string_view num = text.substr(0, text.size() - suffix.size());
        int k = 0;
        auto result = std::from_chars(num.data(), num.data() + num.size(), k);
        if (result.ec != std::errc() || result.ptr != num.data() + num.size()) {
            throw ParseError("malformed angle '" + std::string(text) + "'", 1, 1);
        }
        if (k % 2 == 0) {
            return quarter_turns(k / 2);
        }
        return radians(k * std::numbers::pi / 8);
    }
    return radians(parse_double(text));
}

std::vector<double> symmetric_eigenvalues(const Matrix<double> &input, double off_diagonal_tol) {
    if (!input.is_symmetric(0)) {
        throw DomainError("eigenvalues requested for a non-symmetric " + input.shape() + " matrix");
    }
    Matrix<double> a = input;
    const std::size_t n = a.rows();
    const double scale = std::max(1.0, frobenius_norm(a));
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                if (p != q) {
                    off += a(p, q) * a(p, q);
                }
            }
        }
        if (std::sqrt(off) < off_diagonal_tol * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1 / (2 * theta);
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                }
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
            }
        }
    }

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) {
        eigenvalues[i] = a(i, i);
    }
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

double trace_norm_sym(const Matrix<double> &a) {
    double sum = 0;
    for (double lambda : symmetric_eigenvalues(a)) {
        sum += std::abs(lambda);
    }
    return sum;
}

}  // namespace eutactic
