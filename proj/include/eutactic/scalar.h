#ifndef EUTACTIC_SCALAR_H
#define EUTACTIC_SCALAR_H

#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "eutactic/quad_scalar.h"

namespace eutactic {

/// Default absolute tolerance for float-backend entry comparisons.
inline constexpr double kDefaultTolerance = 1e-10;

enum class Backend { exact, floating };

std::string_view backend_name(Backend backend);
/// Accepts `exact` and `float`.
Backend parse_backend(std::string_view name);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr Backend backend = Backend::floating;
    static double from_ratio(long long p, long long q) {
        return static_cast<double>(p) / static_cast<double>(q);
    }
    static double from_exact(const QuadScalar &x) {
        return x.to_double();
    }
    static double to_double(double x) {
        return x;
    }
    static bool is_zero(double x, double tol) {
        return std::abs(x) <= tol;
    }
    static std::optional<double> sqrt(double x) {
        if (x < 0) {
            return std::nullopt;
        }
        return std::sqrt(x);
    }
    static double abs(double x) {
        return std::abs(x);
    }
};

template <>
struct ScalarTraits<QuadScalar> {
    static constexpr Backend backend = Backend::exact;
    static QuadScalar from_ratio(long long p, long long q) {
        return QuadScalar::ratio(p, q);
    }
    static QuadScalar from_exact(const QuadScalar &x) {
        return x;
    }
    static double to_double(const QuadScalar &x) {
        return x.to_double();
    }
    /// Exact comparisons ignore the tolerance.
    static bool is_zero(const QuadScalar &x, double) {
        return x.is_zero();
    }
    static std::optional<QuadScalar> sqrt(const QuadScalar &x) {
        return exact_sqrt(x);
    }
    static QuadScalar abs(const QuadScalar &x) {
        return eutactic::abs(x);
    }
};

template <class T>
concept FieldScalar = std::same_as<T, double> || std::same_as<T, QuadScalar>;

template <FieldScalar T>
inline constexpr Backend backend_of = ScalarTraits<T>::backend;

/// Shortest round-tripping scientific notation, e.g. `7.0710678118654757e-01`.
std::string format_double(double x);
double parse_double(std::string_view text);

inline std::string format_scalar(double x) {
    return format_double(x);
}
inline std::string format_scalar(const QuadScalar &x) {
    return x.str();
}
template <FieldScalar T>
T parse_scalar_as(std::string_view text);

/// A value tagged with its backend. Used where the backend is only known at run time
/// (file headers, CLI flags); typed code works on QuadScalar or double directly.
class Scalar {
   public:
    Scalar(QuadScalar x) : value_(std::move(x)) {
    }
    Scalar(double x) : value_(x) {
    }

    Backend backend() const {
        return std::holds_alternative<QuadScalar>(value_) ? Backend::exact : Backend::floating;
    }
    const QuadScalar &exact() const;
    double floating() const;
    double to_double() const;
    std::string str() const;

    static Scalar parse(std::string_view text, Backend backend);

   private:
    std::variant<QuadScalar, double> value_;
};

enum class ScalarOp { add, mul, neg, inv, eq };

/// Field arithmetic on tagged scalars. Unary ops ignore `y`. Throws BackendMismatch if the
/// operands live on different backends and DomainError on inversion of zero; `eq` uses `tol`
/// on the float backend and exact equality otherwise.
std::variant<Scalar, bool> scalar_ops(const Scalar &x, const Scalar &y, ScalarOp op, double tol = kDefaultTolerance);

}  // namespace eutactic

#endif
