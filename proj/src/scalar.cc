#include "eutactic/scalar.h"

#include <charconv>

#include "eutactic/errors.h"

namespace eutactic {

std::string_view backend_name(Backend backend) {
    return backend == Backend::exact ? "exact" : "float";
}

Backend parse_backend(std::string_view name) {
    if (name == "exact") {
        return Backend::exact;
    }
    if (name == "float") {
        return Backend::floating;
    }
    throw DomainError("unknown backend '" + std::string(name) + "' (expected exact or float)");
}

std::string format_double(double x) {
    if (x == 0) {
        x = 0;  // drop the sign of negative zero
    }
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific);
    return std::string(buf, result.ptr);
}

double parse_double(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0;
    auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size() || text.empty()) {
        std::size_t column = static_cast<std::size_t>(result.ptr - text.data()) + 1;
        throw ParseError("malformed float '" + std::string(text) + "'", 1, column);
    }
    return value;
}

template <>
double parse_scalar_as<double>(std::string_view text) {
    return parse_double(text);
}

template <>
QuadScalar parse_scalar_as<QuadScalar>(std::string_view text) {
    return QuadScalar::parse(text);
}

const QuadScalar &Scalar::exact() const {
    if (const auto *q = std::get_if<QuadScalar>(&value_)) {
        return *q;
    }
    throw BackendMismatch("expected an exact scalar, got a float");
}

double Scalar::floating() const {
    if (const auto *d = std::get_if<double>(&value_)) {
        return *d;
    }
    throw BackendMismatch("expected a float scalar, got an exact one");
}

double Scalar::to_double() const {
    return std::visit([](const auto &v) { return ScalarTraits<std::decay_t<decltype(v)>>::to_double(v); }, value_);
}

std::string Scalar::str() const {
    return std::visit([](const auto &v) { return format_scalar(v); }, value_);
}

Scalar Scalar::parse(std::string_view text, Backend backend) {
    if (backend == Backend::exact) {
        return Scalar(QuadScalar::parse(text));
    }
    return Scalar(parse_double(text));
}

std::variant<Scalar, bool> scalar_ops(const Scalar &x, const Scalar &y, ScalarOp op, double tol) {
    bool unary = op == ScalarOp::neg || op == ScalarOp::inv;
    if (!unary && x.backend() != y.backend()) {
        throw BackendMismatch("scalar operation mixes the exact and float backends");
    }
    if (x.backend() == Backend::exact) {
        const QuadScalar &a = x.exact();
        switch (op) {
            case ScalarOp::add:
                return Scalar(a + y.exact());
            case ScalarOp::mul:
                return Scalar(a * y.exact());
            case ScalarOp::neg:
                return Scalar(-a);
            case ScalarOp::inv:
                return Scalar(a.inverse());
            case ScalarOp::eq:
                return a == y.exact();
        }
    }
    double a = x.floating();
    switch (op) {
        case ScalarOp::add:
            return Scalar(a + y.floating());
        case ScalarOp::mul:
            return Scalar(a * y.floating());
        case ScalarOp::neg:
            return Scalar(-a);
        case ScalarOp::inv:
            if (a == 0) {
                throw DomainError("inverse of zero");
            }
            return Scalar(1 / a);
        case ScalarOp::eq:
            return std::abs(a - y.floating()) <= tol;
    }
    throw DomainError("unknown scalar operation");
}

}  // namespace eutactic
