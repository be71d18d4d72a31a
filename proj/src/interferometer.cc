#include "eutactic/interferometer.h"

#include <cmath>
#include <string>

namespace eutactic {

RotationCircuit::RotationCircuit(std::size_t dim, std::vector<RotationGate> gates, std::vector<int> signs)
    : dim_(dim), gates_(std::move(gates)), signs_(std::move(signs)) {
    for (const auto &g : gates_) {
        if (g.plane.first >= g.plane.second || g.plane.second >= dim_) {
            throw DomainError("gate plane (" + std::to_string(g.plane.first + 1) + "," +
                              std::to_string(g.plane.second + 1) + ") invalid for dimension " + std::to_string(dim_));
        }
    }
    if (!signs_.empty()) {
        if (signs_.size() != dim_) {
            throw DomainError("sign layer has " + std::to_string(signs_.size()) + " entries for dimension " +
                              std::to_string(dim_));
        }
        for (int s : signs_) {
            if (s != 1 && s != -1) {
                throw DomainError("sign layer entries must be +1 or -1");
            }
        }
    }
}

bool RotationCircuit::has_sign_flips() const {
    for (int s : signs_) {
        if (s < 0) {
            return true;
        }
    }
    return false;
}

template <FieldScalar T>
Matrix<T> RotationCircuit::matrix() const {
    Matrix<T> product = Matrix<T>::identity(dim_);
    for (const auto &g : gates_) {
        product = rotation_matrix<T>(dim_, g.plane, g.angle) * product;
    }
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (signs_[i] < 0) {
            for (std::size_t c = 0; c < dim_; ++c) {
                product(i, c) = -product(i, c);
            }
        }
    }
    return product;
}

template <FieldScalar T>
Vector<T> apply_circuit(const RotationCircuit &circuit, const Vector<T> &v) {
    if (v.dim() != circuit.dim()) {
        throw DimensionMismatch("circuit of dimension " + std::to_string(circuit.dim()) + " applied to dimension " +
                                std::to_string(v.dim()));
    }
    Vector<T> out = v;
    for (const auto &g : circuit.gates()) {
        auto [c, s] = g.angle.template cos_sin<T>();
        const std::size_t i = g.plane.first;
        const std::size_t j = g.plane.second;
        T xi = out[i];
        T xj = out[j];
        out[i] = c * xi + s * xj;
        out[j] = c * xj - s * xi;
    }
    for (std::size_t i = 0; i < circuit.signs().size(); ++i) {
        if (circuit.signs()[i] < 0) {
            out[i] = -out[i];
        }
    }
    return out;
}

RotationCircuit paper_encoder() {
    const Angle quarter = Angle::quarter_turns(1);
    return RotationCircuit(4, {
                                  {{0, 2}, quarter},
                                  {{0, 3}, quarter},
                                  {{0, 1}, quarter},
                                  {{0, 2}, quarter},
                              });
}

RotationCircuit invert_circuit(const RotationCircuit &circuit) {
    // (D G_K ... G_1)^-1 = G_1^-1 ... G_K^-1 D = D (D G_1^-1 D) ... (D G_K^-1 D),
    // and D R_ij(t) D = R_ij(d_i d_j t).
    const auto &signs = circuit.signs();
    std::vector<RotationGate> inverse;
    inverse.reserve(circuit.gates().size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        Angle angle = -it->angle;
        if (!signs.empty() && signs[it->plane.first] * signs[it->plane.second] < 0) {
            angle = -angle;
        }
        inverse.push_back({it->plane, angle});
    }
    return RotationCircuit(circuit.dim(), std::move(inverse), signs);
}

namespace {

/// Angle with cos = a/r, sin = b/r, r = hypot(a, b) > 0, plus the pivot value r.
std::pair<Angle, double> givens_angle(double a, double b) {
    return {Angle::radians(std::atan2(b, a)), std::hypot(a, b)};
}

std::pair<Angle, QuadScalar> givens_angle(const QuadScalar &a, const QuadScalar &b) {
    if (a.is_zero()) {
        return {Angle::quarter_turns(b.sign() > 0 ? 2 : -2), abs(b)};
    }
    if (abs(a) == abs(b)) {
        int k = a.sign() > 0 ? 1 : 3;
        return {Angle::quarter_turns(b.sign() > 0 ? k : -k), abs(a) * QuadScalar::sqrt2()};
    }
    throw NotRepresentable("Givens angle atan2(" + b.str() + ", " + a.str() +
                           ") is not a multiple of pi/4");
}

}  // namespace

template <FieldScalar T>
RotationCircuit decompose(const Matrix<T> &q, double tol) {
    if (!q.is_square()) {
        throw NotOrthogonal("matrix " + q.shape() + " is not square");
    }
    const std::size_t m = q.rows();
    Matrix<T> work = q.transpose();
    if (!approx_equal(work * q, Matrix<T>::identity(m), tol)) {
        throw NotOrthogonal("Q^T Q differs from the identity");
    }

    std::vector<RotationGate> gates;
    for (std::size_t c = 0; c + 1 < m; ++c) {
        for (std::size_t j = c + 1; j < m; ++j) {
            if (ScalarTraits<T>::is_zero(work(j, c), 0)) {
                continue;
            }
            auto [angle, pivot] = givens_angle(work(c, c), work(j, c));
            auto [cs, sn] = angle.template cos_sin<T>();
            for (std::size_t k = 0; k < m; ++k) {
                T xc = work(c, k);
                T xj = work(j, k);
                work(c, k) = cs * xc + sn * xj;
                work(j, k) = cs * xj - sn * xc;
            }
            work(c, c) = pivot;
            work(j, c) = T(0);
            gates.push_back({{c, j}, angle});
        }
    }

    std::vector<int> signs(m, 1);
    bool flips = false;
    for (std::size_t i = 0; i < m; ++i) {
        if (ScalarTraits<T>::to_double(work(i, i)) < 0) {
            signs[i] = -1;
            flips = true;
        }
    }
    if (!flips) {
        signs.clear();
    }
    return RotationCircuit(m, std::move(gates), std::move(signs));
}

template Matrix<double> RotationCircuit::matrix<double>() const;
template Matrix<QuadScalar> RotationCircuit::matrix<QuadScalar>() const;
template Vector<double> apply_circuit<double>(const RotationCircuit &, const Vector<double> &);
template Vector<QuadScalar> apply_circuit<QuadScalar>(const RotationCircuit &, const Vector<QuadScalar> &);
template RotationCircuit decompose<double>(const Matrix<double> &, double);
template RotationCircuit decompose<QuadScalar>(const Matrix<QuadScalar> &, double);

}  // namespace eutactic
