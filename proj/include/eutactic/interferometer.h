#ifndef EUTACTIC_INTERFEROMETER_H
#define EUTACTIC_INTERFEROMETER_H

#include <cstddef>
#include <vector>

#include "eutactic/linalg.h"

namespace eutactic {

/// One beam-splitter box: a plane rotation. Angle pi/4 is a 50:50 mixing.
struct RotationGate {
    Plane plane;
    Angle angle;

    friend bool operator==(const RotationGate &, const RotationGate &) = default;
};

/// Ordered gates (first gate acts first) followed by an optional per-coordinate sign layer.
/// The circuit matrix is diag(signs) * G_last * ... * G_first.
class RotationCircuit {
   public:
    /// Throws DomainError on a gate plane outside `dim` or a malformed sign layer.
    RotationCircuit(std::size_t dim, std::vector<RotationGate> gates, std::vector<int> signs = {});

    std::size_t dim() const {
        return dim_;
    }
    const std::vector<RotationGate> &gates() const {
        return gates_;
    }
    /// Empty when no sign layer; otherwise dim() entries of +1 / -1.
    const std::vector<int> &signs() const {
        return signs_;
    }
    bool has_sign_flips() const;

    template <FieldScalar T>
    Matrix<T> matrix() const;

    friend bool operator==(const RotationCircuit &, const RotationCircuit &) = default;

   private:
    std::size_t dim_;
    std::vector<RotationGate> gates_;
    std::vector<int> signs_;
};

/// Applies gates in list order, then the sign layer. Throws DimensionMismatch, or
/// NotRepresentable when an exact vector meets a non-pi/4 angle.
template <FieldScalar T>
Vector<T> apply_circuit(const RotationCircuit &circuit, const Vector<T> &v);

/// The four-box encoder in R^4: R13, R14, R12, R13, each at pi/4, in application order.
/// It maps (0,0,0,1) to w+y and (1,0,0,0) to x+z.
RotationCircuit paper_encoder();

/// Reverse gate order with negated angles; the sign layer is carried through, which
/// multiplies each negated angle by the two signs of its plane.
RotationCircuit invert_circuit(const RotationCircuit &circuit);

/// Givens synthesis of an orthogonal matrix: at most m(m-1)/2 gates plus a trailing sign layer.
///
/// Works on Q^T column by column, zeroing each subdiagonal entry (j, c) against the pivot (c, c)
/// with a rotation in plane (c, j) at angle atan2(Q^T[j][c], Q^T[c][c]). What remains is a
/// diagonal of signs D, and Q = D * G_K * ... * G_1.
///
/// Throws NotOrthogonal if Q^T Q differs from the identity by more than `tol` entrywise (exactly,
/// on the exact backend), and NotRepresentable on the exact backend when an angle is not a
/// multiple of pi/4.
template <FieldScalar T>
RotationCircuit decompose(const Matrix<T> &q, double tol = kDefaultTolerance);

}  // namespace eutactic

#endif
