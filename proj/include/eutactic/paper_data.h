#ifndef EUTACTIC_PAPER_DATA_H
#define EUTACTIC_PAPER_DATA_H

#include "eutactic/frames.h"

namespace eutactic {

/// The worked two-share example in R^4, entered verbatim (prefactors and all).
template <FieldScalar T>
struct PaperExample {
    // Shares: party 1 holds {y, z} on coordinates 1-2, party 2 holds {w, x} on 3-4.
    Vector<T> w, x, y, z;
    // The two orthogonal codewords, and the two extra quadrit states.
    Vector<T> w_plus_y, x_plus_z, quadrit3, quadrit4;
    // Projectors onto w+y and x+z, entries as given with the 1/4 prefactor.
    Matrix<T> projector_wy, projector_xz;
    // "Worst case" basis of R^3, split as {3} | {1, 2}.
    std::vector<Vector<T>> worst_case_basis;
    CoordinateProjector worst_case_first{3, {2}};
    CoordinateProjector worst_case_second{3, {0, 1}};
    // P = diag(1,1,0,0) and its complement.
    CoordinateProjector p{4, {0, 1}};
    CoordinateProjector p_perp{4, {2, 3}};
};

/// `corrupt` perturbs the last entry of w by 1/1000 (test hook for failure reporting).
template <FieldScalar T>
PaperExample<T> paper_example(bool corrupt = false);

template <>
PaperExample<QuadScalar> paper_example<QuadScalar>(bool corrupt);
template <>
PaperExample<double> paper_example<double>(bool corrupt);

}  // namespace eutactic

#endif
