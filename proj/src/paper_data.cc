#include "eutactic/paper_data.h"

namespace eutactic {

namespace {

// p/q + (r/s) sqrt2
QuadScalar qs(long long p, long long q, long long r = 0, long long s = 1) {
    return QuadScalar(Rational(p, q), Rational(r, s));
}

const QuadScalar kZero = qs(0, 1);
const QuadScalar kOne = qs(1, 1);
const QuadScalar kSqrt2 = qs(0, 1, 1, 1);
const QuadScalar kInvSqrt2 = qs(0, 1, 1, 2);         // 1/sqrt2
const QuadScalar kInvTwoSqrt2 = qs(0, 1, 1, 4);      // 1/(2 sqrt2)
const QuadScalar kThreeInvTwoSqrt2 = qs(0, 1, 3, 4); // 3/(2 sqrt2)

Vector<QuadScalar> scaled(const QuadScalar &prefactor, Vector<QuadScalar> v) {
    return prefactor * std::move(v);
}

Matrix<QuadScalar> scaled(const QuadScalar &prefactor, Matrix<QuadScalar> m) {
    return prefactor * std::move(m);
}

PaperExample<QuadScalar> exact_example(bool corrupt) {
    const QuadScalar half = qs(1, 2);
    PaperExample<QuadScalar> e;
    e.w = Vector<QuadScalar>{kZero, kZero, -kInvTwoSqrt2, kInvSqrt2};
    e.x = scaled(half, {kZero, kZero, qs(-3, 2), qs(-1, 1)});
    e.y = scaled(half, {kInvSqrt2, qs(-1, 1), kZero, kZero});
    e.z = scaled(kInvTwoSqrt2, {-kInvSqrt2, qs(-1, 1), kZero, kZero});

    e.w_plus_y = scaled(half, {kInvSqrt2, qs(-1, 1), -kInvSqrt2, kSqrt2});
    e.x_plus_z = scaled(half, {qs(-1, 2), -kInvSqrt2, qs(-3, 2), qs(-1, 1)});
    e.quadrit3 = scaled(half, {kOne, kSqrt2, qs(-1, 1), kZero});
    e.quadrit4 = scaled(half, {qs(3, 2), -kInvSqrt2, qs(1, 2), qs(-1, 1)});

    e.projector_wy = scaled(qs(1, 4), {
                                          {qs(1, 2), -kInvSqrt2, qs(-1, 2), kOne},
                                          {-kInvSqrt2, kOne, kInvSqrt2, -kSqrt2},
                                          {qs(-1, 2), kInvSqrt2, qs(1, 2), qs(-1, 1)},
                                          {kOne, -kSqrt2, qs(-1, 1), qs(2, 1)},
                                      });
    e.projector_xz = scaled(qs(1, 4), {
                                          {qs(1, 4), kInvTwoSqrt2, qs(3, 4), qs(1, 2)},
                                          {kInvTwoSqrt2, qs(1, 2), kThreeInvTwoSqrt2, kInvSqrt2},
                                          {qs(3, 4), kThreeInvTwoSqrt2, qs(9, 4), qs(3, 2)},
                                          {qs(1, 2), kInvSqrt2, qs(3, 2), kOne},
                                      });

    e.worst_case_basis = {
        Vector<QuadScalar>{kZero, kZero, kOne},
        Vector<QuadScalar>{kZero, kOne, kZero},
        Vector<QuadScalar>{kOne, kZero, kZero},
    };

    if (corrupt) {
        e.w[3] += qs(1, 1000);
    }
    return e;
}

}  // namespace

template <>
PaperExample<QuadScalar> paper_example<QuadScalar>(bool corrupt) {
    return exact_example(corrupt);
}

template <>
PaperExample<double> paper_example<double>(bool corrupt) {
    PaperExample<QuadScalar> e = exact_example(corrupt);
    PaperExample<double> d;
    d.w = convert<double>(e.w);
    d.x = convert<double>(e.x);
    d.y = convert<double>(e.y);
    d.z = convert<double>(e.z);
    d.w_plus_y = convert<double>(e.w_plus_y);
    d.x_plus_z = convert<double>(e.x_plus_z);
    d.quadrit3 = convert<double>(e.quadrit3);
    d.quadrit4 = convert<double>(e.quadrit4);
    d.projector_wy = convert<double>(e.projector_wy);
    d.projector_xz = convert<double>(e.projector_xz);
    for (const auto &v : e.worst_case_basis) {
        d.worst_case_basis.push_back(convert<double>(v));
    }
    return d;
}

}  // namespace eutactic
