#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eutactic/linalg.h"
#include "eutactic/paper_data.h"
#include "eutactic/random.h"
#include "oracles.h"

namespace eutactic {
namespace {

using Q = QuadScalar;

Q qs(long long p, long long q, long long r = 0, long long s = 1) {
    return Q(Rational(p, q), Rational(r, s));
}

Vector<Q> random_exact_vector(std::mt19937_64 &gen, std::size_t dim) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 8);
    Vector<Q> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = qs(num(gen), den(gen), num(gen), den(gen));
    }
    return v;
}

Matrix<double> random_symmetric(Rng &rng, std::size_t n) {
    Matrix<double> a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            a(i, j) = a(j, i) = rng.uniform_signed() * 3;
        }
    }
    return a;
}

TEST(Inner, PaperCodewords) {
    auto e = paper_example<Q>();
    EXPECT_EQ(inner(e.w_plus_y, e.x_plus_z), Q(0));
    EXPECT_EQ(inner(e.w_plus_y, e.w_plus_y), Q(1));
    EXPECT_EQ(inner(Vector<Q>::unit(4, 0), Vector<Q>::unit(4, 1)), Q(0));
    EXPECT_THROW(inner(Vector<Q>(2), Vector<Q>(3)), DimensionMismatch);
}

TEST(Dyad, PaperProjectors) {
    auto e = paper_example<Q>();
    EXPECT_EQ(dyad(e.w_plus_y), e.projector_wy);
    EXPECT_EQ(dyad(e.x_plus_z), e.projector_xz);
    EXPECT_EQ(e.projector_wy(0, 1), qs(1, 4) * -qs(0, 1, 1, 2));
    EXPECT_EQ(e.projector_xz(0, 1), qs(1, 4) * qs(0, 1, 1, 4));
    EXPECT_EQ(dyad(Vector<Q>{Q(1), Q(0)}), (Matrix<Q>{{Q(1), Q(0)}, {Q(0), Q(0)}}));
}

TEST(Commutator, PaperShares) {
    auto e = paper_example<Q>();
    Matrix<Q> wx = commutator(dyad(e.w), dyad(e.x));
    Matrix<Q> yz = commutator(dyad(e.y), dyad(e.z));
    EXPECT_FALSE(wx.is_zero());
    EXPECT_FALSE(yz.is_zero());
    // Frozen values from the sympy oracle (tests/oracles/paper_oracle.py).
    Matrix<Q> expected_wx(4, 4);
    expected_wx(2, 3) = qs(-1, 16);
    expected_wx(3, 2) = qs(1, 16);
    EXPECT_EQ(wx, expected_wx);
    Matrix<Q> expected_yz(4, 4);
    expected_yz(0, 1) = qs(0, 1, -1, 64);
    expected_yz(1, 0) = qs(0, 1, 1, 64);
    EXPECT_EQ(yz, expected_yz);

    Matrix<Q> a = dyad(e.w);
    EXPECT_TRUE(commutator(a, a).is_zero());
    EXPECT_TRUE(commutator(Matrix<Q>::identity(4), e.projector_xz).is_zero());
    EXPECT_THROW(commutator(Matrix<Q>(2, 2), Matrix<Q>(3, 3)), DimensionMismatch);
}

TEST(Rotation, QuarterTurnOnE4) {
    Matrix<Q> r = rotation_matrix<Q>(4, {0, 3}, Angle::quarter_turns(1));
    Vector<Q> out = r * Vector<Q>::unit(4, 3);
    EXPECT_EQ(out, (Vector<Q>{qs(0, 1, 1, 2), Q(0), Q(0), qs(0, 1, 1, 2)}));
    EXPECT_EQ(rotation_matrix<Q>(5, {1, 4}, Angle::quarter_turns(0)), Matrix<Q>::identity(5));
}

TEST(Rotation, ExactRejectsGenericAngle) {
    EXPECT_THROW(rotation_matrix<Q>(3, {0, 1}, Angle::radians(0.3)), NotRepresentable);
    EXPECT_THROW(rotation_matrix<Q>(3, {1, 1}, Angle::quarter_turns(1)), DomainError);
    EXPECT_THROW(rotation_matrix<Q>(3, {0, 3}, Angle::quarter_turns(1)), DomainError);
}

TEST(Angle, TextForm) {
    EXPECT_EQ(Angle::quarter_turns(1).str(), "2/8*pi");
    EXPECT_EQ(Angle::parse("-2/8*pi"), Angle::quarter_turns(-1));
    EXPECT_EQ(Angle::quarter_turns(9), Angle::quarter_turns(1));
    EXPECT_EQ(Angle::quarter_turns(-4), Angle::quarter_turns(4));
    EXPECT_FALSE(Angle::parse("1/8*pi").is_exact());
    EXPECT_NEAR(Angle::parse("1/8*pi").to_radians(), std::numbers::pi / 8, 1e-15);
    EXPECT_DOUBLE_EQ(Angle::parse("3.5e-01").to_radians(), 0.35);
}

TEST(TraceNorm, Examples) {
    EXPECT_NEAR(trace_norm_sym(Matrix<double>::diagonal({1, -1})), 2, 1e-14);
    EXPECT_EQ(trace_norm_sym(Matrix<double>(3, 3)), 0);
    auto e = paper_example<double>();
    EXPECT_NEAR(trace_norm_sym(dyad(e.w_plus_y) - dyad(e.x_plus_z)), 2, 1e-12);
    EXPECT_THROW(trace_norm_sym(Matrix<double>{{1, 2}, {0, 1}}), DomainError);
}

TEST(LinalgProperty, CauchySchwarzExact) {
    std::mt19937_64 gen(41);
    for (int i = 0; i < 200; ++i) {
        std::size_t dim = 1 + gen() % 6;
        Vector<Q> u = random_exact_vector(gen, dim), v = random_exact_vector(gen, dim);
        Q uv = inner(u, v);
        ASSERT_LE(uv * uv, inner(u, u) * inner(v, v));
        ASSERT_EQ(inner(u, v), inner(v, u));
        ASSERT_EQ(dyad(u).trace(), squared_norm(u));
    }
}

TEST(LinalgProperty, CommutatorAntisymmetry) {
    std::mt19937_64 gen(42);
    for (int i = 0; i < 200; ++i) {
        std::size_t dim = 1 + gen() % 5;
        Matrix<Q> a = dyad(random_exact_vector(gen, dim)) + dyad(random_exact_vector(gen, dim));
        Matrix<Q> b = dyad(random_exact_vector(gen, dim));
        ASSERT_EQ(commutator(a, b), Q(-1) * commutator(b, a));
    }
}

TEST(LinalgProperty, RotationInverse) {
    Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        std::size_t dim = 2 + rng.below(11);
        std::size_t a = rng.below(dim), b = rng.below(dim - 1);
        if (b >= a) {
            ++b;
        }
        Plane plane{std::min(a, b), std::max(a, b)};
        Angle theta = Angle::radians(rng.uniform_signed() * 4);
        Matrix<double> r = rotation_matrix<double>(dim, plane, theta);
        ASSERT_TRUE(approx_equal(r * rotation_matrix<double>(dim, plane, -theta), Matrix<double>::identity(dim), 1e-12));
        ASSERT_TRUE(approx_equal(r.transpose() * r, Matrix<double>::identity(dim), 1e-12));
        int k = static_cast<int>(rng.below(8)) - 3;
        Matrix<Q> rq = rotation_matrix<Q>(dim, plane, Angle::quarter_turns(k));
        ASSERT_EQ(rq * rotation_matrix<Q>(dim, plane, Angle::quarter_turns(-k)), Matrix<Q>::identity(dim));
    }
}

TEST(LinalgProperty, TraceNormAgainstCharacteristicPolynomial2x2) {
    Rng rng(44);
    for (int i = 0; i < 250; ++i) {
        double a = rng.uniform_signed() * 5, b = rng.uniform_signed() * 5, d = rng.uniform_signed() * 5;
        auto ev = oracle::eigenvalues_2x2(a, b, d);
        Matrix<double> m{{a, b}, {b, d}};
        ASSERT_NEAR(trace_norm_sym(m), std::abs(ev[0]) + std::abs(ev[1]), 1e-9);
        auto jacobi = symmetric_eigenvalues(m);
        ASSERT_NEAR(jacobi[0], ev[0], 1e-9);
        ASSERT_NEAR(jacobi[1], ev[1], 1e-9);
    }
}

TEST(LinalgProperty, TraceNormAgainstCharacteristicPolynomial3x3) {
    Rng rng(45);
    for (int i = 0; i < 250; ++i) {
        Matrix<double> m = random_symmetric(rng, 3);
        oracle::Sym3 s;
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                s[r][c] = m(r, c);
            }
        }
        auto ev = oracle::eigenvalues_3x3(s);
        ASSERT_NEAR(trace_norm_sym(m), std::abs(ev[0]) + std::abs(ev[1]) + std::abs(ev[2]), 1e-9);
    }
}

TEST(LinalgProperty, JacobiPreservesTraceAndFrobenius) {
    Rng rng(46);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng.below(12);
        Matrix<double> m = random_symmetric(rng, n);
        auto ev = symmetric_eigenvalues(m);
        double sum = 0, sq = 0;
        for (double x : ev) {
            sum += x;
            sq += x * x;
        }
        ASSERT_NEAR(sum, m.trace(), 1e-9);
        ASSERT_NEAR(sq, frobenius_squared(m), 1e-8);
        ASSERT_TRUE(std::is_sorted(ev.begin(), ev.end()));
    }
}

TEST(Backends, PaperAgreement) {
    auto e = paper_example<Q>();
    auto d = paper_example<double>();
    EXPECT_TRUE(approx_equal(convert<double>(dyad(e.w_plus_y)), dyad(d.w_plus_y), 1e-12));
    EXPECT_TRUE(approx_equal(convert<double>(commutator(dyad(e.w), dyad(e.x))), commutator(dyad(d.w), dyad(d.x)), 1e-12));
    EXPECT_NEAR(inner(e.x_plus_z, e.quadrit4).to_double(), inner(d.x_plus_z, d.quadrit4), 1e-12);
}

}  // namespace
}  // namespace eutactic
