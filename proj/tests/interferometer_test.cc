#include <gtest/gtest.h>

#include "eutactic/interferometer.h"
#include "eutactic/paper_data.h"
#include "eutactic/random.h"

namespace eutactic {
namespace {

using Q = QuadScalar;

RotationCircuit random_circuit(Rng &rng, std::size_t dim, std::size_t gates, bool exact) {
    std::vector<RotationGate> list;
    for (std::size_t g = 0; g < gates; ++g) {
        std::size_t a = rng.below(dim), b = rng.below(dim - 1);
        if (b >= a) {
            ++b;
        }
        Angle angle = exact ? Angle::quarter_turns(static_cast<int>(rng.below(8)) - 3)
                            : Angle::radians(rng.uniform_signed() * 3.2);
        list.push_back({{std::min(a, b), std::max(a, b)}, angle});
    }
    std::vector<int> signs;
    if (rng.below(2)) {
        for (std::size_t i = 0; i < dim; ++i) {
            signs.push_back(rng.below(2) ? 1 : -1);
        }
    }
    return RotationCircuit(dim, list, signs);
}

TEST(Encoder, GateList) {
    RotationCircuit c = paper_encoder();
    Angle quarter = Angle::quarter_turns(1);
    std::vector<RotationGate> expected{{{0, 2}, quarter}, {{0, 3}, quarter}, {{0, 1}, quarter}, {{0, 2}, quarter}};
    EXPECT_EQ(c.gates(), expected);
    EXPECT_FALSE(c.has_sign_flips());
}

TEST(Encoder, MapsTerminalsToCodewords) {
    auto e = paper_example<Q>();
    RotationCircuit c = paper_encoder();
    EXPECT_EQ(apply_circuit(c, Vector<Q>::unit(4, 3)), e.w_plus_y);
    EXPECT_EQ(apply_circuit(c, Vector<Q>::unit(4, 0)), e.x_plus_z);
    Matrix<Q> m = c.matrix<Q>();
    EXPECT_EQ(m.col(3), e.w_plus_y);
    EXPECT_EQ(m.col(0), e.x_plus_z);
    EXPECT_EQ(m.transpose() * m, Matrix<Q>::identity(4));
}

TEST(Encoder, InverseIsDecoder) {
    RotationCircuit inv = invert_circuit(paper_encoder());
    Angle minus = Angle::quarter_turns(-1);
    std::vector<RotationGate> expected{{{0, 2}, minus}, {{0, 1}, minus}, {{0, 3}, minus}, {{0, 2}, minus}};
    EXPECT_EQ(inv.gates(), expected);
    EXPECT_EQ(inv.matrix<Q>() * paper_encoder().matrix<Q>(), Matrix<Q>::identity(4));
    EXPECT_EQ(invert_circuit(inv), paper_encoder());
    EXPECT_TRUE(invert_circuit(RotationCircuit(3, {})).gates().empty());
}

TEST(Apply, EmptyCircuitAndErrors) {
    Vector<Q> v{Q(1), Q(2), Q(3)};
    EXPECT_EQ(apply_circuit(RotationCircuit(3, {}), v), v);
    EXPECT_THROW(apply_circuit(paper_encoder(), v), DimensionMismatch);
    RotationCircuit generic(2, {{{0, 1}, Angle::radians(0.2)}});
    EXPECT_THROW(apply_circuit(generic, Vector<Q>{Q(1), Q(0)}), NotRepresentable);
    EXPECT_THROW(RotationCircuit(2, {{{0, 2}, Angle::quarter_turns(1)}}), DomainError);
    EXPECT_THROW(RotationCircuit(2, {}, {1, 0}), DomainError);
}

TEST(Decompose, Examples) {
    RotationCircuit id = decompose(Matrix<Q>::identity(4));
    EXPECT_TRUE(id.gates().empty());
    EXPECT_FALSE(id.has_sign_flips());

    Angle theta = Angle::radians(0.7);
    RotationCircuit single = decompose(rotation_matrix<double>(2, {0, 1}, theta));
    ASSERT_EQ(single.gates().size(), 1u);
    EXPECT_EQ(single.gates()[0].plane, (Plane{0, 1}));
    EXPECT_NEAR(single.gates()[0].angle.to_radians(), 0.7, 1e-15);

    Matrix<double> enc = paper_encoder().matrix<double>();
    RotationCircuit c = decompose(enc);
    EXPECT_TRUE(approx_equal(c.matrix<double>(), enc, 1e-12));
    EXPECT_LE(c.gates().size(), 6u);

    EXPECT_THROW(decompose(Matrix<double>{{1, 0}, {0, 2}}), NotOrthogonal);
    EXPECT_THROW(decompose(paper_encoder().matrix<Q>()), NotRepresentable);
}

TEST(Decompose, ExactQuarterCircuit) {
    Matrix<Q> q = rotation_matrix<Q>(3, {0, 2}, Angle::quarter_turns(1)) * Matrix<Q>::diagonal({Q(1), Q(-1), Q(1)});
    RotationCircuit c = decompose(q);
    EXPECT_EQ(c.matrix<Q>(), q);
}

TEST(InterferometerProperty, DecomposeReconstruction) {
    Rng rng(81);
    for (int i = 0; i < 250; ++i) {
        std::size_t m = 2 + rng.below(11);
        Matrix<double> q = random_orthogonal(m, rng);
        if (rng.below(2)) {
            Matrix<double> flip = Matrix<double>::identity(m);
            flip(0, 0) = -1;
            q = q * flip;
        }
        RotationCircuit c = decompose(q);
        ASSERT_LE(c.gates().size(), m * (m - 1) / 2);
        ASSERT_LE(frobenius_norm(c.matrix<double>() - q), 1e-10) << "m=" << m;
    }
}

TEST(InterferometerProperty, InverseRoundTripFloat) {
    Rng rng(82);
    for (int i = 0; i < 200; ++i) {
        std::size_t m = 2 + rng.below(15);
        RotationCircuit c = random_circuit(rng, m, rng.below(200), false);
        Vector<double> v(m);
        for (std::size_t k = 0; k < m; ++k) {
            v[k] = rng.uniform_signed();
        }
        Vector<double> w = apply_circuit(c, v);
        ASSERT_NEAR(squared_norm(w), squared_norm(v), 1e-12 * m);
        ASSERT_TRUE(approx_equal(apply_circuit(invert_circuit(c), w), v, 1e-11));
        ASSERT_TRUE(approx_equal(w, c.matrix<double>() * v, 1e-11));
    }
}

TEST(InterferometerProperty, InverseRoundTripExact) {
    Rng rng(83);
    for (int i = 0; i < 200; ++i) {
        std::size_t m = 2 + rng.below(5);
        RotationCircuit c = random_circuit(rng, m, rng.below(12), true);
        Vector<Q> v(m);
        for (std::size_t k = 0; k < m; ++k) {
            v[k] = Q(static_cast<int>(rng.below(7)) - 3);
        }
        Vector<Q> w = apply_circuit(c, v);
        ASSERT_EQ(squared_norm(w), squared_norm(v));
        ASSERT_EQ(apply_circuit(invert_circuit(c), w), v);
        ASSERT_EQ(invert_circuit(c).matrix<Q>() * c.matrix<Q>(), Matrix<Q>::identity(m));
    }
}

}  // namespace
}  // namespace eutactic
