#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ladder/errors.hpp"
#include "ladder/exact_oracle.hpp"
#include "ladder/model_families.hpp"
#include "ladder/mps_core.hpp"
#include "support.hpp"

using namespace ladder;

namespace {

// tr(prod) by explicit multiplication, as an oracle for the spectral routes.
Eigen::MatrixXd naive_power(const Eigen::MatrixXd &m, std::size_t n) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for(std::size_t i = 0; i < n; ++i) out = out * m;
    return out;
}

const double kR = 1.0 / std::sqrt(2.0);

} // namespace

TEST(Transfer, ClassAExampleSpectrum) {
    const auto   t          = transfer_matrix(build_class_a(kR, 0.5, 1, 1));
    const double expected[] = {1.5, 1.0, 1.0, 0.5};
    for(int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(t.spectrum.eigenvalues[static_cast<std::size_t>(i)] - expected[i]), 0.0, 1e-12);
    EXPECT_FALSE(t.degenerate_top);
}

TEST(Transfer, ClassBAtZeroSpectrum) {
    const auto   t          = transfer_matrix(build_class_b(0.0));
    const double expected[] = {1.5, -0.5, -0.5, -0.5};
    for(int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(t.spectrum.eigenvalues[static_cast<std::size_t>(i)] - expected[i]), 0.0, 1e-12);
}

TEST(Transfer, MatchesIndexLoopConstruction) {
    fixtures::RandomModels models(21);
    for(int trial = 0; trial < 200; ++trial) {
        const auto mps = models.any();
        EXPECT_LE(max_abs(transfer_matrix(mps).E - to_complex(fixtures::naive_transfer(mps))), 1e-14);
    }
}

TEST(Transfer, FamilySpectrumProperty) {
    fixtures::RandomModels models(22);
    for(int trial = 0; trial < 500; ++trial) {
        const auto          mps = models.any();
        const auto         &p   = mps.params;
        const double        s   = p.a * p.a + p.b * p.b;
        std::vector<double> expected{s + p.g, s - p.g, 2 * p.a * p.b, 2 * p.a * p.b};
        std::vector<double> numeric;
        for(const auto &l : transfer_matrix(mps).spectrum.eigenvalues) {
            EXPECT_LE(std::abs(l.imag()), 1e-12);
            numeric.push_back(l.real());
        }
        std::sort(expected.begin(), expected.end());
        std::sort(numeric.begin(), numeric.end());
        for(int i = 0; i < 4; ++i) EXPECT_NEAR(numeric[static_cast<std::size_t>(i)], expected[static_cast<std::size_t>(i)], 1e-12);
    }
}

TEST(Transfer, DegenerateAtZeroCoupling) {
    const auto t = transfer_matrix(build_class_a(1.0, 0.0, 1, 1));
    EXPECT_TRUE(t.degenerate_top);
    EXPECT_THROW(one_point_thermo(build_class_a(1.0, 0.0, 1, 1), rung_operator("Sz")), DegenerateTopError);
    EXPECT_THROW(two_point_thermo(build_class_a(1.0, 0.0, 1, 1), rung_operator("Sz"), 3), DegenerateTopError);
}

TEST(Amplitude, HandTraces) {
    const auto mps     = build_so2(0.3, 0.4, 0.5, 0.6, 0.9);
    const int  pair[]  = {kUpUp, kDownDown};
    const int  single[] = {kUpDown};
    EXPECT_DOUBLE_EQ(amplitude(mps, pair), 0.9);
    EXPECT_DOUBLE_EQ(amplitude(mps, single), 0.3 + 0.4);
}

TEST(Amplitude, CyclicProperty) {
    fixtures::RandomModels models(23);
    std::mt19937_64       rng(1);
    for(int trial = 0; trial < 200; ++trial) {
        const auto       mps = models.any();
        std::vector<int> c(7);
        for(auto &x : c) x = std::uniform_int_distribution<int>(0, 3)(rng);
        const double base = amplitude(mps, c);
        std::rotate(c.begin(), c.begin() + 1, c.end());
        EXPECT_NEAR(amplitude(mps, c), base, 1e-13 * std::max(1.0, std::abs(base)));
    }
}

TEST(PartitionNorm, Examples) {
    const auto mps = build_class_a(kR, 0.5, 1, 1);
    EXPECT_NEAR(partition_norm(mps, 2), 4.5, 1e-12);
    EXPECT_NEAR(partition_norm(mps, 1), transfer_matrix(mps).E.trace().real(), 1e-13);
}

TEST(PartitionNorm, MatchesRepeatedProducts) {
    fixtures::RandomModels models(24);
    for(int trial = 0; trial < 100; ++trial) {
        const auto mps = models.any();
        for(std::size_t n : {1, 2, 5, 9}) {
            const auto   power = naive_power(fixtures::naive_transfer(mps), n);
            const double z     = power.trace();
            // b = -a makes every tr A vanish, so the single-rung ring carries no weight.
            if(std::abs(z) < 1e-12 * power.norm()) continue;
            EXPECT_NEAR(partition_norm(mps, n) / z, 1.0, 1e-10);
        }
    }
}

TEST(PartitionNorm, ZeroStateIsRejected) {
    LadderMPS zero;
    for(auto &a : zero.A) a = RealMatrix::Zero(2, 2);
    EXPECT_THROW(partition_norm(zero, 3), DegenerateStateError);
}

TEST(RungOperator, Matrices) {
    const auto sz = rung_operator("Sz").matrix;
    const auto s1 = rung_operator("sz1").matrix;
    const double sz_diag[] = {1, 0, 0, -1};
    const double s1_diag[] = {1, 1, -1, -1};
    for(int i = 0; i < 4; ++i)
        for(int j = 0; j < 4; ++j) {
            EXPECT_EQ(sz(i, j), Complex(i == j ? sz_diag[i] : 0.0));
            EXPECT_EQ(s1(i, j), Complex(i == j ? s1_diag[i] : 0.0));
        }
    EXPECT_THROW(rung_operator("bogus"), ParameterError);
    // S^2 has spectrum {0, 2, 2, 2}.
    const auto values = fixtures::sorted_eigenvalues(rung_operator("S2").matrix);
    EXPECT_NEAR(values[0], 0.0, 1e-14);
    for(int i = 1; i < 4; ++i) EXPECT_NEAR(values[static_cast<std::size_t>(i)], 2.0, 1e-14);
}

TEST(OperatorTransfer, IdentityAndSz) {
    const double g   = 0.8;
    const auto   mps = build_so2(0.3, -0.2, 0.5, 1.1, g);
    EXPECT_LE(max_abs(operator_transfer(mps, rung_operator("identity")) - transfer_matrix(mps).E), 1e-15);
    const auto e = operator_transfer(mps, rung_operator("Sz"));
    for(int i = 0; i < 4; ++i)
        for(int j = 0; j < 4; ++j) {
            Complex expected = 0.0;
            if(i == 0 && j == 3) expected = g * g;
            if(i == 3 && j == 0) expected = -1.0;
            EXPECT_NEAR(std::abs(e(i, j) - expected), 0.0, 1e-15);
        }
}

TEST(OnePoint, MagnetizationVanishesAndIdentityIsOne) {
    fixtures::RandomModels models(25);
    for(int trial = 0; trial < 50; ++trial) {
        const auto mps = models.any();
        EXPECT_NEAR(one_point_thermo(mps, rung_operator("Sz")), 0.0, 1e-12);
        EXPECT_NEAR(one_point_thermo(mps, rung_operator("identity")), 1.0, 1e-12);
        EXPECT_NEAR(one_point(mps, rung_operator("Sz"), 2, 5), 0.0, 1e-12);
        EXPECT_NEAR(one_point(mps, rung_operator("identity"), 3, 5), 1.0, 1e-12);
    }
}

TEST(TwoPoint, ClassAExample) {
    // x = 0.5 at a = 1: g = 1.
    const auto mps = build_class_a(1.0, 1.0, 1, 1);
    const auto sz  = rung_operator("Sz");
    EXPECT_NEAR(two_point_thermo(mps, sz, 2), -1.0 / 9.0, 1e-12);
    const Placement pair[] = {{1, &sz}, {2, &sz}};
    const double    dense  = expectation(build_state(mps, 10), pair);
    EXPECT_NEAR(two_point(mps, sz, 2, 10), dense, 1e-12);
    // Finite-size corrections scale as (2/3)^N relative to the thermodynamic value.
    EXPECT_NEAR(dense, -1.0 / 9.0, 0.005);
}

TEST(TwoPoint, IdentityIsOne) {
    const auto mps = build_class_b(0.4);
    for(std::size_t r : {2, 5, 11}) {
        EXPECT_NEAR(two_point_thermo(mps, rung_operator("identity"), r), 1.0, 1e-12);
        EXPECT_NEAR(two_point(mps, rung_operator("identity"), r, 12), 1.0, 1e-12);
    }
}

TEST(TwoPoint, FiniteConvergesToThermodynamic) {
    fixtures::RandomModels models(26);
    for(int trial = 0; trial < 30; ++trial) {
        const auto   mps = models.any();
        const auto   t   = transfer_matrix(mps);
        const double gap = std::abs(t.spectrum.eigenvalues[1]) / std::abs(t.spectrum.eigenvalues[0]);
        for(const char *name : {"Sz", "Sn", "zz"}) {
            const auto   op     = rung_operator(name, 0.3);
            const double thermo = two_point_thermo(mps, op, 3);
            for(std::size_t n : {50, 100}) {
                const double bound = 50.0 * std::pow(gap, static_cast<double>(n) - 3.0) + 1e-12;
                EXPECT_LE(std::abs(two_point(mps, op, 3, n) - thermo), bound) << name << " N=" << n;
            }
        }
    }
}

TEST(CorrelationLength, ClassAExamples) {
    const auto mps = build_class_a(1.0, 1.0, 1, 1); // x = 0.5
    const auto z   = correlation_length(mps, rung_operator("Sz"));
    const auto n   = correlation_length(mps, rung_operator("Sn", 0.0));
    ASSERT_TRUE(z.is_finite());
    ASSERT_TRUE(n.is_finite());
    EXPECT_NEAR(z.value, 1.0 / std::log(3.0), 1e-12);
    EXPECT_NEAR(n.value, 1.0 / std::log(1.5), 1e-12);
    EXPECT_NEAR(z.value, 0.910239, 1e-6);
    EXPECT_NEAR(n.value, 2.466303, 1e-6);
}

TEST(CorrelationLength, DivergesNearTransition) {
    // |x| = 1e-3 in class A: the transverse length is 1/ln(1.001) ~ 1000.5, the longitudinal one
    // 1/ln(1.001/0.999) ~ 500.
    const auto mps = build_class_a(1.0, 2e-3, 1, 1);
    const auto z   = correlation_length(mps, rung_operator("Sz"));
    const auto n   = correlation_length(mps, rung_operator("Sn"));
    EXPECT_NEAR(z.value, 1.0 / std::log(1.001 / 0.999), 1e-6);
    EXPECT_GT(n.value, 1e3);
    EXPECT_GT(z.value, 4.9e2);
}

TEST(CorrelationLength, NoConnectedPart) {
    // Transverse correlations vanish identically for epsilon = -sgn(g).
    const auto xi = correlation_length(build_spin_flip(0.7, 0.4, 0.9, -1), rung_operator("Sn"));
    EXPECT_EQ(xi.kind, CorrelationLength::Kind::none);
}
