#include <gtest/gtest.h>

#include <cmath>

#include "ladder/errors.hpp"
#include "ladder/model_families.hpp"
#include "ladder/rung_observables.hpp"
#include "support.hpp"

using namespace ladder;

namespace {

double entropy_of(const std::vector<double> &alphas) {
    double s = 0.0;
    for(double a : alphas)
        if(a > 0) s -= a * std::log2(a);
    return s;
}

} // namespace

TEST(RungDensity, ClosedFormInvariants) {
    fixtures::RandomModels models(41);
    for(int trial = 0; trial < 500; ++trial) {
        const auto   p   = spin_flip_params(models.any());
        const auto   rho = rung_density_closed_form(p);
        const double q   = 2 * (p.a * p.a + p.b * p.b + std::abs(p.g));
        EXPECT_NEAR(rho.Q, q, 1e-14 * q);
        EXPECT_NEAR(std::abs(rho.matrix.trace() - 1.0), 0.0, 1e-14);
        EXPECT_GE(rho.eigenvalues.front(), -1e-14);
        std::vector<double> expected{std::abs(p.g) / q, std::abs(p.g) / q, (p.a - p.b) * (p.a - p.b) / q, (p.a + p.b) * (p.a + p.b) / q};
        std::sort(expected.begin(), expected.end());
        for(int i = 0; i < 4; ++i) EXPECT_NEAR(rho.eigenvalues[static_cast<std::size_t>(i)], expected[static_cast<std::size_t>(i)], 1e-12);
    }
}

TEST(RungDensity, TransitionPointIsSpinZeroMixture) {
    const auto rho = rung_density_finite(build_class_a(1.0, 0.0, 1, 1), 6);
    EXPECT_LE(std::abs(rho.matrix(0, 0)), 1e-15);
    EXPECT_LE(std::abs(rho.matrix(3, 3)), 1e-15);
    EXPECT_NEAR(std::abs(rho.matrix.trace() - 1.0), 0.0, 1e-14);
}

TEST(RungDensity, LargeCouplingLimit) {
    const auto  rho    = rung_density_closed_form(build_class_a(1.0, 1e6, 1, 1));
    DenseMatrix target = DenseMatrix::Zero(4, 4);
    target(0, 0) = target(3, 3) = 0.5;
    EXPECT_LE(max_abs(rho.matrix - target), 1e-5);
}

TEST(RungDensity, ClassBSpectrum) {
    const auto rho = rung_density_closed_form(build_class_b(2.0));
    EXPECT_NEAR(rho.eigenvalues[0], 1.0 / 7, 1e-14);
    EXPECT_NEAR(rho.eigenvalues[1], 1.0 / 7, 1e-14);
    EXPECT_NEAR(rho.eigenvalues[2], 1.0 / 7, 1e-14);
    EXPECT_NEAR(rho.eigenvalues[3], 4.0 / 7, 1e-14);
}

TEST(RungDensity, ThermoAndLargeRingAgreeWithClosedForm) {
    fixtures::RandomModels models(42);
    for(int trial = 0; trial < 100; ++trial) {
        const auto mps    = models.any();
        const auto closed = rung_density_closed_form(mps).matrix;
        EXPECT_LE(max_abs(rung_density_thermo(mps).matrix - closed), 1e-12);
        const double x = x_parameter(mps);
        if(std::abs(x) >= 0.05) EXPECT_LE(max_abs(rung_density_finite(mps, 1000).matrix - closed), 1e-10);
    }
    EXPECT_THROW(rung_density_thermo(build_class_a(1.0, 0.0, 1, 1)), DegenerateTopError);
}

TEST(Entropy, Examples) {
    EXPECT_NEAR(entropy(rung_density_closed_form(build_class_a(1.0, 0.0, 1, 1))), 0.0, 1e-14);
    EXPECT_NEAR(entropy_closed_form(spin_flip_params(build_class_b(0.0))), std::log2(3.0), 1e-12);
    EXPECT_NEAR(entropy(rung_density_closed_form(build_class_b(0.0))), 1.584963, 1e-6);
    EXPECT_NEAR(entropy_closed_form(spin_flip_params(build_class_a(1.0, 1e9, 1, 1))), 1.0, 1e-6);
}

TEST(Entropy, ClosedFormMatchesSpectrum) {
    fixtures::RandomModels models(43);
    for(int trial = 0; trial < 500; ++trial) {
        const auto p   = spin_flip_params(models.any());
        const auto rho = rung_density_closed_form(p);
        EXPECT_NEAR(entropy_closed_form(p), entropy_of(fixtures::sorted_eigenvalues(rho.matrix)), 1e-12);
        EXPECT_GE(entropy(rho), 0.0);
        EXPECT_LE(entropy(rho), 2.0 + 1e-14);
    }
}

TEST(Entropy, InvariantUnderInPlaneRotation) {
    fixtures::RandomModels models(44);
    for(int trial = 0; trial < 100; ++trial) {
        const auto        rho = rung_density_closed_form(models.any());
        const DenseMatrix u   = hermitian_exp(rung_operator("Sz").matrix, Complex(0.0, models.uniform(0.0, 6.3)));
        EXPECT_NEAR(entropy(make_rung_density(u * rho.matrix * u.adjoint())), entropy(rho), 1e-12);
    }
}

TEST(Concurrence, Examples) {
    EXPECT_NEAR(concurrence_closed_form(spin_flip_params(build_class_a(1.0, 0.0, 1, 1))), 1.0, 1e-15);
    EXPECT_NEAR(concurrence_closed_form(spin_flip_params(build_class_a(1.0, 1e9, 1, 1))), 0.0, 1e-15);
    EXPECT_NEAR(concurrence_closed_form(spin_flip_params(build_class_b(2.0))), 1.0 / 7, 1e-15);
    EXPECT_NEAR(concurrence_wootters(rung_density_closed_form(build_class_b(2.0)).matrix), 1.0 / 7, 1e-12);
}

TEST(Concurrence, ThreeRoutesAgree) {
    fixtures::RandomModels models(45);
    int                   clamped = 0;
    for(int trial = 0; trial < 2000; ++trial) {
        const auto   p      = spin_flip_params(models.any());
        const auto   rho    = rung_density_closed_form(p);
        const double closed = concurrence_closed_form(p);
        clamped += closed == 0.0 ? 1 : 0;
        EXPECT_NEAR(concurrence_wootters(rho.matrix), closed, 1e-10);
        EXPECT_NEAR(fixtures::wootters_by_definition(rho.matrix), closed, 1e-7);
        EXPECT_NEAR(concurrence(rho, ConcurrenceMethod::closed_form), closed, 1e-12);
    }
    EXPECT_GT(clamped, 100);
}

TEST(Concurrence, WoottersOnKnownStates) {
    DenseMatrix bell = DenseMatrix::Zero(4, 4);
    bell(1, 1) = bell(2, 2) = bell(1, 2) = bell(2, 1) = 0.5;
    EXPECT_NEAR(concurrence_wootters(bell), 1.0, 1e-12);
    EXPECT_NEAR(concurrence_wootters(DenseMatrix::Identity(4, 4) / 4.0), 0.0, 1e-12);
    EXPECT_THROW(concurrence_wootters(DenseMatrix::Identity(2, 2)), DimensionError);
}

TEST(IntraRung, Examples) {
    // Class A x = 1 at a = 1 (g = 2).
    for(int eps : {1, -1})
        for(int sig : {1, -1}) {
            const auto r = intra_rung(build_class_a(1.0, 2.0, eps, sig));
            EXPECT_NEAR(r.zz, 0.0, 1e-15);
            EXPECT_NEAR(r.nn, eps * sig / 2.0, 1e-15);
        }
    EXPECT_NEAR(intra_rung(build_class_a(1.0, 0.0, 1, 1)).s2, 2.0, 1e-15);
    EXPECT_NEAR(intra_rung(build_class_b(0.0)).nn, 1.0 / 3, 1e-15);
}

TEST(IntraRung, MatchesDensityTraces) {
    fixtures::RandomModels models(46);
    for(int trial = 0; trial < 300; ++trial) {
        const auto mps    = models.any();
        const auto rho    = rung_density_closed_form(mps).matrix;
        const auto closed = intra_rung(mps);
        const double theta = models.uniform(0.0, 6.3);
        EXPECT_NEAR((rho * rung_operator("zz").matrix).trace().real(), closed.zz, 1e-12);
        EXPECT_NEAR((rho * rung_operator("nn", theta).matrix).trace().real(), closed.nn, 1e-12);
        EXPECT_NEAR((rho * rung_operator("S2").matrix).trace().real(), closed.s2, 1e-12);
    }
}

TEST(IntraRung, ClassBIsotropy) {
    const auto rho = rung_density_closed_form(build_class_b(0.0)).matrix;
    for(int k = 0; k < 8; ++k)
        EXPECT_NEAR((rho * rung_operator("nn", k * fixtures::kPi / 4).matrix).trace().real(), 1.0 / 3, 1e-14);
    EXPECT_NEAR((rho * rung_operator("zz").matrix).trace().real(), 1.0 / 3, 1e-14);
}

TEST(DistanceCorrelator, Examples) {
    const CorrelationAxis z{CorrelationAxis::Kind::z, 0.0};
    const CorrelationAxis n{CorrelationAxis::Kind::in_plane, 0.0};
    EXPECT_NEAR(distance_correlator(build_class_a(1.0, 1.0, 1, 1), z, 2), -1.0 / 9, 1e-15);
    for(std::size_t r : {2, 3, 7}) EXPECT_EQ(distance_correlator(build_class_a(1.0, 0.8, -1, 1), n, r), 0.0);
    EXPECT_NEAR(distance_correlator(build_class_b(0.0), z, 4), -4.0 / 81, 1e-15);
    EXPECT_NEAR(distance_correlator(build_class_b(0.0), n, 4), -4.0 / 81, 1e-15);
    EXPECT_THROW(distance_correlator(build_class_a(1.0, 0.0, 1, 1), z, 2), DegenerateTopError);
    EXPECT_THROW(distance_correlator(build_class_a(1.0, 1.0, 1, 1), z, 1), ParameterError);
}

TEST(DistanceCorrelator, MatchesTransferTwoPoint) {
    fixtures::RandomModels models(47);
    for(int trial = 0; trial < 200; ++trial) {
        const auto   mps   = models.any();
        const double theta = models.uniform(0.0, 6.3);
        for(std::size_t r : {2, 3, 6}) {
            EXPECT_NEAR(distance_correlator(mps, {CorrelationAxis::Kind::z, 0.0}, r), two_point_thermo(mps, rung_operator("Sz"), r), 1e-12);
            EXPECT_NEAR(distance_correlator(mps, {CorrelationAxis::Kind::in_plane, theta}, r), two_point_thermo(mps, rung_operator("Sn", theta), r),
                        1e-12);
        }
    }
}

TEST(DistanceCorrelator, PureExponentialDecay) {
    fixtures::RandomModels models(48);
    for(int trial = 0; trial < 100; ++trial) {
        const auto   p     = spin_flip_params(models.any());
        const double s     = p.a * p.a + p.b * p.b;
        const double ratio = (s - std::abs(p.g)) / (s + std::abs(p.g));
        for(std::size_t r : {2, 5}) {
            const double here = distance_correlator(p, {CorrelationAxis::Kind::z, 0.0}, r);
            const double next = distance_correlator(p, {CorrelationAxis::Kind::z, 0.0}, r + 1);
            EXPECT_NEAR(next / here, ratio, 1e-12 * std::max(1.0, std::abs(ratio)));
        }
    }
}

TEST(DistanceCorrelator, ClassBIsotropy) {
    for(double u : {-1.5, 0.2, 2.3}) {
        const auto mps = build_class_b(u);
        for(std::size_t r : {2, 4}) {
            const double z = two_point_thermo(mps, rung_operator("Sz"), r);
            EXPECT_NEAR(two_point_thermo(mps, rung_operator("Sx"), r), z, 1e-12);
            EXPECT_NEAR(two_point_thermo(mps, rung_operator("Sy"), r), z, 1e-12);
        }
    }
}

TEST(CorrelationReport, LengthFormulas) {
    fixtures::RandomModels models(49);
    for(int trial = 0; trial < 200; ++trial) {
        const auto mps = models.any();
        const auto r   = correlation_report(spin_flip_params(mps));
        const double t = std::abs(r.x);
        EXPECT_LE(r.mu_t, 1.0 + 1e-15);
        EXPECT_NEAR(1.0 / r.xi_z, std::log((1 + t) / std::abs(1 - t)), 1e-12 * std::max(1.0, 1.0 / r.xi_z));
        const auto numeric = correlation_length(mps, rung_operator("Sz"));
        ASSERT_TRUE(numeric.is_finite());
        EXPECT_NEAR(numeric.value, r.xi_z, 1e-9 * std::max(1.0, r.xi_z));
    }
}

TEST(ClassReport, ClassAExamples) {
    const auto one = class_a_report(1.0, 1, 1);
    EXPECT_EQ(one.concurrence, 0.0);
    EXPECT_NEAR(one.entropy_bits, 1.5, 1e-15);
    EXPECT_NEAR(one.zz, 0.0, 1e-15);
    const auto rho = rung_density_thermo(build_class_a(1.0, 2.0, 1, 1));
    EXPECT_NEAR(entropy(rho), 1.5, 1e-12);

    const auto half = class_a_report(0.5, 1, 1);
    EXPECT_NEAR(half.concurrence, 1.0 / 3, 1e-15);
    EXPECT_NEAR(half.entropy_bits, 1.251629, 1e-6);
    EXPECT_NEAR(half.xi_z, 1.0 / std::log(3.0), 1e-15);
    EXPECT_NEAR(half.xi_n, 1.0 / std::log(1.5), 1e-15);
}

TEST(ClassReport, ClassAMatchesGeneralPipeline) {
    fixtures::RandomModels models(50);
    for(int trial = 0; trial < 200; ++trial) {
        const auto   mps = models.class_a();
        const double x   = x_parameter(mps);
        const auto   rep = class_a_report(x, mps.params.epsilon, mps.params.sigma);
        const auto   p   = spin_flip_params(mps);
        EXPECT_NEAR(rep.entropy_bits, entropy_closed_form(p), 1e-12);
        EXPECT_NEAR(rep.concurrence, concurrence_closed_form(p), 1e-12);
        EXPECT_NEAR(rep.zz, intra_rung(mps).zz, 1e-12);
        EXPECT_NEAR(rep.nn, intra_rung(mps).nn, 1e-12);
        EXPECT_NEAR(rep.xi_n, correlation_report(p).xi_n, 1e-9 * rep.xi_n);
    }
}

TEST(ClassReport, ClassBMatchesGeneralPipeline) {
    for(double u = -4.0; u <= 4.0; u += 0.37) {
        const auto rep = class_b_report(u);
        const auto p   = spin_flip_params(build_class_b(u));
        EXPECT_NEAR(rep.entropy_bits, entropy_closed_form(p), 1e-12);
        EXPECT_NEAR(rep.concurrence, concurrence_closed_form(p), 1e-12);
        EXPECT_NEAR(rep.zz, intra_rung_closed_form(p).zz, 1e-12);
        EXPECT_NEAR(rep.nn, intra_rung_closed_form(p).nn, 1e-12);
        EXPECT_NEAR(rep.xi_z, correlation_report(p).xi_z, 1e-12 * std::max(1.0, rep.xi_z));
    }
    EXPECT_EQ(class_b_report(std::sqrt(3.0)).concurrence, 0.0);
}
