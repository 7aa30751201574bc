#include <gtest/gtest.h>

#include <random>

#include "symfloq/oracle.hpp"
#include "symfloq/symbasis.hpp"

using namespace symfloq;

namespace {

cvec random_state(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    cvec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
    return v / v.norm();
}

}  // namespace

TEST(CoherentParams, RejectsOutOfDomainAngles) {
    EXPECT_THROW((CoherentParams{4, -0.1, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((CoherentParams{4, 3.2, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((CoherentParams{4, 1, 3.2}.validate()), std::invalid_argument);
    EXPECT_THROW((CoherentParams{1, 1, 0}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((CoherentParams{4, pi, -pi}.validate()));
}

TEST(Binomial, ExactBelowSixtyAndLogGammaAbove) {
    EXPECT_EQ(binomial(10, 3), 120.0);
    EXPECT_EQ(binomial(60, 30), 118264581564861424.0);
    EXPECT_EQ(binomial(5, 7), 0.0);
    EXPECT_NEAR(binomial(70, 35) / 1.1218627781666798e20, 1.0, 1e-12);
}

TEST(CoherentToDicke, PolesAndEquator) {
    const auto up = coherent_to_dicke({6, 0, 1.3});
    for (int q = 0; q <= 6; ++q) EXPECT_EQ(std::abs(up.amps(q)), q == 0 ? 1.0 : 0.0);
    const auto eq = coherent_to_dicke({2, pi / 2, 0});
    EXPECT_NEAR(std::abs(eq.amps(0) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(eq.amps(1) - 1 / std::sqrt(2.0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(eq.amps(2) - 0.5), 0, 1e-15);
}

TEST(CoherentToDicke, MatchesProjectedProductState) {
    const CoherentParams p{4, 2 * pi / 3, -pi / 12};
    const auto d = coherent_to_dicke(p);
    const auto b = project_dicke(brute_coherent(p));
    EXPECT_LT(max_abs(cvec(d.amps - b.amps)), 1e-12);
    EXPECT_LT(sector_leakage(brute_coherent(p)), 1e-12);
}

TEST(CoherentToDicke, RealPositiveAtZeroAzimuth) {
    const auto d = coherent_to_dicke({9, 1.2, 0});
    for (int q = 0; q <= 9; ++q) {
        EXPECT_EQ(d.amps(q).imag(), 0.0);
        EXPECT_GT(d.amps(q).real(), 0.0);
    }
}

TEST(CoherentToPhi, PoleCoefficients) {
    const double r = 1 / std::sqrt(2.0);
    for (int n : {4, 5}) {
        const auto phi = coherent_to_phi({n, 0, 0});
        EXPECT_NEAR(std::abs(phi.plus(0) - r), 0, 1e-15);
        EXPECT_NEAR(std::abs(phi.minus(0) - r), 0, 1e-15);
        EXPECT_NEAR(phi.plus.tail(phi.plus.size() - 1).norm(), 0, 1e-15);
        EXPECT_NEAR(phi.minus.tail(phi.minus.size() - 1).norm(), 0, 1e-15);
    }
}

TEST(CoherentToPhi, PathIndependence) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> th(0, pi), ph(-pi, pi);
    std::uniform_int_distribution<int> dn(2, 24);
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        const CoherentParams p{dn(rng), th(rng), ph(rng)};
        const auto a = coherent_to_phi(p);
        const auto b = dicke_to_phi(coherent_to_dicke(p), make_basis_map(p.n_qubits));
        worst = std::max(worst, max_abs(cvec(a.stacked() - b.stacked())));
    }
    EXPECT_LT(worst, 1e-12);
    const CoherentParams p{7, 3, -2};
    EXPECT_LT(max_abs(cvec(coherent_to_phi(p).stacked() -
                           dicke_to_phi(coherent_to_dicke(p), make_basis_map(7)).stacked())),
              1e-12);
}

TEST(CoherentToPhi, NormalizedUpToTwentyFour) {
    for (int n = 2; n <= 24; ++n) {
        const CoherentParams p{n, 1.1, -0.4};
        EXPECT_NEAR(coherent_to_dicke(p).amps.norm(), 1.0, 1e-12);
        EXPECT_NEAR(coherent_to_phi(p).stacked().norm(), 1.0, 1e-12);
    }
}

TEST(BasisMap, UnitaryWithTwoPointSupport) {
    for (int n = 2; n <= 14; ++n) {
        const auto m = make_basis_map(n);
        const cmat& T = m.transform;
        EXPECT_LT(max_abs(cmat(T.adjoint() * T - cmat::Identity(n + 1, n + 1))), 1e-12);
        const int P = plus_dim(n);
        for (int k = 0; k < pair_count(n); ++k) {
            const cplx s = std::conj(parity_phase(n, k)) / std::sqrt(2.0);
            EXPECT_LT(std::abs(T(k, n - k) - s), 1e-15);
            EXPECT_LT(std::abs(T(P + k, n - k) + s), 1e-15);
            EXPECT_NEAR((T.row(k).cwiseAbs().array() > 0).count(), 2, 0);
        }
        if (n % 2 == 0) {
            EXPECT_EQ(T(n / 2, n / 2), cplx(1, 0));
        }
    }
}

TEST(DickeToPhi, SingleDickeStates) {
    const auto m5 = make_basis_map(5);
    DickeAmplitudes d{5, cvec::Zero(6)};
    d.amps(0) = 1;
    const auto phi = dicke_to_phi(d, m5);
    EXPECT_NEAR(std::abs(phi.plus(0)), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(phi.minus(0)), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_LT(max_abs(cvec(phi_to_dicke(phi, m5).amps - d.amps)), 1e-15);

    DickeAmplitudes mid{4, cvec::Zero(5)};
    mid.amps(2) = 1;
    const auto pm = dicke_to_phi(mid, make_basis_map(4));
    EXPECT_NEAR(std::abs(pm.plus(2) - 1.0), 0, 1e-15);
    EXPECT_NEAR(pm.stacked().norm(), 1.0, 1e-15);
}

TEST(PhiToDicke, LowestParityStatesN4) {
    const auto m = make_basis_map(4);
    const double r = 1 / std::sqrt(2.0);
    cvec e = cvec::Zero(5);
    e(0) = 1;
    auto c = phi_to_dicke(PhiAmplitudes::from_stacked(4, e), m).amps;
    EXPECT_LT(std::abs(c(0) - r) + std::abs(c(4) - r), 1e-15);
    e.setZero();
    e(3) = 1;
    c = phi_to_dicke(PhiAmplitudes::from_stacked(4, e), m).amps;
    EXPECT_LT(std::abs(c(0) - r) + std::abs(c(4) + r), 1e-15);
}

TEST(PhiToDicke, RoundTripRandomStates) {
    std::mt19937_64 rng(3);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + i % 9;
        const auto m = make_basis_map(n);
        const DickeAmplitudes d{n, random_state(rng, n + 1)};
        const auto phi = dicke_to_phi(d, m);
        EXPECT_NEAR(phi.stacked().norm(), 1.0, 1e-12);
        worst = std::max(worst, max_abs(cvec(phi_to_dicke(phi, m).amps - d.amps)));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(DickeToPhi, DimensionMismatchThrows) {
    const DickeAmplitudes d{5, cvec::Zero(6)};
    EXPECT_THROW(dicke_to_phi(d, make_basis_map(4)), std::invalid_argument);
}

// Parity states are eigenstates of the global sigma^y product with eigenvalue +-1.
TEST(ParityBasis, EigenstatesOfGlobalParity) {
    for (int n = 2; n <= 8; ++n) {
        const auto m = make_basis_map(n);
        for (int j = 0; j <= n; ++j) {
            cvec e = cvec::Zero(n + 1);
            e(j) = 1;
            const FullState s = embed_dicke(phi_to_dicke(PhiAmplitudes::from_stacked(n, e), m));
            const double sign = j < plus_dim(n) ? 1.0 : -1.0;
            EXPECT_LT(max_abs(cvec(apply_parity(s).amps - sign * s.amps)), 1e-12) << "N=" << n << " j=" << j;
        }
    }
}
