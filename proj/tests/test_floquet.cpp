#include <gtest/gtest.h>

#include <random>

#include "symfloq/analytic.hpp"
#include "symfloq/floquet.hpp"
#include "symfloq/oracle.hpp"

using namespace symfloq;

namespace {

double unitarity(const cmat& m) { return max_abs(cmat(m.adjoint() * m - cmat::Identity(m.rows(), m.cols()))); }

bool contains(const std::vector<cplx>& v, cplx z, double tol) {
    for (auto x : v)
        if (std::abs(x - z) < tol) return true;
    return false;
}

}  // namespace

TEST(IsingPhase, SpecValues) {
    const double J = 0.37, t = 1.3;
    EXPECT_LT(std::abs(ising_phase(4, 0, J, t) - std::polar(1.0, -6 * J * t)), 1e-15);
    EXPECT_LT(std::abs(ising_phase(4, 2, J, t) - std::polar(1.0, 2 * J * t)), 1e-15);
    EXPECT_LT(std::abs(ising_phase(6, 1, 1, pi / 4) - std::polar(1.0, -5 * pi / 4)), 1e-15);
    EXPECT_THROW(ising_phase(4, 5, 1, 1), std::invalid_argument);
}

TEST(KickMatrix, SingleQubitAndIdentity) {
    const cmat k = kick_matrix(1, pi / 4);
    const double c = std::cos(pi / 4);
    EXPECT_LT(std::abs(k(0, 0) - c) + std::abs(k(0, 1) + c) + std::abs(k(1, 0) - c) + std::abs(k(1, 1) - c), 1e-15);
    EXPECT_LT(max_abs(cmat(kick_matrix(7, 0) - cmat::Identity(8, 8))), 1e-14);
}

TEST(KickMatrix, RealUnitaryAndEqualToProjectedRotation) {
    for (int n = 1; n <= 10; ++n) {
        const cmat k = kick_matrix(n, 0.83);
        EXPECT_LT(unitarity(k), 1e-12);
        EXPECT_EQ(k.imag().cwiseAbs().maxCoeff(), 0.0);
        const cmat V = dicke_isometry(n);
        const cmat brute = V.adjoint() * brute_floquet_matrix(n, 0.0, 0.83) * V;
        EXPECT_LT(max_abs(cmat(brute - k)), 1e-12) << "N=" << n;
    }
}

TEST(BuildFloquet, BlocksUnitaryAndBlockDiagonal) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dj(-2, 2), dt(0.01, 3);
    for (int n = 2; n <= 64; n += (n < 16 ? 1 : 8)) {
        const FloquetParams p{n, dj(rng), dt(rng)};
        const auto u = build_floquet(p);
        EXPECT_LT(unitarity(u.u_plus), 1e-12) << n;
        EXPECT_LT(unitarity(u.u_minus), 1e-12) << n;
        const auto m = make_basis_map(n);
        const cmat full = m.transform * dicke_floquet(p) * m.transform.adjoint();
        EXPECT_LT(max_abs(cmat(full - u.full())), 1e-12);
    }
}

TEST(BuildFloquet, ReferenceBlocksN4N5N6Half) {
    for (const auto& g : golden_blocks()) {
        if (!((g.n_qubits == 4 && g.J == 1) || (g.n_qubits == 5 && g.J == 1) || (g.n_qubits == 6 && g.J == 0.5)))
            continue;
        const auto u = build_floquet({g.n_qubits, g.J, pi / 4});
        EXPECT_LT(max_abs(cmat(u.u_plus - to_canonical(g.plus, g.perm_plus))), 1e-12);
        EXPECT_LT(max_abs(cmat(u.u_minus - to_canonical(g.minus, g.perm_minus))), 1e-12);
    }
}

TEST(BuildFloquet, MatchesOracleOnSymmetricSector) {
    for (int n = 2; n <= 10; ++n) {
        const FloquetParams p{n, 0.61, 0.97};
        const cmat V = dicke_isometry(n);
        const cmat brute = V.adjoint() * brute_floquet_matrix(n, p.ising_strength, p.kick_period) * V;
        EXPECT_LT(max_abs(cmat(brute - dicke_floquet(p))), 1e-10) << "N=" << n;
    }
}

TEST(BuildFloquet, BasisSizeMismatchThrows) {
    EXPECT_THROW(build_floquet({5, 1, 1}, make_basis_map(4)), std::invalid_argument);
    EXPECT_THROW(build_floquet({4, 1, 0}), std::invalid_argument);
}

TEST(Power, IdentityOneAndComposition) {
    const auto u = build_floquet({7, 0.77, 0.6});
    const auto z = power(u, 0);
    EXPECT_LT(max_abs(cmat(z.full() - cmat::Identity(8, 8))), 1e-15);
    const auto one = power(u, 1);
    EXPECT_EQ(max_abs(cmat(one.full() - u.full())), 0.0);
    for (long long a : {3LL, 170LL, 4000LL}) {
        const long long b = 6000 - a;
        const cmat lhs = power(u, a + b).full();
        const cmat rhs = power(u, a).full() * power(u, b).full();
        EXPECT_LT(max_abs(cmat(lhs - rhs)), 1e-10);
    }
    EXPECT_THROW(power(u, -1), std::invalid_argument);
}

TEST(Power, EighthPowerIsIdentityN4) {
    const auto u = build_floquet({4, 1, pi / 4});
    EXPECT_LT(max_abs(cmat(power(u, 8).full() - cmat::Identity(5, 5))), 1e-10);
    const auto c = closed_un(4, 1, 3), p = power(u, 3);
    EXPECT_LT(max_abs(cmat(c.u_plus - p.u_plus)), 1e-12);
    EXPECT_LT(max_abs(cmat(c.u_minus - p.u_minus)), 1e-12);
}

TEST(Evolve, ZeroStepsPeriodAndOracle) {
    const CoherentParams s0{4, 0, 0};
    const auto u4 = build_floquet({4, 1, pi / 4});
    const auto phi = coherent_to_phi(s0);
    EXPECT_EQ(max_abs(cvec(evolve(phi, u4, 0).stacked() - phi.stacked())), 0.0);
    EXPECT_LT(max_abs(cvec(evolve(phi, u4, 8).stacked() - phi.stacked())), 1e-12);

    const CoherentParams p{6, 2 * pi / 3, -pi / 12};
    const auto m = make_basis_map(6);
    const auto u6 = build_floquet({6, 1, pi / 4}, m);
    const auto phi5 = evolve(coherent_to_phi(p), u6, 5);
    EXPECT_NEAR(phi5.stacked().norm(), 1.0, 1e-12);
    FullState b = brute_coherent(p);
    for (int i = 0; i < 5; ++i) b = brute_step(b, 1, pi / 4);
    EXPECT_LT(max_abs(cvec(phi_to_dicke(phi5, m).amps - project_dicke(b).amps)), 1e-10);
    EXPECT_THROW(evolve(coherent_to_phi({5, 1, 1}), u6, 2), std::invalid_argument);
}

TEST(Spectrum, ReferenceListsN4N5) {
    const auto s4 = spectrum(build_floquet({4, 1, pi / 4}));
    ASSERT_EQ(s4.eigenvalues.size(), 5u);
    const cplx w = std::polar(1.0, 3 * pi / 4);
    for (cplx z : {cplx(-1), I, -I, w, -w}) EXPECT_TRUE(contains(s4.eigenvalues, z, 1e-10));
    for (auto z : s4.eigenvalues) EXPECT_NEAR(std::abs(z), 1.0, 1e-10);

    const auto s5 = spectrum(build_floquet({5, 1, pi / 4}));
    const cplx e = std::polar(1.0, pi / 4), t = std::polar(1.0, 2 * pi / 3);
    for (cplx z : {e, e * I, e * t, e * std::conj(t), e * I * t, e * I * std::conj(t)})
        EXPECT_TRUE(contains(s5.eigenvalues, z, 1e-10));

    // The (N=4, J=1/2) pair sits at +-e^{+i pi/8}; see the spectra erratum.
    const auto h = spectrum(build_floquet({4, 0.5, pi / 4}));
    const cplx a = std::polar(1.0, pi / 8);
    for (cplx z : {a, -a, std::polar(1.0, -5 * pi / 12), std::polar(1.0, 11 * pi / 12), cplx(-1)})
        EXPECT_TRUE(contains(h.eigenvalues, z, 1e-10));
}

TEST(Spectrum, SortedWithLabels) {
    const auto s = spectrum(build_floquet({9, 0.3, 1.1}));
    ASSERT_EQ(s.eigenvalues.size(), s.block_labels.size());
    for (size_t i = 1; i < s.eigenvalues.size(); ++i)
        EXPECT_LE(std::arg(s.eigenvalues[i - 1]), std::arg(s.eigenvalues[i]) + 1e-15);
}

TEST(OperatorPeriod, TableAndAbsence) {
    const std::vector<std::tuple<int, double, long long>> table = {
        {4, 1, 8}, {5, 1, 24}, {6, 1, 8}, {7, 1, 12}, {8, 1, 8}, {9, 1, 24}, {10, 1, 8},
        {4, 0.5, 48}, {6, 0.5, 16}, {8, 0.5, 48}, {10, 0.5, 48}};
    for (auto [n, J, T] : table) {
        const auto p = operator_period(build_floquet({n, J, pi / 4}));
        ASSERT_TRUE(p.has_value()) << n;
        EXPECT_EQ(*p, T) << "N=" << n << " J=" << J;
    }
    EXPECT_FALSE(operator_period(build_floquet({6, 0.7, pi / 4}), 10000, 1e-8).has_value());

    // Odd N at J=1: U^12 = -I, so 12 is only the projective period.
    for (int n : {5, 9}) {
        const auto u = build_floquet({n, 1, pi / 4});
        const auto pp = projective_period(u);
        ASSERT_TRUE(pp.has_value());
        EXPECT_EQ(pp->n, 12);
        EXPECT_LT(max_abs(cmat(power(u, 12).full() + cmat::Identity(n + 1, n + 1))), 1e-10);
    }
}

TEST(OperatorPeriod, ProjectivePeriodReported) {
    const auto u = build_floquet({4, 1, pi / 4});
    const auto pp = projective_period(u);
    ASSERT_TRUE(pp.has_value());
    EXPECT_LE(pp->n, 8);
    EXPECT_EQ(8 % pp->n, 0);
}
