#pragma once

// Floquet operator U = exp(-i J tau H_zz) exp(-i tau sum sigma^y) in the
// parity basis, its powers, spectrum and exact period.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "symfloq/errors.hpp"
#include "symfloq/symbasis.hpp"
#include "symfloq/types.hpp"

namespace symfloq {

struct FloquetParams {
    int n_qubits = 2;
    double ising_strength = 1.0;
    double kick_period = pi / 4;

    void validate() const {
        if (n_qubits < 2) throw std::invalid_argument("n_qubits must be >= 2");
        if (!std::isfinite(ising_strength)) throw std::invalid_argument("J must be finite");
        if (!(kick_period > 0.0) || !std::isfinite(kick_period))
            throw std::invalid_argument("tau must be > 0");
    }
};

struct BlockUnitary {
    int n_qubits = 0;
    cmat u_plus;
    cmat u_minus;

    static BlockUnitary identity(int n) {
        return {n, cmat::Identity(plus_dim(n), plus_dim(n)), cmat::Identity(minus_dim(n), minus_dim(n))};
    }

    cmat full() const {
        const auto p = u_plus.rows(), m = u_minus.rows();
        cmat u = cmat::Zero(p + m, p + m);
        u.topLeftCorner(p, p) = u_plus;
        u.bottomRightCorner(m, m) = u_minus;
        return u;
    }
};

struct SpectralData {
    std::vector<cplx> eigenvalues;
    std::vector<int> block_labels;  // +1 plus block, -1 minus block
};

inline cplx ising_phase(int n, int q, double J, double tau) {
    if (q < 0 || q > n) throw std::invalid_argument("ising_phase: q out of range");
    const double d = n - 2.0 * q;
    return std::polar(1.0, -J * tau * (d * d - n) / 2.0);
}

// exp(-2 i tau J_y) on the spin-N/2 multiplet, Dicke ordering q = j - m.
inline cmat kick_matrix(int n, double tau) {
    if (n < 1) throw std::invalid_argument("kick_matrix: n must be >= 1");
    const double j = n / 2.0;
    cmat jy = cmat::Zero(n + 1, n + 1);
    for (int q = 0; q < n; ++q) {
        const double m = j - q;
        const double val = std::sqrt(j * (j + 1) - m * (m - 1));
        jy(q + 1, q) = -val / (2.0 * I);
        jy(q, q + 1) = val / (2.0 * I);
    }
    Eigen::SelfAdjointEigenSolver<cmat> es(jy);
    cvec ph(n + 1);
    for (int k = 0; k <= n; ++k) ph(k) = std::polar(1.0, -2.0 * tau * es.eigenvalues()(k));
    cmat k = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    return k.real().cast<cplx>();
}

inline cmat dicke_floquet(const FloquetParams& p) {
    const int n = p.n_qubits;
    cvec phase(n + 1);
    for (int q = 0; q <= n; ++q) phase(q) = ising_phase(n, q, p.ising_strength, p.kick_period);
    return phase.asDiagonal() * kick_matrix(n, p.kick_period);
}

inline constexpr double kLeakageLimit = 1e-10;

inline BlockUnitary build_floquet(const FloquetParams& p, const BasisMap& m) {
    p.validate();
    if (m.n_qubits != p.n_qubits) throw std::invalid_argument("build_floquet: basis map size mismatch");
    const int n = p.n_qubits;
    const cmat u = m.transform * dicke_floquet(p) * m.transform.adjoint();
    const int P = plus_dim(n), M = minus_dim(n);
    const double leak = std::max(max_abs(u.topRightCorner(P, M)), max_abs(u.bottomLeftCorner(M, P)));
    if (leak >= kLeakageLimit)
        throw numeric_error("parity block leakage " + std::to_string(leak) + " in Floquet operator");
    return {n, u.topLeftCorner(P, P), u.bottomRightCorner(M, M)};
}

inline BlockUnitary build_floquet(const FloquetParams& p) { return build_floquet(p, make_basis_map(p.n_qubits)); }

namespace detail {

inline cmat block_power(const cmat& u, long long n) {
    if (n == 0) return cmat::Identity(u.rows(), u.cols());
    if (n == 1) return u;
    Eigen::ComplexSchur<cmat> cs(u);
    const cmat& q = cs.matrixU();
    cvec d(u.rows());
    for (Eigen::Index i = 0; i < d.size(); ++i)
        d(i) = std::polar(1.0, static_cast<double>(n) * std::arg(cs.matrixT()(i, i)));
    return q * d.asDiagonal() * q.adjoint();
}

inline cmat block_power_by_squaring(cmat base, long long n) {
    cmat r = cmat::Identity(base.rows(), base.cols());
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

inline std::vector<cplx> block_eigenvalues(const cmat& u) {
    Eigen::ComplexEigenSolver<cmat> es(u, false);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

}  // namespace detail

inline BlockUnitary power(const BlockUnitary& u, long long n) {
    if (n < 0) throw std::invalid_argument("power: n must be >= 0");
    return {u.n_qubits, detail::block_power(u.u_plus, n), detail::block_power(u.u_minus, n)};
}

inline void check_dims(const BlockUnitary& u, const PhiAmplitudes& s) {
    if (s.n_qubits != u.n_qubits || s.plus.size() != u.u_plus.rows() || s.minus.size() != u.u_minus.rows())
        throw std::invalid_argument("evolve: dimension mismatch");
}

inline PhiAmplitudes apply(const BlockUnitary& u, const PhiAmplitudes& s) {
    check_dims(u, s);
    return {s.n_qubits, u.u_plus * s.plus, u.u_minus * s.minus};
}

inline PhiAmplitudes evolve(const PhiAmplitudes& s, const BlockUnitary& u, long long n) {
    check_dims(u, s);
    if (n == 0) return s;
    return apply(power(u, n), s);
}

inline SpectralData spectrum(const BlockUnitary& u) {
    struct E {
        cplx v;
        int label;
    };
    std::vector<E> all;
    for (auto v : detail::block_eigenvalues(u.u_plus)) all.push_back({v, +1});
    for (auto v : detail::block_eigenvalues(u.u_minus)) all.push_back({v, -1});
    std::stable_sort(all.begin(), all.end(), [](const E& a, const E& b) {
        const double pa = std::arg(a.v), pb = std::arg(b.v);
        if (std::abs(pa - pb) > 1e-12) return pa < pb;
        return a.label > b.label;
    });
    SpectralData s;
    for (const auto& e : all) {
        s.eigenvalues.push_back(e.v);
        s.block_labels.push_back(e.label);
    }
    return s;
}

inline constexpr long long kDefaultPeriodMax = 10000;
inline constexpr double kDefaultPeriodTol = 1e-8;

// Smallest n <= n_max with ||U^n - I||_max < tol. Candidates come from the
// eigenphases; each is confirmed with repeated squaring of the blocks.
inline std::optional<long long> operator_period(const BlockUnitary& u, long long n_max = kDefaultPeriodMax,
                                                double tol = kDefaultPeriodTol) {
    if (n_max < 1 || !(tol > 0)) throw std::invalid_argument("operator_period: need n_max >= 1 and tol > 0");
    const auto sp = spectrum(u).eigenvalues;
    for (long long n = 1; n <= n_max; ++n) {
        bool ok = true;
        for (const auto& l : sp)
            if (std::abs(std::polar(1.0, static_cast<double>(n) * std::arg(l)) - 1.0) >= tol) {
                ok = false;
                break;
            }
        if (!ok) continue;
        const auto up = detail::block_power_by_squaring(u.u_plus, n);
        const auto um = detail::block_power_by_squaring(u.u_minus, n);
        const double dev = std::max(max_abs(up - cmat::Identity(up.rows(), up.cols())),
                                    max_abs(um - cmat::Identity(um.rows(), um.cols())));
        if (dev < tol) return n;
    }
    return std::nullopt;
}

// Smallest n with U^n = e^{i alpha} I; returned as (n, alpha).
struct ProjectivePeriod {
    long long n;
    double alpha;
};

inline std::optional<ProjectivePeriod> projective_period(const BlockUnitary& u, long long n_max = kDefaultPeriodMax,
                                                         double tol = kDefaultPeriodTol) {
    const auto sp = spectrum(u).eigenvalues;
    for (long long n = 1; n <= n_max; ++n) {
        const cplx ref = std::polar(1.0, static_cast<double>(n) * std::arg(sp.front()));
        bool ok = true;
        for (const auto& l : sp)
            if (std::abs(std::polar(1.0, static_cast<double>(n) * std::arg(l)) - ref) >= tol) {
                ok = false;
                break;
            }
        if (ok) return ProjectivePeriod{n, std::arg(ref)};
    }
    return std::nullopt;
}

}  // namespace symfloq
