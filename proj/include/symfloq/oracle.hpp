#pragma once

// Full 2^N state-vector reference. Qubit l is bit l of the basis index
// (little-endian); bit value 1 is |1>.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "symfloq/entangle.hpp"
#include "symfloq/floquet.hpp"
#include "symfloq/symbasis.hpp"
#include "symfloq/types.hpp"

namespace symfloq {

inline constexpr int kMaxBruteQubits = 12;

struct FullState {
    int n_qubits = 0;
    cvec amps;
};

namespace detail {
inline void check_brute_size(int n) {
    if (n < 1 || n > kMaxBruteQubits)
        throw std::invalid_argument("brute-force oracle supports 1 <= N <= " + std::to_string(kMaxBruteQubits));
}
inline int popcount(std::uint32_t b) { return std::popcount(b); }
}  // namespace detail

inline FullState brute_coherent(const CoherentParams& p) {
    p.validate();
    detail::check_brute_size(p.n_qubits);
    const int n = p.n_qubits;
    const cplx up = std::cos(p.theta0 / 2), dn = std::polar(std::sin(p.theta0 / 2), -p.phi0);
    FullState s{n, cvec(std::int64_t{1} << n)};
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
        cplx a = 1;
        for (int l = 0; l < n; ++l) a *= ((b >> l) & 1u) ? dn : up;
        s.amps(b) = a;
    }
    return s;
}

// One Floquet period U = exp(-i tau J H_I) exp(-i tau sum sigma^y): the
// rotation acts on the state first, then the popcount phase.
inline FullState brute_step(const FullState& in, double J, double tau) {
    const int n = in.n_qubits;
    detail::check_brute_size(n);
    FullState s = in;
    const std::uint32_t dim = 1u << n;
    const double c = std::cos(tau), sn = std::sin(tau);
    for (int l = 0; l < n; ++l) {
        const std::uint32_t bit = 1u << l;
        for (std::uint32_t b = 0; b < dim; ++b) {
            if (b & bit) continue;
            const cplx a0 = s.amps(b), a1 = s.amps(b | bit);
            s.amps(b) = c * a0 - sn * a1;
            s.amps(b | bit) = sn * a0 + c * a1;
        }
    }
    for (std::uint32_t b = 0; b < dim; ++b) {
        const double d = n - 2.0 * detail::popcount(b);
        s.amps(b) *= std::polar(1.0, -J * tau * (d * d - n) / 2.0);
    }
    return s;
}

inline Rdm1 brute_rdm1(const FullState& s, int i) {
    const int n = s.n_qubits;
    if (i < 0 || i >= n) throw std::invalid_argument("brute_rdm1: qubit index out of range");
    Rdm1 r;
    r.m.setZero();
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if (b & bit) continue;
        const cplx a0 = s.amps(b), a1 = s.amps(b | bit);
        r.m(0, 0) += a0 * std::conj(a0);
        r.m(0, 1) += a0 * std::conj(a1);
        r.m(1, 0) += a1 * std::conj(a0);
        r.m(1, 1) += a1 * std::conj(a1);
    }
    return r;
}

inline Rdm2 brute_rdm2(const FullState& s, int i, int j) {
    const int n = s.n_qubits;
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("brute_rdm2: indices must be distinct and in range");
    const std::uint32_t bi = 1u << i, bj = 1u << j;
    Rdm2 r;
    r.m.setZero();
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if (b & (bi | bj)) continue;
        cplx a[4];
        for (int k = 0; k < 4; ++k) a[k] = s.amps(b | ((k & 2) ? bi : 0u) | ((k & 1) ? bj : 0u));
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) r.m(x, y) += a[x] * std::conj(a[y]);
    }
    return r;
}

inline std::variant<Rdm1, Rdm2> brute_rdm(const FullState& s, const std::vector<int>& keep) {
    if (keep.size() == 1) return brute_rdm1(s, keep[0]);
    if (keep.size() == 2) return brute_rdm2(s, keep[0], keep[1]);
    throw std::invalid_argument("brute_rdm: keep must list 1 or 2 qubits");
}

inline FullState embed_dicke(const DickeAmplitudes& d) {
    detail::check_brute_size(d.n_qubits);
    const int n = d.n_qubits;
    FullState s{n, cvec(std::int64_t{1} << n)};
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
        const int m = detail::popcount(b);
        s.amps(b) = d.amps(m) / std::sqrt(binomial(n, m));
    }
    return s;
}

inline DickeAmplitudes project_dicke(const FullState& s) {
    const int n = s.n_qubits;
    DickeAmplitudes d{n, cvec::Zero(n + 1)};
    for (std::uint32_t b = 0; b < (1u << n); ++b) d.amps(detail::popcount(b)) += s.amps(b);
    for (int m = 0; m <= n; ++m) d.amps(m) /= std::sqrt(binomial(n, m));
    return d;
}

// Largest amplitude outside the symmetric sector.
inline double sector_leakage(const FullState& s) { return max_abs(cvec(s.amps - embed_dicke(project_dicke(s)).amps)); }

// Global parity, sigma^y on every qubit.
inline FullState apply_parity(const FullState& s) {
    const int n = s.n_qubits;
    const std::uint32_t mask = (1u << n) - 1;
    FullState out{n, cvec::Zero(s.amps.size())};
    for (std::uint32_t b = 0; b <= mask; ++b) {
        const int ones = detail::popcount(b);
        out.amps(b ^ mask) = s.amps(b) * ipow(n - ones) * ipow(-ones);
    }
    return out;
}

inline cmat dicke_isometry(int n) {
    detail::check_brute_size(n);
    cmat d = cmat::Zero(std::int64_t{1} << n, n + 1);
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
        const int m = detail::popcount(b);
        d(b, m) = 1.0 / std::sqrt(binomial(n, m));
    }
    return d;
}

inline cmat brute_floquet_matrix(int n, double J, double tau) {
    detail::check_brute_size(n);
    const std::int64_t dim = std::int64_t{1} << n;
    cmat u(dim, dim);
    for (std::int64_t k = 0; k < dim; ++k) {
        FullState e{n, cvec::Zero(dim)};
        e.amps(k) = 1;
        u.col(k) = brute_step(e, J, tau).amps;
    }
    return u;
}

inline std::vector<StepRecord> brute_series(const CoherentParams& p, const FloquetParams& f, long long n_steps,
                                            const Measures& want = {}) {
    f.validate();
    FullState s = brute_coherent(p);
    std::vector<StepRecord> out;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    for (long long n = 0; n <= n_steps; ++n) {
        StepRecord rec{n, nan, nan, nan};
        if (want.s_lin || want.s_vn) {
            const Rdm1 r = brute_rdm1(s, 0);
            if (want.s_lin) rec.s_lin = linear_entropy(r);
            if (want.s_vn) rec.s_vn = vn_entropy(r);
        }
        if (want.conc) rec.conc = concurrence(brute_rdm2(s, 0, 1));
        out.push_back(rec);
        if (n < n_steps) s = brute_step(s, f.ising_strength, f.kick_period);
    }
    return out;
}

inline constexpr double kCrosscheckTol = 1e-9;

struct CrosscheckReport {
    double amps = 0, rdm1 = 0, rdm2 = 0, s_lin = 0, s_vn = 0, conc = 0, leakage = 0;
    bool pass = false;

    double worst() const { return std::max({amps, rdm1, rdm2, s_lin, s_vn, conc, leakage}); }
    std::string summary() const {
        std::ostringstream o;
        o.precision(3);
        o << std::scientific << "amps=" << amps << " rdm1=" << rdm1 << " rdm2=" << rdm2 << " s_lin=" << s_lin
          << " s_vn=" << s_vn << " conc=" << conc << " leak=" << leakage;
        return o.str();
    }
};

inline CrosscheckReport crosscheck(const CoherentParams& p, const FloquetParams& f, long long n_steps) {
    if (p.n_qubits != f.n_qubits) throw std::invalid_argument("crosscheck: N mismatch");
    const BasisMap m = make_basis_map(p.n_qubits);
    const BlockUnitary u = build_floquet(f, m);
    PhiAmplitudes phi = coherent_to_phi(p);
    FullState s = brute_coherent(p);
    CrosscheckReport r;
    auto upd = [](double& slot, double v) { slot = std::max(slot, v); };
    for (long long n = 0; n <= n_steps; ++n) {
        const DickeAmplitudes d = phi_to_dicke(phi, m);
        const DickeAmplitudes pd = project_dicke(s);
        upd(r.amps, max_abs(cvec(d.amps - pd.amps)));
        upd(r.leakage, sector_leakage(s));
        const Rdm1 a1 = rdm1(d), b1 = brute_rdm1(s, 0);
        const Rdm2 a2 = rdm2(d), b2 = brute_rdm2(s, 0, 1);
        upd(r.rdm1, (a1.m - b1.m).cwiseAbs().maxCoeff());
        upd(r.rdm2, (a2.m - b2.m).cwiseAbs().maxCoeff());
        upd(r.s_lin, std::abs(linear_entropy(a1) - linear_entropy(b1)));
        upd(r.s_vn, std::abs(vn_entropy(a1) - vn_entropy(b1)));
        upd(r.conc, std::abs(concurrence(a2) - concurrence(b2)));
        if (n < n_steps) {
            phi = apply(u, phi);
            s = brute_step(s, f.ising_strength, f.kick_period);
        }
    }
    r.pass = r.worst() < kCrosscheckTol;
    return r;
}

}  // namespace symfloq
