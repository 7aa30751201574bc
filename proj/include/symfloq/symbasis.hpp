#pragma once

// Coherent product states and the two symmetric-sector coordinate systems:
// Dicke amplitudes c_q (q = number of |1>) and the parity (phi) basis.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "symfloq/errors.hpp"
#include "symfloq/types.hpp"

namespace symfloq {

struct CoherentParams {
    int n_qubits = 2;
    double theta0 = 0.0;
    double phi0 = 0.0;

    void validate() const {
        if (n_qubits < 2) throw std::invalid_argument("n_qubits must be >= 2");
        if (!(theta0 >= 0.0 && theta0 <= pi))
            throw std::invalid_argument("theta0 outside [0, pi]: " + std::to_string(theta0));
        if (!(phi0 >= -pi && phi0 <= pi))
            throw std::invalid_argument("phi0 outside [-pi, pi]: " + std::to_string(phi0));
    }
};

struct DickeAmplitudes {
    int n_qubits = 0;
    cvec amps;
};

// Canonical order: plus block ascending in q, then minus block ascending in q.
struct PhiAmplitudes {
    int n_qubits = 0;
    cvec plus;
    cvec minus;

    cvec stacked() const {
        cvec v(plus.size() + minus.size());
        v << plus, minus;
        return v;
    }
    static PhiAmplitudes from_stacked(int n, const cvec& v);
};

struct BasisMap {
    int n_qubits = 0;
    cmat transform;  // Dicke coordinates -> phi coordinates
};

inline int plus_dim(int n) { return n / 2 + 1; }
inline int minus_dim(int n) { return n - n / 2; }
// Number of (q, N-q) pairs, i.e. plus rows excluding the even-N middle state.
inline int pair_count(int n) { return n - n / 2; }

inline PhiAmplitudes PhiAmplitudes::from_stacked(int n, const cvec& v) {
    if (v.size() != n + 1) throw std::invalid_argument("phi vector has wrong length");
    PhiAmplitudes p;
    p.n_qubits = n;
    p.plus = v.head(plus_dim(n));
    p.minus = v.tail(minus_dim(n));
    return p;
}

inline double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Exact for n <= 60 (fits in 64 bits, computed with a 128-bit accumulator).
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n > 60) return std::exp(log_binomial(n, k));
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<double>(static_cast<std::uint64_t>(r));
}

// i^e for integer e, exact.
inline cplx ipow(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// s_k in phi_k^{+/-} = (D_k +/- s_k D_{N-k}) / sqrt(2).
inline cplx parity_phase(int n, int k) {
    if (n % 2 == 0) return ((n / 2 - k) % 2 == 0) ? cplx{1, 0} : cplx{-1, 0};
    return ipow(n - 2 * k);
}

inline BasisMap make_basis_map(int n) {
    if (n < 1) throw std::invalid_argument("n_qubits must be >= 1");
    const int P = plus_dim(n);
    const int pairs = pair_count(n);
    const double r = 1.0 / std::sqrt(2.0);
    cmat T = cmat::Zero(n + 1, n + 1);
    for (int k = 0; k < pairs; ++k) {
        const cplx s = std::conj(parity_phase(n, k));
        T(k, k) = r;
        T(k, n - k) = s * r;
        T(P + k, k) = r;
        T(P + k, n - k) = -s * r;
    }
    if (n % 2 == 0) T(pairs, n / 2) = 1.0;
    return {n, T};
}

// sqrt(C(N,q)) cos^{N-q} sin^q with c, s >= 0; log-space above N = 60.
inline double coherent_magnitude(int n, int q, double c, double s) {
    if (n <= 60) return std::sqrt(binomial(n, q)) * std::pow(c, n - q) * std::pow(s, q);
    if ((c == 0.0 && n - q > 0) || (s == 0.0 && q > 0)) return 0.0;
    double l = 0.5 * log_binomial(n, q);
    if (n - q > 0) l += (n - q) * std::log(c);
    if (q > 0) l += q * std::log(s);
    return std::exp(l);
}

inline DickeAmplitudes coherent_to_dicke(const CoherentParams& p) {
    p.validate();
    const int n = p.n_qubits;
    const double c = std::cos(p.theta0 / 2), s = std::sin(p.theta0 / 2);
    DickeAmplitudes d{n, cvec(n + 1)};
    for (int q = 0; q <= n; ++q)
        d.amps(q) = coherent_magnitude(n, q, c, s) * std::polar(1.0, -q * p.phi0);
    return d;
}

// Direct expansion in the parity basis, without going through the basis map.
inline PhiAmplitudes coherent_to_phi(const CoherentParams& p) {
    p.validate();
    const int n = p.n_qubits;
    const double c = std::cos(p.theta0 / 2), s = std::sin(p.theta0 / 2);
    const double r = 1.0 / std::sqrt(2.0);
    const bool even = n % 2 == 0;
    PhiAmplitudes out{n, cvec::Zero(plus_dim(n)), cvec::Zero(minus_dim(n))};
    for (int k = 0; k < pair_count(n); ++k) {
        const cplx lo = coherent_magnitude(n, k, c, s) * std::polar(1.0, -k * p.phi0);
        const cplx hi = ipow(n - 2 * k) * coherent_magnitude(n, n - k, c, s) *
                        std::polar(1.0, -(n - k) * p.phi0);
        const cplx a = even ? lo + hi : lo - hi;
        const cplx b = even ? lo - hi : lo + hi;
        out.plus(k) = a * r;
        out.minus(k) = b * r;
    }
    if (even) {
        const int h = n / 2;
        out.plus(h) = coherent_magnitude(n, h, c, s) * std::polar(1.0, -h * p.phi0);
    }
    return out;
}

inline PhiAmplitudes dicke_to_phi(const DickeAmplitudes& d, const BasisMap& m) {
    if (d.n_qubits != m.n_qubits || d.amps.size() != m.transform.cols())
        throw std::invalid_argument("dicke_to_phi: dimension mismatch");
    return PhiAmplitudes::from_stacked(d.n_qubits, m.transform * d.amps);
}

inline DickeAmplitudes phi_to_dicke(const PhiAmplitudes& p, const BasisMap& m) {
    if (p.n_qubits != m.n_qubits || p.plus.size() != plus_dim(p.n_qubits) ||
        p.minus.size() != minus_dim(p.n_qubits))
        throw std::invalid_argument("phi_to_dicke: dimension mismatch");
    return {p.n_qubits, m.transform.adjoint() * p.stacked()};
}

}  // namespace symfloq
