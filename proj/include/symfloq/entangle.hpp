#pragma once

// One- and two-qubit reduced density matrices of symmetric-sector states,
// entanglement measures, stroboscopic series, period detection, averages.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "symfloq/errors.hpp"
#include "symfloq/floquet.hpp"
#include "symfloq/symbasis.hpp"
#include "symfloq/types.hpp"

namespace symfloq {

struct Rdm1 {
    Eigen::Matrix2cd m;
};

// Basis {|00>, |01>, |10>, |11>}, index 2*bit_a + bit_b.
struct Rdm2 {
    Eigen::Matrix4cd m;
};

inline constexpr double kNormSlack = 1e-9;

inline void require_normalized(const DickeAmplitudes& d) {
    if (d.amps.size() != d.n_qubits + 1) throw std::invalid_argument("Dicke amplitude length != N+1");
    const double dev = std::abs(d.amps.squaredNorm() - 1.0);
    if (dev > kNormSlack) throw std::invalid_argument("state not normalized (deviation " + std::to_string(dev) + ")");
}

inline Rdm1 rdm1(const DickeAmplitudes& d) {
    require_normalized(d);
    const int n = d.n_qubits;
    const auto& c = d.amps;
    double r00 = 0;
    cplx r01 = 0;
    for (int q = 0; q <= n; ++q) r00 += std::norm(c(q)) * (n - q);
    for (int q = 0; q < n; ++q) r01 += c(q) * std::conj(c(q + 1)) * std::sqrt(double(q + 1) * (n - q));
    r00 /= n;
    r01 /= n;
    Rdm1 r;
    r.m << r00, r01, std::conj(r01), 1.0 - r00;
    return r;
}

// (lambda_1, lambda_2) with lambda_1 >= lambda_2.
inline std::pair<double, double> rdm1_eigs(const Rdm1& r) {
    const double a = r.m(0, 0).real(), b = r.m(1, 1).real();
    const double disc = std::sqrt((a - b) * (a - b) + 4.0 * std::norm(r.m(0, 1)));
    const double tr = a + b;
    return {(tr + disc) / 2, (tr - disc) / 2};
}

inline double linear_entropy(const Rdm1& r) {
    const double purity =
        std::norm(r.m(0, 0)) + std::norm(r.m(1, 1)) + std::norm(r.m(0, 1)) + std::norm(r.m(1, 0));
    return std::clamp(1.0 - purity, 0.0, 0.5);
}

inline double vn_entropy(const Rdm1& r) {
    const auto [l1, l2] = rdm1_eigs(r);
    double s = 0;
    for (double l : {l1, l2}) {
        l = std::clamp(l, 0.0, 1.0);
        if (l > 0) s -= l * std::log(l);
    }
    return s;
}

// Exact two-qubit partial trace: split q excitations as k on the kept pair
// and m on the other N-2 qubits, weight C(2,k) C(N-2,m) / C(N,k+m).
inline Rdm2 rdm2(const DickeAmplitudes& d) {
    require_normalized(d);
    const int n = d.n_qubits;
    if (n < 2) throw std::invalid_argument("rdm2 needs N >= 2");
    const double nn = double(n) * (n - 1);
    Eigen::Matrix<cplx, 3, Eigen::Dynamic> a(3, n - 1);
    for (int m = 0; m <= n - 2; ++m) {
        a(0, m) = d.amps(m) * std::sqrt((n - m) * double(n - m - 1) / nn);
        a(1, m) = d.amps(m + 1) * std::sqrt(2.0 * (m + 1) * double(n - m - 1) / nn);
        a(2, m) = d.amps(m + 2) * std::sqrt((m + 1) * double(m + 2) / nn);
    }
    const Eigen::Matrix3cd rd = a * a.adjoint();
    Eigen::Matrix<cplx, 4, 3> e = Eigen::Matrix<cplx, 4, 3>::Zero();
    const double h = 1.0 / std::sqrt(2.0);
    e(0, 0) = 1;
    e(1, 1) = h;
    e(2, 1) = h;
    e(3, 2) = 1;
    return {e * rd * e.adjoint()};
}

inline constexpr double kPsdSlack = 1e-10;

// Two-qubit concurrence from rho = V V^dagger: the singular values of
// V^T (sy x sy) V are the square roots of the eigenvalues of rho rho~.
inline double concurrence(const Rdm2& r) {
    const Eigen::Matrix4cd h = (r.m + r.m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    Eigen::Matrix4cd v;
    for (int k = 0; k < 4; ++k) {
        const double l = es.eigenvalues()(k);
        if (l < -kPsdSlack) throw numeric_error("two-qubit RDM has negative eigenvalue " + std::to_string(l));
        v.col(k) = std::sqrt(std::max(l, 0.0)) * es.eigenvectors().col(k);
    }
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    const Eigen::Matrix4cd tau = v.transpose() * yy * v;
    const Eigen::Vector4d s = Eigen::JacobiSVD<Eigen::Matrix4cd>(tau).singularValues();
    return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

struct Measures {
    bool s_lin = true;
    bool s_vn = true;
    bool conc = true;
};

struct StepRecord {
    long long n = 0;
    double s_lin = 0, s_vn = 0, conc = 0;  // NaN when the measure was not requested
};

struct EntanglementSeries {
    CoherentParams state;
    FloquetParams floquet;
    Measures measures;
    std::vector<StepRecord> steps;
    std::optional<long long> operator_period;
};

inline StepRecord measure(long long n, const DickeAmplitudes& d, const Measures& want) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    StepRecord rec{n, nan, nan, nan};
    if (want.s_lin || want.s_vn) {
        const Rdm1 r = rdm1(d);
        if (want.s_lin) rec.s_lin = linear_entropy(r);
        if (want.s_vn) rec.s_vn = vn_entropy(r);
    }
    if (want.conc) rec.conc = concurrence(rdm2(d));
    return rec;
}

// Records n = 0..n_steps for a prepared operator and initial phi state.
inline std::vector<StepRecord> series_records(PhiAmplitudes phi, const BlockUnitary& u, const BasisMap& m,
                                              long long n_steps, const Measures& want = {}) {
    if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
    std::vector<StepRecord> out;
    out.reserve(static_cast<size_t>(n_steps) + 1);
    for (long long n = 0; n <= n_steps; ++n) {
        out.push_back(measure(n, phi_to_dicke(phi, m), want));
        if (n < n_steps) phi = apply(u, phi);
    }
    return out;
}

inline EntanglementSeries entanglement_series(const CoherentParams& p, const FloquetParams& f, long long n_steps,
                                              const Measures& want = {}) {
    p.validate();
    f.validate();
    if (p.n_qubits != f.n_qubits) throw std::invalid_argument("state and operator disagree on N");
    const BasisMap m = make_basis_map(p.n_qubits);
    const BlockUnitary u = build_floquet(f, m);
    EntanglementSeries s{p, f, want, series_records(coherent_to_phi(p), u, m, n_steps, want), operator_period(u)};
    return s;
}

namespace detail {

inline bool shift_matches(const std::vector<StepRecord>& v, size_t p, double tol) {
    auto close = [tol](double a, double b) { return std::isnan(a) || std::abs(a - b) < tol; };
    for (size_t n = 0; n + p < v.size(); ++n) {
        const auto &x = v[n], &y = v[n + p];
        if (!close(x.s_lin, y.s_lin) || !close(x.s_vn, y.s_vn) || !close(x.conc, y.conc)) return false;
    }
    return true;
}

}  // namespace detail

// Smallest P <= len/3 with every requested measure P-periodic to tol.
// Among passing P, one dividing the operator period is preferred.
inline std::optional<long long> series_period(const EntanglementSeries& s, double tol = 1e-8) {
    const size_t len = s.steps.size();
    std::optional<long long> first;
    for (size_t p = 1; p <= len / 3; ++p) {
        if (!detail::shift_matches(s.steps, p, tol)) continue;
        if (!s.operator_period || *s.operator_period % static_cast<long long>(p) == 0)
            return static_cast<long long>(p);
        if (!first) first = static_cast<long long>(p);
    }
    return first;
}

enum class AverageMode { ExactPeriod, LongWindow };

struct AveragedRecord {
    AverageMode mode = AverageMode::ExactPeriod;
    long long period = -1;  // -1 when no period was used
    long long count = 0;    // number of samples averaged
    double s_lin = 0, s_vn = 0, conc = 0;           // n = 0 .. count-1
    double s_lin_alt = 0, s_vn_alt = 0, conc_alt = 0;  // n = 1 .. count
    double drift = 0;  // |mean first half - mean second half| of s_lin
};

namespace detail {

inline void accumulate(const std::vector<StepRecord>& v, size_t lo, size_t hi, double& sl, double& sv, double& c) {
    sl = sv = c = 0;
    for (size_t n = lo; n < hi; ++n) {
        sl += v[n].s_lin;
        sv += v[n].s_vn;
        c += v[n].conc;
    }
    const double k = static_cast<double>(hi - lo);
    sl /= k;
    sv /= k;
    c /= k;
}

}  // namespace detail

// Averages over the first `count` records; also over records 1..count when available.
inline AveragedRecord average_first(const EntanglementSeries& s, long long count, AverageMode mode) {
    const auto& v = s.steps;
    if (count < 1 || static_cast<size_t>(count) > v.size())
        throw std::invalid_argument("averaging window exceeds series length");
    AveragedRecord r;
    r.mode = mode;
    r.count = count;
    const size_t k = static_cast<size_t>(count);
    detail::accumulate(v, 0, k, r.s_lin, r.s_vn, r.conc);
    if (k + 1 <= v.size())
        detail::accumulate(v, 1, k + 1, r.s_lin_alt, r.s_vn_alt, r.conc_alt);
    else
        r.s_lin_alt = r.s_vn_alt = r.conc_alt = std::numeric_limits<double>::quiet_NaN();
    if (mode == AverageMode::LongWindow && k >= 2) {
        double a = 0, b = 0;
        for (size_t n = 0; n < k / 2; ++n) a += v[n].s_lin;
        for (size_t n = k / 2; n < k; ++n) b += v[n].s_lin;
        r.drift = std::abs(a / double(k / 2) - b / double(k - k / 2));
    }
    return r;
}

inline constexpr long long kDefaultWindow = 10000;

inline AveragedRecord time_average(const EntanglementSeries& s, AverageMode mode, double tol = 1e-8,
                                   long long window = kDefaultWindow) {
    if (mode == AverageMode::ExactPeriod) {
        const auto p = series_period(s, tol);
        if (!p) throw period_error("exact-period average requested but no period was detected");
        auto r = average_first(s, *p, mode);
        r.period = *p;
        return r;
    }
    if (static_cast<long long>(s.steps.size()) < window)
        throw std::invalid_argument("series shorter than the long-window length");
    return average_first(s, window, mode);
}

}  // namespace symfloq
