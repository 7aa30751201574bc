#pragma once

// Closed-form references at tau = pi/4: averaged linear entropy, block
// powers for N = 4, 5 (J = 1), and per-N single-qubit RDM coefficient forms.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "symfloq/data/avg_entropy_formulas.hpp"
#include "symfloq/data/concurrence_states.hpp"
#include "symfloq/data/golden_blocks.hpp"
#include "symfloq/data/spectra.hpp"
#include "symfloq/entangle.hpp"
#include "symfloq/floquet.hpp"
#include "symfloq/symbasis.hpp"

namespace symfloq {

inline const std::vector<AvgEntropyFormula>& formula_registry() {
    static const auto r = data::build_avg_entropy_formulas();
    return r;
}
inline const std::vector<GoldenBlocks>& golden_blocks() {
    static const auto r = data::build_golden_blocks();
    return r;
}
inline const std::vector<GoldenSpectrum>& golden_spectra() {
    static const auto r = data::build_golden_spectra();
    return r;
}
inline const std::vector<ConcurrenceExtremum>& concurrence_extrema() {
    static const auto r = data::build_concurrence_extrema();
    return r;
}

inline const AvgEntropyFormula& find_formula(int n, double J) {
    for (const auto& f : formula_registry())
        if (f.n_qubits == n && f.J == J) return f;
    throw std::invalid_argument("no closed-form average for N=" + std::to_string(n) + ", J=" + std::to_string(J));
}

inline double evaluate_term(const Term& t, double theta, double phi) {
    double v = t.coef * std::pow(std::sin(theta), t.sin_pow) * std::pow(std::cos(theta), t.cos_pow);
    if (t.phi == PhiKind::Cos) v *= std::cos(t.m * phi);
    if (t.phi == PhiKind::Sin) v *= std::sin(t.m * phi);
    for (const auto& f : t.factors) {
        double s = 0;
        for (const auto& h : f) s += h.a * std::cos(h.k * theta);
        v *= s;
    }
    return v;
}

inline double evaluate(const AvgEntropyFormula& f, double theta, double phi) {
    double s = 0;
    for (const auto& t : f.terms) s += evaluate_term(t, theta, phi);
    return s / f.denominator;
}

inline double closed_avg_linear_entropy(int n, double J, double theta0, double phi0) {
    CoherentParams{n, theta0, phi0}.validate();
    return evaluate(find_formula(n, J), theta0, phi0);
}

// Reorders a block given in published labels into canonical order.
inline cmat to_canonical(const cmat& pub, const std::vector<int>& perm) {
    cmat c(pub.rows(), pub.cols());
    for (int i = 0; i < pub.rows(); ++i)
        for (int j = 0; j < pub.cols(); ++j) c(perm[i], perm[j]) = pub(i, j);
    return c;
}

inline BlockUnitary closed_un(int n, double J, long long k) {
    if (J != 1.0) throw std::invalid_argument("closed_un: only J = 1 is available");
    if (k < 0) throw std::invalid_argument("closed_un: n must be >= 0");
    const double x = static_cast<double>(k);
    const double r3 = std::sqrt(3.0);
    if (n == 4) {
        const double s = std::sin(x * pi / 2), c = std::cos(x * pi / 2);
        const cplx ik = ipow(int(k % 4)), mik = ipow(int((4 - k % 4) % 4));
        cmat p(3, 3), m(2, 2);
        p << (k % 2 ? -1.0 : 1.0), 0, 0,
             0, (mik + 3.0 * ik) / 4.0, I * r3 * s / 2.0,
             0, I * r3 * s / 2.0, (3.0 * mik + ik) / 4.0;
        m << c * c, std::polar(1.0, pi / 4) * s * s,
             std::polar(1.0, -pi / 4) * s * s, c * c;
        m *= std::polar(1.0, -x * pi / 4);
        return {4, to_canonical(p, {1, 0, 2}), to_canonical(m, {1, 0})};
    }
    if (n == 5) {
        const double a = 2 * x * pi / 3, b = x * pi / 3;
        const double r5 = std::sqrt(5.0), r6 = std::sqrt(6.0);
        auto blk = [&](double sg) {
            cmat u(3, 3);
            const double sb = std::sin(b) * std::sin(b);
            u << (1 + 5 * std::cos(a)) / 6, sg * I * r5 / 3.0 * sb, -std::sqrt(5.0 / 6) * std::sin(a),
                 -sg * I * r5 / 3.0 * sb, (5 + std::cos(a)) / 6, -sg * I * std::sin(a) / r6,
                 std::sqrt(5.0 / 6) * std::sin(a), -sg * I * std::sin(a) / r6, std::cos(a);
            const double sign = (sg < 0 && k % 2) ? -1.0 : 1.0;
            return cmat(sign * std::polar(1.0, sg * x * pi / 4) * u);
        };
        return {5, blk(1), blk(-1)};
    }
    throw std::invalid_argument("closed_un: only N = 4 and N = 5 are available");
}

namespace detail {
inline cplx cc(cplx z) { return std::conj(z); }
// (x + y)(u* + w*) + (w - u)(x* - y*) pattern shared by the coherence forms
inline cplx link(cplx x, cplx y, cplx u, cplx w) { return (x + y) * (cc(u) + cc(w)) + (w - u) * (cc(x) - cc(y)); }
inline cplx herm(cplx a, cplx b) { return a * cc(b) + b * cc(a); }
}  // namespace detail

// Single-qubit RDM from per-N coefficient forms (t = 2 rho_00, v = 2 rho_01)
// written directly in the parity-basis amplitudes. Supports N = 4..10.
inline Rdm1 golden_rdm1(int n, const PhiAmplitudes& phi) {
    using detail::cc;
    using detail::herm;
    using detail::link;
    if (n < 4 || n > 10) throw std::invalid_argument("golden_rdm1: N must be in 4..10");
    if (phi.n_qubits != n || phi.plus.size() != plus_dim(n) || phi.minus.size() != minus_dim(n))
        throw std::invalid_argument("golden_rdm1: amplitudes do not match N");
    cvec x = phi.stacked();
    if (n == 4) {
        const cvec c = x;
        x << c(1), c(0), c(2), c(4), c(3);
    }
    auto a = [&](int k) { return x(k - 1); };  // 1-based labels
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r7 = std::sqrt(7.0);
    double t = 1;
    cplx v = 0;
    switch (n) {
        case 4:
            t += herm(a(2), a(5)).real() + 0.5 * herm(a(1), a(4)).real();
            v = (link(a(2), a(5), a(1), a(4)) + r3 * ((a(1) + a(4)) * cc(a(3)) + (cc(a(4)) - cc(a(1))) * a(3))) / 2.0;
            break;
        case 5:
            t += herm(a(1), a(4)).real() + 0.6 * herm(a(2), a(5)).real() + 0.2 * herm(a(3), a(6)).real();
            v = (r5 * link(a(1), a(4), a(2), a(5)) + 2 * r2 * link(a(2), a(5), a(3), a(6)) +
                 3.0 * I * (a(3) + a(6)) * (cc(a(6)) - cc(a(3)))) /
                5.0;
            break;
        case 6:
            t += herm(a(1), a(5)).real() + 2.0 / 3 * herm(a(2), a(6)).real() + 1.0 / 3 * herm(a(3), a(7)).real();
            v = link(a(1), a(5), a(2), a(6)) / std::sqrt(6.0) +
                5.0 / (3 * std::sqrt(10.0)) * link(a(2), a(6), a(3), a(7)) +
                std::sqrt(2.0 / 3) * ((a(3) + a(7)) * cc(a(4)) + (cc(a(7)) - cc(a(3))) * a(4));
            break;
        case 7:
            t += herm(a(1), a(5)).real() + 5.0 / 7 * herm(a(2), a(6)).real() + 3.0 / 7 * herm(a(3), a(7)).real() +
                 1.0 / 7 * herm(a(4), a(8)).real();
            v = (r7 * link(a(1), a(5), a(2), a(6)) + std::sqrt(12.0) * link(a(2), a(6), a(3), a(7)) +
                 std::sqrt(15.0) * link(a(3), a(7), a(4), a(8)) - 4.0 * I * (a(4) + a(8)) * (cc(a(4)) - cc(a(8)))) /
                7.0;
            break;
        case 8:
            t += herm(a(1), a(6)).real() + 0.75 * herm(a(2), a(7)).real() + 0.5 * herm(a(3), a(8)).real() +
                 0.25 * herm(a(4), a(9)).real();
            v = (2.0 * link(a(1), a(6), a(2), a(7)) + r7 * link(a(2), a(7), a(3), a(8)) +
                 3.0 * link(a(3), a(8), a(4), a(9)) +
                 2 * r5 * ((a(4) + a(9)) * cc(a(5)) + (cc(a(9)) - cc(a(4))) * a(5))) /
                (4 * r2);
            break;
        case 9:
            t += herm(a(1), a(6)).real() + (7 * herm(a(2), a(7)).real() + 5 * herm(a(3), a(8)).real() +
                                            3 * herm(a(4), a(9)).real() + herm(a(5), a(10)).real()) /
                                               9;
            v = (3.0 * link(a(1), a(6), a(2), a(7)) + 4.0 * link(a(2), a(7), a(3), a(8)) +
                 std::sqrt(21.0) * link(a(3), a(8), a(4), a(9)) -
                 5.0 * I * (a(5) + a(10)) * (cc(a(5)) - cc(a(10)))) /
                    9.0 +
                2 * std::sqrt(6.0) / 9 * link(a(4), a(9), a(5), a(10));
            break;
        case 10:
            t += herm(a(1), a(7)).real() + (4 * herm(a(2), a(8)).real() + 3 * herm(a(3), a(9)).real() +
                                            2 * herm(a(4), a(10)).real() + herm(a(5), a(11)).real()) /
                                               5;
            v = (r5 * link(a(1), a(7), a(2), a(8)) + 3.0 * link(a(2), a(8), a(3), a(9)) +
                 2 * r3 * link(a(3), a(9), a(4), a(10)) + std::sqrt(14.0) * link(a(4), a(10), a(5), a(11)) +
                 std::sqrt(30.0) * ((a(5) + a(11)) * cc(a(6)) + (cc(a(11)) - cc(a(5))) * a(6))) /
                (5 * r2);
            break;
    }
    Rdm1 r;
    r.m << t / 2, v / 2.0, std::conj(v) / 2.0, 1 - t / 2;
    return r;
}

}  // namespace symfloq
