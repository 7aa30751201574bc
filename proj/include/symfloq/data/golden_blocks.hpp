#pragma once

// Reference parity blocks U+ and U- at tau = pi/4, entered row by row in the
// published labeling. perm_* maps a published row index to the canonical
// (ascending q) index. Where the published block is internally inconsistent,
// `corrected` holds the fixed block and `erratum` says what changed and why.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "symfloq/types.hpp"

namespace symfloq {

struct GoldenBlocks {
    int n_qubits;
    double J;
    cmat plus, minus;  // as published
    std::vector<int> perm_plus, perm_minus;
    cmat plus_corrected, minus_corrected;
    std::string erratum;  // empty when the published blocks are used as-is
};

namespace data {

inline cplx epi(double x) { return std::polar(1.0, pi * x); }  // e^{i pi x}

inline cmat rows(int n, std::initializer_list<cplx> v) {
    cmat m(n, n);
    auto it = v.begin();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = *it++;
    return m;
}

inline std::vector<int> iota(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline std::vector<GoldenBlocks> build_golden_blocks() {
    auto s = [](double x) { return std::sqrt(x); };
    std::vector<GoldenBlocks> out;
    auto add = [&](int n, double J, cmat p, cmat m, std::vector<int> pp = {}, std::vector<int> pm = {}) {
        if (pp.empty()) pp = iota(int(p.rows()));
        if (pm.empty()) pm = iota(int(m.rows()));
        out.push_back({n, J, p, m, pp, pm, p, m, ""});
    };

    // N = 4 uses the row order (phi_1, phi_0, phi_2) / (phi_1, phi_0).
    add(4, 1.0, rows(3, {-1, 0, 0, 0, I / 2.0, I * s(3) / 2.0, 0, I * s(3) / 2.0, -I / 2.0}),
        rows(2, {0, 1, -I, 0}), {1, 0, 2}, {1, 0});

    auto n5 = [&](double sg) -> cmat {
        return 0.25 * epi(sg / 4.0) *
               rows(3, {-sg, I * s(5), -sg * s(10), -I * s(5), 3.0 * sg, -I * s(2), sg * s(10), -I * s(2),
                        -2.0 * sg});
    };
    add(5, 1.0, n5(1), n5(-1));

    add(6, 1.0,
        epi(0.25) / (2 * s(2)) *
            rows(4, {0, -s(3), 0, -s(5), I * s(3), 0, I * s(5), 0, 0, -s(5), 0, s(3), I * s(5), 0, -I * s(3), 0}),
        epi(0.25) / 4.0 * rows(3, {1, 0, s(15), 0, -4.0 * I, 0, s(15), 0, -1}));

    add(7, 1.0,
        rows(4, {-1, -I * s(7), -s(21), -I * s(35), -I * s(7), -5, -3.0 * I * s(3), -s(5), s(21), 3.0 * I * s(3), 1,
                 -I * s(15), I * s(35), s(5), -I * s(15), -3}) /
            8.0,
        rows(4, {I, s(7), I * s(21), s(35), s(7), 5.0 * I, 3 * s(3), I * s(5), -I * s(21), -3 * s(3), -I, s(15),
                 -s(35), -I * s(5), s(15), 3.0 * I}) /
            8.0);

    add(8, 1.0,
        rows(5, {-1, 0, -2 * s(7), 0, -s(35), 0, -6.0 * I, 0, -2.0 * I * s(7), 0, -2 * s(7), 0, -4, 0, 2 * s(5),
                 0, -2.0 * I * s(7), 0, 6.0 * I, 0, -s(35), 0, 2 * s(5), 0, -3}) /
            8.0,
        rows(4, {0, 1, 0, s(7), I, 0, I * s(7), 0, 0, s(7), 0, -1, I * s(7), 0, -I, 0}) / (2 * s(2)));

    {
        auto n9 = [&](double sg) -> cmat {
            return epi(-sg / 4) / 16.0 *
                   rows(5, {1, -sg * 3.0 * I, 6, -sg * 2.0 * I * s(21), 3 * s(14),
                            sg * 3.0 * I, -7, sg * 10.0 * I, -2 * s(21), sg * I * s(14),
                            6, -sg * 10.0 * I, 8, 0, -2 * s(14),
                            sg * 2.0 * I * s(21), -2 * s(21), 0, 8, -sg * 2.0 * I * s(6),
                            3 * s(14), -sg * I * s(14), -2 * s(14), sg * 2.0 * I * s(6), 6});
        };
        add(9, 1.0, n9(1), n9(-1));
        Eigen::VectorXcd d(5);
        d << -1, -1, 1, 1, -1;
        auto& g = out.back();
        g.plus_corrected = d.asDiagonal() * g.plus;
        g.minus_corrected = d.asDiagonal() * g.minus;
        g.erratum =
            "rows 0, 1 and 4 of both blocks carry the opposite sign; the blocks as entered have eigenphases "
            "{3/4, 3/4, 7/4, 7/4, 7/4} pi and {1/4, 1/4, 1/4, 5/4, 5/4} pi, which contradicts the reference "
            "spectrum and the period 12";
    }

    {
        const cplx a = epi(0.75), b = epi(-0.75);
        add(10, 1.0,
            rows(6, {0, -s(5) * a, 0, -2 * s(15) * a, 0, -3 * s(7) * a,
                     s(5) * b, 0, 9.0 * b, 0, s(42) * b, 0,
                     0, -9.0 * a, 0, -2 * s(3) * a, 0, s(35) * a,
                     2 * s(15) * b, 0, 2 * s(3) * b, 0, -2 * s(14) * b, 0,
                     0, -s(42) * a, 0, 2 * s(14) * a, 0, -s(30) * a,
                     3 * s(7) * b, 0, -s(35) * b, 0, s(30) * b, 0}) /
                (8 * s(2)),
            rows(5, {a, 0, 3 * s(5) * a, 0, s(210) * a,
                     0, -8.0 * b, 0, -8 * s(3) * b, 0,
                     3 * s(5) * a, 0, 13.0 * a, 0, -s(42) * a,
                     0, -8 * s(3) * b, 0, 8.0 * b, 0,
                     s(210) * a, 0, -s(42) * a, 0, 2.0 * a}) /
                16.0);
    }

    add(4, 0.5,
        rows(3, {-1, 0, 0, 0, epi(-0.75) / 2.0, s(3) * epi(-0.75) / 2.0, 0, s(3) * epi(0.25) / 2.0, -epi(0.25) / 2.0}),
        rows(2, {0, 1, -epi(-0.75), 0}), {1, 0, 2}, {1, 0});

    {
        const cplx q = epi(0.25);
        add(6, 0.5,
            -epi(1.0 / 8) / (2 * s(2)) *
                rows(4, {0, s(3), 0, s(5), s(3) * q, 0, s(5) * q, 0, 0, s(5), 0, -s(3), -s(5) * q, 0, s(3) * q, 0}),
            epi(1.0 / 8) / 4.0 * rows(3, {1, 0, s(15), 0, 4.0 * q, 0, s(15), 0, -1}));

        add(8, 0.5,
            rows(5, {I, 0, 2.0 * I * s(7), 0, I * s(35),
                     0, -6.0 * q, 0, -2 * s(7) * q, 0,
                     -2.0 * I * s(7), 0, -4.0 * I, 0, 2.0 * I * s(5),
                     0, -2 * s(7) * q, 0, 6.0 * q, 0,
                     I * s(35), 0, -2.0 * I * s(5), 0, 3.0 * I}) /
                8.0,
            -1.0 / (2 * s(2)) * rows(4, {0, I, 0, I * s(7), -q, 0, -s(7) * q, 0, 0, -I * s(7), 0, I, -s(7) * q, 0, q, 0}));

        add(10, 0.5,
            -epi(3.0 / 8) / (8 * s(2)) *
                rows(6, {0, s(5), 0, 2 * s(15), 0, 3 * s(7),
                         -q * s(5), 0, -9.0 * q, 0, -q * s(42), 0,
                         0, 9, 0, 2 * s(3), 0, -s(35),
                         2.0 * q * s(15), 0, 2.0 * q * s(3), 0, 2.0 * q * s(14), 0,
                         0, s(42), 0, -2 * s(14), 0, s(30),
                         -3.0 * q * s(7), 0, q * s(35), 0, -q * s(30), 0}),
            epi(3.0 / 8) / 16.0 *
                rows(5, {1, 0, 3 * s(5), 0, s(210),
                         0, -8.0 * q, 0, -8 * s(3) * q, 0,
                         3 * s(5), 0, 13, 0, -s(42),
                         0, 8 * s(3) * q, 0, -8.0 * q, 0,
                         s(210), 0, -s(42), 0, 2}));
        auto& g = out.back();
        g.plus_corrected(3, 4) = -g.plus(3, 4);
        g.erratum =
            "U+ entry (3,4) takes the opposite sign; as entered the block is not unitary";
    }
    return out;
}

}  // namespace data
}  // namespace symfloq
