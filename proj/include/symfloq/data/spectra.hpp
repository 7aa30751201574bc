#pragma once

// Reference Floquet eigenphases at tau = pi/4 in units of pi, with the
// reference operator period. Where the published list is inconsistent with
// the published blocks, `corrected` replaces it and `erratum` explains.

#include <string>
#include <vector>

namespace symfloq {

struct GoldenSpectrum {
    int n_qubits;
    double J;
    std::vector<double> phases;            // as published (plus block first when split)
    std::vector<double> corrected;         // phases actually expected
    int plus_count;                        // > 0 when the list is split by block
    long long period;                      // as published
    long long exact_period;                // smallest n with U^n = I for the reference blocks
    std::string erratum;
    std::string period_erratum;
};

namespace data {

inline std::vector<GoldenSpectrum> build_golden_spectra() {
    std::vector<GoldenSpectrum> g;
    auto add = [&](int n, double J, std::vector<double> ph, long long period, int plus_count = 0) {
        g.push_back({n, J, ph, ph, plus_count, period, period, "", ""});
    };
    const double t = 1.0 / 3, s = 1.0 / 6, e = 1.0 / 8;

    add(4, 1.0, {1, 0.5, -0.5, 0.75, -0.25}, 8);
    // Odd N at J=1: every phase is an odd multiple of 1/12, so U^12 = -I.
    const std::string minus_identity = "the listed eigenvalues give U^12 = -I; U^n = I first holds at n = 24";
    add(5, 1.0, {0.25, 0.75, 0.25 + 2 * t, 0.25 - 2 * t, 0.75 + 2 * t, 0.75 - 2 * t}, 12);
    g.back().exact_period = 24;
    g.back().period_erratum = minus_identity;
    add(6, 1.0, {0, 1, 0, 1, 0.25, 1.25, 1.75}, 8);
    add(7, 1.0, {1, 1, 0.5, 0.5, t, -t, 0.5 + 2 * t, 0.5 - 2 * t}, 12);

    add(8, 1.0, {0, 1, 0, 1, 0.25, 1.25, 1.75}, 8);
    g.back().corrected = {0, 0.25, 0.25, 0.5, 1, 1, 1.25, 1.25, 1.5};
    g.back().erratum = "the list has 7 entries for a 9-dimensional operator (it repeats the N=6 list); "
                       "the expected phases are those of the N=8 reference blocks";

    add(9, 1.0,
        {0.75, 0.75 + 2 * t, 0.75 - 2 * t, 0.75 + 2 * t, 0.75 - 2 * t,
         1.25, 0.25 + t, 0.25 - t, 0.25 + t, 0.25 - t},
        12, 5);
    g.back().exact_period = 24;
    g.back().period_erratum = minus_identity;
    add(10, 1.0, {0.5, -0.5, 0.5, -0.5, 0.5, -0.5, 0.25, 1.25, 0.75, 1.75, 0.75}, 8);

    add(4, 0.5, {-e, 1 - e, -5.0 / 12, 11.0 / 12, 1}, 48);
    g.back().corrected = {e, 1 + e, -5.0 / 12, 11.0 / 12, 1};
    g.back().erratum = "the pair is +/- e^{+i pi/8}, the eigenvalues of the N=4, J=1/2 reference blocks";

    add(6, 0.5, {0.25, 1.25, 0.75, 1.75, 3 * e, e, 9 * e}, 16);
    add(8, 0.5, {0.5, 7 * s, -s, 1.25, 0.25, 7 * e, -e, -5 * e, 3 * e}, 48);
    add(10, 0.5, {0, 1, 0, 1, 0.5, -0.5, 3 * e, 11 * e, 1 + 23.0 / 24, 3 * e, 1 + 7.0 / 24}, 48);
    return g;
}

}  // namespace data
}  // namespace symfloq
