#pragma once

// Reference one-period averaged concurrence extrema at tau = pi/4 and the
// initial states (theta0, phi0) where they are attained.

#include <utility>
#include <vector>

namespace symfloq {

struct ConcurrenceExtremum {
    int n_qubits;
    double J;
    bool is_max;
    double value;
    std::vector<std::pair<double, double>> states;
};

namespace data {

inline std::vector<ConcurrenceExtremum> build_concurrence_extrema() {
    const double P = 3.14159265358979323846, H = P / 2, q = P / 4;
    return {
        {4, 1.0, true, 0.2022542486, {{q, 0}, {3 * q, P}, {3 * q, -P}, {3 * q, 0}, {q, P}, {q, -P}}},
        {5, 1.0, true, 0.1037915448,
         {{q, P}, {q, -P}, {3 * q, P}, {3 * q, -P}, {3 * q, H}, {3 * q, -H}, {q, 0}, {3 * q, 0}, {q, H}, {q, -H},
          {H, 3 * q}, {H, -3 * q}, {H, q}, {H, -q}}},
        {6, 1.0, true, 8.8388e-2, {{q, P}, {q, -P}, {3 * q, P}, {3 * q, -P}, {q, 0}, {3 * q, 0}}},
        {7, 1.0, true, 4.450511364e-2,
         {{1.02887, P}, {1.02887, -P}, {1.02887, H}, {1.02887, -H}, {1.02887, 0},
          {2.11272, P}, {2.11272, -P}, {2.11272, H}, {2.11272, -H}, {2.11272, 0},
          {2.59966, P}, {2.59966, -P}, {2.59666, H}, {2.59666, -H}, {2.59666, 0},
          {0.54192, P}, {0.54192, -P}, {0.54912, H}, {0.54912, -H}, {0.54912, 0}}},
        {8, 1.0, true, 4.32522158e-2,
         {{0.518363, P}, {0.518363, -P}, {0.518363, 0}, {1.0524335, P}, {1.0524335, -P}, {1.0524335, 0},
          {2.6232298, P}, {2.6232298, -P}, {2.6232298, 0}, {2.0891591, P}, {2.0891591, -P}, {2.0891591, 0}}},
        {9, 1.0, true, 3.043055600896e-2,
         {{2.72533, P}, {2.72533, -P}, {2.72533, H}, {2.72533, -H}, {2.72533, 0},
          {1.98706, P}, {1.98706, -P}, {1.98706, H}, {1.98706, -H}, {1.98706, 0},
          {0.41626, P}, {0.41626, -P}, {0.41626, H}, {0.41626, -H}, {0.41626, 0},
          {1.154535, P}, {1.154535, -P}, {1.154535, H}, {1.154535, -H}, {1.154535, 0}}},
        {10, 1.0, true, 3.1299247e-2,
         {{0.424115, P}, {0.424115, -P}, {1.146681318, P}, {1.146681318, -P}, {1.146681318, 0}, {0.424115, 0},
          {2.717477, P}, {2.717477, -P}, {1.994911, P}, {1.994911, -P}, {1.994911, 0}, {2.717477, 0}}},
        {4, 0.5, true, 0.14057897625,
         {{2.71748, -0.01571}, {2.71748, 3.12588}, {0.424115, -3.12588}, {0.424115, -0.01571}, {0.41888, 0}}},
        {4, 0.5, false, 7.26644726e-2, {{0.8875, -2.0813}, {0.8875, 1.060287}, {2.25409, -1.60287}, {2.25409, 2.0813}}},
        {6, 0.5, true, 6.68085503e-2,
         {{2.764015, 1.46084}, {2.764015, -1.680752}, {0.376911, 1.680752}, {0.376991, -1.46084}}},
        {6, 0.5, false, 1.6581305e-2,
         {{1.24092, 1.3744467}, {1.24092, -1.76715}, {1.9, -1.3744467}, {1.9, 1.767145}}},
        {8, 0.5, true, 1.50011786e-2,
         {{1.29591, -0.01571}, {1.8456885, -3.125885}, {1.29591, 3.125885}, {1.8456885, 0.01571}}},
        {8, 0.5, false, 1.73226016e-3,
         {{1.829977, 1.303761}, {1.311615, -1.30371}, {1.3116145, 1.837832}, {1.829977, -1.837832}}},
        {10, 0.5, true, 1.155818823e-2,
         {{2.8501, 1.523672}, {0.290597, -1.523672}, {2.8501, -1.617902}, {0.290597, 1.6179202}}},
        {10, 0.5, false, 5.49013879e-4,
         {{1.861394, 1.8692476}, {1.861394, -1.8692476}, {1.2802, 1.272345}, {1.2802, -1.272345},
          {1.861394, 1.272345}, {1.861394, -1.272345}, {1.2802, 1.869247}, {1.2802, -1.869247}}},
    };
}

}  // namespace data
}  // namespace symfloq
