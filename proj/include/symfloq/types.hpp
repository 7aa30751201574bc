#pragma once

#include <complex>

#include <Eigen/Dense>

namespace symfloq {

using cplx = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace symfloq
