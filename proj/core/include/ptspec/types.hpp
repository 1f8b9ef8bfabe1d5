#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ptspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ptspec
