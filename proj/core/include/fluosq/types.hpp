#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace fluosq {

using Complex = std::complex<double>;

inline constexpr int kDim = 15;  // size of the reduced Liouville space

using Mat15 = Eigen::Matrix<Complex, kDim, kDim>;
using Vec15 = Eigen::Matrix<Complex, kDim, 1>;
using Mat4c = Eigen::Matrix4cd;
using Mat4d = Eigen::Matrix4d;

// Thrown when a solve or integration cannot produce a trustworthy result
// (singular/ill-conditioned system, non-decaying correlations, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fluosq
