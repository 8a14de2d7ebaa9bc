#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace riscrb {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kSpeedOfLight = 299792458.0;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Geometry or information matrix too ill-conditioned to invert.
class DegenerateSceneError : public Error {
 public:
  DegenerateSceneError(const std::string& block, double condition)
      : Error("degenerate scene: block '" + block +
              "' has condition estimate " + std::to_string(condition)),
        block_(block),
        condition_(condition) {}
  const std::string& block() const { return block_; }
  double condition() const { return condition_; }

 private:
  std::string block_;
  double condition_;
};

/// Retraction denominator collapsed (|w_n + v_n| ~ 0); the step is too large.
class ZeroDenominatorError : public Error {
 public:
  explicit ZeroDenominatorError(int index)
      : Error("retraction denominator ~0 at element " + std::to_string(index)) {}
};

/// Inverse retraction asked for a phase difference at or beyond +-pi/2.
class InjectivityError : public Error {
 public:
  InjectivityError(int index, double delta)
      : Error("inverse retraction out of range at element " +
              std::to_string(index) + " (|delta|=" + std::to_string(delta) + ")") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace riscrb
