#include "riscrb/manifold.hpp"

#include <cmath>

namespace riscrb::manifold {

namespace {
constexpr double kRetractionFloor = 1e-14;
constexpr double kInjectivityMargin = 1e-6;  // guard around |delta| = pi/2

double wrap_pi(double angle) {
  // Wrap to (-pi, pi]; the minimal-rotation branch.
  angle = std::remainder(angle, 2.0 * M_PI);
  if (angle <= -M_PI) angle += 2.0 * M_PI;
  return angle;
}
}  // namespace

CVector project(const CVector& w, const CVector& v) {
  // v - Re{v .* conj(w)} .* w
  return v.array() - (v.array() * w.array().conjugate()).real() * w.array();
}

CVector retract(const CVector& w, const CVector& v) {
  CVector out(w.size());
  for (int i = 0; i < w.size(); ++i) {
    const Complex z = w[i] + v[i];
    const double mag = std::abs(z);
    if (mag < kRetractionFloor) throw ZeroDenominatorError(i);
    out[i] = z / mag;
  }
  return out;
}

CVector inverse_retract(const CVector& w, const CVector& w_next) {
  CVector out(w.size());
  const Complex j(0.0, 1.0);
  for (int i = 0; i < w.size(); ++i) {
    const double delta = wrap_pi(std::arg(w_next[i]) - std::arg(w[i]));
    if (std::abs(delta) >= M_PI / 2.0 - kInjectivityMargin)
      throw InjectivityError(i, delta);
    out[i] = j * w[i] * std::tan(delta);
  }
  return out;
}

double tangency_defect(const CVector& w, const CVector& v) {
  return (v.array() * w.array().conjugate()).real().abs().maxCoeff();
}

TangentVec project(const PhaseProfile& w, const CVector& ambient) {
  return TangentVec{w, project(w.coeffs(), ambient)};
}

TangentVec riemannian_grad(const PhaseProfile& w, const CVector& egrad) {
  return project(w, egrad);
}

PhaseProfile retract(const PhaseProfile& w, const TangentVec& v, double scale) {
  CVector moved = retract(w.coeffs(), (scale * v.v).eval());
  return PhaseProfile(std::move(moved));
}

TangentVec inverse_retract(const PhaseProfile& w, const PhaseProfile& w_next) {
  return TangentVec{w, inverse_retract(w.coeffs(), w_next.coeffs())};
}

}  // namespace riscrb::manifold
