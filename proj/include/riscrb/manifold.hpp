#pragma once

#include "riscrb/types.hpp"

namespace riscrb::manifold {

/// A point on the complex circle manifold {w in C^N : |w_n| = 1}.
/// Construction renormalizes each entry, so the unit-modulus invariant
/// always holds to machine precision.
class PhaseProfile {
 public:
  PhaseProfile() = default;
  explicit PhaseProfile(CVector w) : w_(std::move(w)) {
    for (int i = 0; i < w_.size(); ++i) {
      const double mag = std::abs(w_[i]);
      if (mag < 1e-300)
        throw ZeroDenominatorError(i);
      w_[i] /= mag;
    }
  }
  const CVector& coeffs() const { return w_; }
  int size() const { return static_cast<int>(w_.size()); }

 private:
  CVector w_;
};

/// Tangent vector at a base point: Re(v_n conj(w_n)) = 0 for all n.
struct TangentVec {
  PhaseProfile base;
  CVector v;
  double norm() const { return v.norm(); }
};

// Raw kernels on coefficient vectors; the typed wrappers below delegate here.

/// Orthogonal projection of ambient v onto the tangent space at unit w.
CVector project(const CVector& w, const CVector& v);

/// (w + v) elementwise-normalized back to the circle. Throws
/// ZeroDenominatorError when some |w_n + v_n| < 1e-14.
CVector retract(const CVector& w, const CVector& v);

/// Closed-form inverse of the retraction, v = j w .* tan(arg(w_next) - arg(w))
/// with phase differences wrapped to (-pi, pi]. Throws InjectivityError when
/// any wrapped difference reaches +-(pi/2 - 1e-6).
CVector inverse_retract(const CVector& w, const CVector& w_next);

/// Largest |Re(v_n conj(w_n))| — zero for exact tangency.
double tangency_defect(const CVector& w, const CVector& v);

// Typed API.

TangentVec project(const PhaseProfile& w, const CVector& ambient);

/// Riemannian gradient from the Euclidean (conjugate-Wirtinger) gradient:
/// the projection of egrad onto the tangent space at w.
TangentVec riemannian_grad(const PhaseProfile& w, const CVector& egrad);

PhaseProfile retract(const PhaseProfile& w, const TangentVec& v,
                     double scale = 1.0);

TangentVec inverse_retract(const PhaseProfile& w, const PhaseProfile& w_next);

}  // namespace riscrb::manifold
