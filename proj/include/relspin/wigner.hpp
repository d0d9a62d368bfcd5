#pragma once

// Transport of spinor labels under an observer Lorentz transformation
// (the Wigner rotation) in the covariant and FW representations.

#include <cmath>
#include <stdexcept>
#include <string>

#include "relspin/kinematics.hpp"
#include "relspin/spinor.hpp"

namespace relspin {

using Block2 = Eigen::Matrix2cd;

/// S^{-1}(L_{Lambda p}) S(Lambda) S(L_p). For a pure Lorentz transform this is
/// the spinor image of the Wigner rotation: block-diagonal with equal blocks.
inline OperatorMatrix wigner_spinor_matrix(const ObserverTransform& obs, const FourMomentum& p) {
  const FourMomentum moved = apply_lorentz(obs.vector, p);
  return spinor_boost_inverse(moved) * obs.spinor * spinor_boost(p);
}

/// T_{lambda' lambda} = u(k,lambda')^T S^{-1}(L_{Lambda p}) S(Lambda) S(L_p) u(k,lambda),
/// with v(k, .) in place of u(k, .) for the negative sign.
inline Block2 transport_covariant(const ObserverTransform& obs, const FourMomentum& p,
                                  EnergySign sign) {
  const int o = sign == EnergySign::positive ? 0 : 2;
  return wigner_spinor_matrix(obs, p).block<2, 2>(o, o);
}

inline Block2 transport_covariant(const LorentzMatrix& pure, const FourMomentum& p,
                                  EnergySign sign) {
  return transport_covariant(ObserverTransform::from_pure_boost(pure), p, sign);
}

struct TransportMatrix {
  OperatorMatrix entries;  // acting on (a+, a-, b+, b-)
  LorentzMatrix lorentz;
  FourMomentum momentum;
  Representation rep;

  Block2 upper() const { return entries.block<2, 2>(0, 0); }
  Block2 lower() const { return entries.block<2, 2>(2, 2); }

  /// Largest u<->v mixing entry.
  double leakage() const {
    return std::max(entries.block<2, 2>(0, 2).cwiseAbs().maxCoeff(),
                    entries.block<2, 2>(2, 0).cwiseAbs().maxCoeff());
  }

  double block_mismatch() const { return (upper() - lower()).cwiseAbs().maxCoeff(); }

  double unitarity_residual() const {
    return (entries.adjoint() * entries - OperatorMatrix::Identity()).cwiseAbs().maxCoeff();
  }
};

/// Full 4x4 covariant transport, including whatever u<->v mixing the product
/// carries numerically.
inline TransportMatrix transport_covariant_full(const ObserverTransform& obs,
                                                const FourMomentum& p) {
  return {wigner_spinor_matrix(obs, p), obs.vector, p, Representation::covariant};
}

/// FW transport built sector by sector:
///   positive columns: sqrt(E/E') U(p')  S(Lambda) U^dagger(p)
///   negative columns: sqrt(E/E') U(-p') S(Lambda) U^dagger(-p)
/// with p' = Lambda p. Off-block entries are the computed u<->v leakage.
inline TransportMatrix transport_fw(const ObserverTransform& obs, const FourMomentum& p) {
  const double m = p.mass();
  const FourMomentum moved = apply_lorentz(obs.vector, p);
  const double k = std::sqrt(p.energy() / moved.energy());

  const OperatorMatrix pos =
      k * fw_unitary(moved.p3(), m) * obs.spinor * fw_unitary(p.p3(), m).adjoint();
  const OperatorMatrix neg =
      k * fw_unitary(-moved.p3(), m) * obs.spinor * fw_unitary(-p.p3(), m).adjoint();

  OperatorMatrix t;
  t.leftCols<2>() = pos.leftCols<2>();
  t.rightCols<2>() = neg.rightCols<2>();
  return {t, obs.vector, p, Representation::fw};
}

inline TransportMatrix transport_fw(const LorentzMatrix& pure, const FourMomentum& p) {
  return transport_fw(ObserverTransform::from_pure_boost(pure), p);
}

/// The irreducible 2x2 block ((A, B), (-B*, A*)).
struct WignerBlock {
  Complex a;
  Complex b;

  Block2 matrix() const {
    Block2 m;
    m << a, b, -std::conj(b), std::conj(a);
    return m;
  }

  double norm_residual() const { return std::abs(std::norm(a) + std::norm(b) - 1.0); }

  /// |A* B - A B|; zero when A is real or B vanishes (the block then also
  /// reads ((A, B), (-B*, A))).
  double conjugate_product_residual() const { return std::abs(std::conj(a) * b - a * b); }
};

class WignerShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extracts (A, B) from the upper block and checks the whole matrix against
/// the block-diagonal SU(2) shape.
inline WignerBlock wigner_block(const TransportMatrix& t, double tol = 1e-10) {
  const Block2 up = t.upper();
  WignerBlock w{up(0, 0), up(0, 1)};
  const double leak = t.leakage();
  const double mismatch = t.block_mismatch();
  const double shape = (up - w.matrix()).cwiseAbs().maxCoeff();
  if (leak > tol || mismatch > tol || shape > tol || w.norm_residual() > tol) {
    throw WignerShapeError("wigner_block: transport is not ((A,B),(-B*,A*)) block-diagonal "
                           "(leakage " + std::to_string(leak) + ", block mismatch " +
                           std::to_string(mismatch) + ", shape " + std::to_string(shape) + ")");
  }
  return w;
}

struct ABParams {
  double a1 = 1.0, b1 = 0.0, a2 = 1.0, b2 = 0.0;
};

/// Closed forms for a z-boost of rapidity xi acting on p (a1, b1) and on
/// p_perp (a2, b2), with E' = E cosh xi + p cos(theta) sinh xi and
/// E'' = E cosh xi - p sin(theta) sinh xi.
inline ABParams ab_params(double mass, const SphericalMomentum& s, double xi) {
  if (!(mass > 0.0)) throw std::invalid_argument("ab_params: mass must be positive");
  s.validate();
  const double p = s.magnitude;
  const double e = std::hypot(mass, p);
  const double ct = std::cos(s.theta), st = std::sin(s.theta);
  const double ch = std::cosh(xi), sh = std::sinh(xi);
  const double ch2 = std::cosh(0.5 * xi), sh2 = std::sinh(0.5 * xi);
  const double e1 = e * ch + p * ct * sh;
  const double e2 = e * ch - p * st * sh;

  ABParams r;
  r.a1 = std::sqrt((mass + e) / (mass + e1)) * (ch2 + p * ct / (mass + e) * sh2);
  r.b1 = p * st / std::sqrt((mass + e) * (mass + e1)) * sh2;
  r.a2 = std::sqrt((mass + e) / (mass + e2)) * (ch2 - p * st / (mass + e) * sh2);
  r.b2 = p * ct / std::sqrt((mass + e) * (mass + e2)) * sh2;
  return r;
}

}  // namespace relspin
