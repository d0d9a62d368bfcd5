#pragma once

// Dirac spinors in the covariant (standard) representation and in the
// Foldy-Wouthuysen (FW) representation, the spinor-representation boost
// S(L_p), energy projectors and the FW unitary U(q).

#include <cmath>
#include <optional>
#include <stdexcept>

#include "relspin/clifford.hpp"
#include "relspin/kinematics.hpp"

namespace relspin {

enum class Representation { covariant, fw };
enum class EnergySign { positive, negative };
enum class SpinLabel { up, down };

inline int to_int(EnergySign s) { return s == EnergySign::positive ? 1 : -1; }
inline int to_int(SpinLabel s) { return s == SpinLabel::up ? 1 : -1; }

/// Index of the rest/FW basis vector: u(+), u(-), v(+), v(-) -> 0, 1, 2, 3.
inline int basis_index(SpinLabel s, EnergySign e) {
  return (e == EnergySign::positive ? 0 : 2) + (s == SpinLabel::up ? 0 : 1);
}

struct DiracSpinor {
  Spinor4 components = Spinor4::Zero();
  Representation rep = Representation::covariant;
  EnergySign energy_sign = EnergySign::positive;
  std::optional<SpinLabel> spin;
};

/// alpha . v for a contravariant 3-vector v.
inline OperatorMatrix alpha_dot(const Vec3& v) {
  const auto& a = dirac().alpha;
  return v.x() * a[0] + v.y() * a[1] + v.z() * a[2];
}

/// gamma-vector . v = gamma^i v^i = -gamma^i v_i.
inline OperatorMatrix gamma_dot(const Vec3& v) {
  const auto& g = dirac().gamma;
  return v.x() * g[1] + v.y() * g[2] + v.z() * g[3];
}

/// Feynman slash gamma^mu p_mu = gamma^0 E - gamma . p.
inline OperatorMatrix slash(const FourMomentum& p) {
  return p.energy() * dirac().gamma[0] - gamma_dot(p.p3());
}

/// S(L_p) = (E + m - gamma^0 gamma^i p_i) / sqrt(2m(E+m)). Hermitian, not unitary
/// for p != 0.
inline OperatorMatrix spinor_boost(const FourMomentum& p) {
  const double m = p.mass(), e = p.energy();
  const double norm = std::sqrt(2.0 * m * (e + m));
  return ((e + m) * OperatorMatrix::Identity() + alpha_dot(p.p3())) / norm;
}

/// S^{-1}(L_p) = S(L_{-p}).
inline OperatorMatrix spinor_boost_inverse(const FourMomentum& p) {
  return spinor_boost(p.reversed());
}

/// S for a boost of rapidity xi along the unit vector n:
/// cosh(xi/2) + (alpha . n) sinh(xi/2).
inline OperatorMatrix spinor_pure_boost(const Vec3& direction, double xi) {
  const Vec3 n = direction.normalized();
  return std::cosh(0.5 * xi) * OperatorMatrix::Identity() + std::sinh(0.5 * xi) * alpha_dot(n);
}

inline OperatorMatrix spinor_boost_z(double xi) { return spinor_pure_boost(Vec3::UnitZ(), xi); }

/// A Lorentz transformation carried in both the vector and the spinor
/// representation. Composition multiplies both factors, which fixes the
/// sign of the spinor matrix without reconstructing it from the vector one.
struct ObserverTransform {
  LorentzMatrix vector;
  OperatorMatrix spinor = OperatorMatrix::Identity();

  static ObserverTransform identity() { return {}; }

  static ObserverTransform boost(const Vec3& direction, double xi) {
    return {pure_boost(direction, xi), spinor_pure_boost(direction, xi)};
  }

  static ObserverTransform boost_along_z(double xi) { return {boost_z(xi), spinor_boost_z(xi)}; }

  /// Accepts only pure boosts; the spinor factor is S(L_q) with q = L (m,0,0,0).
  static ObserverTransform from_pure_boost(const LorentzMatrix& l) {
    if (!l.is_pure_boost()) {
      throw std::invalid_argument("ObserverTransform: matrix is not a pure boost");
    }
    const Vec3 q = l.matrix().block<3, 1>(1, 0);
    return {l, spinor_boost(FourMomentum(1.0, q))};
  }

  /// this after other
  ObserverTransform then_after(const ObserverTransform& other) const {
    return {vector * other.vector, spinor * other.spinor};
  }
};

/// Rest spinors are the unit coordinate vectors, eigenvectors of Sigma_z.
inline Spinor4 rest_spinor(SpinLabel s, EnergySign e) {
  return Spinor4::Unit(basis_index(s, e));
}

/// covariant: u(p,s) = S(L_p) u(k,s), v likewise; fw: the momentum-independent
/// unit vectors.
inline DiracSpinor basis_spinor(const FourMomentum& p, SpinLabel s, EnergySign e,
                                Representation rep) {
  DiracSpinor out;
  out.rep = rep;
  out.energy_sign = e;
  out.spin = s;
  out.components = rep == Representation::covariant ? Spinor4(spinor_boost(p) * rest_spinor(s, e))
                                                    : rest_spinor(s, e);
  return out;
}

/// psi-bar = psi^dagger gamma^0. Only meaningful in the covariant representation.
inline Eigen::RowVector4cd dirac_adjoint(const DiracSpinor& psi) {
  if (psi.rep != Representation::covariant) {
    throw std::invalid_argument("dirac_adjoint: FW spinors use the plain adjoint");
  }
  return psi.components.adjoint() * dirac().gamma[0];
}

inline Complex bar_product(const Spinor4& a, const Spinor4& b) {
  return a.dot(dirac().gamma[0] * b);
}

struct EnergyProjector {
  OperatorMatrix matrix;
  EnergySign sign;
  FourMomentum momentum;
};

/// (m +- gamma^mu p_mu) / (2m)
inline EnergyProjector energy_projector(const FourMomentum& p, EnergySign sign) {
  const double m = p.mass();
  const OperatorMatrix ps = slash(p);
  const OperatorMatrix mat = sign == EnergySign::positive
                                 ? OperatorMatrix((m * OperatorMatrix::Identity() + ps) / (2.0 * m))
                                 : OperatorMatrix((m * OperatorMatrix::Identity() - ps) / (2.0 * m));
  return {mat, sign, p};
}

/// U(q) = (E + m - gamma^i q_i) / sqrt(2E(E+m)), q the momentum-operator
/// eigenvalue (contravariant), E = sqrt(q^2 + m^2).
inline OperatorMatrix fw_unitary(const Vec3& q, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("fw_unitary: mass must be positive");
  const double e = std::hypot(mass, q.norm());
  return ((e + mass) * OperatorMatrix::Identity() + gamma_dot(q)) /
         std::sqrt(2.0 * e * (e + mass));
}

/// Momentum-operator eigenvalue of an energy sector: +p for positive energy,
/// -p for negative energy.
inline Vec3 sector_momentum(const FourMomentum& p, EnergySign e) {
  return e == EnergySign::positive ? p.p3() : Vec3(-p.p3());
}

/// Relative admixture of the opposite energy sign above which a spinor counts
/// as mixed.
inline constexpr double kEnergyMixTolerance = 1e-8;

/// psi-tilde = sqrt(m/E) U(+-p) psi for a pure-sign covariant spinor.
inline DiracSpinor to_fw(const DiracSpinor& psi, const FourMomentum& p) {
  if (psi.rep != Representation::covariant) {
    throw std::invalid_argument("to_fw: input must be in the covariant representation");
  }
  const Spinor4 plus = energy_projector(p, EnergySign::positive).matrix * psi.components;
  const Spinor4 minus = psi.components - plus;
  const double scale = std::max(plus.norm(), minus.norm());
  if (scale == 0.0) throw std::invalid_argument("to_fw: zero spinor");
  EnergySign sign;
  if (minus.norm() <= kEnergyMixTolerance * scale) {
    sign = EnergySign::positive;
  } else if (plus.norm() <= kEnergyMixTolerance * scale) {
    sign = EnergySign::negative;
  } else {
    throw std::invalid_argument("to_fw: spinor mixes energy signs; project it first");
  }
  DiracSpinor out;
  out.rep = Representation::fw;
  out.energy_sign = sign;
  out.spin = psi.spin;
  out.components = std::sqrt(p.mass() / p.energy()) *
                   (fw_unitary(sector_momentum(p, sign), p.mass()) * psi.components);
  return out;
}

}  // namespace relspin
