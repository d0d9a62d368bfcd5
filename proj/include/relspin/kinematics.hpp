#pragma once

// On-shell four-momenta and proper orthochronous Lorentz matrices.
// Natural units (c = hbar = 1). Lorentz matrices act on contravariant
// components (E, px, py, pz); lower spatial components are p_i = -p^i.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "relspin/clifford.hpp"

namespace relspin {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

class FourMomentum {
 public:
  FourMomentum(double mass, const Vec3& p3) : mass_(mass), p3_(p3) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
      throw std::invalid_argument("FourMomentum: mass must be positive and finite");
    }
    if (!p3.allFinite()) throw std::invalid_argument("FourMomentum: non-finite momentum");
    energy_ = std::hypot(mass_, p3_.norm());
  }

  static FourMomentum at_rest(double mass) { return {mass, Vec3::Zero()}; }

  double mass() const { return mass_; }
  double energy() const { return energy_; }
  const Vec3& p3() const { return p3_; }
  double magnitude() const { return p3_.norm(); }

  /// (E, p^1, p^2, p^3)
  Vec4 contravariant() const { return {energy_, p3_.x(), p3_.y(), p3_.z()}; }
  /// (E, p_1, p_2, p_3) = (E, -p^1, -p^2, -p^3)
  Vec4 covariant() const { return {energy_, -p3_.x(), -p3_.y(), -p3_.z()}; }

  double rapidity() const { return std::asinh(magnitude() / mass_); }

  /// Same mass, spatial momentum reversed.
  FourMomentum reversed() const { return {mass_, -p3_}; }

 private:
  double mass_;
  Vec3 p3_;
  double energy_;
};

inline double minkowski_dot(const Vec4& a, const Vec4& b) {
  return a(0) * b(0) - a.tail<3>().dot(b.tail<3>());
}

/// Polar angle theta in [0, pi] from +z, azimuth phi from +x.
struct SphericalMomentum {
  double magnitude = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  void validate() const {
    if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
      throw std::invalid_argument("SphericalMomentum: magnitude must be >= 0");
    }
    // A few ulps of slack so that theta = pi parsed from text is accepted.
    constexpr double slack = 1e-12;
    if (!(theta >= -slack && theta <= std::numbers::pi + slack)) {
      throw std::invalid_argument("SphericalMomentum: theta outside [0, pi]");
    }
    if (!std::isfinite(phi)) throw std::invalid_argument("SphericalMomentum: non-finite phi");
  }
};

/// {p sin(theta) cos(phi), p sin(theta) sin(phi), p cos(theta)}
inline FourMomentum make_momentum(double mass, const SphericalMomentum& s) {
  s.validate();
  const double st = std::sin(s.theta), ct = std::cos(s.theta);
  return {mass, s.magnitude * Vec3(st * std::cos(s.phi), st * std::sin(s.phi), ct)};
}

/// {p cos(theta) cos(phi), p cos(theta) sin(phi), -p sin(theta)}, orthogonal to
/// make_momentum's spatial part; the substitution theta -> theta + pi/2.
inline FourMomentum perp_momentum(double mass, const SphericalMomentum& s) {
  s.validate();
  const double st = std::sin(s.theta), ct = std::cos(s.theta);
  return {mass, s.magnitude * Vec3(ct * std::cos(s.phi), ct * std::sin(s.phi), -st)};
}

class LorentzMatrix {
 public:
  /// Relative tolerance on L^T eta L = eta, measured against max|L|^2.
  static constexpr double kTolerance = 1e-12;

  LorentzMatrix() : m_(Mat4::Identity()) {}

  explicit LorentzMatrix(const Mat4& m) : m_(m) {
    if (!m.allFinite()) throw std::invalid_argument("LorentzMatrix: non-finite entries");
    if (metric_residual() > kTolerance) {
      throw std::invalid_argument("LorentzMatrix: does not preserve the metric");
    }
    if (m(0, 0) < 1.0 - kTolerance || m.determinant() <= 0.0) {
      throw std::invalid_argument("LorentzMatrix: not proper orthochronous");
    }
  }

  static LorentzMatrix identity() { return {}; }

  const Mat4& matrix() const { return m_; }
  double operator()(int mu, int nu) const { return m_(mu, nu); }

  /// max |L^T eta L - eta| / max(1, max|L|^2)
  double metric_residual() const {
    const Mat4 eta = Vec4(1, -1, -1, -1).asDiagonal();
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff() * m_.cwiseAbs().maxCoeff());
    return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff() / scale;
  }

  /// A pure boost has a symmetric matrix (no rotation factor).
  bool is_pure_boost(double rel_tol = 1e-12) const {
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    return (m_ - m_.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
  }

  /// eta L^T eta
  LorentzMatrix inverse() const {
    const Mat4 eta = Vec4(1, -1, -1, -1).asDiagonal();
    return LorentzMatrix(eta * m_.transpose() * eta, Unchecked{});
  }

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    return LorentzMatrix(a.m_ * b.m_, Unchecked{});
  }

 private:
  struct Unchecked {};
  LorentzMatrix(const Mat4& m, Unchecked) : m_(m) {}

  friend LorentzMatrix pure_boost(const Vec3&, double);
  friend LorentzMatrix standard_boost(const FourMomentum&);

  Mat4 m_;
};

/// Boost with rapidity xi along the unit vector n: maps the rest momentum to
/// m (cosh xi, n sinh xi).
inline LorentzMatrix pure_boost(const Vec3& direction, double xi) {
  const double norm = direction.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("pure_boost: zero direction");
  const Vec3 n = direction / norm;
  const double c = std::cosh(xi), s = std::sinh(xi);
  Mat4 m;
  m(0, 0) = c;
  m.block<1, 3>(0, 1) = s * n.transpose();
  m.block<3, 1>(1, 0) = s * n;
  m.block<3, 3>(1, 1) = Eigen::Matrix3d::Identity() + (c - 1.0) * n * n.transpose();
  return LorentzMatrix(m, LorentzMatrix::Unchecked{});
}

inline LorentzMatrix boost_z(double xi) { return pure_boost(Vec3::UnitZ(), xi); }

/// L_p: the pure boost with L_p (m, 0, 0, 0) = p.
inline LorentzMatrix standard_boost(const FourMomentum& p) {
  const double m = p.mass(), e = p.energy();
  const Vec3& q = p.p3();
  Mat4 l;
  l(0, 0) = e / m;
  l.block<1, 3>(0, 1) = q.transpose() / m;
  l.block<3, 1>(1, 0) = q / m;
  l.block<3, 3>(1, 1) = Eigen::Matrix3d::Identity() + q * q.transpose() / (m * (e + m));
  return LorentzMatrix(l, LorentzMatrix::Unchecked{});
}

/// Transforms the spatial part with the matrix; the energy is re-derived from
/// the mass shell so the result stays exactly on-shell.
inline FourMomentum apply_lorentz(const LorentzMatrix& l, const FourMomentum& p) {
  const Vec4 out = l.matrix() * p.contravariant();
  return {p.mass(), out.tail<3>()};
}

/// Raw matrix-vector product, energy component included.
inline Vec4 apply_lorentz_raw(const LorentzMatrix& l, const Vec4& v) { return l.matrix() * v; }

inline double velocity(double xi) { return std::tanh(xi); }

}  // namespace relspin
