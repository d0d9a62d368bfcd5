#pragma once

// Spin operators of a massive Dirac particle on the 4-spinor space:
//
//   conjugation   Sigma_R = S(L_p) Sigma S^{-1}(L_p)   (authoritative)
//   closed form   the momentum expansion of Sigma_R, at half scale
//   ryder         built from commutators of Pauli-Lubanski vectors
//   fw_mean       U^dagger(q) Sigma U(q), commutes with H_D(q)
//   classical     gamma_v times the classical covariant dipole moment
//
// Every triple returned here is normalized so that its rest-frame limit is
// Sigma (eigenvalues +-1); the physical spin is half of it.

#include <array>
#include <cmath>

#include "relspin/clifford.hpp"
#include "relspin/kinematics.hpp"
#include "relspin/spinor.hpp"

namespace relspin {

enum class SpinConstruction { rest, conjugation, closed_form, ryder, fw_mean, classical, bogolubov };

struct SpinOperatorTriple {
  std::array<OperatorMatrix, 3> components;
  SpinConstruction construction = SpinConstruction::rest;

  const OperatorMatrix& operator[](int i) const { return components[i]; }
  OperatorMatrix& operator[](int i) { return components[i]; }
  const OperatorMatrix& x() const { return components[0]; }
  const OperatorMatrix& y() const { return components[1]; }
  const OperatorMatrix& z() const { return components[2]; }

  SpinOperatorTriple scaled(double f) const {
    SpinOperatorTriple out = *this;
    for (auto& c : out.components) c *= f;
    return out;
  }
};

inline double max_abs_diff(const SpinOperatorTriple& a, const SpinOperatorTriple& b) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, max_abs_diff(a[i], b[i]));
  return r;
}

namespace detail {

using OperatorVector = std::array<OperatorMatrix, 3>;

/// (A x v)_i = eps_ijk A_j v_k for an operator vector A and c-number v.
inline OperatorVector cross(const OperatorVector& a, const Vec3& v) {
  return {a[1] * v.z() - a[2] * v.y(), a[2] * v.x() - a[0] * v.z(), a[0] * v.y() - a[1] * v.x()};
}

/// (v x A)_i
inline OperatorVector cross(const Vec3& v, const OperatorVector& a) {
  return {v.y() * a[2] - v.z() * a[1], v.z() * a[0] - v.x() * a[2], v.x() * a[1] - v.y() * a[0]};
}

inline OperatorMatrix dot(const Vec3& v, const OperatorVector& a) {
  return v.x() * a[0] + v.y() * a[1] + v.z() * a[2];
}

}  // namespace detail

inline SpinOperatorTriple rest_spin() { return {dirac().sigma, SpinConstruction::rest}; }

/// H_D(q) = gamma^0 m - gamma^0 gamma^i q_i = beta m + alpha . q
inline OperatorMatrix dirac_hamiltonian(const Vec3& q, double mass) {
  return mass * dirac().gamma[0] + alpha_dot(q);
}

/// Sigma_R^{mu nu} = S(L_p) Sigma_0^{mu nu} S^{-1}(L_p)
inline SpinTensor moving_spin_tensor(const FourMomentum& p) {
  const OperatorMatrix s = spinor_boost(p);
  const OperatorMatrix s_inv = spinor_boost_inverse(p);
  const auto& rest = rest_spin_tensor();
  SpinTensor out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) out[mu][nu] = s * rest[mu][nu] * s_inv;
  }
  return out;
}

/// (Sigma_R)_i = eps_ijk Sigma_R^{jk} / 2. Rest limit Sigma; (Sigma_R)_z has
/// eigenvalue +-1 on u(p,+-) and v(p,+-).
inline SpinOperatorTriple covariant_spin(const FourMomentum& p) {
  return {spatial_dual(moving_spin_tensor(p)), SpinConstruction::conjugation};
}

/// Measured ratio between the conjugation construction and the
/// closed-form expansion below.
inline constexpr double kClosedFormToConjugation = 2.0;

/// Sigma_i/2 + eps_ijk p_j (Sigma x p)_k / (2m(E+m)) + i gamma5 (Sigma x p)_i / (2m),
/// p contravariant. Rest limit Sigma/2.
inline SpinOperatorTriple covariant_spin_closed_form(const FourMomentum& p) {
  const double m = p.mass(), e = p.energy();
  const Vec3& q = p.p3();
  const auto& sig = dirac().sigma;
  const auto sxp = detail::cross(sig, q);
  const auto pxsxp = detail::cross(q, sxp);
  SpinOperatorTriple out{{}, SpinConstruction::closed_form};
  for (int i = 0; i < 3; ++i) {
    out[i] = 0.5 * sig[i] + pxsxp[i] / (2.0 * m * (e + m)) +
             kI * dirac().gamma5 * sxp[i] / (2.0 * m);
  }
  return out;
}

/// U^dagger(q) Sigma U(q): the FW mean spin as a pullback.
inline SpinOperatorTriple fw_mean_spin_pullback(const Vec3& q, double mass) {
  const OperatorMatrix u = fw_unitary(q, mass);
  SpinOperatorTriple out{{}, SpinConstruction::fw_mean};
  for (int i = 0; i < 3; ++i) out[i] = u.adjoint() * dirac().sigma[i] * u;
  return out;
}

/// Sigma - i gamma^0 (alpha x q)/E - q x (Sigma x q)/(E(E+m)).
///
/// gamma^0 alpha = gamma-vector, so the middle term is i (gamma x q)/E with a
/// minus sign. Commutes with dirac_hamiltonian(q).
inline SpinOperatorTriple fw_mean_spin(const Vec3& q, double mass) {
  const double e = std::hypot(mass, q.norm());
  const auto& sig = dirac().sigma;
  const detail::OperatorVector gvec{dirac().gamma[1], dirac().gamma[2], dirac().gamma[3]};
  const auto gxq = detail::cross(gvec, q);
  const auto qxsxq = detail::cross(q, detail::cross(sig, q));
  SpinOperatorTriple out{{}, SpinConstruction::fw_mean};
  for (int i = 0; i < 3; ++i) {
    out[i] = sig[i] - kI * gxq[i] / e - qxsxq[i] / (e * (e + mass));
  }
  return out;
}

/// 2 gamma_v [Sigma/2 - p (v . Sigma) / (2(E+m))] = (E/m) Sigma - p (p . Sigma)/(m(E+m)),
/// the classical covariant spin embedded as S times the 4x4 identity.
/// Differs from covariant_spin only by i gamma5 (Sigma x p)/m.
inline SpinOperatorTriple classical_spin(const FourMomentum& p) {
  const double m = p.mass(), e = p.energy();
  const Vec3& q = p.p3();
  const auto& sig = dirac().sigma;
  const OperatorMatrix q_dot_sigma = detail::dot(q, sig);
  SpinOperatorTriple out{{}, SpinConstruction::classical};
  for (int i = 0; i < 3; ++i) out[i] = (e / m) * sig[i] - q(i) * q_dot_sigma / (m * (e + m));
  return out;
}

// --- Pauli-Lubanski vector ---------------------------------------------------

/// Which spin tensor feeds W_mu: the rest tensor Sigma_0^{mu nu} or its
/// boosted counterpart Sigma_R^{mu nu}.
enum class SpinTensorFrame { rest, moving };

/// W_mu = -(1/2) eps_{mu nu lambda delta} (J^{nu lambda}/2) p^delta on the spin
/// sector (orbital parts cancel on plane waves).
///
/// With eps_{0123} = -1 the rest frame gives W_0 = 0, W_i = -(m/2) Sigma_i,
/// so Sigma_i/2 = -W_i/m and W^mu W_mu = -(3/4) m^2.
struct PauliLubanskiSet {
  std::array<OperatorMatrix, 4> lower;
  FourMomentum momentum;
  SpinTensorFrame frame;

  OperatorMatrix upper(int mu) const { return MetricSignature::diagonal[mu] * lower[mu]; }

  /// W^mu W_mu
  OperatorMatrix casimir() const {
    OperatorMatrix c = OperatorMatrix::Zero();
    for (int mu = 0; mu < 4; ++mu) c += upper(mu) * lower[mu];
    return c;
  }

  /// W^mu p_mu
  OperatorMatrix transversality() const {
    const Vec4 pl = momentum.covariant();
    OperatorMatrix t = OperatorMatrix::Zero();
    for (int mu = 0; mu < 4; ++mu) t += pl(mu) * upper(mu);
    return t;
  }
};

inline PauliLubanskiSet pauli_lubanski(const FourMomentum& p,
                                       SpinTensorFrame frame = SpinTensorFrame::rest) {
  const SpinTensor j = frame == SpinTensorFrame::rest ? rest_spin_tensor() : moving_spin_tensor(p);
  const Vec4 pu = p.contravariant();
  PauliLubanskiSet w{{}, p, frame};
  for (int mu = 0; mu < 4; ++mu) {
    w.lower[mu].setZero();
    for (int nu = 0; nu < 4; ++nu) {
      for (int la = 0; la < 4; ++la) {
        for (int de = 0; de < 4; ++de) {
          const int e = levi_civita4(IndexPosition::lower, mu, nu, la, de);
          if (e != 0) w.lower[mu] += (-0.25 * e * pu(de)) * j[nu][la];
        }
      }
    }
  }
  return w;
}

/// (1/m)(W^i - p^i W^0/(m+E)) in contravariant components: the rest-frame spin
/// vector written with W. Equals (Sigma_R)_i / 2 for the rest-tensor W.
/// Returned at the Sigma/2 scale of the rest spin operator.
inline SpinOperatorTriple bogolubov_spin(const PauliLubanskiSet& w) {
  const double m = w.momentum.mass(), e = w.momentum.energy();
  const Vec3& q = w.momentum.p3();
  SpinOperatorTriple out{{}, SpinConstruction::bogolubov};
  for (int i = 0; i < 3; ++i) out[i] = (w.upper(i + 1) - q(i) * w.upper(0) / (m + e)) / m;
  return out;
}

// --- Ryder construction ------------------------------------------------------

struct RyderTensors {
  SpinTensor w;        // W^{mu nu} = [W^mu, W^nu]/m^2
  SpinTensor w_dual;   // (1/2) eps^{mu nu rho delta} W_{rho delta}
  SpinTensor x;        // -i (W + i W~)
  SpinTensor y;        // -i (W - i W~)
};

inline RyderTensors ryder_tensors(const PauliLubanskiSet& pl) {
  const double m2 = pl.momentum.mass() * pl.momentum.mass();
  std::array<OperatorMatrix, 4> up;
  for (int mu = 0; mu < 4; ++mu) up[mu] = pl.upper(mu);

  RyderTensors t;
  SpinTensor w_low;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      t.w[a][b] = commutator(up[a], up[b]) / m2;
      w_low[a][b] = MetricSignature::diagonal[a] * MetricSignature::diagonal[b] * t.w[a][b];
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      t.w_dual[a][b].setZero();
      for (int r = 0; r < 4; ++r) {
        for (int d = 0; d < 4; ++d) {
          const int e = levi_civita4(IndexPosition::upper, a, b, r, d);
          if (e != 0) t.w_dual[a][b] += 0.5 * e * w_low[r][d];
        }
      }
      t.x[a][b] = -kI * (t.w[a][b] + kI * t.w_dual[a][b]);
      t.y[a][b] = -kI * (t.w[a][b] - kI * t.w_dual[a][b]);
    }
  }
  return t;
}

/// Chiral projectors multiplying X and Y in the parity-complete combination.
enum class ChiralVariant {
  left_x_left_y,    // (1 - g5)/2 X + (1 - g5)/2 Y
  left_x_right_y,   // (1 - g5)/2 X + (1 + g5)/2 Y
  right_x_left_y,   // (1 + g5)/2 X + (1 - g5)/2 Y
};

/// (1/2) eps_ijk (P_x X + P_y Y)_{jk} at the raw scale (rest limit Sigma/2
/// for the opposite-chirality variants).
inline SpinOperatorTriple ryder_candidate(const RyderTensors& t, ChiralVariant variant) {
  const OperatorMatrix id = OperatorMatrix::Identity();
  const OperatorMatrix left = 0.5 * (id - dirac().gamma5);
  const OperatorMatrix right = 0.5 * (id + dirac().gamma5);
  const OperatorMatrix& px = variant == ChiralVariant::right_x_left_y ? right : left;
  const OperatorMatrix& py = variant == ChiralVariant::left_x_right_y ? right : left;
  SpinTensor combined;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) combined[a][b] = px * t.x[a][b] + py * t.y[a][b];
  }
  // Spatial indices: lowering both leaves the jk block unchanged.
  return {spatial_dual(combined), SpinConstruction::ryder};
}

/// Variant and scale that reproduce covariant_spin, selected numerically.
inline constexpr ChiralVariant kRyderVariant = ChiralVariant::right_x_left_y;
inline constexpr double kRyderScale = 2.0;

/// Ryder's spin from the Pauli-Lubanski vector of the moving-frame spin
/// tensor. Feeding the rest-tensor W instead yields plain Sigma.
inline SpinOperatorTriple ryder_spin(const FourMomentum& p) {
  const auto t = ryder_tensors(pauli_lubanski(p, SpinTensorFrame::moving));
  return ryder_candidate(t, kRyderVariant).scaled(kRyderScale);
}

// --- Expectation values -------------------------------------------------------

/// psi-bar O psi for each component; imaginary parts vanish for the
/// pseudo-Hermitian covariant spin.
inline Eigen::Vector3cd bar_expectation(const SpinOperatorTriple& op, const Spinor4& psi) {
  Eigen::Vector3cd out;
  for (int i = 0; i < 3; ++i) out(i) = bar_product(psi, op[i] * psi);
  return out;
}

inline Eigen::Vector3cd plain_expectation(const SpinOperatorTriple& op, const Spinor4& psi) {
  Eigen::Vector3cd out;
  for (int i = 0; i < 3; ++i) out(i) = psi.dot(op[i] * psi);
  return out;
}

/// (Sigma_R)_i psi evaluated as S(L_p) Sigma_i S^{-1}(L_p) psi. Forming Sigma_R
/// first and then contracting loses about (E/m)^2 eps in psi-bar Sigma_R psi;
/// the factored product loses about (E/m) eps.
inline std::array<Spinor4, 3> apply_covariant_spin(const FourMomentum& p, const Spinor4& psi) {
  const Spinor4 rest = spinor_boost_inverse(p) * psi;
  const OperatorMatrix s = spinor_boost(p);
  std::array<Spinor4, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = s * (dirac().sigma[i] * rest);
  return out;
}

/// The three routes to the signed spin expectation of a covariant spinor
/// psi(p) = psi_+ + psi_- at momentum p.
struct SignedSpinExpectations {
  Eigen::Vector3cd covariant;  // psi-bar Sigma_R psi
  Eigen::Vector3cd fw_mean;    // (m/E)[psi_+^dag Sigma_FW(p) psi_+ - psi_-^dag Sigma_FW(-p) psi_-]
  Eigen::Vector3cd fw_rep;     // psi~_+^dag Sigma psi~_+ - psi~_-^dag Sigma psi~_-
};

inline SignedSpinExpectations signed_spin_expectations(const Spinor4& psi, const FourMomentum& p) {
  const double m = p.mass(), e = p.energy();
  const Spinor4 plus = energy_projector(p, EnergySign::positive).matrix * psi;
  const Spinor4 minus = energy_projector(p, EnergySign::negative).matrix * psi;
  const auto sigma = rest_spin();

  SignedSpinExpectations out;
  const auto applied = apply_covariant_spin(p, psi);
  for (int i = 0; i < 3; ++i) out.covariant(i) = bar_product(psi, applied[i]);
  out.fw_mean = (m / e) * (plain_expectation(fw_mean_spin(p.p3(), m), plus) -
                           plain_expectation(fw_mean_spin(-p.p3(), m), minus));
  const double k = std::sqrt(m / e);
  const Spinor4 fw_plus = k * (fw_unitary(p.p3(), m) * plus);
  const Spinor4 fw_minus = k * (fw_unitary(-p.p3(), m) * minus);
  out.fw_rep = plain_expectation(sigma, fw_plus) - plain_expectation(sigma, fw_minus);
  return out;
}

}  // namespace relspin
