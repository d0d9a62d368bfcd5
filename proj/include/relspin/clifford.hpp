#pragma once

// Gamma matrices in the standard (Dirac) representation, the rest-frame spin
// tensor and the Levi-Civita symbols used to contract it.
//
// Conventions: metric diag(+,-,-,-), Greek indices 0..3. Spatial 3-vectors
// and operator triples are stored 0-based (x, y, z) = (0, 1, 2).

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace relspin {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Spinor4 = Eigen::Vector4cd;
using OperatorMatrix = Eigen::Matrix4cd;
using Pauli2 = Eigen::Matrix2cd;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerance used for identities between products of exact 0/+-1/+-i entries.
inline constexpr double kExactTolerance = 1e-14;

inline bool is_finite(const OperatorMatrix& m) { return m.allFinite(); }

inline double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Entrywise comparison with an explicit absolute tolerance.
inline bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b, double abs_tol) {
  return max_abs_diff(a, b) <= abs_tol;
}

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

inline OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b + b * a;
}

struct MetricSignature {
  static constexpr std::array<double, 4> diagonal{1.0, -1.0, -1.0, -1.0};

  static constexpr double eta(int mu, int nu) { return mu == nu ? diagonal[mu] : 0.0; }
};

enum class IndexPosition { upper, lower };

namespace detail {

inline void check_greek(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::out_of_range("spacetime index out of range: " + std::to_string(mu));
  }
}

inline void check_latin(int i) {
  if (i < 0 || i > 2) {
    throw std::out_of_range("spatial index out of range: " + std::to_string(i));
  }
}

inline int permutation_sign(std::array<int, 4> ix) {
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (ix[i] == ix[j]) return 0;
      if (ix[i] > ix[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace detail

/// Totally antisymmetric symbol with eps^{0123} = +1. Lowering all four
/// indices with diag(+,-,-,-) flips the sign, so eps_{0123} = -1.
inline int levi_civita4(IndexPosition pos, int mu, int nu, int lambda, int delta) {
  detail::check_greek(mu);
  detail::check_greek(nu);
  detail::check_greek(lambda);
  detail::check_greek(delta);
  const int s = detail::permutation_sign({mu, nu, lambda, delta});
  return pos == IndexPosition::upper ? s : -s;
}

/// eps_{ijk} on 0-based spatial indices, eps_{xyz} = +1.
inline int levi_civita3(int i, int j, int k) {
  detail::check_latin(i);
  detail::check_latin(j);
  detail::check_latin(k);
  return detail::permutation_sign({-1, i, j, k});
}

inline const std::array<Pauli2, 3>& pauli() {
  static const std::array<Pauli2, 3> sigma = [] {
    std::array<Pauli2, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -kI, kI, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

struct GammaBasis {
  std::array<OperatorMatrix, 4> gamma;  // gamma^mu, upper index
  OperatorMatrix gamma5;
  std::array<OperatorMatrix, 3> sigma;  // Sigma_i = block-diag(sigma_i, sigma_i)
  std::array<OperatorMatrix, 3> alpha;  // alpha_i = gamma^0 gamma^i
  OperatorMatrix identity;
};

/// Builds the standard-representation basis from the Pauli matrices.
inline GammaBasis gamma_basis() {
  const auto& s = pauli();
  const Pauli2 id2 = Pauli2::Identity();
  const Pauli2 zero2 = Pauli2::Zero();

  GammaBasis b;
  b.identity = OperatorMatrix::Identity();
  b.gamma[0] << id2, zero2, zero2, -id2;
  for (int i = 0; i < 3; ++i) {
    b.gamma[i + 1] << zero2, s[i], -s[i], zero2;
    b.sigma[i] << s[i], zero2, zero2, s[i];
    b.alpha[i] = b.gamma[0] * b.gamma[i + 1];
  }
  b.gamma5 = kI * b.gamma[0] * b.gamma[1] * b.gamma[2] * b.gamma[3];
  return b;
}

/// Shared immutable instance; every construction in the library reads from it.
inline const GammaBasis& dirac() {
  static const GammaBasis basis = gamma_basis();
  return basis;
}

/// gamma^0 M^dagger gamma^0: the adjoint with respect to the psi-bar pairing.
inline OperatorMatrix dirac_conjugate(const OperatorMatrix& m) {
  const auto& g0 = dirac().gamma[0];
  return g0 * m.adjoint() * g0;
}

/// Sigma_0^{mu nu} = (i/2)[gamma^mu, gamma^nu].
inline OperatorMatrix spin_tensor_rest(int mu, int nu) {
  detail::check_greek(mu);
  detail::check_greek(nu);
  const auto& g = dirac().gamma;
  return 0.5 * kI * commutator(g[mu], g[nu]);
}

using SpinTensor = std::array<std::array<OperatorMatrix, 4>, 4>;

inline const SpinTensor& rest_spin_tensor() {
  static const SpinTensor t = [] {
    SpinTensor s;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) s[mu][nu] = spin_tensor_rest(mu, nu);
    }
    return s;
  }();
  return t;
}

/// (1/2) eps_{ijk} T^{jk}: the axial 3-vector of the spatial block of a tensor.
inline std::array<OperatorMatrix, 3> spatial_dual(const SpinTensor& t) {
  std::array<OperatorMatrix, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i].setZero();
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int e = levi_civita3(i, j, k);
        if (e != 0) out[i] += 0.5 * e * t[j + 1][k + 1];
      }
    }
  }
  return out;
}

}  // namespace relspin
