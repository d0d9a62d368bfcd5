#pragma once

// Discrete momentum superpositions in the FW representation, reduced spin
// density matrices (partial trace over momentum), their transformation under
// an observer boost and the von Neumann entropy.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "relspin/kinematics.hpp"
#include "relspin/spinor.hpp"
#include "relspin/wigner.hpp"

namespace relspin {

/// Amplitudes on (u+, u-, v+, v-) at one momentum.
using Amplitudes = Eigen::Vector4cd;

struct MomentumTerm {
  FourMomentum momentum;
  Amplitudes amplitudes;
};

class MomentumSuperposition {
 public:
  static constexpr double kNormTolerance = 1e-12;

  explicit MomentumSuperposition(std::vector<MomentumTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("MomentumSuperposition: no terms");
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
      throw std::invalid_argument("MomentumSuperposition: state is not normalized");
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      for (std::size_t j = i + 1; j < terms_.size(); ++j) {
        const Vec3 d = terms_[i].momentum.p3() - terms_[j].momentum.p3();
        const double scale = std::max({1.0, terms_[i].momentum.magnitude(),
                                       terms_[j].momentum.magnitude()});
        if (d.norm() <= 1e-12 * scale) {
          throw std::invalid_argument("MomentumSuperposition: repeated momentum");
        }
      }
    }
  }

  const std::vector<MomentumTerm>& terms() const { return terms_; }

  double norm_squared() const {
    double n = 0.0;
    for (const auto& t : terms_) n += t.amplitudes.squaredNorm();
    return n;
  }

 private:
  std::vector<MomentumTerm> terms_;
};

enum class DensitySubspace { positive_energy, full };

class ReducedSpinDensity {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Accepts a 2x2 (positive energy) or 4x4 (full) matrix and checks that it
  /// is Hermitian with unit trace and eigenvalues in [-tol, 1 + tol].
  explicit ReducedSpinDensity(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (!((m_.rows() == 2 && m_.cols() == 2) || (m_.rows() == 4 && m_.cols() == 4))) {
      throw std::invalid_argument("ReducedSpinDensity: matrix must be 2x2 or 4x4");
    }
    if (!m_.allFinite()) throw std::invalid_argument("ReducedSpinDensity: non-finite entries");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
      throw std::invalid_argument("ReducedSpinDensity: not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > kTolerance) {
      throw std::invalid_argument("ReducedSpinDensity: trace is not 1");
    }
    const Eigen::VectorXd ev = eigenvalues();
    if (ev.minCoeff() < -kTolerance || ev.maxCoeff() > 1.0 + kTolerance) {
      throw std::invalid_argument("ReducedSpinDensity: eigenvalues outside [0, 1]");
    }
  }

  const Eigen::MatrixXcd& matrix() const { return m_; }
  DensitySubspace subspace() const {
    return m_.rows() == 2 ? DensitySubspace::positive_energy : DensitySubspace::full;
  }

  /// Ascending. 2x2 uses lambda = 1/2 -+ r with r the Bloch half-length.
  Eigen::VectorXd eigenvalues() const {
    if (m_.rows() == 2) {
      const double half_diff = 0.5 * (m_(0, 0).real() - m_(1, 1).real());
      const double r = std::hypot(half_diff, std::abs(m_(0, 1)));
      const double mean = 0.5 * (m_(0, 0).real() + m_(1, 1).real());
      return Eigen::Vector2d(mean - r, mean + r);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }

 private:
  Eigen::MatrixXcd m_;
};

/// b amplitudes at or below this magnitude count as absent when deciding
/// whether the density lives in the positive-energy block.
inline constexpr double kNegativeEnergyCutoff = 1e-10;

/// rho_s = sum over momenta of psi~(p) psi~(p)^dagger; 2x2 when no
/// negative-energy amplitude is present.
inline ReducedSpinDensity reduce_density(const MomentumSuperposition& state) {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  bool has_negative = false;
  for (const auto& t : state.terms()) {
    rho += t.amplitudes * t.amplitudes.adjoint();
    has_negative = has_negative || t.amplitudes.tail<2>().cwiseAbs().maxCoeff() > kNegativeEnergyCutoff;
  }
  if (has_negative) return ReducedSpinDensity(rho);
  Eigen::MatrixXcd block = rho.block<2, 2>(0, 0);
  // Re-symmetrize away last-bit asymmetry from the outer products.
  block = 0.5 * (block + block.adjoint()).eval();
  return ReducedSpinDensity(block);
}

enum class StateVariant { psi1, psi2 };

/// (|p, u+> + |p_perp, u+>)/sqrt(2) for psi1, (|p, u+> + |p_perp, u->)/sqrt(2)
/// for psi2; discrete orthonormal momentum labels.
inline MomentumSuperposition make_state(StateVariant variant, double mass,
                                        const SphericalMomentum& s) {
  const double w = 1.0 / std::numbers::sqrt2;
  const Amplitudes up = Amplitudes::Unit(0) * w;
  const Amplitudes second = Amplitudes::Unit(variant == StateVariant::psi1 ? 0 : 1) * w;
  return MomentumSuperposition(
      {{make_momentum(mass, s), up}, {perp_momentum(mass, s), second}});
}

/// Moves each momentum to Lambda p and multiplies its amplitudes by the FW
/// transport matrix.
inline MomentumSuperposition boost_state(const MomentumSuperposition& state,
                                         const ObserverTransform& obs) {
  std::vector<MomentumTerm> out;
  out.reserve(state.terms().size());
  for (const auto& t : state.terms()) {
    const TransportMatrix tr = transport_fw(obs, t.momentum);
    out.push_back({apply_lorentz(obs.vector, t.momentum), tr.entries * t.amplitudes});
  }
  // Norm is preserved only to round-off; rescale so the constructor's 1e-12
  // check sees the state the transport produced.
  double n = 0.0;
  for (const auto& t : out) n += t.amplitudes.squaredNorm();
  if (std::abs(n - 1.0) > 1e-10) {
    throw std::runtime_error("boost_state: transport did not preserve the norm");
  }
  for (auto& t : out) t.amplitudes /= std::sqrt(n);
  return MomentumSuperposition(std::move(out));
}

/// Closed-form 2x2 matrices built from (a1, b1, a2, b2) and the azimuth.
inline ReducedSpinDensity closed_form_density(StateVariant variant, double mass,
                                              const SphericalMomentum& s, double xi) {
  const ABParams ab = ab_params(mass, s, xi);
  const Complex e_minus = std::polar(1.0, -s.phi);
  Eigen::MatrixXcd rho(2, 2);
  if (variant == StateVariant::psi1) {
    const double off = -(ab.a1 * ab.b1 + ab.a2 * ab.b2);
    rho << ab.a1 * ab.a1 + ab.a2 * ab.a2, off * e_minus, off * std::conj(e_minus),
        ab.b1 * ab.b1 + ab.b2 * ab.b2;
  } else {
    const double off = ab.a2 * ab.b2 - ab.a1 * ab.b1;
    rho << ab.a1 * ab.a1 + ab.b2 * ab.b2, off * e_minus, off * std::conj(e_minus),
        ab.b1 * ab.b1 + ab.a2 * ab.a2;
  }
  rho *= 0.5;
  return ReducedSpinDensity(rho);
}

/// make_state -> boost_state(z-boost of rapidity xi) -> reduce_density.
inline ReducedSpinDensity transported_density(StateVariant variant, double mass,
                                              const SphericalMomentum& s, double xi) {
  return reduce_density(
      boost_state(make_state(variant, mass, s), ObserverTransform::boost_along_z(xi)));
}

/// -sum lambda ln lambda over eigenvalues, with 0 ln 0 = 0 and eigenvalues in
/// [-1e-12, 0) clamped to 0.
inline double von_neumann_entropy(const ReducedSpinDensity& rho) {
  constexpr double trace_tol = 1e-10;
  constexpr double negative_tol = 1e-10;
  if (std::abs(rho.matrix().trace() - Complex(1.0)) > trace_tol) {
    throw std::invalid_argument("von_neumann_entropy: trace is not 1");
  }
  double s = 0.0;
  for (double l : rho.eigenvalues()) {
    if (l < -negative_tol) throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
    if (l > 0.0) s -= l * std::log(l);
  }
  return std::max(s, 0.0);
}

enum class SweepAxis { rapidity, polar };

/// x runs over [lo, hi] in `steps` points. On the rapidity axis x is xi and
/// theta comes from `momentum`; on the polar axis x is theta and xi is fixed.
struct SweepSpec {
  double mass = 1.0;
  SphericalMomentum momentum;
  double xi = 0.0;
  SweepAxis axis = SweepAxis::rapidity;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;

  void validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("sweep: mass must be > 0");
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw std::invalid_argument("sweep: need finite lo < hi");
    }
    momentum.validate();
    if (axis == SweepAxis::polar) {
      SphericalMomentum{momentum.magnitude, lo, momentum.phi}.validate();
      SphericalMomentum{momentum.magnitude, hi, momentum.phi}.validate();
    } else if (!std::isfinite(xi)) {
      throw std::invalid_argument("sweep: non-finite xi");
    }
  }

  double grid(int i) const {
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }

  /// (momentum, xi) at grid point i.
  std::pair<SphericalMomentum, double> point(int i) const {
    const double x = grid(i);
    if (axis == SweepAxis::rapidity) return {momentum, x};
    SphericalMomentum s = momentum;
    s.theta = std::clamp(x, 0.0, std::numbers::pi);
    return {s, xi};
  }
};

struct SweepRow {
  double x;
  double entropy_psi1;
  double entropy_psi2;
};

inline std::vector<SweepRow> sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    const auto [s, xi] = spec.point(i);
    rows.push_back({spec.grid(i),
                    von_neumann_entropy(closed_form_density(StateVariant::psi1, spec.mass, s, xi)),
                    von_neumann_entropy(closed_form_density(StateVariant::psi2, spec.mass, s, xi))});
  }
  return rows;
}

}  // namespace relspin
