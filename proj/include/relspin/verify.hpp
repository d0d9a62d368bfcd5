#pragma once

// Seeded invariant suite over all primary modules. Each check reports its
// worst residual against a fixed tolerance; failures are reported, not thrown.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "relspin/clifford.hpp"
#include "relspin/kinematics.hpp"
#include "relspin/spin_density.hpp"
#include "relspin/spin_operators.hpp"
#include "relspin/spinor.hpp"
#include "relspin/wigner.hpp"

namespace relspin {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool lower_bound = false;  // passes when max_residual > tolerance
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int samples = 100;
  bool rest_frame_only = false;
  bool corrupt_gamma_basis = false;  // negative-control hook
};

/// Largest |p|/m drawn by the general sampler.
inline constexpr double kMaxMomentumRatio = 1e3;
/// Largest |p|/m used for the Pauli-Lubanski checks. The Ryder commutators
/// lose about (E/m)^4 eps: 1.5e-11 at |p|/m = 10, 1e-3 at 10^3.
inline constexpr double kMaxPauliLubanskiRatio = 10.0;
inline constexpr double kMaxObserverRapidity = 5.0;

/// Reproducible draws of masses, momenta and observer boosts.
class MomentumSampler {
 public:
  MomentumSampler(std::uint64_t seed, bool rest_only) : rng_(seed), rest_only_(rest_only) {}

  Vec3 direction() {
    Vec3 d;
    do {
      d = Vec3(normal_(rng_), normal_(rng_), normal_(rng_));
    } while (d.norm() < 1e-8);
    return d.normalized();
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Sample i of n: i = 0 is at rest, i = 1 sits at max_ratio, the rest are
  /// log-uniform in [1e-3, max_ratio] times the mass.
  FourMomentum momentum(int i, double max_ratio = kMaxMomentumRatio) {
    const double mass = uniform(0.5, 2.0);
    const Vec3 n = direction();
    double ratio = 0.0;
    if (!rest_only_ && i > 0) {
      ratio = i == 1 ? max_ratio : std::pow(10.0, uniform(-3.0, std::log10(max_ratio)));
    }
    return {mass, mass * ratio * n};
  }

  ObserverTransform observer() {
    const Vec3 n = direction();
    return ObserverTransform::boost(n, rest_only_ ? 0.0 : uniform(0.0, kMaxObserverRapidity));
  }

  Complex complex_normal() { return {normal_(rng_), normal_(rng_)}; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  bool rest_only_;
};

namespace detail {

inline CheckResult upper_check(std::string name, double residual, double tol) {
  return {std::move(name), residual, tol, std::isfinite(residual) && residual < tol, false};
}

inline CheckResult lower_check(std::string name, double value, double bound) {
  return {std::move(name), value, bound, std::isfinite(value) && value > bound, true};
}

inline double frobenius(const OperatorMatrix& m) { return m.norm(); }

inline double gamma_algebra_residual(const GammaBasis& g) {
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const OperatorMatrix expected = 2.0 * MetricSignature::eta(mu, nu) * OperatorMatrix::Identity();
      r = std::max(r, max_abs_diff(anticommutator(g.gamma[mu], g.gamma[nu]), expected));
    }
    r = std::max(r, max_abs(anticommutator(g.gamma[mu], g.gamma5)));
  }
  return std::max(r, max_abs_diff(g.gamma5 * g.gamma5, OperatorMatrix::Identity()));
}

inline GammaBasis corrupted_basis() {
  GammaBasis g = gamma_basis();
  g.gamma[2](0, 3) *= -1.0;
  return g;
}

inline double diagonal_block_residual(const OperatorMatrix& m) {
  return std::max(m.block<2, 2>(0, 0).cwiseAbs().maxCoeff(), m.block<2, 2>(2, 2).cwiseAbs().maxCoeff());
}

}  // namespace detail

inline VerificationReport run_verify(const VerifyOptions& opt) {
  VerificationReport report;
  report.seed = opt.seed;
  const int n = std::max(opt.samples, 1);
  MomentumSampler sampler(opt.seed, opt.rest_frame_only);
  auto& out = report.checks;

  // clifford
  const GammaBasis basis = opt.corrupt_gamma_basis ? detail::corrupted_basis() : gamma_basis();
  out.push_back(detail::upper_check("clifford.anticommutator", detail::gamma_algebra_residual(basis),
                                    kExactTolerance));

  // spinor_core and spin_operators over the general sample
  double norm_r = 0.0, diag_r = 0.0, unit_r = 0.0, comm_r = 0.0, noncomm = 0.0;
  double equiv_r = 0.0, eigen_r = 0.0, classical_r = 0.0;
  for (int i = 0; i < n; ++i) {
    const FourMomentum p = sampler.momentum(i);
    const double m = p.mass();

    for (auto e : {EnergySign::positive, EnergySign::negative}) {
      for (auto a : {SpinLabel::up, SpinLabel::down}) {
        for (auto b : {SpinLabel::up, SpinLabel::down}) {
          const Spinor4 ua = basis_spinor(p, a, e, Representation::covariant).components;
          const Spinor4 ub = basis_spinor(p, b, e, Representation::covariant).components;
          const double expected = a == b ? to_int(e) : 0.0;
          norm_r = std::max(norm_r, std::abs(bar_product(ua, ub) - expected));
          const auto other = e == EnergySign::positive ? EnergySign::negative : EnergySign::positive;
          const Spinor4 vb = basis_spinor(p, b, other, Representation::covariant).components;
          norm_r = std::max(norm_r, std::abs(bar_product(ua, vb)));
        }
      }
    }

    const OperatorMatrix h = dirac_hamiltonian(p.p3(), m);
    const OperatorMatrix u = fw_unitary(p.p3(), m);
    diag_r = std::max(diag_r, max_abs_diff(u * h * u.adjoint(), p.energy() * dirac().gamma[0]));
    unit_r = std::max(unit_r, max_abs_diff(u * u.adjoint(), OperatorMatrix::Identity()));

    const auto fw = fw_mean_spin(p.p3(), m);
    const auto sr = covariant_spin(p);
    for (int k = 0; k < 3; ++k) {
      const double scale = detail::frobenius(h);
      comm_r = std::max(comm_r, detail::frobenius(commutator(fw[k], h)) / (detail::frobenius(fw[k]) * scale));
      noncomm = std::max(noncomm, detail::frobenius(commutator(sr[k], h)) / (detail::frobenius(sr[k]) * scale));
    }

    for (auto e : {EnergySign::positive, EnergySign::negative}) {
      for (auto s : {SpinLabel::up, SpinLabel::down}) {
        const Spinor4 w = basis_spinor(p, s, e, Representation::covariant).components;
        eigen_r = std::max(eigen_r, (sr.z() * w - to_int(s) * w).cwiseAbs().maxCoeff());
        const auto ex = signed_spin_expectations(w, p);
        equiv_r = std::max({equiv_r, (ex.covariant - ex.fw_mean).cwiseAbs().maxCoeff(),
                            (ex.covariant - ex.fw_rep).cwiseAbs().maxCoeff()});
      }
    }
    const OperatorMatrix boost = spinor_boost(p);
    for (int k = 0; k < 50; ++k) {
      Spinor4 c;
      for (int j = 0; j < 4; ++j) c(j) = sampler.complex_normal();
      const auto ex = signed_spin_expectations(boost * c.normalized(), p);
      equiv_r = std::max({equiv_r, (ex.covariant - ex.fw_mean).cwiseAbs().maxCoeff(),
                          (ex.covariant - ex.fw_rep).cwiseAbs().maxCoeff()});
    }

    const auto cl = classical_spin(p);
    for (int k = 0; k < 3; ++k) {
      classical_r = std::max(classical_r, detail::diagonal_block_residual(sr[k] - cl[k]));
    }
  }
  out.push_back(detail::upper_check("spinor.normalization", norm_r, 1e-9));
  out.push_back(detail::upper_check("spinor.fw_diagonalization", diag_r, 1e-10));
  out.push_back(detail::upper_check("spinor.fw_unitarity", unit_r, 1e-12));
  out.push_back(detail::upper_check("spin.fw_commutation", comm_r, 1e-10));
  if (!opt.rest_frame_only) out.push_back(detail::lower_check("spin.covariant_noncommutation", noncomm, 1e-3));
  out.push_back(detail::upper_check("spin.equivalence", equiv_r, 1e-10));
  out.push_back(detail::upper_check("spin.eigen_equations", eigen_r, 1e-10));
  out.push_back(detail::upper_check("spin.classical_decomposition", classical_r, 1e-10));

  // Pauli-Lubanski checks on a bounded momentum range
  double ryder_r = 0.0, casimir_r = 0.0;
  for (int i = 0; i < n; ++i) {
    const FourMomentum p = sampler.momentum(i, kMaxPauliLubanskiRatio);
    ryder_r = std::max(ryder_r, max_abs_diff(ryder_spin(p), covariant_spin(p)));
    const OperatorMatrix expected = -0.75 * p.mass() * p.mass() * OperatorMatrix::Identity();
    casimir_r = std::max(casimir_r, max_abs_diff(pauli_lubanski(p).casimir(), expected));
  }
  out.push_back(detail::upper_check("spin.ryder", ryder_r, 1e-10));
  out.push_back(detail::upper_check("spin.casimir", casimir_r, 1e-10));

  // wigner_transport
  double t_unit = 0.0, t_block = 0.0, t_leak = 0.0, t_equal = 0.0;
  for (int i = 0; i < n; ++i) {
    const FourMomentum p = sampler.momentum(i);
    const ObserverTransform obs = sampler.observer();
    const TransportMatrix fw = transport_fw(obs, p);
    const TransportMatrix cov = transport_covariant_full(obs, p);
    t_unit = std::max(t_unit, fw.unitarity_residual());
    t_block = std::max({t_block, fw.block_mismatch(), cov.block_mismatch()});
    t_leak = std::max({t_leak, fw.leakage(), cov.leakage()});
    t_equal = std::max(t_equal, max_abs_diff(fw.entries, cov.entries));
  }
  out.push_back(detail::upper_check("transport.unitarity", t_unit, 1e-10));
  out.push_back(detail::upper_check("transport.block_equality", t_block, 1e-10));
  out.push_back(detail::upper_check("transport.leakage", t_leak, 1e-10));
  out.push_back(detail::upper_check("transport.covariant_fw_equality", t_equal, 1e-10));

  // spin_density at p = 10, m = 1
  double dual_r = 0.0, range_r = 0.0;
  for (int i = 0; i < n; ++i) {
    const SphericalMomentum s{10.0, sampler.uniform(0.0, std::numbers::pi),
                              sampler.uniform(0.0, 2.0 * std::numbers::pi)};
    const double xi = opt.rest_frame_only ? 0.0 : sampler.uniform(0.0, 12.0);
    for (auto v : {StateVariant::psi1, StateVariant::psi2}) {
      const auto closed = closed_form_density(v, 1.0, s, xi);
      const auto path = transported_density(v, 1.0, s, xi);
      dual_r = std::max(dual_r, (closed.matrix() - path.matrix()).cwiseAbs().maxCoeff());
      const double ent = von_neumann_entropy(closed);
      range_r = std::max({range_r, -ent, ent - std::numbers::ln2});
    }
  }
  out.push_back(detail::upper_check("density.dual_path", dual_r, 1e-10));
  out.push_back(detail::upper_check("density.entropy_range", std::max(range_r, 0.0), 1e-12));
  return report;
}

}  // namespace relspin
