// relspin: verification suite, operator inspection and entropy sweeps.
//
//   relspin verify  [--seed N] [--samples N] [--rest-frame-only]
//   relspin sweep   --axis rapidity|polar --lo X --hi X --steps N [--p --m --theta --phi --xi] [--out F]
//   relspin inspect KIND [--p --m --theta --phi --xi] [--rep covariant|fw] [--json]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "relspin/relspin.hpp"

namespace {

using relspin::format_double;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& flag, const std::string& text) {
  try {
    return relspin::parse_angle(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

struct KinematicArgs {
  std::string p = "0";
  std::string m = "1";
  std::string theta = "0";
  std::string phi = "0";
  std::string xi = "0";

  void attach(CLI::App* app) {
    app->add_option("--p", p, "momentum magnitude")->capture_default_str();
    app->add_option("--m", m, "rest mass")->capture_default_str();
    app->add_option("--theta", theta, "polar angle, radians (suffix pi allowed)")->capture_default_str();
    app->add_option("--phi", phi, "azimuth, radians (suffix pi allowed)")->capture_default_str();
    app->add_option("--xi", xi, "observer rapidity along z")->capture_default_str();
  }

  double mass() const {
    const double v = parse_number("--m", m);
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("--m: mass must be positive");
    return v;
  }

  relspin::SphericalMomentum spherical() const {
    relspin::SphericalMomentum s{parse_number("--p", p), parse_number("--theta", theta),
                                 parse_number("--phi", phi)};
    try {
      s.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    return s;
  }

  double rapidity() const {
    const double v = parse_number("--xi", xi);
    if (!std::isfinite(v)) throw ConfigError("--xi: not finite");
    return v;
  }
};

// --- formatting ----------------------------------------------------------

Json complex_json(relspin::Complex z) { return Json::array({z.real(), z.imag()}); }

template <class M>
Json matrix_json(const M& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string complex_text(relspin::Complex z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

template <class M>
void print_matrix(std::ostream& out, const std::string& title, const M& m) {
  out << title << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << ' ';
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << ' ' << complex_text(m(r, c));
    out << '\n';
  }
}

Json momentum_json(const relspin::FourMomentum& p) {
  const relspin::Vec4 v = p.contravariant();
  return Json::array({v(0), v(1), v(2), v(3)});
}

// --- verify --------------------------------------------------------------

int cmd_verify(const relspin::VerifyOptions& opt) {
  if (opt.samples < 1) throw ConfigError("--samples must be >= 1");
  const auto report = relspin::run_verify(opt);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  residual=" << format_double(c.max_residual)
              << (c.lower_bound ? "  required>" : "  tolerance=") << format_double(c.tolerance) << '\n';
  }
  std::cout << (report.passed() ? "verify: all checks passed" : "verify: FAILED") << " (seed "
            << report.seed << ", samples " << opt.samples << ")\n";
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

// --- sweep ---------------------------------------------------------------

struct SweepArgs {
  KinematicArgs kin{"10", "1", "0", "0", "0"};
  std::string axis = "rapidity";
  std::string lo, hi;
  int steps = 0;
  std::string out;
};

relspin::SweepSpec make_sweep_spec(const SweepArgs& a) {
  relspin::SweepSpec spec;
  spec.axis = a.axis == "polar" ? relspin::SweepAxis::polar : relspin::SweepAxis::rapidity;
  spec.mass = a.kin.mass();
  const double theta = spec.axis == relspin::SweepAxis::polar ? 0.0 : parse_number("--theta", a.kin.theta);
  spec.momentum = {parse_number("--p", a.kin.p), theta, parse_number("--phi", a.kin.phi)};
  spec.xi = a.kin.rapidity();
  spec.lo = parse_number("--lo", a.lo);
  spec.hi = parse_number("--hi", a.hi);
  spec.steps = a.steps;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

int cmd_sweep(const SweepArgs& a) {
  const auto rows = relspin::sweep(make_sweep_spec(a));
  std::ostringstream buf;
  relspin::write_sweep_csv(buf, rows);
  if (a.out.empty() || a.out == "-") {
    std::cout << buf.str();
    return kExitOk;
  }
  std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open '" + a.out + "' for writing");
  file << buf.str();
  file.close();
  if (!file) throw ConfigError("failed writing '" + a.out + "'");
  return kExitOk;
}

// --- inspect -------------------------------------------------------------

struct InspectArgs {
  KinematicArgs kin;
  std::string kind;
  std::string rep = "fw";
  bool json = false;
};

void emit_triple(const InspectArgs& a, const relspin::FourMomentum& p,
                 const relspin::SpinOperatorTriple& t, Json& doc) {
  static const char* names[] = {"x", "y", "z"};
  if (a.json) {
    Json comps;
    for (int i = 0; i < 3; ++i) comps[names[i]] = matrix_json(t[i]);
    doc["components"] = comps;
    return;
  }
  std::cout << a.kind << " at p = " << format_double(p.p3().x()) << ' ' << format_double(p.p3().y())
            << ' ' << format_double(p.p3().z()) << ", m = " << format_double(p.mass()) << '\n';
  for (int i = 0; i < 3; ++i) print_matrix(std::cout, std::string(names[i]) + ":", t[i]);
}

int cmd_inspect(const InspectArgs& a) {
  const double m = a.kin.mass();
  const auto sph = a.kin.spherical();
  const double xi = a.kin.rapidity();
  const relspin::FourMomentum p = relspin::make_momentum(m, sph);

  Json doc;
  doc["kind"] = a.kind;
  doc["mass"] = m;
  doc["momentum"] = momentum_json(p);

  if (a.kind == "spin_r") {
    emit_triple(a, p, relspin::covariant_spin(p), doc);
  } else if (a.kind == "spin_fw") {
    emit_triple(a, p, relspin::fw_mean_spin(p.p3(), m), doc);
  } else if (a.kind == "hamiltonian") {
    const auto h = relspin::dirac_hamiltonian(p.p3(), m);
    if (a.json) {
      doc["matrix"] = matrix_json(h);
    } else {
      print_matrix(std::cout, "hamiltonian:", h);
    }
  } else if (a.kind == "transport" || a.kind == "wigner_block") {
    const auto obs = relspin::ObserverTransform::boost_along_z(xi);
    const auto t = a.rep == "covariant" ? relspin::transport_covariant_full(obs, p)
                                        : relspin::transport_fw(obs, p);
    doc["xi"] = xi;
    doc["representation"] = a.rep;
    if (a.kind == "transport") {
      if (a.json) {
        doc["matrix"] = matrix_json(t.entries);
        doc["unitarity_residual"] = t.unitarity_residual();
        doc["leakage"] = t.leakage();
      } else {
        print_matrix(std::cout, "transport (" + a.rep + "), xi = " + format_double(xi) + ":", t.entries);
        std::cout << "unitarity_residual " << format_double(t.unitarity_residual()) << '\n'
                  << "leakage " << format_double(t.leakage()) << '\n';
      }
    } else {
      const auto w = relspin::wigner_block(t);
      const double norm = std::norm(w.a) + std::norm(w.b);
      if (a.json) {
        doc["A"] = complex_json(w.a);
        doc["B"] = complex_json(w.b);
        doc["norm"] = norm;
      } else {
        std::cout << "A " << complex_text(w.a) << '\n'
                  << "B " << complex_text(w.b) << '\n'
                  << "|A|^2+|B|^2 " << format_double(norm) << '\n';
      }
    }
  } else if (a.kind == "ab_params") {
    const auto ab = relspin::ab_params(m, sph, xi);
    doc["xi"] = xi;
    if (a.json) {
      doc["a1"] = ab.a1;
      doc["b1"] = ab.b1;
      doc["a2"] = ab.a2;
      doc["b2"] = ab.b2;
    } else {
      std::cout << "a1 " << format_double(ab.a1) << "\nb1 " << format_double(ab.b1) << "\na2 "
                << format_double(ab.a2) << "\nb2 " << format_double(ab.b2) << '\n';
    }
  } else {
    throw ConfigError("unknown inspect kind '" + a.kind + "'");
  }
  if (a.json) std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic spin operators, Wigner transport and reduced spin entropy"};
  app.require_subcommand(1);

  relspin::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run the seeded invariant suite");
  verify->add_option("--seed", vopt.seed, "RNG seed")->capture_default_str();
  verify->add_option("--samples", vopt.samples, "number of random momenta")->capture_default_str();
  verify->add_flag("--rest-frame-only", vopt.rest_frame_only, "draw only p = 0 and identity boosts");
  verify->add_flag("--corrupt-gamma-basis", vopt.corrupt_gamma_basis)->group("");

  SweepArgs sargs;
  auto* sweep = app.add_subcommand("sweep", "entropy sweep as CSV");
  sweep->add_option("--axis", sargs.axis, "rapidity or polar")
      ->check(CLI::IsMember({"rapidity", "polar"}))
      ->capture_default_str();
  sargs.kin.attach(sweep);
  sweep->add_option("--lo", sargs.lo, "first grid value")->required();
  sweep->add_option("--hi", sargs.hi, "last grid value")->required();
  sweep->add_option("--steps", sargs.steps, "number of grid points (>= 2)")->required();
  sweep->add_option("--out", sargs.out, "CSV destination (default stdout)");

  InspectArgs iargs;
  auto* inspect = app.add_subcommand("inspect", "print an operator or transport quantity");
  inspect->add_option("kind", iargs.kind, "spin_r, spin_fw, hamiltonian, transport, wigner_block, ab_params")
      ->required()
      ->check(CLI::IsMember({"spin_r", "spin_fw", "hamiltonian", "transport", "wigner_block", "ab_params"}));
  iargs.kin.attach(inspect);
  inspect->add_option("--rep", iargs.rep, "transport representation: fw or covariant")
      ->check(CLI::IsMember({"fw", "covariant"}))
      ->capture_default_str();
  inspect->add_flag("--json", iargs.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vopt);
    if (*sweep) return cmd_sweep(sargs);
    if (*inspect) return cmd_inspect(iargs);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
