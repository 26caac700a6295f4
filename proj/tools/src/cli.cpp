#include "quatkyp_cli/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <cmath>
#include <ostream>

#include "quatkyp/errors.hpp"
#include "quatkyp/kyp.hpp"
#include "quatkyp/minimality.hpp"
#include "quatkyp/serialization.hpp"
#include "quatkyp/witness.hpp"

namespace quatkyp::cli {

namespace {

constexpr std::array<double, 5> kIdentityGrid = {0.25, 0.5, 1.0, 2.0, 4.0};
constexpr double kIdentityTol = 1e-8;

struct Options {
  std::string input;
  std::string second_input;
  std::string domain = "half-space";
  std::string kind = "definite";
  std::string kernel_kind = "pr";
  std::string vectors = "random";
  std::string cayley;
  std::string out;
  std::string out_system;
  std::string out_cert;
  double tol = kDefaultTol;
  int points = 25;
  std::uint64_t seed = 0;
  long long states = 0;
  long long inputs = 1;
};

Json header(const char* command) { return Json{{"command", command}}; }

int certify(const Options& o, std::ostream& out) {
  const Realization r = realization_from_json(read_json_file(o.input));
  const Domain domain = domain_from_string(o.domain);
  const CertificateKind kind = certificate_kind_from_string(o.kind);
  Json payload = header("certify");
  payload["domain"] = o.domain;
  payload["kind"] = o.kind;
  payload["minimality"] = to_json(is_minimal(r, o.tol));
  try {
    const Certificate cert =
        domain == Domain::HalfSpace ? solve_continuous(r, kind, o.tol) : solve_discrete(r, kind, o.tol);
    if (!o.out.empty()) write_json_file(o.out, to_json(cert));
    payload["status"] = "certified";
    payload["method"] = std::string(to_string(cert.method));
    payload["signature"] = to_json(cert.signature_H);
    payload["residual_min_eig"] = cert.residual_min_eig;
    payload["H"] = to_json(cert.H);
    out << payload.dump(2) << '\n';
    return kSuccess;
  } catch (const Infeasible& e) {
    payload["status"] = "infeasible";
    payload["reason"] = e.what();
    out << payload.dump(2) << '\n';
    return kNegativeVerdict;
  }
}

int verify(const Options& o, std::ostream& out) {
  const Realization r = realization_from_json(read_json_file(o.input));
  const Certificate cert = certificate_from_json(read_json_file(o.second_input));
  const VerificationReport rep = verify_certificate(r, cert, o.tol);
  Json payload = header("verify");
  payload["verification"] = to_json(rep);
  bool pass = rep.pass;
  if (cert.domain == Domain::HalfSpace && r.convention == Convention::AtInfinity && rep.pass) {
    std::vector<double> xs;
    for (double x : kIdentityGrid) {
      try {
        evaluate(r, Quaternion(x), o.tol);
        xs.push_back(x);
      } catch (const SingularError&) {
      }
    }
    const double defect = factorization_identity_check(r, cert, xs, {}, o.tol);
    payload["identity_grid"] = xs;
    payload["identity_defect"] = defect;
    pass = pass && defect <= kIdentityTol;
  } else {
    payload["identity_defect"] = nullptr;
  }
  payload["pass"] = pass;
  out << payload.dump(2) << '\n';
  return pass ? kSuccess : kNegativeVerdict;
}

int kernel_signature_cmd(const Options& o, std::ostream& out) {
  const Realization r = realization_from_json(read_json_file(o.input));
  const KernelKind kind = kernel_kind_from_string(o.kernel_kind);
  const VectorMode vectors = vector_mode_from_string(o.vectors);
  SamplePlan plan;
  plan.domain = kind == KernelKind::PositiveReal ? SampleDomain::HalfSpaceQuat : SampleDomain::BallQuat;
  plan.count = o.points;
  plan.seed = o.seed;
  if (o.points < 1) throw InvalidArgument("--points must be positive");
  const SignatureReport rep = kernel_signature(r, kind, plan, vectors, o.tol);
  Json payload = header("kernel-signature");
  payload["kind"] = o.kernel_kind;
  payload["domain"] = std::string(to_string(plan.domain));
  payload["seed"] = o.seed;
  payload["vectors_mode"] = o.vectors;
  payload["report"] = to_json(rep);
  out << payload.dump(2) << '\n';
  return kSuccess;
}

int synth(const Options& o, std::ostream& out) {
  if (o.states < 0) throw InvalidArgument("--states must be nonnegative");
  if (o.inputs < 1) throw InvalidArgument("--inputs must be positive");
  const CertificateKind kind = certificate_kind_from_string(o.kind);
  const SynthesizedSystem s = synthesize_system(o.states, o.inputs, kind, o.seed);
  if (!o.out_system.empty()) write_json_file(o.out_system, to_json(s.system));
  if (!o.out_cert.empty()) write_json_file(o.out_cert, to_json(s.certificate));
  const VerificationReport rep = verify_certificate(s.system, s.certificate);
  Json payload = header("synth");
  payload["states"] = o.states;
  payload["inputs"] = o.inputs;
  payload["kind"] = o.kind;
  payload["seed"] = o.seed;
  payload["signature"] = to_json(s.certificate.signature_H);
  payload["minimality"] = to_json(is_minimal(s.system));
  payload["verification"] = to_json(rep);
  out << payload.dump(2) << '\n';
  return kSuccess;
}

// (I - X)(I + X)^{-1}, applied at real points where it agrees with the star version.
QMatrix value_cayley(const QMatrix& x) {
  const QMatrix id = QMatrix::identity(x.rows());
  return (id - x) * inverse(id + x);
}

int transform(const Options& o, std::ostream& out) {
  const Realization r = realization_from_json(read_json_file(o.input));
  const CayleyDirection dir = cayley_direction_from_string(o.cayley);
  const Realization t = cayley_transform(r, dir, o.tol);
  if (!o.out.empty()) write_json_file(o.out, to_json(t));

  Json checkpoints = Json::array();
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    // Source points: x in (0, 2) on the half-space side, w in (-1, 1) on the ball side.
    const double src = dir == CayleyDirection::HalfSpaceToBall ? 0.1 + 0.2 * k : -0.9 + 0.2 * k;
    const double dst = (1.0 - src) / (1.0 + src);
    try {
      const QMatrix expected = value_cayley(evaluate(r, Quaternion(src), o.tol));
      const QMatrix got = evaluate(t, Quaternion(dst), o.tol);
      const double defect = (got - expected).frobenius_norm() / std::max(1.0, expected.frobenius_norm());
      worst = std::max(worst, defect);
      checkpoints.push_back(Json{{"source", src}, {"image", dst}, {"defect", defect}});
    } catch (const SingularError&) {
      checkpoints.push_back(Json{{"source", src}, {"image", dst}, {"defect", nullptr}});
    }
  }
  Json payload = header("transform");
  payload["direction"] = o.cayley;
  payload["convention"] = std::string(to_string(t.convention));
  payload["state_dim"] = t.state_dim();
  payload["checkpoints"] = std::move(checkpoints);
  payload["max_defect"] = worst;
  out << payload.dump(2) << '\n';
  return kSuccess;
}

int report_error(const char* command, const char* type, const std::exception& e, int code, std::ostream& out,
                 std::ostream& err) {
  err << "quatkyp " << command << ": " << e.what() << '\n';
  Json payload = header(command);
  payload["error"] = Json{{"type", type}, {"message", e.what()}};
  out << payload.dump(2) << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic positive-real lemma toolkit", "quatkyp"};
  app.require_subcommand(1);
  Options o;

  auto* certify_cmd = app.add_subcommand("certify", "Solve the LMI and write a certificate");
  certify_cmd->add_option("input", o.input, "Realization JSON")->required();
  certify_cmd->add_option("--domain", o.domain)->check(CLI::IsMember({"half-space", "ball"}));
  certify_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"definite", "indefinite"}));
  certify_cmd->add_option("--tol", o.tol);
  certify_cmd->add_option("--out", o.out, "Certificate JSON to write");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a realization");
  verify_cmd->add_option("realization", o.input)->required();
  verify_cmd->add_option("certificate", o.second_input)->required();
  verify_cmd->add_option("--tol", o.tol);

  auto* sig_cmd = app.add_subcommand("kernel-signature", "Sampled Gram-matrix inertia of the kernel");
  sig_cmd->add_option("input", o.input)->required();
  sig_cmd->add_option("--kind", o.kernel_kind)->check(CLI::IsMember({"pr", "schur"}));
  sig_cmd->add_option("--points", o.points);
  sig_cmd->add_option("--seed", o.seed)->required();
  sig_cmd->add_option("--vectors", o.vectors)->check(CLI::IsMember({"random", "canonical"}));

  auto* synth_cmd = app.add_subcommand("synth", "Generate a system together with a certificate");
  synth_cmd->add_option("--states", o.states)->required();
  synth_cmd->add_option("--inputs", o.inputs)->required();
  synth_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"definite", "indefinite"}));
  synth_cmd->add_option("--seed", o.seed)->required();
  synth_cmd->add_option("--out-system", o.out_system);
  synth_cmd->add_option("--out-cert", o.out_cert);

  auto* transform_cmd = app.add_subcommand("transform", "Cayley transform of a realization");
  transform_cmd->add_option("input", o.input)->required();
  transform_cmd->add_option("--cayley", o.cayley)
      ->required()
      ->check(CLI::IsMember({"half-space-to-ball", "ball-to-half-space"}));
  transform_cmd->add_option("--out", o.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "quatkyp: " << e.what() << '\n' << app.help();
    return kInputError;
  }

  const char* name = "quatkyp";
  try {
    if (certify_cmd->parsed()) {
      name = "certify";
      return certify(o, out);
    }
    if (verify_cmd->parsed()) {
      name = "verify";
      return verify(o, out);
    }
    if (sig_cmd->parsed()) {
      name = "kernel-signature";
      return kernel_signature_cmd(o, out);
    }
    if (synth_cmd->parsed()) {
      name = "synth";
      return synth(o, out);
    }
    name = "transform";
    return transform(o, out);
  } catch (const InvalidArgument& e) {
    return report_error(name, "input-error", e, kInputError, out, err);
  } catch (const Error& e) {
    return report_error(name, "numerical-failure", e, kNumericalFailure, out, err);
  } catch (const std::exception& e) {
    return report_error(name, "numerical-failure", e, kNumericalFailure, out, err);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace quatkyp::cli
