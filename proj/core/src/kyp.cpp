#include "quatkyp/kyp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quatkyp/errors.hpp"
#include "quatkyp/minimality.hpp"
#include "quatkyp/random.hpp"

namespace quatkyp {

std::string_view to_string(Domain d) { return d == Domain::HalfSpace ? "half-space" : "ball"; }

Domain domain_from_string(std::string_view s) {
  if (s == "half-space") return Domain::HalfSpace;
  if (s == "ball") return Domain::Ball;
  throw InvalidArgument("unknown domain '" + std::string(s) + "'");
}

std::string_view to_string(CertificateKind k) { return k == CertificateKind::Definite ? "definite" : "indefinite"; }

CertificateKind certificate_kind_from_string(std::string_view s) {
  if (s == "definite") return CertificateKind::Definite;
  if (s == "indefinite") return CertificateKind::Indefinite;
  throw InvalidArgument("unknown certificate kind '" + std::string(s) + "'");
}

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Riccati:
      return "riccati";
    case SolveMethod::Projection:
      return "projection";
    case SolveMethod::Provided:
      break;
  }
  return "provided";
}

SolveMethod solve_method_from_string(std::string_view s) {
  if (s == "riccati") return SolveMethod::Riccati;
  if (s == "projection") return SolveMethod::Projection;
  if (s == "provided") return SolveMethod::Provided;
  throw InvalidArgument("unknown solve method '" + std::string(s) + "'");
}

LmiForm lmi_form_for(Domain domain, Convention convention) {
  if (domain == Domain::HalfSpace) {
    if (convention != Convention::AtInfinity) {
      throw InvalidArgument("half-space certificates need an at-infinity realization");
    }
    return LmiForm::Continuous;
  }
  return convention == Convention::AtOrigin ? LmiForm::DiscreteOrigin : LmiForm::DiscreteInfinity;
}

namespace {

bool kind_satisfied(const Signature& s, CertificateKind kind, Index n_state) {
  if (kind == CertificateKind::Definite) return s == Signature{0, static_cast<int>(n_state), 0};
  return s.n_zero == 0;
}

double lmi_scale(const QMatrix& x) { return std::max(1.0, x.frobenius_norm()); }

void require_minimal(const Realization& r, double tol) {
  const MinimalityReport rep = is_minimal(r, tol);
  if (!rep.minimal()) {
    throw NotMinimal("realization is not minimal (controllability rank " + std::to_string(rep.ctrl_rank) +
                     ", observability rank " + std::to_string(rep.obs_rank) + ", state dimension " +
                     std::to_string(rep.state_dim) + ")");
  }
}

// A candidate is accepted when the LMI holds to tolerance and H has the right inertia.
bool acceptable(const Realization& r, const QMatrix& h, LmiForm form, CertificateKind kind, double tol) {
  const QMatrix x = assemble_lmi(r, h, form);
  if (min_eigenvalue(x, tol) < -tol * lmi_scale(x)) return false;
  return kind_satisfied(hermitian_signature(h, tol), kind, r.state_dim());
}

[[noreturn]] void throw_infeasible(std::string_view what, CertificateKind kind, bool lmi_feasible) {
  if (lmi_feasible && kind == CertificateKind::Definite) {
    throw Infeasible(std::string(what) + ": the LMI is feasible but H is not negative definite");
  }
  throw Infeasible(std::string(what) + ": no Hermitian H satisfies the LMI");
}

Certificate solve_continuous_unchecked(const Realization& r, CertificateKind kind, double tol) {
  const Index n_state = r.state_dim();
  const LmiForm form = LmiForm::Continuous;
  const QMatrix rr = r.D + r.D.adjoint();
  const double rs = lmi_scale(rr);
  const std::vector<double> r_eigs = hermitian_eigenvalues(hermitian_part(rr), tol);
  if (!r_eigs.empty() && r_eigs.front() < -tol * rs) {
    throw Infeasible("solve_continuous: D + D* has a negative eigenvalue");
  }
  if (n_state == 0) return assemble_certificate(r, QMatrix(0, 0), Domain::HalfSpace, kind, SolveMethod::Projection, tol);

  QMatrix start = QMatrix(n_state, n_state);
  bool boundary = false;
  if (!r_eigs.empty() && r_eigs.front() > 1e-6 * rs) {
    const RiccatiOutcome ric = solve_lmi_riccati(chi(r.A), chi(r.B), chi(r.C), chi(r.D));
    if (ric.status == RiccatiOutcome::Status::Solved) {
      const ComplexMatrix sym = 0.5 * (ric.X + involution_a(ric.X));
      const QMatrix h = hermitian_part(chi_project(sym));
      if (acceptable(r, h, form, kind, tol)) {
        return assemble_certificate(r, h, Domain::HalfSpace, kind, SolveMethod::Riccati, tol);
      }
      start = h;
    } else if (ric.status == RiccatiOutcome::Status::BoundarySpectrum) {
      boundary = true;
    }
  }

  ProjectionOptions opts;
  opts.tol = tol;
  const ProjectionOutcome proj = project_lmi(r, form, start, opts);
  if (proj.feasible()) {
    if (acceptable(r, proj.H, form, kind, tol)) {
      return assemble_certificate(r, proj.H, Domain::HalfSpace, kind, SolveMethod::Projection, tol);
    }
    throw_infeasible("solve_continuous", kind, true);
  }
  if (boundary) {
    throw BoundarySpectrum("solve_continuous: Hamiltonian spectrum touches the imaginary axis and the projection "
                           "fallback did not converge");
  }
  throw_infeasible("solve_continuous", kind, false);
}

}  // namespace

Certificate assemble_certificate(const Realization& r, const QMatrix& h, Domain domain, CertificateKind kind,
                                 SolveMethod method, double tol) {
  r.validate();
  const LmiForm form = lmi_form_for(domain, r.convention);
  const Index n_state = r.state_dim();
  const Index m = r.input_dim();
  const QMatrix x = hermitian_part(assemble_lmi(r, h, form));
  Certificate cert;
  cert.H = h;
  cert.domain = domain;
  cert.kind = kind;
  cert.method = method;
  cert.Qblk = x.block(0, 0, n_state, n_state);
  cert.Sblk = x.block(0, n_state, n_state, m);
  cert.Rblk = x.block(n_state, n_state, m, m);
  const int ell = qmat_rank(x, tol);
  const QMatrix f = pivoted_cholesky(x, ell);
  cert.L = f.block(0, 0, n_state, f.cols());
  cert.M = f.block(n_state, 0, m, f.cols());
  cert.signature_H = hermitian_signature(h, tol);
  cert.residual_min_eig = min_eigenvalue(x, tol);
  return cert;
}

Certificate solve_continuous(const Realization& r, CertificateKind kind, double tol) {
  r.validate();
  if (r.convention != Convention::AtInfinity) {
    throw InvalidArgument("solve_continuous: realization must use the at-infinity convention");
  }
  if (r.output_dim() != r.input_dim()) throw DimensionError("solve_continuous: function must be square");
  require_minimal(r, tol);
  return solve_continuous_unchecked(r, kind, tol);
}

Certificate solve_discrete(const Realization& r, CertificateKind kind, double tol) {
  r.validate();
  require_minimal(r, tol);
  const Index n_state = r.state_dim();
  const LmiForm form = lmi_form_for(Domain::Ball, r.convention);

  QMatrix start = -1.0 * QMatrix::identity(n_state);
  if (r.convention == Convention::AtOrigin && r.output_dim() == r.input_dim()) {
    try {
      const Realization half = cayley_transform(r, CayleyDirection::BallToHalfSpace, tol);
      const Certificate c = solve_continuous_unchecked(half, kind, tol);
      const QMatrix h = 0.5 * c.H;
      if (acceptable(r, h, form, kind, tol)) {
        return assemble_certificate(r, h, Domain::Ball, kind, c.method, tol);
      }
      start = h;
    } catch (const CayleyPivotSingular&) {
    } catch (const Infeasible&) {
    } catch (const BoundarySpectrum&) {
    } catch (const SingularError&) {
    }
  }

  ProjectionOptions opts;
  opts.tol = tol;
  opts.reduce_kernel = false;
  const ProjectionOutcome proj = project_lmi(r, form, start, opts);
  if (proj.feasible()) {
    if (acceptable(r, proj.H, form, kind, tol)) {
      return assemble_certificate(r, proj.H, Domain::Ball, kind, SolveMethod::Projection, tol);
    }
    throw_infeasible("solve_discrete", kind, true);
  }
  throw_infeasible("solve_discrete", kind, false);
}

VerificationReport verify_certificate(const Realization& r, const Certificate& cert, double tol) {
  r.validate();
  const Index n_state = r.state_dim();
  const Index m = r.input_dim();
  if (cert.H.rows() != n_state || cert.H.cols() != n_state) {
    throw DimensionError("verify_certificate: H is " + std::to_string(cert.H.rows()) + "x" +
                         std::to_string(cert.H.cols()) + " but the realization has " + std::to_string(n_state) +
                         " states");
  }
  if (cert.L.rows() != n_state || cert.M.rows() != m || cert.L.cols() != cert.M.cols()) {
    throw DimensionError("verify_certificate: rank factors L, M are not conformal");
  }
  const LmiForm form = lmi_form_for(cert.domain, r.convention);

  VerificationReport rep;
  const double hs = std::max(1.0, cert.H.frobenius_norm());
  rep.hermitian_defect = hermitian_defect(cert.H);
  rep.chi_structure_defect = chi_structure_defect(chi(cert.H));
  const QMatrix x = assemble_lmi(r, hermitian_part(cert.H), form);
  const double s = lmi_scale(x);
  rep.lmi_min_eig = min_eigenvalue(x, tol);
  const QMatrix f = vstack(cert.L, cert.M);
  rep.factorization_defect = (hermitian_part(x) - f * f.adjoint()).frobenius_norm();

  bool ok = rep.lmi_min_eig >= -tol * s && rep.hermitian_defect <= tol * hs && rep.chi_structure_defect <= tol * hs &&
            rep.factorization_defect <= 10.0 * tol * s * std::max<double>(1.0, static_cast<double>(x.rows()));
  if (ok) ok = kind_satisfied(hermitian_signature(hermitian_part(cert.H), tol), cert.kind, n_state);
  rep.pass = ok;
  return rep;
}

namespace {

QMatrix real_resolvent(const QMatrix& a, double x, double tol) {
  const Index n = a.rows();
  try {
    return inverse(x * QMatrix::identity(n) - a, tol);
  } catch (const SingularError&) {
    throw PoleError("factorization_identity_check: x = " + std::to_string(x) + " is a pole");
  }
}

double rel_defect(const QMatrix& lhs, const QMatrix& rhs) {
  return (lhs - rhs).frobenius_norm() / std::max(1.0, lhs.frobenius_norm());
}

}  // namespace

double factorization_identity_check(const Realization& r, const Certificate& cert, std::span<const double> xs,
                                    std::span<const Quaternion> qs, double tol) {
  r.validate();
  if (cert.domain != Domain::HalfSpace || r.convention != Convention::AtInfinity) {
    throw InvalidArgument("factorization_identity_check: needs a half-space certificate");
  }
  const Index n_state = r.state_dim();
  const Index n = r.output_dim();
  const QMatrix hinv = n_state == 0 ? QMatrix(0, 0) : inverse(cert.H, tol);
  const QMatrix hinv_l = hinv * cert.L;

  struct Point {
    QMatrix phi;
    QMatrix w;
    QMatrix c_res;  // C (xI - A)^{-1}
  };
  auto at = [&](double x) {
    const QMatrix res = real_resolvent(r.A, x, tol);
    Point p;
    p.c_res = r.C * res;
    p.phi = r.D + p.c_res * r.B;
    p.w = cert.M + p.c_res * hinv_l;
    return p;
  };

  double worst = 0.0;
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (double x : xs) {
    const Point plus = at(x);
    pts.push_back(plus);
    // A pole of the mirrored factor only removes x from the first identity.
    std::optional<Point> minus;
    try {
      minus = at(-x);
    } catch (const PoleError&) {
      continue;
    }
    worst = std::max(worst, rel_defect(plus.phi + minus->phi.adjoint(), plus.w * minus->w.adjoint()));
  }
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < xs.size(); ++b) {
      const double sum = xs[a] + xs[b];
      if (std::abs(sum) < tol) continue;
      const QMatrix k = (1.0 / sum) * (pts[a].phi + pts[b].phi.adjoint());
      const QMatrix rhs = -1.0 * (pts[a].c_res * hinv * pts[b].c_res.adjoint()) +
                          (1.0 / sum) * (pts[a].w * pts[b].w.adjoint());
      worst = std::max(worst, rel_defect(k, rhs));
    }
  }

  if (!qs.empty()) {
    const Realization phi_c(Convention::AtInfinity, r.A, QMatrix::identity(n_state), r.C, QMatrix(n, n_state));
    const Realization w_real(Convention::AtInfinity, r.A, hinv_l, r.C, cert.M);
    std::vector<QMatrix> phi_c_vals;
    std::vector<QMatrix> w_vals;
    for (const Quaternion& q : qs) {
      phi_c_vals.push_back(evaluate(phi_c, q, tol));
      w_vals.push_back(evaluate(w_real, q, tol));
    }
    KernelEvaluator kernel(r, KernelKind::PositiveReal, qs, tol);
    for (std::size_t a = 0; a < qs.size(); ++a) {
      for (std::size_t b = 0; b < qs.size(); ++b) {
        const QMatrix k = kernel(a, b);
        const QMatrix rhs = -1.0 * (phi_c_vals[a] * hinv * phi_c_vals[b].adjoint()) +
                            star_kernel_term(w_real, w_vals[b].adjoint(), qs[a], qs[b], Domain::HalfSpace, tol);
        worst = std::max(worst, rel_defect(k, rhs));
      }
    }
  }
  return worst;
}

SynthesizedSystem synthesize_system(Index states, Index ports, CertificateKind kind, std::uint64_t seed,
                                    std::optional<int> n_plus) {
  if (states < 0 || ports < 1) throw InvalidArgument("synthesize_system: need states >= 0 and ports >= 1");
  if (n_plus && kind == CertificateKind::Indefinite && states > 0 && (*n_plus < 0 || *n_plus > states)) {
    throw InvalidArgument("synthesize_system: n_plus must lie in [0, states]");
  }
  const Index ell = states + ports;
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    Rng rng(seed + attempt * 0x9E3779B97F4A7C15ULL);
    QMatrix h;
    if (kind == CertificateKind::Definite) {
      const QMatrix w = random_qmatrix(states, states, rng, 1.0 / std::sqrt(4.0 * std::max<Index>(1, states)));
      h = -1.0 * (w * w.adjoint() + 0.5 * QMatrix::identity(states));
    } else {
      const QMatrix u = random_unitary(states, rng);
      int plus = 1;
      if (n_plus) {
        plus = *n_plus;
      } else if (states >= 2) {
        plus = std::uniform_int_distribution<int>(1, static_cast<int>(states) - 1)(rng);
      }
      std::uniform_real_distribution<double> mag(0.5, 1.5);
      QMatrix lam(states, states);
      for (Index k = 0; k < states; ++k) lam(k, k) = Quaternion(k < plus ? mag(rng) : -mag(rng));
      h = u * lam * u.adjoint();
      h = hermitian_part(h);
    }
    const double sigma = 1.0 / std::sqrt(static_cast<double>(ell));
    const QMatrix l = random_qmatrix(states, ell, rng, sigma);
    const QMatrix m = random_qmatrix(ports, ell, rng, sigma);
    const QMatrix t = random_skew_hermitian(states, rng);
    const QMatrix t2 = random_skew_hermitian(ports, rng);
    const QMatrix c = random_qmatrix(ports, states, rng);

    const QMatrix q = l * l.adjoint();
    const QMatrix s = l * m.adjoint();
    const QMatrix rr = m * m.adjoint();
    QMatrix a;
    QMatrix b;
    if (states > 0) {
      const QMatrix hinv = inverse(h);
      a = hinv * (0.5 * q + t);
      b = hinv * (s - c.adjoint());
    } else {
      a = QMatrix(0, 0);
      b = QMatrix(0, ports);
    }
    Realization sys(Convention::AtInfinity, a, b, c, 0.5 * rr + t2);
    if (!is_minimal(sys).minimal()) continue;
    Certificate cert = assemble_certificate(sys, h, Domain::HalfSpace, kind, SolveMethod::Provided);
    cert.L = l;
    cert.M = m;
    return {std::move(sys), std::move(cert)};
  }
  throw InternalError("synthesize_system: 100 draws in a row were not minimal");
}

}  // namespace quatkyp
