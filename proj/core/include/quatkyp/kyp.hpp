#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "quatkyp/lmi.hpp"
#include "quatkyp/qmatrix.hpp"
#include "quatkyp/realization.hpp"

namespace quatkyp {

using Domain = KernelDomain;

std::string_view to_string(Domain d);
Domain domain_from_string(std::string_view s);

/// Definite: H negative definite.  Indefinite: H Hermitian and non-singular.
enum class CertificateKind { Definite, Indefinite };

std::string_view to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(std::string_view s);

enum class SolveMethod { Riccati, Projection, Provided };

std::string_view to_string(SolveMethod m);
SolveMethod solve_method_from_string(std::string_view s);

struct Certificate {
  QMatrix H;
  Domain domain = Domain::HalfSpace;
  CertificateKind kind = CertificateKind::Definite;
  QMatrix Qblk;
  QMatrix Sblk;
  QMatrix Rblk;
  QMatrix L;
  QMatrix M;
  Signature signature_H;
  SolveMethod method = SolveMethod::Provided;
  double residual_min_eig = 0.0;
};

struct VerificationReport {
  double lmi_min_eig = 0.0;
  double hermitian_defect = 0.0;
  double chi_structure_defect = 0.0;
  double factorization_defect = 0.0;
  bool pass = false;
};

/// LMI form used for certificates on `domain` for realizations written in `convention`.
LmiForm lmi_form_for(Domain domain, Convention convention);

/// Fills the residue blocks, the rank factors and the diagnostics for a given H.
Certificate assemble_certificate(const Realization& r, const QMatrix& h, Domain domain, CertificateKind kind,
                                 SolveMethod method, double tol = kDefaultTol);

/// Half-space lemma.  Needs an at-infinity minimal realization.
Certificate solve_continuous(const Realization& r, CertificateKind kind, double tol = kDefaultTol);

/// Unit-ball lemma.  at-origin input goes through the Cayley transform first and
/// falls back to projections on the discrete LMI; at-infinity input uses the
/// projections directly.
Certificate solve_discrete(const Realization& r, CertificateKind kind, double tol = kDefaultTol);

VerificationReport verify_certificate(const Realization& r, const Certificate& cert, double tol = kDefaultTol);

/// Largest relative defect of
///   phi(x) + phi(-x)^* = W(x) W(-x)^*,      W(p) = M + C (pI - A)^{-*} H^{-1} L,
/// of the kernel decomposition at real pairs from xs,
///   K(x, y) = -C (xI - A)^{-1} H^{-1} (yI - A^*)^{-1} C^* + W(x) W(y)^* / (x + y),
/// and of its slice extension at the pairs (q, q') from qs x qs.
double factorization_identity_check(const Realization& r, const Certificate& cert, std::span<const double> xs,
                                    std::span<const Quaternion> qs, double tol = kDefaultTol);

struct SynthesizedSystem {
  Realization system;
  Certificate certificate;
};

/// Draws (H, L, M, T, T', C) and solves the residue identities for (A, B, D).
/// Redraws up to 100 times until the realization is minimal.
SynthesizedSystem synthesize_system(Index states, Index ports, CertificateKind kind, std::uint64_t seed,
                                    std::optional<int> n_plus = std::nullopt);

}  // namespace quatkyp
