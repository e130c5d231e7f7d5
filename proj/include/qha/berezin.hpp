#pragma once

// Generalized Husimi and Glauber-Sudarshan representations with respect to a
// window operator sigma, Berezin quantization f -> f * sigma*, the two
// Berezin-Lieb inequalities, and zero-set diagnostics for F_W(sigma) with
// the deconvolution they govern.

#include <optional>
#include <string>
#include <vector>

#include "qha/opalg.hpp"
#include "qha/phasespace.hpp"

namespace qha {

enum class ZeroClass { Empty, NonemptySparse, FullRowOrColumn, Everywhere };
std::string to_string(ZeroClass c);

struct ZeroSetReport {
  PhaseSpaceModel model;
  std::string window_digest;
  double tolerance = 0.0;
  // Lattice points scanned; the whole lattice unless a radius was given.
  std::size_t scanned = 0;
  std::vector<PhasePoint> zero_points;
  double min_modulus = 0.0;
  ZeroClass classification = ZeroClass::Empty;
};

// Raised when a deconvolution would divide by (numerically) zero.
class InfeasibleError : public DomainError {
 public:
  InfeasibleError(const std::string& what, ZeroSetReport report)
      : DomainError(what), report_(std::move(report)) {}
  const ZeroSetReport& report() const { return report_; }

 private:
  ZeroSetReport report_;
};

// 1e-8 times the peak modulus of F_W(op).
double default_zero_tolerance(const Op& op);

// Points with |F_W(sigma)(z)| <= tol. A radius restricts the scan to |z| <= radius
// in reporting coordinates; row/column detection needs the full lattice.
ZeroSetReport zero_set(const Op& sigma, double tol, std::optional<double> radius = std::nullopt);

// 2^{1/4} e^{-pi x^2} on the centred grid. Sampled line only.
StateVector gaussian_window(const PhaseSpaceModel& model);

// S_sigma = S * check(sigma), i.e. z -> tr(S alpha_z(sigma)).
PhaseFunction husimi(const Op& s, const Op& sigma);

// f -> f * sigma*.
Op berezin_quantize(const PhaseFunction& f, const Op& sigma);

enum class GsMode { Strict, Pseudo };

struct GlauberSudarshanResult {
  PhaseFunction symbol;
  // Hilbert-Schmidt norm of berezin_quantize(symbol, sigma) - S.
  double residual = 0.0;
  ZeroSetReport zeros;
};

// Solves S = f * sigma* by dividing F_W(S) by F_W(sigma*) off its zero set.
// Strict mode throws InfeasibleError if that zero set is nonempty; pseudo mode
// sets the quotient to zero there and reports the residual.
GlauberSudarshanResult glauber_sudarshan(const Op& s, const Op& sigma, GsMode mode,
                                         std::optional<double> tol = std::nullopt);

// Recovers S from S_sigma via F_W(S) = F(S_sigma) / F_W(check(sigma)).
// Throws InfeasibleError when F_W(check(sigma)) has zeros at the tolerance.
Op reconstruct(const PhaseFunction& s_sigma, const Op& sigma, std::optional<double> tol = std::nullopt);

enum class BerezinLiebSide { Operator, Function };

struct BerezinLiebResult {
  BerezinLiebSide side = BerezinLiebSide::Operator;
  double lhs = 0.0;
  double rhs = 0.0;
  ConvexFunctional functional = ConvexFunctional::positive_part();
  bool passed = false;
};

inline constexpr double kBerezinLiebSlack = 1e-9;

// sum_z Phi((S * T)(z)) weight <= tr Phi(T); T Hermitian, S a density.
BerezinLiebResult berezin_lieb_operator(const Op& t, const Op& s, const ConvexFunctional& phi);
// tr Phi(f * S) <= sum_z Phi(f(z)) weight; f real, S a density.
BerezinLiebResult berezin_lieb_function(const PhaseFunction& f, const Op& s, const ConvexFunctional& phi);

// Throws DomainError unless S is positive with unit trace.
void require_density(const Op& s);

}  // namespace qha
