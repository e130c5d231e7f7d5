#pragma once

// Discretized phase space Z_N x Z_N (finite cyclic model) or a periodic
// sampling of the real line (sampled-line model).
//
// Conventions shared by every module:
//   * lattice points are (m, k), m the position index, k the frequency index,
//     both reduced mod N; signed representatives lie in
//     {-floor(N/2), ..., ceil(N/2) - 1};
//   * the measure of one lattice point is weight() = 1/N;
//   * the symplectic form enters phases as e^{2 pi i [z,z']} with
//     [z,z'] = (k m' - k' m) / N on signed representatives;
//   * the half-integer phase e^{-pi i x.omega} is omega_{2N}^{-m k} on signed
//     representatives.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "qha/errors.hpp"

namespace qha {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

enum class ModelKind { FiniteCyclic, SampledLine };

// Test hook: IntegerPhase replaces omega_{2N} by omega_N in the half-integer
// phase. Every algebraic identity that mixes rho with twisted convolution then
// breaks, which the verification suite must detect.
enum class PhaseConvention { Standard, IntegerPhase };

// e^{2 pi i num / den}, with num reduced first so large exponents stay exact.
cplx root_of_unity(long long num, long long den);

class PhaseSpaceModel {
 public:
  PhaseSpaceModel(ModelKind kind, int n, double length, PhaseConvention convention);

  ModelKind kind() const { return kind_; }
  int n() const { return n_; }
  // Spatial period; zero for the finite cyclic model.
  double length() const { return length_; }
  PhaseConvention convention() const { return convention_; }

  double weight() const { return 1.0 / n_; }
  // Grid spacings. The finite model uses unit position spacing and 1/N frequency spacing.
  double dx() const { return kind_ == ModelKind::SampledLine ? length_ / n_ : 1.0; }
  double domega() const { return kind_ == ModelKind::SampledLine ? 1.0 / length_ : 1.0 / n_; }
  // Weight of one sample in vector inner products.
  double vector_weight() const { return kind_ == ModelKind::SampledLine ? dx() : 1.0; }

  int reduce(long long i) const;
  int signed_index(long long i) const;

  // Reporting coordinates. Finite model: signed indices. Sampled line:
  // physical coordinates x = m dx, omega = k domega.
  double x_coord(int m) const;
  double omega_coord(int k) const;
  // Physical position of sample n on the centred grid (sampled line only).
  double sample_position(int n) const { return (n - n_ / 2) * dx(); }

  // e^{-pi i x.omega} for the lattice point (m, k).
  cplx half_phase(int m, int k) const;
  // Extra sign carried by modulations on the centred sampled grid.
  double modulation_sign(int k) const;

  std::string kind_name() const;

  bool operator==(const PhaseSpaceModel& other) const = default;

 private:
  ModelKind kind_;
  int n_;
  double length_;
  PhaseConvention convention_;
};

PhaseSpaceModel build_model(ModelKind kind, int n, std::optional<double> length = std::nullopt,
                            PhaseConvention convention = PhaseConvention::Standard);
ModelKind parse_model_kind(const std::string& name);

struct PhasePoint {
  int m = 0;
  int k = 0;
  bool operator==(const PhasePoint&) const = default;
};

PhasePoint make_point(const PhaseSpaceModel& model, long long m, long long k);
PhasePoint negate(const PhaseSpaceModel& model, PhasePoint z);
PhasePoint add(const PhaseSpaceModel& model, PhasePoint a, PhasePoint b);

// [z, z'] as a real number; phases use e^{2 pi i [z,z']}.
double symplectic_form(const PhaseSpaceModel& model, PhasePoint z, PhasePoint zp);
// e^{-2 pi i [z, z']}, evaluated as an exact root of unity.
cplx symplectic_character(const PhaseSpaceModel& model, PhasePoint z, PhasePoint zp);

// Phase c(a, b) with W(a) W(b) = c(a, b) W(a + b), where W(z) = e^{-pi i x.omega} pi(z).
// Equals e^{pi i [a, b]} times a sign that only differs from one when the
// signed representatives of a + b wrap around.
cplx twisted_cocycle(const PhaseSpaceModel& model, PhasePoint a, PhasePoint b);

// Sign eps(z) = +-1 with F_W(P S P)(z) = eps(z) F_W(S)(-z) and
// F_W(S*)(z) = eps(z) conj(F_W(S)(-z)). Equals one off the lines
// m = -N/2 or k = -N/2 (even N).
double parity_sign(const PhaseSpaceModel& model, PhasePoint z);

// Complex-valued function on the N x N lattice, values(m, k).
class PhaseFunction {
 public:
  explicit PhaseFunction(const PhaseSpaceModel& model);
  PhaseFunction(const PhaseSpaceModel& model, CMatrix values);

  const PhaseSpaceModel& model() const { return model_; }
  int n() const { return model_.n(); }
  const CMatrix& values() const { return values_; }
  CMatrix& values() { return values_; }

  cplx operator()(int m, int k) const { return values_(m, k); }
  cplx& operator()(int m, int k) { return values_(m, k); }
  cplx at(PhasePoint z) const { return values_(z.m, z.k); }

  // Weighted sum over the lattice.
  cplx integral() const;

 private:
  PhaseSpaceModel model_;
  CMatrix values_;
};

PhaseFunction constant_function(const PhaseSpaceModel& model, cplx c);
// Delta of unit mass at the origin: value 1/weight at (0,0).
PhaseFunction delta_function(const PhaseSpaceModel& model);
PhaseFunction random_function(const PhaseSpaceModel& model, std::uint64_t seed);

double lp_norm(const PhaseFunction& f, double p);

PhaseFunction symplectic_fourier(const PhaseFunction& f);

// Ordinary (commutative) convolution (f * g)(z) = sum_z' f(z') g(z - z') weight.
PhaseFunction convolve(const PhaseFunction& f, const PhaseFunction& g);

void require_same_model(const PhaseSpaceModel& a, const PhaseSpaceModel& b);

}  // namespace qha
