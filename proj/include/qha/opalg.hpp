#pragma once

// Dense operator algebra on C^N: states, operators, Schatten norms and the
// Hermitian functional calculus.

#include <atomic>
#include <functional>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <variant>

#include "qha/phasespace.hpp"

namespace qha {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPositiveTol = 1e-10;

class StateVector {
 public:
  explicit StateVector(const PhaseSpaceModel& model);
  StateVector(const PhaseSpaceModel& model, CVector values);

  const PhaseSpaceModel& model() const { return model_; }
  int n() const { return model_.n(); }
  const CVector& values() const { return values_; }
  CVector& values() { return values_; }
  cplx operator[](int i) const { return values_(i); }
  cplx& operator[](int i) { return values_(i); }

 private:
  PhaseSpaceModel model_;
  CVector values_;
};

// <a, b>, linear in the first argument; sampled-line vectors carry the dx weight.
cplx inner(const StateVector& a, const StateVector& b);
double norm(const StateVector& a);
// psi-check[n] = psi[-n mod N]; on the centred sampled grid this is x -> -x.
StateVector parity(const StateVector& a);
StateVector conjugate(const StateVector& a);
StateVector basis_vector(const PhaseSpaceModel& model, int index);
StateVector random_state(const PhaseSpaceModel& model, std::uint64_t seed);

class Op {
 public:
  explicit Op(const PhaseSpaceModel& model);
  Op(const PhaseSpaceModel& model, CMatrix matrix);
  Op(const Op& other);
  Op& operator=(const Op& other);

  const PhaseSpaceModel& model() const { return model_; }
  int n() const { return model_.n(); }
  const CMatrix& matrix() const { return matrix_; }
  // Mutable access drops the cached flags.
  CMatrix& mutable_matrix();

  cplx trace() const { return matrix_.trace(); }
  // max |A - A*| <= 1e-10.
  bool is_hermitian() const;
  // Hermitian with min eigenvalue >= -1e-10 ||A||_inf.
  bool is_positive() const;

 private:
  enum : std::int8_t { kUnknown = -1, kFalse = 0, kTrue = 1 };
  PhaseSpaceModel model_;
  CMatrix matrix_;
  // Recomputing a flag concurrently is harmless; atomics keep it race-free.
  mutable std::atomic<std::int8_t> hermitian_{kUnknown};
  mutable std::atomic<std::int8_t> positive_{kUnknown};
};

Op identity(const PhaseSpaceModel& model);
Op operator+(const Op& a, const Op& b);
Op operator-(const Op& a, const Op& b);
Op operator*(const Op& a, const Op& b);
Op operator*(cplx c, const Op& a);

// xi (x) eta : zeta -> <zeta, eta> xi.
Op rank_one(const StateVector& xi, const StateVector& eta);
Op adjoint(const Op& a);
// P A P with P the index reversal n -> (N - n) mod N.
Op parity_conj(const Op& a);

double schatten_norm(const Op& a, double p);
Eigen::VectorXd singular_values(const Op& a);
// Eigenvalues of the symmetrized operator, ascending. Throws DomainError unless Hermitian.
Eigen::VectorXd hermitian_eigenvalues(const Op& a);
double max_abs_diff(const Op& a, const Op& b);

struct ExpFunctional {
  double beta = 1.0;
};
struct PositivePart {};
struct AbsPower {
  double p = 2.0;
};

// Positive convex continuous t -> Phi(t): e^{-beta t}, t_+, or |t|^p.
class ConvexFunctional {
 public:
  using Variant = std::variant<ExpFunctional, PositivePart, AbsPower>;

  ConvexFunctional(Variant v);  // NOLINT(google-explicit-constructor)
  static ConvexFunctional exp(double beta) { return ConvexFunctional(ExpFunctional{beta}); }
  static ConvexFunctional positive_part() { return ConvexFunctional(PositivePart{}); }
  static ConvexFunctional abs_power(double p) { return ConvexFunctional(AbsPower{p}); }

  double operator()(double t) const;
  std::string describe() const;
  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

// U Phi(Lambda) U* for Hermitian A = U Lambda U*.
Op spectral_apply(const ConvexFunctional& phi, const Op& a);

Op random_density(const PhaseSpaceModel& model, int rank, std::uint64_t seed);
Op random_hermitian(const PhaseSpaceModel& model, std::uint64_t seed);
// FNV-1a over the raw entries; identifies inputs in reports.
std::string matrix_digest(std::initializer_list<std::reference_wrapper<const CMatrix>> mats);

// Complex Ginibre matrix; no structure.
Op random_operator(const PhaseSpaceModel& model, std::uint64_t seed);

}  // namespace qha
