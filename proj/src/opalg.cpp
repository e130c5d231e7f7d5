#include "qha/opalg.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>

namespace qha {

namespace {

CVector gaussian_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = cplx(normal(rng), normal(rng));
  return v;
}

CMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = cplx(normal(rng), normal(rng));
  }
  return g;
}

void require_square(const PhaseSpaceModel& model, const CMatrix& m) {
  if (m.rows() != model.n() || m.cols() != model.n()) {
    throw ConfigError("operator shape does not match the model dimension");
  }
}

}  // namespace

StateVector::StateVector(const PhaseSpaceModel& model)
    : model_(model), values_(CVector::Zero(model.n())) {}

StateVector::StateVector(const PhaseSpaceModel& model, CVector values)
    : model_(model), values_(std::move(values)) {
  if (values_.size() != model.n()) throw ConfigError("state length does not match the model dimension");
}

cplx inner(const StateVector& a, const StateVector& b) {
  require_same_model(a.model(), b.model());
  // Eigen's dot conjugates its first argument.
  return b.values().dot(a.values()) * a.model().vector_weight();
}

double norm(const StateVector& a) {
  return std::sqrt(a.values().squaredNorm() * a.model().vector_weight());
}

StateVector parity(const StateVector& a) {
  const auto& model = a.model();
  StateVector out(model);
  for (int i = 0; i < model.n(); ++i) out[i] = a[model.reduce(-static_cast<long long>(i))];
  return out;
}

StateVector conjugate(const StateVector& a) { return StateVector(a.model(), a.values().conjugate()); }

StateVector basis_vector(const PhaseSpaceModel& model, int index) {
  StateVector e(model);
  e[model.reduce(index)] = 1.0;
  return e;
}

StateVector random_state(const PhaseSpaceModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StateVector v(model, gaussian_vector(model.n(), rng));
  v.values() /= norm(v);
  return v;
}

Op::Op(const PhaseSpaceModel& model) : model_(model), matrix_(CMatrix::Zero(model.n(), model.n())) {}

Op::Op(const PhaseSpaceModel& model, CMatrix matrix) : model_(model), matrix_(std::move(matrix)) {
  require_square(model_, matrix_);
}

Op::Op(const Op& other)
    : model_(other.model_),
      matrix_(other.matrix_),
      hermitian_(other.hermitian_.load()),
      positive_(other.positive_.load()) {}

Op& Op::operator=(const Op& other) {
  if (this != &other) {
    model_ = other.model_;
    matrix_ = other.matrix_;
    hermitian_.store(other.hermitian_.load());
    positive_.store(other.positive_.load());
  }
  return *this;
}

CMatrix& Op::mutable_matrix() {
  hermitian_.store(kUnknown);
  positive_.store(kUnknown);
  return matrix_;
}

bool Op::is_hermitian() const {
  std::int8_t cached = hermitian_.load();
  if (cached == kUnknown) {
    const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    cached = asym <= kHermitianTol ? kTrue : kFalse;
    hermitian_.store(cached);
  }
  return cached == kTrue;
}

bool Op::is_positive() const {
  std::int8_t cached = positive_.load();
  if (cached == kUnknown) {
    if (!is_hermitian()) {
      cached = kFalse;
    } else {
      const Eigen::VectorXd ev = hermitian_eigenvalues(*this);
      const double scale = ev.cwiseAbs().maxCoeff();
      cached = ev.minCoeff() >= -kPositiveTol * scale ? kTrue : kFalse;
    }
    positive_.store(cached);
  }
  return cached == kTrue;
}

Op identity(const PhaseSpaceModel& model) { return Op(model, CMatrix::Identity(model.n(), model.n())); }

Op operator+(const Op& a, const Op& b) {
  require_same_model(a.model(), b.model());
  return Op(a.model(), a.matrix() + b.matrix());
}

Op operator-(const Op& a, const Op& b) {
  require_same_model(a.model(), b.model());
  return Op(a.model(), a.matrix() - b.matrix());
}

Op operator*(const Op& a, const Op& b) {
  require_same_model(a.model(), b.model());
  return Op(a.model(), a.matrix() * b.matrix());
}

Op operator*(cplx c, const Op& a) { return Op(a.model(), c * a.matrix()); }

Op rank_one(const StateVector& xi, const StateVector& eta) {
  require_same_model(xi.model(), eta.model());
  return Op(xi.model(), xi.model().vector_weight() * xi.values() * eta.values().adjoint());
}

Op adjoint(const Op& a) { return Op(a.model(), a.matrix().adjoint()); }

Op parity_conj(const Op& a) {
  const auto& model = a.model();
  const int n = model.n();
  CMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    const int pi = model.reduce(-static_cast<long long>(i));
    for (int j = 0; j < n; ++j) out(i, j) = a.matrix()(pi, model.reduce(-static_cast<long long>(j)));
  }
  return Op(model, std::move(out));
}

Eigen::VectorXd singular_values(const Op& a) {
  Eigen::JacobiSVD<CMatrix> svd(a.matrix());
  return svd.singularValues();
}

double schatten_norm(const Op& a, double p) {
  if (!(p >= 1.0)) throw DomainError("Schatten norm requires p >= 1");
  if (p == 2.0) return a.matrix().norm();
  const Eigen::VectorXd s = singular_values(a);
  if (std::isinf(p)) return s.size() == 0 ? 0.0 : s.maxCoeff();
  if (p == 1.0) return s.sum();
  return std::pow(s.array().pow(p).sum(), 1.0 / p);
}

Eigen::VectorXd hermitian_eigenvalues(const Op& a) {
  if (!a.is_hermitian()) {
    throw DomainError("operator is not Hermitian within tolerance 1e-10");
  }
  const CMatrix sym = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double max_abs_diff(const Op& a, const Op& b) {
  require_same_model(a.model(), b.model());
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

ConvexFunctional::ConvexFunctional(Variant v) : v_(v) {
  if (const auto* ap = std::get_if<AbsPower>(&v_); ap && !(ap->p >= 1.0)) {
    throw DomainError("AbsPower functional needs p >= 1");
  }
}

double ConvexFunctional::operator()(double t) const {
  struct Visitor {
    double t;
    double operator()(const ExpFunctional& e) const { return std::exp(-e.beta * t); }
    double operator()(const PositivePart&) const { return t > 0.0 ? t : 0.0; }
    double operator()(const AbsPower& a) const { return std::pow(std::abs(t), a.p); }
  };
  return std::visit(Visitor{t}, v_);
}

std::string ConvexFunctional::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (const auto* e = std::get_if<ExpFunctional>(&v_)) {
    os << "exp(beta=" << e->beta << ")";
  } else if (std::holds_alternative<PositivePart>(v_)) {
    os << "positive-part";
  } else {
    os << "abs-power(p=" << std::get<AbsPower>(v_).p << ")";
  }
  return os.str();
}

Op spectral_apply(const ConvexFunctional& phi, const Op& a) {
  if (!a.is_hermitian()) {
    const double asym = (a.matrix() - a.matrix().adjoint()).cwiseAbs().maxCoeff();
    std::ostringstream os;
    os << "spectral calculus needs a Hermitian operator: max |A - A*| = " << asym
       << " exceeds tolerance 1e-10";
    throw DomainError(os.str());
  }
  const CMatrix sym = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  Eigen::VectorXd mapped = es.eigenvalues().unaryExpr([&](double t) { return phi(t); });
  const CMatrix& u = es.eigenvectors();
  CMatrix out = u * mapped.cast<cplx>().asDiagonal() * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return Op(a.model(), std::move(out));
}

Op random_density(const PhaseSpaceModel& model, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > model.n()) {
    throw ConfigError("density rank must lie in [1, N], got " + std::to_string(rank));
  }
  std::mt19937_64 rng(seed);
  const CMatrix g = gaussian_matrix(model.n(), rank, rng);
  CMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return Op(model, std::move(rho));
}

Op random_hermitian(const PhaseSpaceModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CMatrix g = gaussian_matrix(model.n(), model.n(), rng);
  return Op(model, 0.5 * (g + g.adjoint()));
}

Op random_operator(const PhaseSpaceModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Op(model, gaussian_matrix(model.n(), model.n(), rng));
}

std::string matrix_digest(std::initializer_list<std::reference_wrapper<const CMatrix>> mats) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto mix = [&h](double d) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &d, sizeof d);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001B3ULL;
    }
  };
  for (const CMatrix& m : mats) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      mix(m.data()[i].real());
      mix(m.data()[i].imag());
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qha
