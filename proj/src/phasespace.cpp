#include "qha/phasespace.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace qha {

cplx root_of_unity(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  // Exact values at the quarter turns keep integer-phase sums exact.
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(den));
}

PhaseSpaceModel::PhaseSpaceModel(ModelKind kind, int n, double length, PhaseConvention convention)
    : kind_(kind), n_(n), length_(length), convention_(convention) {}

int PhaseSpaceModel::reduce(long long i) const {
  long long r = i % n_;
  if (r < 0) r += n_;
  return static_cast<int>(r);
}

int PhaseSpaceModel::signed_index(long long i) const {
  int r = reduce(i);
  return r > (n_ - 1) / 2 ? r - n_ : r;
}

double PhaseSpaceModel::x_coord(int m) const {
  const int s = signed_index(m);
  return kind_ == ModelKind::SampledLine ? s * dx() : static_cast<double>(s);
}

double PhaseSpaceModel::omega_coord(int k) const {
  const int s = signed_index(k);
  return kind_ == ModelKind::SampledLine ? s * domega() : static_cast<double>(s);
}

cplx PhaseSpaceModel::half_phase(int m, int k) const {
  const long long prod = static_cast<long long>(signed_index(m)) * signed_index(k);
  if (convention_ == PhaseConvention::IntegerPhase) return root_of_unity(-prod, n_);
  return root_of_unity(-prod, 2LL * n_);
}

double PhaseSpaceModel::modulation_sign(int k) const {
  if (kind_ != ModelKind::SampledLine) return 1.0;
  return reduce(k) % 2 == 0 ? 1.0 : -1.0;
}

std::string PhaseSpaceModel::kind_name() const {
  return kind_ == ModelKind::SampledLine ? "SampledLine" : "FiniteCyclic";
}

PhaseSpaceModel build_model(ModelKind kind, int n, std::optional<double> length,
                            PhaseConvention convention) {
  if (n < 2) throw ConfigError("model dimension N must be at least 2, got " + std::to_string(n));
  if (kind == ModelKind::FiniteCyclic) {
    return PhaseSpaceModel(kind, n, 0.0, convention);
  }
  if (!length) throw ConfigError("SampledLine model requires the period L");
  if (!(*length > 0.0) || !std::isfinite(*length)) {
    throw ConfigError("SampledLine period L must be positive and finite");
  }
  // Centred-grid parity and modulation periodicity both need an even sample count.
  if (n % 2 != 0) throw ConfigError("SampledLine model requires even N, got " + std::to_string(n));
  return PhaseSpaceModel(kind, n, *length, convention);
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "FiniteCyclic" || name == "finite" || name == "finite-cyclic") {
    return ModelKind::FiniteCyclic;
  }
  if (name == "SampledLine" || name == "sampled" || name == "sampled-line") {
    return ModelKind::SampledLine;
  }
  throw ConfigError("unknown model kind '" + name + "'");
}

PhasePoint make_point(const PhaseSpaceModel& model, long long m, long long k) {
  return {model.reduce(m), model.reduce(k)};
}

PhasePoint negate(const PhaseSpaceModel& model, PhasePoint z) {
  return make_point(model, -static_cast<long long>(z.m), -static_cast<long long>(z.k));
}

PhasePoint add(const PhaseSpaceModel& model, PhasePoint a, PhasePoint b) {
  return make_point(model, static_cast<long long>(a.m) + b.m, static_cast<long long>(a.k) + b.k);
}

namespace {

long long symplectic_numerator(const PhaseSpaceModel& model, PhasePoint z, PhasePoint zp) {
  const long long m = model.signed_index(z.m), k = model.signed_index(z.k);
  const long long mp = model.signed_index(zp.m), kp = model.signed_index(zp.k);
  return k * mp - kp * m;
}

}  // namespace

double symplectic_form(const PhaseSpaceModel& model, PhasePoint z, PhasePoint zp) {
  return static_cast<double>(symplectic_numerator(model, z, zp)) / model.n();
}

cplx symplectic_character(const PhaseSpaceModel& model, PhasePoint z, PhasePoint zp) {
  return root_of_unity(-symplectic_numerator(model, z, zp), model.n());
}

cplx twisted_cocycle(const PhaseSpaceModel& model, PhasePoint a, PhasePoint b) {
  const long long n = model.n();
  const long long big_m = model.signed_index(a.m) + model.signed_index(b.m);
  const long long big_k = model.signed_index(a.k) + model.signed_index(b.k);
  const long long sm = model.signed_index(big_m), sk = model.signed_index(big_k);
  const long long p = (big_m - sm) / n, q = (big_k - sk) / n;
  const long long parity = p * sk + q * sm + p * q * n;
  const double wrap = (parity % 2 == 0) ? 1.0 : -1.0;
  return wrap * root_of_unity(symplectic_numerator(model, a, b), 2 * n);
}

double parity_sign(const PhaseSpaceModel& model, PhasePoint z) {
  const PhasePoint mz = negate(model, z);
  const cplx eps = std::conj(model.half_phase(z.m, z.k)) * model.half_phase(mz.m, mz.k);
  return eps.real() >= 0.0 ? 1.0 : -1.0;
}

void require_same_model(const PhaseSpaceModel& a, const PhaseSpaceModel& b) {
  if (!(a == b)) throw ModelMismatch();
}

PhaseFunction::PhaseFunction(const PhaseSpaceModel& model)
    : model_(model), values_(CMatrix::Zero(model.n(), model.n())) {}

PhaseFunction::PhaseFunction(const PhaseSpaceModel& model, CMatrix values)
    : model_(model), values_(std::move(values)) {
  if (values_.rows() != model.n() || values_.cols() != model.n()) {
    throw ConfigError("phase function shape does not match the model dimension");
  }
}

cplx PhaseFunction::integral() const { return values_.sum() * model_.weight(); }

PhaseFunction constant_function(const PhaseSpaceModel& model, cplx c) {
  return PhaseFunction(model, CMatrix::Constant(model.n(), model.n(), c));
}

PhaseFunction delta_function(const PhaseSpaceModel& model) {
  PhaseFunction f(model);
  f(0, 0) = 1.0 / model.weight();
  return f;
}

PhaseFunction random_function(const PhaseSpaceModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  PhaseFunction f(model);
  for (int m = 0; m < model.n(); ++m) {
    for (int k = 0; k < model.n(); ++k) f(m, k) = cplx(normal(rng), normal(rng));
  }
  return f;
}

double lp_norm(const PhaseFunction& f, double p) {
  if (!(p >= 1.0)) throw DomainError("Lp norm requires p >= 1");
  const auto mod = f.values().cwiseAbs();
  if (std::isinf(p)) return mod.size() == 0 ? 0.0 : mod.maxCoeff();
  if (p == 1.0) return mod.sum() * f.model().weight();
  if (p == 2.0) return std::sqrt(mod.squaredNorm() * f.model().weight());
  return std::pow(mod.array().pow(p).sum() * f.model().weight(), 1.0 / p);
}

PhaseFunction symplectic_fourier(const PhaseFunction& f) {
  const auto& model = f.model();
  const int n = model.n();
  // dft(q, m) = omega_N^{-q m};  Ff(p, q) = w sum_{m,k} f(m,k) omega^{-q m} omega^{k p}.
  CMatrix dft(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) dft(a, b) = root_of_unity(-static_cast<long long>(a) * b, n);
  }
  CMatrix qp = dft * f.values() * dft.conjugate();
  return PhaseFunction(model, model.weight() * qp.transpose());
}

PhaseFunction convolve(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_model(f.model(), g.model());
  const auto& model = f.model();
  const int n = model.n();
  PhaseFunction out(model);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int mp = 0; mp < n; ++mp) {
        const int dm = model.reduce(m - mp);
        for (int kp = 0; kp < n; ++kp) acc += f(mp, kp) * g(dm, model.reduce(k - kp));
      }
      out(m, k) = acc * model.weight();
    }
  }
  return out;
}

}  // namespace qha
