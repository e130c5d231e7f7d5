#include "doctest.h"
#include "oracles.hpp"
#include "qha/berezin.hpp"
#include "qha/heisenberg.hpp"
#include "qha/qconv.hpp"

using namespace qha;

namespace {

// rho of a random pure state's F_W with the line m = line zeroed out.
Op zero_line_window(const PhaseSpaceModel& model, int line, std::uint64_t seed) {
  PhaseFunction g = fourier_wigner(random_density(model, 1, seed));
  for (int k = 0; k < model.n(); ++k) g(model.reduce(line), k) = 0.0;
  return rho(g);
}

PhaseFunction real_function(const PhaseSpaceModel& model, std::uint64_t seed) {
  return PhaseFunction(model, random_function(model, seed).values().real().cast<cplx>());
}

}  // namespace

TEST_CASE("Gaussian window") {
  const auto model = build_model(ModelKind::SampledLine, 256, 16.0);
  const StateVector phi = gaussian_window(model);
  CHECK(std::abs(norm(phi) - 1.0) <= 1e-6);
  CHECK((parity(phi).values() - phi.values()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(gaussian_window(build_model(ModelKind::FiniteCyclic, 8)), ConfigError);
}

TEST_CASE("Gaussian window zero set is empty near the origin") {
  const auto model = build_model(ModelKind::SampledLine, 256, 16.0);
  const StateVector phi = gaussian_window(model);
  const Op sigma = rank_one(phi, phi);
  const ZeroSetReport r = zero_set(sigma, 1e-8, 3.0);
  CHECK(r.classification == ZeroClass::Empty);
  CHECK(r.zero_points.empty());
  CHECK(r.scanned > 0);
  CHECK(r.min_modulus >= std::exp(-kPi * 9.0 / 2) * 0.99);
  const PhaseFunction fw = fourier_wigner(sigma);
  double err = 0.0;
  for (int m = 0; m < 256; ++m) {
    for (int k = 0; k < 256; ++k) {
      const double x = model.x_coord(m), om = model.omega_coord(k);
      if (x * x + om * om <= 9.0) err = std::max(err, std::abs(std::abs(fw(m, k)) - std::exp(-kPi * (x * x + om * om) / 2)));
    }
  }
  CHECK(err <= 1e-6);
}

TEST_CASE("zero set classification") {
  const auto model = build_model(ModelKind::FiniteCyclic, 6);
  const ZeroSetReport zero = zero_set(Op(model), 1e-12);
  CHECK(zero.classification == ZeroClass::Everywhere);
  CHECK(zero.zero_points.size() == 36);

  const Op sigma = zero_line_window(model, 2, 3);
  const ZeroSetReport line = zero_set(sigma, default_zero_tolerance(sigma));
  CHECK(line.classification == ZeroClass::FullRowOrColumn);
  int on_line = 0;
  for (const auto& z : line.zero_points) on_line += z.m == 2;
  CHECK(on_line == 6);

  const Op generic = random_density(model, 1, 3);
  CHECK(zero_set(generic, default_zero_tolerance(generic)).classification == ZeroClass::Empty);
  CHECK_THROWS_AS(zero_set(generic, 0.0), ConfigError);
  CHECK(to_string(ZeroClass::NonemptySparse) == "nonempty-sparse");
}

TEST_CASE("Husimi representation") {
  const auto model = build_model(ModelKind::FiniteCyclic, 8);
  const Op sigma = random_density(model, 2, 5);
  const PhaseFunction id = husimi(identity(model), sigma);
  CHECK(oracle::max_diff(id.values(), CMatrix::Ones(8, 8)) <= 1e-12);

  const Op s = random_density(model, 3, 6);
  const PhaseFunction h = husimi(s, sigma);
  CHECK(h.values().real().minCoeff() >= -1e-12);
  CHECK(h.values().imag().cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(std::abs(h.integral() - 1.0) <= 1e-12);
  for (int m = 0; m < 8; ++m) {
    for (int k = 0; k < 8; ++k) {
      const CMatrix p = oracle::tf_shift(model, m, k);
      const cplx direct = (s.matrix() * p * sigma.matrix() * p.adjoint()).trace();
      CHECK(std::abs(h(m, k) - direct) < 1e-13);
    }
  }
}

TEST_CASE("Gaussian Husimi matches <S pi(z) phi, pi(z) phi>") {
  const auto model = build_model(ModelKind::SampledLine, 64, 8.0);
  const StateVector phi = gaussian_window(model);
  const Op s = random_density(model, 4, 2);
  const PhaseFunction h = husimi(s, rank_one(phi, phi));
  double err = 0.0;
  for (int m = 0; m < 64; ++m) {
    for (int k = 0; k < 64; ++k) {
      const StateVector shifted = apply_tf_shift({m, k}, phi);
      const StateVector image(model, s.matrix() * shifted.values());
      err = std::max(err, std::abs(h(m, k) - inner(image, shifted)));
    }
  }
  CHECK(err <= 1e-8);
}

TEST_CASE("Berezin quantization") {
  const auto model = build_model(ModelKind::FiniteCyclic, 7);
  const Op sigma = random_density(model, 2, 8);
  CHECK(max_abs_diff(berezin_quantize(constant_function(model, 1.0), sigma), identity(model)) <= 1e-12);
  const PhaseFunction f(model, random_function(model, 9).values().cwiseAbs().cast<cplx>());
  CHECK(berezin_quantize(f, sigma).is_positive());
}

// Aψ = Σ_z f(z) V_φψ(z) π(z)φ weight, assembled column by column from the
// vector integral.
TEST_CASE("Gaussian Berezin quantization matches the vector integral") {
  const auto model = build_model(ModelKind::SampledLine, 128, 12.0);
  const int n = model.n();
  const StateVector phi = gaussian_window(model);
  const PhaseFunction f = random_function(model, 77);
  CMatrix direct = CMatrix::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      const CVector shifted = oracle::tf_shift(model, m, k) * phi.values();
      // V_φ e_j(z) = <e_j, π(z)φ> = dx conj(π(z)φ)_j
      direct.noalias() += (f(m, k) * model.weight() * model.dx()) * shifted * shifted.adjoint();
    }
  }
  CHECK(oracle::max_diff(berezin_quantize(f, rank_one(phi, phi)).matrix(), direct) <= 1e-8);
}

TEST_CASE("Glauber-Sudarshan recovers the symbol of a quantized function") {
  for (int n : {3, 4, 7, 8}) {
    const auto model = build_model(ModelKind::FiniteCyclic, n);
    const Op sigma = random_density(model, 1, 20 + n);
    const PhaseFunction g = random_function(model, 30 + n);
    const Op s = berezin_quantize(g, sigma);
    const auto result = glauber_sudarshan(s, sigma, GsMode::Strict);
    CHECK(oracle::max_diff(result.symbol.values(), g.values()) <= 1e-10);
    CHECK(result.residual <= 1e-10);
    CHECK(result.zeros.classification == ZeroClass::Empty);
  }
}

TEST_CASE("Glauber-Sudarshan on a zero-line window") {
  const auto model = build_model(ModelKind::FiniteCyclic, 6);
  const Op sigma = zero_line_window(model, 1, 4);
  const Op s = random_density(model, 2, 5);
  try {
    glauber_sudarshan(s, sigma, GsMode::Strict);
    FAIL("strict mode accepted a window with zeros");
  } catch (const InfeasibleError& e) {
    const auto& pts = e.report().zero_points;
    // F_W(sigma*)(z) = conj F_W(sigma)(-z): the zero line m = 1 appears at m = -1.
    CHECK(pts.size() == 6);
    for (const auto& z : pts) CHECK(z.m == model.reduce(-1));
  }
  const auto pseudo = glauber_sudarshan(s, sigma, GsMode::Pseudo);
  CHECK(pseudo.zeros.zero_points.size() == 6);
  CHECK(pseudo.residual > 1e-6);
}

TEST_CASE("Glauber-Sudarshan reconstruction identity with empty zero set") {
  const auto model = build_model(ModelKind::FiniteCyclic, 5);
  const Op sigma = random_density(model, 1, 2);
  const Op s = random_density(model, 5, 3);
  const auto result = glauber_sudarshan(s, sigma, GsMode::Pseudo);
  CHECK(result.zeros.zero_points.empty());
  CHECK(max_abs_diff(berezin_quantize(result.symbol, sigma), s) <= 1e-10);
}

TEST_CASE("reconstruction from the Husimi representation") {
  for (int n : {2, 5, 8, 11}) {
    const auto model = build_model(ModelKind::FiniteCyclic, n);
    const Op sigma = random_density(model, 1, 50 + n);
    const Op s = random_operator(model, 60 + n);
    const Op back = reconstruct(husimi(s, sigma), sigma);
    CHECK(max_abs_diff(back, s) <= 1e-9);
    CHECK(oracle::max_diff(husimi(back, sigma).values(), husimi(s, sigma).values()) <= 1e-9);
  }
  const auto model = build_model(ModelKind::FiniteCyclic, 6);
  const Op sigma = random_density(model, 1, 1);
  CHECK(max_abs_diff(reconstruct(constant_function(model, 1.0), sigma), identity(model)) <= 1e-9);
  CHECK_THROWS_AS(reconstruct(husimi(identity(model), zero_line_window(model, 2, 1)), zero_line_window(model, 2, 1)),
                  InfeasibleError);
}

TEST_CASE("associativity chain for Husimi of a Berezin quantization") {
  const auto model = build_model(ModelKind::FiniteCyclic, 6);
  const Op sigma = random_density(model, 2, 3);
  const PhaseFunction f = random_function(model, 4);
  const PhaseFunction lhs = husimi(berezin_quantize(f, sigma), sigma);
  const PhaseFunction rhs = convolve(f, conv_op_op(adjoint(sigma), parity_conj(sigma)));
  CHECK(oracle::max_diff(lhs.values(), rhs.values()) <= 1e-10);
}

TEST_CASE("Berezin-Lieb inequalities") {
  const std::vector<ConvexFunctional> phis{ConvexFunctional::exp(1.0), ConvexFunctional::exp(-1.0),
                                           ConvexFunctional::positive_part(), ConvexFunctional::abs_power(2.0)};
  for (const auto& phi : phis) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto model = build_model(ModelKind::FiniteCyclic, 2 + static_cast<int>(seed % 9));
      const Op s = random_density(model, 1 + static_cast<int>(seed % model.n()), seed);
      const auto op_side = berezin_lieb_operator(random_hermitian(model, seed + 100), s, phi);
      CHECK(op_side.passed);
      CHECK(op_side.lhs <= op_side.rhs + 1e-9);
      const auto fn_side = berezin_lieb_function(real_function(model, seed + 200), s, phi);
      CHECK(fn_side.passed);
      CHECK(fn_side.lhs <= fn_side.rhs + 1e-9);
    }
  }
}

TEST_CASE("Berezin-Lieb positive part with a two-level T") {
  const auto model = build_model(ModelKind::FiniteCyclic, 5);
  CMatrix t = CMatrix::Zero(5, 5);
  t(0, 0) = 1.0;
  t(1, 1) = -1.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = berezin_lieb_operator(Op(model, t), random_density(model, 2, seed), ConvexFunctional::positive_part());
    CHECK(r.rhs == doctest::Approx(1.0));
    CHECK(r.lhs <= 1.0 + 1e-12);
  }
}

TEST_CASE("Berezin-Lieb equality for constant spectra") {
  const auto model = build_model(ModelKind::FiniteCyclic, 7);
  const Op s = random_density(model, 3, 1);
  for (double c : {-0.7, 0.0, 2.5}) {
    for (const auto& phi : {ConvexFunctional::exp(1.0), ConvexFunctional::positive_part(), ConvexFunctional::abs_power(2.0)}) {
      const auto op_side = berezin_lieb_operator(cplx(c) * identity(model), s, phi);
      CHECK(std::abs(op_side.lhs - op_side.rhs) <= 1e-10);
      CHECK(op_side.rhs == doctest::Approx(7 * phi(c)));
      const auto fn_side = berezin_lieb_function(constant_function(model, c), s, phi);
      CHECK(std::abs(fn_side.lhs - fn_side.rhs) <= 1e-10);
    }
  }
}

TEST_CASE("Berezin-Lieb input validation") {
  const auto model = build_model(ModelKind::FiniteCyclic, 4);
  const Op s = random_density(model, 2, 1);
  const auto phi = ConvexFunctional::exp(1.0);
  CHECK_THROWS_AS(berezin_lieb_operator(random_operator(model, 2), s, phi), DomainError);
  CHECK_THROWS_AS(berezin_lieb_operator(random_hermitian(model, 2), random_hermitian(model, 3), phi), DomainError);
  CHECK_THROWS_AS(berezin_lieb_operator(random_hermitian(model, 2), cplx(2.0) * s, phi), DomainError);
  CHECK_THROWS_AS(berezin_lieb_function(random_function(model, 2), s, phi), DomainError);
}
