#include "qha/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "qha/opalg.hpp"
#include "qha/qconv.hpp"

namespace qha {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Inputs {
  PhaseFunction f, g;
  Op s, t;
  std::string digest;
};

Inputs draw_inputs(const PhaseSpaceModel& model, std::uint64_t seed) {
  std::uint64_t state = seed;
  Inputs in{random_function(model, splitmix(state)), random_function(model, splitmix(state)),
            random_operator(model, splitmix(state)), random_operator(model, splitmix(state)), {}};
  in.digest = matrix_digest({in.f.values(), in.g.values(), in.s.matrix(), in.t.matrix()});
  return in;
}

double max_diff(const PhaseFunction& a, const PhaseFunction& b) {
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

PhaseFunction pointwise(const PhaseFunction& a, const PhaseFunction& b) {
  return PhaseFunction(a.model(), a.values().cwiseProduct(b.values()));
}

double l1(const PhaseFunction& f) { return lp_norm(f, 1.0); }
double tr1(const Op& s) { return schatten_norm(s, 1.0); }

struct Outcome {
  double error;
  double scale;
};

using Check = std::function<Outcome(const Inputs&)>;

Outcome conv_fourier_1(const Inputs& in) {
  const auto lhs = symplectic_fourier(conv_op_op(in.s, in.t));
  const auto rhs = pointwise(fourier_wigner(in.s), fourier_wigner(in.t));
  return {max_diff(lhs, rhs), tr1(in.s) * tr1(in.t)};
}

Outcome conv_fourier_2(const Inputs& in) {
  const auto lhs = fourier_wigner(conv_fn_op(in.f, in.s));
  const auto rhs = pointwise(symplectic_fourier(in.f), fourier_wigner(in.s));
  return {max_diff(lhs, rhs), l1(in.f) * tr1(in.s)};
}

Outcome twisted_product(const Inputs& in) {
  const double e1 = max_diff(fourier_wigner(in.s * in.t),
                             twisted_conv(fourier_wigner(in.s), fourier_wigner(in.t)));
  const double e2 = max_abs_diff(rho(in.f) * rho(in.g), rho(twisted_conv(in.f, in.g)));
  return {std::max(e1, e2), std::max(tr1(in.s) * tr1(in.t), l1(in.f) * l1(in.g))};
}

Outcome trace_integral(const Inputs& in) {
  const cplx lhs = shifted_trace(in.s, in.t).integral();
  return {std::abs(lhs - in.s.trace() * in.t.trace()), tr1(in.s) * tr1(in.t)};
}

Outcome associativity_ffo(const Inputs& in) {
  const Op lhs = conv_fn_op(convolve(in.f, in.g), in.s);
  const Op rhs = conv_fn_op(in.f, conv_fn_op(in.g, in.s));
  return {max_abs_diff(lhs, rhs), l1(in.f) * l1(in.g) * tr1(in.s)};
}

Outcome associativity_foo(const Inputs& in) {
  const auto lhs = conv_op_op(conv_fn_op(in.f, in.s), in.t);
  const auto rhs = convolve(in.f, conv_op_op(in.s, in.t));
  return {max_diff(lhs, rhs), l1(in.f) * tr1(in.s) * tr1(in.t)};
}

Outcome commutativity(const Inputs& in) {
  const double e1 = max_diff(conv_op_op(in.s, in.t), conv_op_op(in.t, in.s));
  const double e2 = max_diff(convolve(in.f, in.g), convolve(in.g, in.f));
  return {std::max(e1, e2), std::max(tr1(in.s) * tr1(in.t), l1(in.f) * l1(in.g))};
}

Outcome young_norms(const Inputs& in) {
  constexpr std::array<std::array<double, 3>, 3> triples{{{1, 1, 1}, {1, 2, 2}, {2, 2, kInf}}};
  const Op fs = conv_fn_op(in.f, in.s);
  const PhaseFunction st = conv_op_op(in.s, in.t);
  double violation = 0.0, scale = 0.0;
  for (const auto& [p, q, r] : triples) {
    const double bound_fs = lp_norm(in.f, p) * schatten_norm(in.s, q);
    const double bound_st = schatten_norm(in.s, p) * schatten_norm(in.t, q);
    violation = std::max({violation, schatten_norm(fs, r) - bound_fs, lp_norm(st, r) - bound_st});
    scale = std::max({scale, bound_fs, bound_st});
  }
  return {std::max(violation, 0.0), scale};
}

Outcome parseval_trace(const Inputs& in) {
  const cplx lhs = (in.s.matrix().adjoint() * in.t.matrix()).trace();
  const auto fs = fourier_wigner(in.s);
  const auto ft = fourier_wigner(in.t);
  const cplx rhs = PhaseFunction(fs.model(), fs.values().conjugate().cwiseProduct(ft.values())).integral();
  return {std::abs(lhs - rhs), tr1(in.s) * tr1(in.t)};
}

Outcome unitarity_fw(const Inputs& in) {
  const auto fs = fourier_wigner(in.s);
  const double e1 = std::abs(lp_norm(fs, 2.0) - schatten_norm(in.s, 2.0));
  const double e2 = max_abs_diff(rho(fs), in.s);
  const double e3 = max_diff(fourier_wigner(rho(in.f)), in.f);
  return {std::max({e1, e2, e3}), std::max(tr1(in.s), l1(in.f))};
}

struct Entry {
  std::string name;
  Check check;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"conv-fourier-1", conv_fourier_1},       {"conv-fourier-2", conv_fourier_2},
      {"twisted-product", twisted_product},     {"trace-integral", trace_integral},
      {"associativity-ffo", associativity_ffo}, {"associativity-foo", associativity_foo},
      {"commutativity", commutativity},         {"young-norms", young_norms},
      {"parseval-trace", parseval_trace},       {"unitarity-FW", unitarity_fw},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& registered_identities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

bool is_registered_identity(std::string_view name) {
  const auto& names = registered_identities();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport verify_identity(std::string_view name, std::uint64_t seed, const PhaseSpaceModel& model) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.name == name; });
  if (it == entries.end()) throw ConfigError("unknown identity '" + std::string(name) + "'");

  const auto start = std::chrono::steady_clock::now();
  const Inputs inputs = draw_inputs(model, seed);
  const Outcome outcome = it->check(inputs);
  const auto stop = std::chrono::steady_clock::now();

  VerificationReport report;
  report.identity_name = it->name;
  report.model_kind = model.kind_name();
  report.n = model.n();
  report.seed = seed;
  report.inputs_digest = inputs.digest;
  report.max_abs_error = outcome.error;
  report.tolerance = kIdentityTolerance * std::max(1.0, outcome.scale);
  report.passed = std::isfinite(outcome.error) && outcome.error <= report.tolerance;
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

VerificationReport verify_identity(std::string_view name, std::uint64_t seed, int n) {
  return verify_identity(name, seed, build_model(ModelKind::FiniteCyclic, n));
}

}  // namespace qha
