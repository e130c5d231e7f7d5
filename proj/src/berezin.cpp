#include "qha/berezin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qha/qconv.hpp"

namespace qha {

namespace {

constexpr double kRealPartTol = 1e-10;
constexpr double kTraceTol = 1e-10;

std::string describe_points(const ZeroSetReport& report, std::size_t limit = 8) {
  std::ostringstream os;
  os << report.zero_points.size() << " lattice point(s)";
  if (!report.zero_points.empty()) {
    os << ":";
    const std::size_t shown = std::min(limit, report.zero_points.size());
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& z = report.zero_points[i];
      os << " (" << z.m << "," << z.k << ")";
    }
    if (shown < report.zero_points.size()) os << " ...";
  }
  return os.str();
}

ZeroSetReport scan_zeros(const PhaseFunction& transform, const std::string& digest, double tol,
                         std::optional<double> radius) {
  const auto& model = transform.model();
  const int n = model.n();
  ZeroSetReport report{model, digest, tol, 0, {}, std::numeric_limits<double>::infinity(), ZeroClass::Empty};
  std::vector<int> row_hits(n, 0), col_hits(n, 0);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      if (radius) {
        const double x = model.x_coord(m), w = model.omega_coord(k);
        if (std::hypot(x, w) > *radius) continue;
      }
      ++report.scanned;
      const double mod = std::abs(transform(m, k));
      report.min_modulus = std::min(report.min_modulus, mod);
      if (mod <= tol) {
        report.zero_points.push_back({m, k});
        ++row_hits[m];
        ++col_hits[k];
      }
    }
  }
  if (report.scanned == 0) report.min_modulus = 0.0;

  if (report.zero_points.empty()) {
    report.classification = ZeroClass::Empty;
  } else if (report.zero_points.size() == report.scanned) {
    report.classification = ZeroClass::Everywhere;
  } else if (!radius && (std::count(row_hits.begin(), row_hits.end(), n) > 0 ||
                         std::count(col_hits.begin(), col_hits.end(), n) > 0)) {
    report.classification = ZeroClass::FullRowOrColumn;
  } else {
    report.classification = ZeroClass::NonemptySparse;
  }
  return report;
}

double peak_modulus(const PhaseFunction& f) { return f.values().cwiseAbs().maxCoeff(); }

double resolve_tolerance(std::optional<double> tol, const PhaseFunction& transform) {
  if (tol) {
    if (!(*tol > 0.0)) throw ConfigError("zero tolerance must be positive");
    return *tol;
  }
  return std::max(1e-8 * peak_modulus(transform), std::numeric_limits<double>::min());
}

}  // namespace

std::string to_string(ZeroClass c) {
  switch (c) {
    case ZeroClass::Empty: return "empty";
    case ZeroClass::NonemptySparse: return "nonempty-sparse";
    case ZeroClass::FullRowOrColumn: return "full-row-or-column";
    case ZeroClass::Everywhere: return "everywhere";
  }
  return "unknown";
}

double default_zero_tolerance(const Op& op) { return resolve_tolerance(std::nullopt, fourier_wigner(op)); }

ZeroSetReport zero_set(const Op& sigma, double tol, std::optional<double> radius) {
  if (!(tol > 0.0)) throw ConfigError("zero tolerance must be positive");
  return scan_zeros(fourier_wigner(sigma), matrix_digest({sigma.matrix()}), tol, radius);
}

StateVector gaussian_window(const PhaseSpaceModel& model) {
  if (model.kind() != ModelKind::SampledLine) {
    throw ConfigError("the Gaussian window needs a SampledLine model");
  }
  StateVector phi(model);
  const double amp = std::pow(2.0, 0.25);
  for (int i = 0; i < model.n(); ++i) {
    const double x = model.sample_position(i);
    phi[i] = amp * std::exp(-kPi * x * x);
  }
  return phi;
}

PhaseFunction husimi(const Op& s, const Op& sigma) { return conv_op_op(s, parity_conj(sigma)); }

Op berezin_quantize(const PhaseFunction& f, const Op& sigma) { return conv_fn_op(f, adjoint(sigma)); }

GlauberSudarshanResult glauber_sudarshan(const Op& s, const Op& sigma, GsMode mode, std::optional<double> tol) {
  require_same_model(s.model(), sigma.model());
  const Op window = adjoint(sigma);
  const PhaseFunction window_fw = fourier_wigner(window);
  const double threshold = resolve_tolerance(tol, window_fw);
  ZeroSetReport zeros = scan_zeros(window_fw, matrix_digest({window.matrix()}), threshold, std::nullopt);
  if (mode == GsMode::Strict && !zeros.zero_points.empty()) {
    std::string message = "no unique Glauber-Sudarshan symbol: F_W(sigma*) vanishes at " + describe_points(zeros);
    throw InfeasibleError(message, std::move(zeros));
  }

  const PhaseFunction target = fourier_wigner(s);
  PhaseFunction quotient(s.model());
  for (int m = 0; m < s.n(); ++m) {
    for (int k = 0; k < s.n(); ++k) {
      const cplx d = window_fw(m, k);
      quotient(m, k) = std::abs(d) > threshold ? target(m, k) / d : cplx(0.0);
    }
  }
  GlauberSudarshanResult result{symplectic_fourier(quotient), 0.0, std::move(zeros)};
  result.residual = (conv_fn_op(result.symbol, window).matrix() - s.matrix()).norm();
  return result;
}

Op reconstruct(const PhaseFunction& s_sigma, const Op& sigma, std::optional<double> tol) {
  require_same_model(s_sigma.model(), sigma.model());
  const Op checked = parity_conj(sigma);
  const PhaseFunction window_fw = fourier_wigner(checked);
  const double threshold = resolve_tolerance(tol, window_fw);
  ZeroSetReport zeros = scan_zeros(window_fw, matrix_digest({checked.matrix()}), threshold, std::nullopt);
  if (!zeros.zero_points.empty()) {
    std::string message = "reconstruction not guaranteed: F_W(check sigma) vanishes at " + describe_points(zeros) +
                          "; the Husimi map is injective exactly when this zero set is empty";
    throw InfeasibleError(message, std::move(zeros));
  }
  const PhaseFunction spectrum = symplectic_fourier(s_sigma);
  PhaseFunction twisted(s_sigma.model(), spectrum.values().cwiseQuotient(window_fw.values()));
  return rho(twisted);
}

void require_density(const Op& s) {
  if (!s.is_positive()) throw DomainError("expected a density operator: not positive semidefinite");
  const double tr = s.trace().real();
  if (std::abs(s.trace() - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "expected a density operator: trace " << tr << " differs from 1";
    throw DomainError(os.str());
  }
}

BerezinLiebResult berezin_lieb_operator(const Op& t, const Op& s, const ConvexFunctional& phi) {
  require_same_model(t.model(), s.model());
  if (!t.is_hermitian()) throw DomainError("Berezin-Lieb (operator side) needs a Hermitian T");
  require_density(s);

  const PhaseFunction lower = conv_op_op(s, t);
  const double scale = std::max(1.0, t.matrix().cwiseAbs().maxCoeff());
  const double imag = lower.values().imag().cwiseAbs().maxCoeff();
  if (imag > kRealPartTol * scale) {
    std::ostringstream os;
    os << "S * T is not real: max imaginary part " << imag;
    throw DomainError(os.str());
  }
  BerezinLiebResult r;
  r.side = BerezinLiebSide::Operator;
  r.functional = phi;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lower.values().size(); ++i) acc += phi(lower.values().data()[i].real());
  r.lhs = acc * s.model().weight();
  r.rhs = spectral_apply(phi, t).trace().real();
  r.passed = r.lhs <= r.rhs + kBerezinLiebSlack * std::max({std::abs(r.lhs), std::abs(r.rhs), 1.0});
  return r;
}

BerezinLiebResult berezin_lieb_function(const PhaseFunction& f, const Op& s, const ConvexFunctional& phi) {
  require_same_model(f.model(), s.model());
  const double scale = std::max(1.0, f.values().cwiseAbs().maxCoeff());
  if (f.values().imag().cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("Berezin-Lieb (function side) needs a real-valued f");
  }
  require_density(s);

  BerezinLiebResult r;
  r.side = BerezinLiebSide::Function;
  r.functional = phi;
  PhaseFunction real_f(f.model(), f.values().real().cast<cplx>());
  r.lhs = spectral_apply(phi, conv_fn_op(real_f, s)).trace().real();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < real_f.values().size(); ++i) acc += phi(real_f.values().data()[i].real());
  r.rhs = acc * f.model().weight();
  r.passed = r.lhs <= r.rhs + kBerezinLiebSlack * std::max({std::abs(r.lhs), std::abs(r.rhs), 1.0});
  return r;
}

}  // namespace qha
