#include "qha/heisenberg.hpp"

#include <vector>

namespace qha {

namespace {

std::vector<cplx> twiddles(int n) {
  std::vector<cplx> tw(n);
  for (int j = 0; j < n; ++j) tw[j] = root_of_unity(j, n);
  return tw;
}

}  // namespace

StateVector translate(int m, const StateVector& psi) {
  const auto& model = psi.model();
  StateVector out(model);
  for (int i = 0; i < model.n(); ++i) out[i] = psi[model.reduce(static_cast<long long>(i) - m)];
  return out;
}

StateVector modulate(int k, const StateVector& psi) {
  const auto& model = psi.model();
  const int n = model.n();
  const int kr = model.reduce(k);
  const double sign = model.modulation_sign(kr);
  StateVector out(model);
  for (int i = 0; i < n; ++i) {
    out[i] = sign * root_of_unity(static_cast<long long>(kr) * i, n) * psi[i];
  }
  return out;
}

Op tf_shift(PhasePoint z, const PhaseSpaceModel& model) {
  const int n = model.n();
  const double sign = model.modulation_sign(z.k);
  CMatrix out = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    out(i, model.reduce(static_cast<long long>(i) - z.m)) =
        sign * root_of_unity(static_cast<long long>(z.k) * i, n);
  }
  return Op(model, std::move(out));
}

StateVector apply_tf_shift(PhasePoint z, const StateVector& psi) {
  return modulate(z.k, translate(z.m, psi));
}

Op alpha(PhasePoint z, const Op& a) {
  const auto& model = a.model();
  const int n = model.n();
  const auto tw = twiddles(n);
  const CMatrix& src = a.matrix();
  CMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    const int sj = model.reduce(static_cast<long long>(j) - z.m);
    for (int i = 0; i < n; ++i) {
      const int si = model.reduce(static_cast<long long>(i) - z.m);
      const int d = model.reduce(static_cast<long long>(z.k) * (i - j));
      out(i, j) = tw[d] * src(si, sj);
    }
  }
  return Op(model, std::move(out));
}

PhaseFunction stft(const StateVector& psi, const StateVector& window) {
  require_same_model(psi.model(), window.model());
  const auto& model = psi.model();
  const int n = model.n();
  const auto tw = twiddles(n);
  PhaseFunction out(model);
  std::vector<cplx> prod(n);
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      prod[i] = psi[i] * std::conj(window[model.reduce(static_cast<long long>(i) - m)]);
    }
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int i = 0; i < n; ++i) acc += prod[i] * tw[model.reduce(-static_cast<long long>(k) * i)];
      out(m, k) = acc * model.modulation_sign(k) * model.vector_weight();
    }
  }
  return out;
}

PhaseFunction wigner(const StateVector& psi) {
  const auto& model = psi.model();
  const int n = model.n();
  PhaseFunction ambiguity = stft(psi, psi);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      cplx a = std::conj(model.half_phase(m, k)) * ambiguity(m, k);
      if (parity_sign(model, {m, k}) < 0.0) a *= cplx(0.0, 1.0);
      ambiguity(m, k) = a;
    }
  }
  return symplectic_fourier(ambiguity);
}

}  // namespace qha
