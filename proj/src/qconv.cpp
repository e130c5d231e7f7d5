#include "qha/qconv.hpp"

#include <vector>

namespace qha {

namespace {

std::vector<cplx> twiddles(int n) {
  std::vector<cplx> tw(n);
  for (int j = 0; j < n; ++j) tw[j] = root_of_unity(j, n);
  return tw;
}

}  // namespace

Op rho(const PhaseFunction& f) {
  const auto& model = f.model();
  const int n = model.n();
  const auto tw = twiddles(n);
  // Row m of f pre-multiplied by its Weyl phase and modulation sign.
  CMatrix g(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) g(m, k) = f(m, k) * model.half_phase(m, k) * model.modulation_sign(k);
  }
  CMatrix out = CMatrix::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += g(m, k) * tw[model.reduce(static_cast<long long>(k) * i)];
      out(i, model.reduce(static_cast<long long>(i) - m)) = acc * model.weight();
    }
  }
  return Op(model, std::move(out));
}

PhaseFunction twisted_conv(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_model(f.model(), g.model());
  const auto& model = f.model();
  const int n = model.n();
  PhaseFunction out(model);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int mp = 0; mp < n; ++mp) {
        for (int kp = 0; kp < n; ++kp) {
          const PhasePoint a = make_point(model, m - mp, k - kp);
          acc += f.at(a) * g(mp, kp) * twisted_cocycle(model, a, {mp, kp});
        }
      }
      out(m, k) = acc * model.weight();
    }
  }
  return out;
}

Op conv_fn_op(const PhaseFunction& f, const Op& s) {
  require_same_model(f.model(), s.model());
  const auto& model = f.model();
  const int n = model.n();
  const auto tw = twiddles(n);
  // spectra(m, d) = sum_k f(m, k) omega^{k d}
  CMatrix spectra(n, n);
  for (int m = 0; m < n; ++m) {
    for (int d = 0; d < n; ++d) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += f(m, k) * tw[model.reduce(static_cast<long long>(k) * d)];
      spectra(m, d) = acc;
    }
  }
  const CMatrix& src = s.matrix();
  CMatrix out = CMatrix::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j) {
      const int sj = model.reduce(static_cast<long long>(j) - m);
      for (int i = 0; i < n; ++i) {
        out(i, j) += spectra(m, model.reduce(static_cast<long long>(i) - j)) *
                     src(model.reduce(static_cast<long long>(i) - m), sj);
      }
    }
  }
  out *= model.weight();
  return Op(model, std::move(out));
}

PhaseFunction shifted_trace(const Op& s, const Op& t) {
  require_same_model(s.model(), t.model());
  const auto& model = s.model();
  const int n = model.n();
  const auto tw = twiddles(n);
  const CMatrix& sm = s.matrix();
  const CMatrix& tm = t.matrix();
  PhaseFunction out(model);
  std::vector<cplx> diag_sums(n);
  // tr(S alpha_z T) = sum_{i,j} S(j,i) omega^{k(i-j)} T(i-m, j-m), grouped by i - j.
  for (int m = 0; m < n; ++m) {
    std::fill(diag_sums.begin(), diag_sums.end(), cplx(0.0));
    for (int j = 0; j < n; ++j) {
      const int tj = model.reduce(static_cast<long long>(j) - m);
      for (int i = 0; i < n; ++i) {
        diag_sums[model.reduce(static_cast<long long>(i) - j)] +=
            sm(j, i) * tm(model.reduce(static_cast<long long>(i) - m), tj);
      }
    }
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int d = 0; d < n; ++d) acc += diag_sums[d] * tw[model.reduce(static_cast<long long>(k) * d)];
      out(m, k) = acc;
    }
  }
  return out;
}

PhaseFunction conv_op_op(const Op& s, const Op& t) { return shifted_trace(s, parity_conj(t)); }

PhaseFunction fourier_wigner(const Op& s) {
  const auto& model = s.model();
  const int n = model.n();
  const auto tw = twiddles(n);
  PhaseFunction out(model);
  // tr(W(z)* S) with W(z)(i, i - m) = e^{-pi i x.omega} sign(k) omega^{k i}.
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += tw[model.reduce(-static_cast<long long>(k) * i)] *
               s.matrix()(i, model.reduce(static_cast<long long>(i) - m));
      }
      out(m, k) = std::conj(model.half_phase(m, k)) * model.modulation_sign(k) * acc;
    }
  }
  return out;
}

}  // namespace qha
