#pragma once

// Quantum harmonic analysis core: the integrated Schrodinger representation,
// twisted convolution, function-operator and operator-operator convolutions,
// and the Fourier-Wigner transform.

#include "qha/opalg.hpp"
#include "qha/phasespace.hpp"

namespace qha {

// rho(f) = sum_z f(z) e^{-pi i x.omega} pi(z) weight.
Op rho(const PhaseFunction& f);

// (f natural g)(z) = sum_z' f(z - z') g(z') e^{pi i [z - z', z']} weight, with the
// lattice wrap sign of twisted_cocycle.
PhaseFunction twisted_conv(const PhaseFunction& f, const PhaseFunction& g);

// f * S = sum_y f(y) alpha_y(S) weight.
Op conv_fn_op(const PhaseFunction& f, const Op& s);

// (S * T)(z) = tr(S alpha_z(P T P)).
PhaseFunction conv_op_op(const Op& s, const Op& t);

// z -> tr(S alpha_z(T)) without the parity conjugation.
PhaseFunction shifted_trace(const Op& s, const Op& t);

// F_W S(z) = e^{-pi i x.omega} tr(pi(-z) S); inverse of rho.
PhaseFunction fourier_wigner(const Op& s);

}  // namespace qha
