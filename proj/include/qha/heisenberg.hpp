#pragma once

// Time-frequency shifts pi(z) = M_omega T_x, the operator shift alpha_z, the
// short-time Fourier transform and the Wigner distribution.

#include "qha/opalg.hpp"
#include "qha/phasespace.hpp"

namespace qha {

// (T_m psi)[n] = psi[n - m], cyclic.
StateVector translate(int m, const StateVector& psi);
// Finite model: psi[n] omega_N^{k n}. Sampled line: psi[n] e^{2 pi i k domega x_n}
// on the centred grid, which is the finite modulation times (-1)^k.
StateVector modulate(int k, const StateVector& psi);

Op tf_shift(PhasePoint z, const PhaseSpaceModel& model);
StateVector apply_tf_shift(PhasePoint z, const StateVector& psi);

// alpha_z(A) = pi(z) A pi(z)*; O(N^2) per shift.
Op alpha(PhasePoint z, const Op& a);

// V_phi psi(z) = <psi, pi(z) phi>.
PhaseFunction stft(const StateVector& psi, const StateVector& window);

// Weyl symbol of psi (x) psi: the symplectic Fourier transform of the
// ambiguity function e^{pi i x.omega} V_psi psi. On the few lattice points where
// the half-integer phase breaks the symmetry z -> -z (parity_sign = -1, only
// for even N on the lines m = -N/2 or k = -N/2) the ambiguity value is rotated
// by i, which makes the result exactly real and of total mass ||psi||^2.
PhaseFunction wigner(const StateVector& psi);

}  // namespace qha
