"""Quantum harmonic analysis on a discretized phase space.

Arrays are NumPy: phase-space functions are (N, N) complex arrays indexed
[m, k], operators are (N, N) complex matrices and states are length-N vectors.
Every function takes the `Model` the arrays live on as its first argument.
"""

from ._qha import (
    InfeasibleError,
    Model,
    berezin_lieb_function,
    berezin_lieb_operator,
    berezin_quantize,
    conv_fn_op,
    conv_op_op,
    fourier_wigner,
    gaussian_window,
    glauber_sudarshan,
    husimi,
    random_density,
    random_function,
    rank_one,
    reconstruct,
    registered_identities,
    rho,
    stft,
    symplectic_fourier,
    tf_shift,
    twisted_conv,
    verify_identity,
    wigner,
    zero_set,
)

__all__ = [
    "InfeasibleError",
    "Model",
    "berezin_lieb_function",
    "berezin_lieb_operator",
    "berezin_quantize",
    "conv_fn_op",
    "conv_op_op",
    "fourier_wigner",
    "gaussian_window",
    "glauber_sudarshan",
    "husimi",
    "random_density",
    "random_function",
    "rank_one",
    "reconstruct",
    "registered_identities",
    "rho",
    "stft",
    "symplectic_fourier",
    "tf_shift",
    "twisted_conv",
    "verify_identity",
    "wigner",
    "zero_set",
]
