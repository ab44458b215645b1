"""Finite oscillator model with equidistant position spectrum.

Library layout:

- :mod:`finosc.algebra`    parity-extended su(2) algebra and its representations
- :mod:`finosc.orthopoly`  dual Hahn / Krawtchouk / parabose special functions
- :mod:`finosc.oscillator` position & momentum operators, eigenvector matrices,
  discrete wavefunctions and their boundary / large-j limits
- :mod:`finosc.spectral`   independent tridiagonal eigensolver and exact
  characteristic-polynomial oracle
- :mod:`finosc.dunkl`      reflection-differential operator realization
- :mod:`finosc.verify`     verification suites (also driven by the CLI)
- :mod:`finosc.cli`        the ``finosc`` command line tool
"""
from .algebra import (
    AlgebraParams,
    HalfInt,
    RepMatrices,
    admissible,
    bannai_ito_generators,
    build_representation,
    casimir_value,
    coeff_A,
    highest_weight,
    verify_remark1,
)
from .orthopoly import (
    DualHahnParams,
    GridFunction,
    dual_hahn_R,
    dual_hahn_norm,
    dual_hahn_normalized,
    dual_hahn_weight,
    hyp3f2_unit,
    krawtchouk_symmetric,
    parabose_wavefunction,
)
from .oscillator import (
    TridiagonalOperator,
    WavefunctionTable,
    analytic_U,
    analytic_V,
    boundary_limit_check,
    hamiltonian_spectrum,
    mk_coeff,
    momentum_operator,
    position_operator,
    scaled_limit_error,
    wavefunction,
    wavefunction_table,
)
from .spectral import CharPoly, char_poly_exact, inverse_iteration_vector, sturm_eigenvalues
from .dunkl import (
    HomogPolySpace,
    RealizationVariant,
    apply_operator,
    similarity_invariants_match,
    verify_defining_relations,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
