"""Jack and Macdonald polynomials in superspace, their Pieri rules, and the
six-vertex form of the Pieri determinants."""

from .coeffield import RatFunc, const, parse_ratfunc, substitute, var
from .orthobasis import (
    apply_e0tilde,
    apply_qperp,
    apply_Qtilde,
    expand_in_basis,
    jack,
    macdonald,
    omega_hat,
)
from .pieri import PieriCoefficient, det_pieri, hook_product, norm_squared, pieri
from .sixvertex import ASM, SpectralData, asm_sum, asm_weight, det_asm_identity, enumerate_asm, ik_determinant
from .superalgebra import ExplicitSuperPoly, SymSuperFunc, generator, multiply, to_m, to_p
from .superpartitions import SuperPartition, classify_strip, conjugate, enumerate_superpartitions, parse, strips

__version__ = "0.1.0"

__all__ = [
    "RatFunc",
    "const",
    "var",
    "parse_ratfunc",
    "substitute",
    "SuperPartition",
    "parse",
    "conjugate",
    "enumerate_superpartitions",
    "strips",
    "classify_strip",
    "SymSuperFunc",
    "ExplicitSuperPoly",
    "generator",
    "multiply",
    "to_m",
    "to_p",
    "jack",
    "macdonald",
    "expand_in_basis",
    "apply_e0tilde",
    "apply_Qtilde",
    "apply_qperp",
    "omega_hat",
    "PieriCoefficient",
    "pieri",
    "det_pieri",
    "norm_squared",
    "hook_product",
    "ASM",
    "SpectralData",
    "enumerate_asm",
    "asm_weight",
    "asm_sum",
    "ik_determinant",
    "det_asm_identity",
]
