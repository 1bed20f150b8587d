"""Additive-polynomial arithmetic over finite fields, complete decomposition
through the skew-polynomial correspondence, and a desk-scale HFE cryptosystem
with its common-left-divisor key-recovery attack."""

from .decompose import (
    Decomposition,
    EigenRing,
    Indecomposable,
    Split,
    SplitStats,
    ZeroDivisor,
    decompose_complete,
    decompose_linear,
    eigen_ring,
    estimate_split_success,
    find_zero_divisor,
    minimal_polynomial,
    oracle_decompose,
    split_once,
)
from .fields import FiniteField, FqElem, field_create
from .fqpoly import FqPoly
from .hfe import (
    AttackResult,
    DOPoly,
    DOShapeResult,
    FailedLinearity,
    HFEKeyPair,
    HFEPublicKey,
    HFESecretKey,
    MultivariateKey,
    check_do_shape,
    core_preimages,
    decrypt_with_factors,
    dense_difference,
    difference_poly,
    do_compose_lin,
    gcldf_attack,
    hfe_decrypt,
    hfe_encrypt,
    hfe_keygen,
    lin_to_dense,
    to_multivariate,
    try_left_factor,
)
from .linpoly import LinPoly
from .skew import (
    SkewPoly,
    gcd_left,
    gcd_right,
    gcldf,
    skew_gcd,
    to_linear,
    to_skew,
)

__version__ = "0.1.0"

__all__ = [
    "AttackResult",
    "DOPoly",
    "DOShapeResult",
    "Decomposition",
    "EigenRing",
    "FailedLinearity",
    "FiniteField",
    "FqElem",
    "FqPoly",
    "HFEKeyPair",
    "HFEPublicKey",
    "HFESecretKey",
    "Indecomposable",
    "LinPoly",
    "MultivariateKey",
    "SkewPoly",
    "Split",
    "SplitStats",
    "ZeroDivisor",
    "check_do_shape",
    "core_preimages",
    "decompose_complete",
    "decompose_linear",
    "decrypt_with_factors",
    "dense_difference",
    "difference_poly",
    "do_compose_lin",
    "eigen_ring",
    "estimate_split_success",
    "field_create",
    "find_zero_divisor",
    "gcd_left",
    "gcd_right",
    "gcldf",
    "gcldf_attack",
    "hfe_decrypt",
    "hfe_encrypt",
    "hfe_keygen",
    "lin_to_dense",
    "minimal_polynomial",
    "oracle_decompose",
    "skew_gcd",
    "split_once",
    "to_linear",
    "to_multivariate",
    "to_skew",
    "try_left_factor",
]
