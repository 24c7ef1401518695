"""Maximally recoverable LRCs and MSRD codes over small fields via skew polynomials."""

from .construct import (
    LrcCode,
    LrcParams,
    construct,
    construct_a1_bch,
    construct_global_outside,
    construct_global_outside_a1,
    construct_main,
    construct_main_improved,
    encode,
)
from .fields import FieldTower, make_tower
from .msrd import MsrdCode, construct_msrd, min_sum_rank_bruteforce, sum_rank_weight
from .skewpoly import SkewPolynomial
from .verify import (
    ErasurePattern,
    VerificationReport,
    decode_erasures,
    decode_with_stats,
    enumerate_patterns,
    is_maximally_recoverable,
)

__version__ = "0.1.0"

__all__ = [
    "FieldTower",
    "make_tower",
    "SkewPolynomial",
    "LrcCode",
    "LrcParams",
    "construct",
    "construct_main",
    "construct_main_improved",
    "construct_a1_bch",
    "construct_global_outside",
    "construct_global_outside_a1",
    "encode",
    "ErasurePattern",
    "VerificationReport",
    "enumerate_patterns",
    "is_maximally_recoverable",
    "decode_erasures",
    "decode_with_stats",
    "MsrdCode",
    "construct_msrd",
    "sum_rank_weight",
    "min_sum_rank_bruteforce",
    "__version__",
]
