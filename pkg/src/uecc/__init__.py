"""Unified Curve25519/Curve448 scalar multiplication over a modeled accelerator datapath."""

from .field import CurveId, FieldElement, PARAMS
from .ecsm import EcsmConfig, EcsmResult, Scalar, scalar_mult, scalar_mult_bytes

__version__ = "0.1.0"

__all__ = [
    "CurveId",
    "FieldElement",
    "PARAMS",
    "EcsmConfig",
    "EcsmResult",
    "Scalar",
    "scalar_mult",
    "scalar_mult_bytes",
    "__version__",
]
