"""Scalar multiplication: constant-structure ladder loop over the datapath model.

The executed instruction stream for a given (curve, dpa) configuration is
fixed: scalar bits only steer the masked conditional swaps, never which waves
issue.  Layout and per-phase cycle charges follow the register map in
`program` and the accounting in `perf`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perf
from .field import PARAMS, CurveId, FieldElement, fe
from .ffau import RegisterFile, Wave, execute_compiled_wave, mul_op
from .program import R_RND, X1, X2, X3, Z1, Z2, Z3, build_inversion_program, build_ladder_program
from .trivium import TriviumState, gen_lambda

RFC_CLAMPED = "rfc_clamped"
RAW = "raw"

_M448 = (1 << 448) - 1

# randomization: X3 <- Z1*X1 (lambda*x_P), then X1 <- Z1*X1 in place
INIT_WAVES = (Wave((mul_op(Z1, X1, X3),)), Wave((mul_op(Z1, X1, X1),)))
FINAL_WAVE = Wave((mul_op(X2, Z2, X2),))


@dataclass(frozen=True)
class Scalar:
    bits: int
    curve: CurveId

    def __post_init__(self):
        if not 0 <= self.bits < (1 << PARAMS[self.curve].scalar_bits):
            raise ValueError("scalar out of range")


@dataclass(frozen=True)
class EcsmConfig:
    dpa_enabled: bool = False
    clamp_mode: str = RFC_CLAMPED
    prng_seed: tuple[bytes, bytes] | None = None

    def __post_init__(self):
        if self.clamp_mode not in (RFC_CLAMPED, RAW):
            raise ValueError(f"unknown clamp mode {self.clamp_mode!r}")
        if self.dpa_enabled:
            if self.prng_seed is None:
                raise ValueError("dpa_enabled requires a prng_seed (key, iv)")
            key, iv = self.prng_seed
            if len(key) != 10 or len(iv) != 10:
                raise ValueError("prng_seed parts must be 10 bytes each")


@dataclass(frozen=True)
class EcsmResult:
    x_q: FieldElement
    cycles: perf.CycleReport
    trace: tuple | None = None


def clamp_scalar(data: bytes, curve: CurveId) -> Scalar:
    """Scalar decoding with the standard clamp (cofactor bits cleared, top bit set)."""
    params = PARAMS[curve]
    if len(data) != params.field_bytes:
        raise ValueError(
            f"{curve.value} scalar must be {params.field_bytes} bytes, got {len(data)}"
        )
    buf = bytearray(data)
    if curve is CurveId.CURVE25519:
        buf[0] &= 248
        buf[31] &= 127
        buf[31] |= 64
    else:
        buf[0] &= 252
        buf[55] |= 128
    return Scalar(int.from_bytes(buf, "little"), curve)


def raw_scalar(data: bytes, curve: CurveId) -> Scalar:
    """Scalar bytes taken verbatim as a t-bit little-endian integer."""
    params = PARAMS[curve]
    if len(data) != params.field_bytes:
        raise ValueError(
            f"{curve.value} scalar must be {params.field_bytes} bytes, got {len(data)}"
        )
    mask = (1 << params.scalar_bits) - 1
    return Scalar(int.from_bytes(data, "little") & mask, curve)


def decode_scalar(data: bytes, curve: CurveId, clamp_mode: str) -> Scalar:
    if clamp_mode == RFC_CLAMPED:
        return clamp_scalar(data, curve)
    return raw_scalar(data, curve)


def decode_u(data: bytes, curve: CurveId, clamp_mode: str) -> FieldElement:
    """u-coordinate decoding; the ignored Curve25519 top bit is masked when clamping."""
    params = PARAMS[curve]
    if len(data) != params.field_bytes:
        raise ValueError(
            f"{curve.value} u-coordinate must be {params.field_bytes} bytes, got {len(data)}"
        )
    value = int.from_bytes(data, "little")
    if clamp_mode == RFC_CLAMPED and curve is CurveId.CURVE25519:
        value &= (1 << 255) - 1
    return fe(value, curve)


def cswap(swap_bit: int, u: tuple[int, int], v: tuple[int, int]):
    """Masked conditional swap of two register pairs; no data-dependent branches."""
    mask = -(swap_bit & 1) & _M448
    d0 = (u[0] ^ v[0]) & mask
    d1 = (u[1] ^ v[1]) & mask
    return (u[0] ^ d0, u[1] ^ d1), (v[0] ^ d0, v[1] ^ d1)


def _cswap_running_pairs(regs: list[int], swap_bit: int) -> None:
    """cswap of (X2,Z2) with (X3,Z3) applied in place on the register file."""
    mask = -swap_bit & _M448
    d = (regs[X2] ^ regs[X3]) & mask
    regs[X2] ^= d
    regs[X3] ^= d
    d = (regs[Z2] ^ regs[Z3]) & mask
    regs[Z2] ^= d
    regs[Z3] ^= d


def initialize_state(state: RegisterFile, x_p: FieldElement, lam: int) -> None:
    """Load the ladder registers; with lam == 1 this is the plain initialization.

    The two lambda*x_P products are issued as FFAU waves by the caller, so
    here X1/X3 hold the raw x_P and Z-side registers hold lambda.
    """
    regs = state.regs
    regs[X1] = x_p.n
    regs[Z1] = lam
    regs[X2] = lam
    regs[Z2] = 0
    regs[X3] = x_p.n
    regs[Z3] = lam
    regs[R_RND] = lam


def randomize_initial_state(state: RegisterFile, x_p: FieldElement, prng: TriviumState):
    """Draw a nonzero lambda and set X1 = lam*x_P, X2 = lam, X3 = lam*x_P,
    Z1 = lam, Z2 = 0, Z3 = lam.  Returns (lambda, executed init waves)."""
    lam = gen_lambda(prng, state.curve)
    initialize_state(state, x_p, lam.n)
    for wave in INIT_WAVES:
        execute_compiled_wave(state.regs, wave.compiled(), state.curve)
        state.cycles += 1
    return lam, INIT_WAVES


def scalar_mult(
    k: Scalar, x_p: FieldElement, cfg: EcsmConfig = EcsmConfig(), want_trace: bool = False
) -> EcsmResult:
    """Algorithm: ladder init (randomized when dpa), t masked-swap ladder
    iterations, Fermat inversion of Z2, final multiplication X2 * Z2."""
    if k.curve is not x_p.curve:
        raise ValueError("scalar and point curves differ")
    curve = k.curve
    params = PARAMS[curve]
    state = RegisterFile(curve)
    regs = state.regs
    events = [] if want_trace else None

    prng_calls = 0
    overhead_waves = 0
    if cfg.dpa_enabled:
        prng = TriviumState(*cfg.prng_seed)
        _, init_waves = randomize_initial_state(state, x_p, prng)
        prng_calls = prng.next64_calls
        overhead_waves += len(init_waves)
        if events is not None:
            events.extend((perf.EV_PRNG,) for _ in range(prng_calls))
            events.extend((perf.EV_WAVE, "init", w) for w in init_waves)
    else:
        initialize_state(state, x_p, 1)
        regs[R_RND] = 0

    ladder = build_ladder_program(curve, cfg.dpa_enabled)
    ladder_compiled = ladder.compiled()
    ladder_waves = 0
    swap = 0
    kbits = k.bits
    for i in range(params.ladder_iterations - 1, -1, -1):
        bit = (kbits >> i) & 1
        swap ^= bit
        _cswap_running_pairs(regs, swap)
        swap = bit
        for ops in ladder_compiled:
            execute_compiled_wave(regs, ops, curve)
        ladder_waves += len(ladder_compiled)
        if events is not None:
            events.extend((perf.EV_WAVE, "ladder", w) for w in ladder.waves)
    _cswap_running_pairs(regs, swap)
    state.cycles += ladder_waves

    inversion = build_inversion_program(curve)
    for ops in inversion.compiled():
        execute_compiled_wave(regs, ops, curve)
    inversion_waves = len(inversion.waves)
    state.cycles += inversion_waves
    if events is not None:
        events.extend((perf.EV_WAVE, "inversion", w) for w in inversion.waves)

    execute_compiled_wave(regs, FINAL_WAVE.compiled(), curve)
    state.cycles += 1
    overhead_waves += 2  # final multiplication + output load/store
    if events is not None:
        events.append((perf.EV_WAVE, "final", FINAL_WAVE))
        events.append((perf.EV_LOADSTORE,))

    report = perf.tally_counts(ladder_waves, inversion_waves, overhead_waves, prng_calls)
    return EcsmResult(
        x_q=FieldElement(regs[X2], curve),
        cycles=report,
        trace=tuple(events) if events is not None else None,
    )


def scalar_mult_bytes(
    scalar: bytes, u: bytes, curve: CurveId, cfg: EcsmConfig = EcsmConfig(),
) -> bytes:
    """Octet-level entry point matching the 32/56-byte little-endian wire format."""
    k = decode_scalar(scalar, curve, cfg.clamp_mode)
    x_p = decode_u(u, curve, cfg.clamp_mode)
    result = scalar_mult(k, x_p, cfg)
    return result.x_q.n.to_bytes(PARAMS[curve].field_bytes, "little")
