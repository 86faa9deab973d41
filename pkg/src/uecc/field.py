"""Arithmetic in F_(2^255-19) and F_(2^448-2^224-1).

Multiplication always funnels through the 256-bit Karatsuba unit: one product
for Curve25519, four 224x224 partial products for Curve448 via the golden
ratio split of its Solinas prime (p = phi^2 - phi - 1, phi = 2^224).
Reduction is a fixed shift-add pass plus two masked conditional subtractions,
so the sequence of operations never depends on operand values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bigmul import WideInt, kar256_int, mul_schoolbook


class CurveId(enum.Enum):
    CURVE25519 = "curve25519"
    CURVE448 = "curve448"


@dataclass(frozen=True)
class CurveParams:
    curve: CurveId
    p: int
    a24: int
    scalar_bits: int
    ladder_iterations: int
    inversion_mult_count: int
    field_bytes: int


P25519 = 2**255 - 19
P448 = 2**448 - 2**224 - 1
PHI = 2**224  # golden ratio of the Solinas prime: P448 = PHI**2 - PHI - 1

PARAMS = {
    CurveId.CURVE25519: CurveParams(
        curve=CurveId.CURVE25519,
        p=P25519,
        a24=121665,
        scalar_bits=255,
        ladder_iterations=255,
        inversion_mult_count=265,
        field_bytes=32,
    ),
    CurveId.CURVE448: CurveParams(
        curve=CurveId.CURVE448,
        p=P448,
        a24=39081,
        scalar_bits=448,
        ladder_iterations=448,
        inversion_mult_count=462,
        field_bytes=56,
    ),
}

_M224 = (1 << 224) - 1
_M255 = (1 << 255) - 1
_M448 = (1 << 448) - 1


class FieldElement:
    """Canonical element of the selected prime field."""

    __slots__ = ("n", "curve")

    def __init__(self, n: int, curve: CurveId):
        p = PARAMS[curve].p
        if not 0 <= n < p:
            raise ValueError("value not canonical")
        self.n = n
        self.curve = curve

    @property
    def value(self) -> WideInt:
        return WideInt.from_int(self.n, 448)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.n == other.n and self.curve == other.curve

    def __hash__(self):
        return hash((self.n, self.curve))

    def __repr__(self):
        return f"FieldElement(0x{self.n:x}, {self.curve.value})"


def fe(n: int, curve: CurveId) -> FieldElement:
    """Element from any integer, reduced into canonical range."""
    return FieldElement(n % PARAMS[curve].p, curve)


def _check_same_curve(a: FieldElement, b: FieldElement):
    if a.curve is not b.curve:
        raise ValueError(f"curve mismatch: {a.curve.value} vs {b.curve.value}")


# ---------------------------------------------------------------------------
# int-level kernels (engine hot path)

def add_int(a: int, b: int, p: int) -> int:
    s = a + b
    if s >= p:
        s -= p
    return s


def sub_int(a: int, b: int, p: int) -> int:
    s = a - b
    if s < 0:
        s += p
    return s


def reduce25519_int(x: int) -> int:
    # 2^255 = 19 (mod p); two folds bring x under p + 1482, masked subtractions finish
    x = (x & _M255) + 19 * (x >> 255)
    x = (x & _M255) + 19 * (x >> 255)
    x -= P25519 & -(x >= P25519)
    x -= P25519 & -(x >= P25519)
    return x


def reduce448_int(x: int) -> int:
    # 2^448 = 2^224 + 1 (mod p); three folds, then masked subtractions
    h = x >> 448
    x = (x & _M448) + (h << 224) + h
    h = x >> 448
    x = (x & _M448) + (h << 224) + h
    h = x >> 448
    x = (x & _M448) + (h << 224) + h
    x -= P448 & -(x >= P448)
    x -= P448 & -(x >= P448)
    return x


def mul25519_int(a: int, b: int) -> int:
    return reduce25519_int(kar256_int(a, b))


def mul448_int(a: int, b: int) -> int:
    # phi^2 = phi + 1 (mod p), so with A = a1*phi + a0, B = b1*phi + b0:
    # A*B = (a1*b1 + a0*b0) + (a1*b0 + a0*b1 + a1*b1)*phi, four 256-bit partials
    a1 = a >> 224
    a0 = a & _M224
    b1 = b >> 224
    b0 = b & _M224
    p11 = kar256_int(a1, b1)
    p00 = kar256_int(a0, b0)
    p10 = kar256_int(a1, b0)
    p01 = kar256_int(a0, b1)
    return reduce448_int(p11 + p00 + ((p10 + p01 + p11) << 224))


def mul_int(a: int, b: int, curve: CurveId) -> int:
    if curve is CurveId.CURVE25519:
        return mul25519_int(a, b)
    return mul448_int(a, b)


def mul_small_int(a: int, c: int, curve: CurveId) -> int:
    # short-constant product (the a24 path); a single fold suffices for c < 2^32
    if curve is CurveId.CURVE25519:
        x = a * c
        x = (x & _M255) + 19 * (x >> 255)
        x -= P25519 & -(x >= P25519)
        x -= P25519 & -(x >= P25519)
        return x
    x = a * c
    h = x >> 448
    x = (x & _M448) + (h << 224) + h
    x -= P448 & -(x >= P448)
    x -= P448 & -(x >= P448)
    return x


# ---------------------------------------------------------------------------
# Fermat inversion chains
#
# The chains compute a^(p-2) as a fixed sequence of squarings and
# multiplications over five working slots; total step counts are exactly
# 265 (Curve25519: 254 squarings + 11 multiplications) and 462 (Curve448:
# 447 squarings + 15 multiplications).  Steps are ("sq", dst, src) or
# ("mul", dst, src_a, src_b); slot "z" holds the input and, at the end,
# the result.

def _chain25519():
    steps = []
    sq = lambda d, s: steps.append(("sq", d, s))
    mul = lambda d, a, b: steps.append(("mul", d, a, b))
    sq("t0", "z")                    # 2
    sq("t1", "t0")                   # 4
    sq("t1", "t1")                   # 8
    mul("t1", "z", "t1")             # 9
    mul("t0", "t0", "t1")            # 11
    sq("t2", "t0")                   # 22
    mul("t1", "t1", "t2")            # 2^5 - 1
    sq("t2", "t1")
    for _ in range(4):
        sq("t2", "t2")
    mul("t1", "t2", "t1")            # 2^10 - 1
    sq("t2", "t1")
    for _ in range(9):
        sq("t2", "t2")
    mul("t2", "t2", "t1")            # 2^20 - 1
    sq("t3", "t2")
    for _ in range(19):
        sq("t3", "t3")
    mul("t2", "t3", "t2")            # 2^40 - 1
    for _ in range(10):
        sq("t2", "t2")
    mul("t1", "t2", "t1")            # 2^50 - 1
    sq("t2", "t1")
    for _ in range(49):
        sq("t2", "t2")
    mul("t2", "t2", "t1")            # 2^100 - 1
    sq("t3", "t2")
    for _ in range(99):
        sq("t3", "t3")
    mul("t2", "t3", "t2")            # 2^200 - 1
    for _ in range(50):
        sq("t2", "t2")
    mul("t1", "t2", "t1")            # 2^250 - 1
    for _ in range(5):
        sq("t1", "t1")
    mul("z", "t1", "t0")             # 2^255 - 21 = p - 2
    return tuple(steps)


def _chain448():
    steps = []
    sq = lambda d, s: steps.append(("sq", d, s))
    mul = lambda d, a, b: steps.append(("mul", d, a, b))

    def tower(dst, src, doublings, mul_by):
        # dst = src^(2^doublings) * mul_by
        sq(dst, src)
        for _ in range(doublings - 1):
            sq(dst, dst)
        mul(dst, dst, mul_by)

    tower("t0", "z", 1, "z")         # 2^2 - 1
    tower("t0", "t0", 1, "z")        # 2^3 - 1
    tower("t1", "t0", 3, "t0")       # 2^6 - 1
    tower("t2", "t1", 6, "t1")       # 2^12 - 1
    tower("t2", "t2", 1, "z")        # 2^13 - 1
    tower("t1", "t2", 13, "t2")      # 2^26 - 1
    tower("t1", "t1", 1, "z")        # 2^27 - 1
    tower("t2", "t1", 27, "t1")      # 2^54 - 1
    tower("t2", "t2", 1, "z")        # 2^55 - 1
    tower("t1", "t2", 55, "t2")      # 2^110 - 1
    tower("t1", "t1", 1, "z")        # 2^111 - 1
    tower("t2", "t1", 111, "t1")     # 2^222 - 1 (kept for the tail)
    tower("t1", "t2", 1, "z")        # 2^223 - 1
    # tail: ((2^223-1)*2 shifted 222, merge 2^222-1, shift 2, merge z)
    sq("t1", "t1")                   # 2^224 - 2
    for _ in range(222):
        sq("t1", "t1")               # 2^446 - 2^223
    mul("t1", "t1", "t2")            # 2^446 - 2^222 - 1
    sq("t1", "t1")
    sq("t1", "t1")                   # 2^448 - 2^224 - 4
    mul("z", "t1", "z")              # 2^448 - 2^224 - 3 = p - 2
    return tuple(steps)


INVERSION_CHAINS = {
    CurveId.CURVE25519: _chain25519(),
    CurveId.CURVE448: _chain448(),
}

assert len(INVERSION_CHAINS[CurveId.CURVE25519]) == 265
assert len(INVERSION_CHAINS[CurveId.CURVE448]) == 462


class InvCounter:
    """Multiplications executed by inversion chains since the last reset."""

    __slots__ = ("mults",)

    def __init__(self):
        self.mults = 0

    def reset(self):
        self.mults = 0


inv_counter = InvCounter()


def inv_int(a: int, curve: CurveId) -> int:
    slots = {"z": a, "t0": 0, "t1": 0, "t2": 0, "t3": 0}
    if curve is CurveId.CURVE25519:
        mul = mul25519_int
    else:
        mul = mul448_int
    for step in INVERSION_CHAINS[curve]:
        if step[0] == "sq":
            _, dst, src = step
            slots[dst] = mul(slots[src], slots[src])
        else:
            _, dst, sa, sb = step
            slots[dst] = mul(slots[sa], slots[sb])
        inv_counter.mults += 1
    return slots["z"]


# ---------------------------------------------------------------------------
# public surface

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_curve(a, b)
    return FieldElement(add_int(a.n, b.n, PARAMS[a.curve].p), a.curve)


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_curve(a, b)
    return FieldElement(sub_int(a.n, b.n, PARAMS[a.curve].p), a.curve)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_curve(a, b)
    return FieldElement(mul_int(a.n, b.n, a.curve), a.curve)


def mul_a24(a: FieldElement) -> FieldElement:
    return FieldElement(mul_small_int(a.n, PARAMS[a.curve].a24, a.curve), a.curve)


def reduce_p25519(product: WideInt) -> FieldElement:
    if product.bit_width != 512:
        raise ValueError("reduce_p25519 expects a 512-bit product")
    return FieldElement(reduce25519_int(product.to_int()), CurveId.CURVE25519)


def reduce_p448(product: WideInt) -> FieldElement:
    if product.bit_width != 896:
        raise ValueError("reduce_p448 expects an 896-bit product")
    return FieldElement(reduce448_int(product.to_int()), CurveId.CURVE448)


def inv(a: FieldElement) -> FieldElement:
    if a.n == 0:
        raise ZeroDivisionError("0 has no inverse")
    return FieldElement(inv_int(a.n, a.curve), a.curve)


def mul_wide(a: FieldElement, b: FieldElement) -> FieldElement:
    """Same-curve product via full-width schoolbook + reduction (check path)."""
    _check_same_curve(a, b)
    if a.curve is CurveId.CURVE25519:
        wa = WideInt.from_int(a.n, 256)
        wb = WideInt.from_int(b.n, 256)
        return reduce_p25519(mul_schoolbook(wa, wb))
    wa = WideInt.from_int(a.n, 448)
    wb = WideInt.from_int(b.n, 448)
    return reduce_p448(mul_schoolbook(wa, wb))


def from_bytes(data: bytes, curve: CurveId) -> FieldElement:
    params = PARAMS[curve]
    if len(data) != params.field_bytes:
        raise ValueError(
            f"{curve.value} encoding must be {params.field_bytes} bytes, got {len(data)}"
        )
    return fe(int.from_bytes(data, "little"), curve)


def to_bytes(a: FieldElement) -> bytes:
    return a.n.to_bytes(PARAMS[a.curve].field_bytes, "little")
