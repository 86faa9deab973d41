"""Wide unsigned multiplication: hardware-style 2-level Karatsuba plus a schoolbook oracle.

The 256x256 multiplier mirrors the datapath hierarchy: a 256-bit unit built
from three 128-bit units, each built from three native 64x64 products, so one
256-bit product costs exactly 9 base multiplications.  Carry-save compressors
and adder trees of the circuit are modelled as plain additions; only the
output value is contractual.
"""

from __future__ import annotations

from dataclasses import dataclass

LIMB_BITS = 64
LIMB_MASK = (1 << 64) - 1

# Only the widths the two curves need.
ALLOWED_WIDTHS = (64, 128, 224, 256, 448, 512, 896)

_M64 = (1 << 64) - 1
_M128 = (1 << 128) - 1


class MulCounters:
    """Running totals of multiplier-unit invocations (see `counters`)."""

    __slots__ = ("mul64", "mul128", "mul256")

    def __init__(self):
        self.reset()

    def reset(self):
        self.mul64 = 0
        self.mul128 = 0
        self.mul256 = 0

    def snapshot(self):
        return (self.mul64, self.mul128, self.mul256)


counters = MulCounters()


@dataclass(frozen=True)
class WideInt:
    """Fixed-width unsigned integer, little-endian 64-bit limbs."""

    limbs: tuple[int, ...]
    bit_width: int

    def __post_init__(self):
        if self.bit_width not in ALLOWED_WIDTHS:
            raise ValueError(f"unsupported bit width {self.bit_width}")
        nlimbs = -(-self.bit_width // LIMB_BITS)
        if len(self.limbs) != nlimbs:
            raise ValueError(
                f"{self.bit_width}-bit value needs {nlimbs} limbs, got {len(self.limbs)}"
            )
        for limb in self.limbs:
            if not 0 <= limb <= LIMB_MASK:
                raise ValueError("limb out of 64-bit range")
        if self.to_int() >> self.bit_width:
            raise ValueError(f"value exceeds {self.bit_width} bits")

    @classmethod
    def from_int(cls, value: int, bit_width: int) -> "WideInt":
        if value < 0:
            raise ValueError("negative value")
        if value >> bit_width:
            raise ValueError(f"value exceeds {bit_width} bits")
        nlimbs = -(-bit_width // LIMB_BITS)
        limbs = tuple((value >> (LIMB_BITS * i)) & LIMB_MASK for i in range(nlimbs))
        return cls(limbs, bit_width)

    def to_int(self) -> int:
        value = 0
        for i, limb in enumerate(self.limbs):
            value |= limb << (LIMB_BITS * i)
        return value


def kar128_int(x: int, y: int) -> int:
    """One Karatsuba level: 128x128 via three 64x64 base products."""
    counters.mul64 += 3
    x1 = x >> 64
    x0 = x & _M64
    y1 = y >> 64
    y0 = y & _M64
    p00 = x0 * y0
    p11 = x1 * y1
    sx = x0 + x1
    sy = y0 + y1
    # 65-bit middle operands: peel the carry bit, fold it back as shifted adds
    cx = sx >> 64
    cy = sy >> 64
    sx &= _M64
    sy &= _M64
    mid = sx * sy
    if cx:
        mid += sy << 64
    if cy:
        mid += sx << 64
    if cx and cy:
        mid += 1 << 128
    return (p11 << 128) + ((mid - p00 - p11) << 64) + p00


def kar256_int(x: int, y: int) -> int:
    """Second Karatsuba level: 256x256 via three 128-bit units (9 base products)."""
    counters.mul128 += 3
    counters.mul256 += 1
    x1 = x >> 128
    x0 = x & _M128
    y1 = y >> 128
    y0 = y & _M128
    z0 = kar128_int(x0, y0)
    z2 = kar128_int(x1, y1)
    sx = x0 + x1
    sy = y0 + y1
    cx = sx >> 128
    cy = sy >> 128
    sx &= _M128
    sy &= _M128
    mid = kar128_int(sx, sy)
    if cx:
        mid += sy << 128
    if cy:
        mid += sx << 128
    if cx and cy:
        mid += 1 << 256
    return (z2 << 256) + ((mid - z0 - z2) << 128) + z0


def mul_karatsuba_256(x: WideInt, y: WideInt) -> WideInt:
    """Exact 256x256 -> 512 product through the 2-level Karatsuba datapath."""
    if x.bit_width != 256 or y.bit_width != 256:
        raise ValueError("mul_karatsuba_256 requires 256-bit operands")
    return WideInt.from_int(kar256_int(x.to_int(), y.to_int()), 512)


def mul_schoolbook(x: WideInt, y: WideInt) -> WideInt:
    """Independent limb-by-limb oracle; shares no code with the Karatsuba path."""
    xl = x.limbs
    yl = y.limbs
    out = [0] * (len(xl) + len(yl))
    for i, xi in enumerate(xl):
        if xi == 0:
            continue
        carry = 0
        for j, yj in enumerate(yl):
            t = out[i + j] + xi * yj + carry
            out[i + j] = t & LIMB_MASK
            carry = t >> LIMB_BITS
        k = i + len(yl)
        while carry:
            t = out[k] + carry
            out[k] = t & LIMB_MASK
            carry = t >> LIMB_BITS
            k += 1
    width = x.bit_width + y.bit_width
    nlimbs = -(-width // LIMB_BITS)
    return WideInt(tuple(out[:nlimbs]), width)
