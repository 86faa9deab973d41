"""Command-line front end: scalarmult, vectors, selftest, trace, program-dump, bench.

Hex I/O uses little-endian octet strings (two hex digits per byte), so the
published vectors paste in directly.  Identical invocations produce
byte-identical output; the PRNG seed comes from --prng-key/--prng-iv, the
UECC_PRNG_KEY/UECC_PRNG_IV environment variables, or a fixed documented
default (00010203...).
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time

from . import perf, program, vectors
from .ecsm import (
    RAW,
    RFC_CLAMPED,
    EcsmConfig,
    decode_scalar,
    decode_u,
    scalar_mult,
    scalar_mult_bytes,
)
from .field import PARAMS, CurveId

DEFAULT_PRNG_KEY = bytes(range(10))
DEFAULT_PRNG_IV = bytes(range(10, 20))

_CURVES = {"25519": CurveId.CURVE25519, "448": CurveId.CURVE448}


class CliError(Exception):
    pass


def _parse_hex(text: str, expected_len: int, what: str) -> bytes:
    try:
        data = bytes.fromhex(text)
    except ValueError:
        raise CliError(f"{what} is not valid hex")
    if len(data) != expected_len:
        raise CliError(f"{what} must be {expected_len} bytes ({2 * expected_len} hex digits)")
    return data


def _prng_seed(args) -> tuple[bytes, bytes]:
    key_hex = args.prng_key or os.environ.get("UECC_PRNG_KEY")
    iv_hex = args.prng_iv or os.environ.get("UECC_PRNG_IV")
    key = _parse_hex(key_hex, 10, "PRNG key") if key_hex else DEFAULT_PRNG_KEY
    iv = _parse_hex(iv_hex, 10, "PRNG IV") if iv_hex else DEFAULT_PRNG_IV
    return key, iv


def _config(args) -> EcsmConfig:
    return EcsmConfig(
        dpa_enabled=args.dpa,
        clamp_mode=RAW if getattr(args, "raw_scalar", False) else RFC_CLAMPED,
        prng_seed=_prng_seed(args) if args.dpa else None,
    )


def _add_common(p: argparse.ArgumentParser, scalar_args=True):
    p.add_argument("--curve", choices=_CURVES, required=True)
    p.add_argument("--dpa", action="store_true", help="enable randomized coordinates")
    p.add_argument("--prng-key", metavar="HEX", help="10-byte Trivium key (hex)")
    p.add_argument("--prng-iv", metavar="HEX", help="10-byte Trivium IV (hex)")
    if scalar_args:
        p.add_argument("--scalar", metavar="HEX", required=True)
        p.add_argument("--u", metavar="HEX", required=True, help="input u-coordinate")
        p.add_argument("--raw-scalar", action="store_true", help="skip clamping")
    p.add_argument("--format", choices=("text", "kv"), default="text")


def cmd_scalarmult(args) -> int:
    curve = _CURVES[args.curve]
    nbytes = PARAMS[curve].field_bytes
    cfg = _config(args)
    scalar = _parse_hex(args.scalar, nbytes, "scalar")
    u = _parse_hex(args.u, nbytes, "u-coordinate")
    k = decode_scalar(scalar, curve, cfg.clamp_mode)
    x_p = decode_u(u, curve, cfg.clamp_mode)
    result = scalar_mult(k, x_p, cfg, want_trace=args.trace)
    out_hex = result.x_q.n.to_bytes(nbytes, "little").hex()
    if args.format == "kv":
        print(f"x_q={out_hex}")
        if args.cycles:
            print(result.cycles.as_kv())
    else:
        print(out_hex)
        if args.cycles:
            print(result.cycles.as_text())
    if args.trace:
        _print_trace(result.trace)
    return 0


def _print_trace(trace):
    cycle = 0
    for ev in trace:
        if ev[0] == perf.EV_WAVE:
            _, phase, wave = ev
            ops = "; ".join(program.format_op(op) for op in wave.ops)
            print(f"cycle {cycle:5d}  {phase:9s}  {ops}")
        elif ev[0] == perf.EV_PRNG:
            print(f"cycle {cycle:5d}  prng       next64")
        else:
            print(f"cycle {cycle:5d}  overhead   load/store")
        cycle += 1


def cmd_trace(args) -> int:
    args.cycles = True
    args.trace = True
    return cmd_scalarmult(args)


def cmd_program_dump(args) -> int:
    curve = _CURVES[args.curve]
    if args.phase in ("ladder", "all"):
        print(program.dump_program(program.build_ladder_program(curve, args.dpa)))
    if args.phase in ("inversion", "all"):
        print(program.dump_program(program.build_inversion_program(curve)))
    return 0


def _run_vector(curve: CurveId, scalar_hex: str, u_hex: str, expected_hex: str, label: str) -> bool:
    got = scalar_mult_bytes(bytes.fromhex(scalar_hex), bytes.fromhex(u_hex), curve).hex()
    ok = got == expected_hex
    print(f"{'PASS' if ok else 'FAIL'}  {label}")
    if not ok:
        print(f"      expected {expected_hex}")
        print(f"      got      {got}")
    return ok


def _run_iteration(curve: CurveId, count: int) -> bool:
    expected = vectors.ITERATED[curve][count]
    k = u = vectors.BASE_U[curve]
    for _ in range(count):
        k, u = scalar_mult_bytes(k, u, curve), k
    ok = k.hex() == expected
    print(f"{'PASS' if ok else 'FAIL'}  {curve.value} base-point iteration x{count}")
    if not ok:
        print(f"      expected {expected}")
        print(f"      got      {k.hex()}")
    return ok


def cmd_vectors(args) -> int:
    curves = [_CURVES[args.curve]] if args.curve else list(_CURVES.values())
    ok = True
    if args.file:
        curve = curves[0] if args.curve else None
        if curve is None:
            raise CliError("--file requires --curve")
        with open(args.file) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                if len(parts) != 3:
                    raise CliError(f"{args.file}:{lineno}: expected 'scalar_hex u_hex expected_hex'")
                ok &= _run_vector(curve, *parts, label=f"{args.file}:{lineno}")
        return 0 if ok else 1
    for curve in curves:
        if args.iterations is None:
            for i, (scalar, u, want) in enumerate(vectors.SINGLE_SHOT[curve], 1):
                ok &= _run_vector(curve, scalar, u, want, f"{curve.value} single-shot vector {i}")
        counts = [args.iterations] if args.iterations else [1, 1000]
        for count in counts:
            if count not in vectors.ITERATED[curve]:
                raise CliError(f"no published value for {count} iterations (known: 1, 1000, 1000000)")
            ok &= _run_iteration(curve, count)
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    from . import selftest

    return selftest.run(quick=args.quick)


def cmd_bench(args) -> int:
    curves = [_CURVES[args.curve]] if args.curve else list(_CURVES.values())
    rng = random.Random(args.seed)
    for curve in curves:
        nbytes = PARAMS[curve].field_bytes
        samples = []
        for _ in range(args.count):
            scalar = rng.randbytes(nbytes)
            u = rng.randbytes(nbytes)
            t0 = time.perf_counter()
            scalar_mult_bytes(scalar, u, curve)
            samples.append(time.perf_counter() - t0)
        mean = sum(samples) / len(samples)
        model = perf.DEFAULT_MODEL.expected(curve, dpa=False)
        print(
            f"{curve.value}: {args.count} ECSM, mean {mean * 1e3:.2f} ms "
            f"({1 / mean:.1f}/s); modeled {model.total} cycles = {model.latency_us:.2f} us @ 100 MHz"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uecc", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scalarmult", help="compute x_Q = k*P")
    _add_common(p)
    p.add_argument("--cycles", action="store_true", help="print the cycle report")
    p.add_argument("--trace", action="store_true", help="print every executed wave")
    p.set_defaults(fn=cmd_scalarmult)

    p = sub.add_parser("trace", help="scalarmult with a full instruction trace")
    _add_common(p)
    p.set_defaults(fn=cmd_trace)

    p = sub.add_parser("vectors", help="run the published vector suite")
    p.add_argument("--curve", choices=_CURVES)
    p.add_argument("--iterations", type=int, metavar="N",
                   help="run only the N-iteration test (N in {1, 1000, 1000000})")
    p.add_argument("--file", metavar="PATH",
                   help="vector file: one 'scalar_hex u_hex expected_hex' per line")
    p.set_defaults(fn=cmd_vectors)

    p = sub.add_parser("selftest", help="oracle-equivalence self tests")
    p.add_argument("--quick", action="store_true", help="smaller sample counts")
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("program-dump", help="dump the LUT instruction programs")
    p.add_argument("--curve", choices=_CURVES, required=True)
    p.add_argument("--dpa", action="store_true")
    p.add_argument("--phase", choices=("ladder", "inversion", "all"), default="all")
    p.set_defaults(fn=cmd_program_dump)

    p = sub.add_parser("bench", help="wall-clock throughput")
    p.add_argument("--curve", choices=_CURVES)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_bench)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
