"""JSON command-line front end.

Every command prints one envelope on stdout, either
{"ok": true, "result": ...} or {"ok": false, "error": {"kind", "message"}},
and exits with 0 (ok), 1 (domain error), 2 (usage or parse error),
3 (indeterminate cohomology) or 4 (enumeration budget exceeded).

Integers of magnitude >= 2**53 are written as decimal strings and accepted
in either form. Permutations are written 1-based.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import cohomology, equivalence, fan, lattice, polytope, weights
from .errors import (
    EnumerationBudgetExceeded,
    InternalConsistencyError,
    InvalidWeights,
    NegativeLevel,
    SingularMatrixError,
    WpsError,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INDETERMINATE, EXIT_BUDGET = 0, 1, 2, 3, 4
DEFAULT_MAX_CELLS = 10**8
BIG = 2**53
DOC_KEYS = ("weights", "generators", "vertices", "matrix")


class UsageError(Exception):
    pass


class _Indeterminate(Exception):
    pass


# ------------------------------------------------------------------ encoding


def encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if abs(value) < BIG else str(value)
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if isinstance(value, (tuple, list, weights.WeightsVector, fan.Fan, polytope.SimplexPolytope)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def _parse_int(x: Any) -> int:
    if isinstance(x, bool):
        raise UsageError("booleans are not integers")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and re.fullmatch(r"\s*-?\d+\s*", x):
        return int(x)
    raise UsageError(f"expected an integer, got {x!r}")


def _int_vector(x: Any) -> list[int]:
    if not isinstance(x, list):
        raise UsageError("expected an array of integers")
    return [_parse_int(v) for v in x]


def _int_matrix(x: Any) -> list[list[int]]:
    if not isinstance(x, list) or not x:
        raise UsageError("expected a non-empty array of integer arrays")
    return [_int_vector(r) for r in x]


def parse_document(text: str) -> tuple[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("input must be a JSON object")
    if doc.get("ok") is True and isinstance(doc.get("result"), dict):
        # output of another command, so commands can be piped
        doc = doc["result"]
    keys = [k for k in DOC_KEYS if k in doc]
    if len(keys) != 1 or len(doc) != 1:
        raise UsageError(f"input must have exactly one of {', '.join(DOC_KEYS)}")
    key = keys[0]
    value = _int_vector(doc[key]) if key == "weights" else _int_matrix(doc[key])
    return key, value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _documents(paths: Sequence[str], count: int) -> list[tuple[str, Any]]:
    if paths:
        if len(paths) != count:
            raise UsageError(f"expected {count} input file(s), got {len(paths)}")
        return [parse_document(_read(p)) for p in paths]
    text = sys.stdin.read()
    if count == 1:
        return [parse_document(text)]
    try:
        items = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None
    if not isinstance(items, list) or len(items) != count:
        raise UsageError(f"standard input must hold an array of {count} documents")
    return [parse_document(json.dumps(it)) for it in items]


def _expect(doc: tuple[str, Any], *keys: str) -> Any:
    key, value = doc
    if key not in keys:
        raise UsageError(f"expected a {' or '.join(repr(k) for k in keys)} document, got {key!r}")
    return value


def _csv_ints(text: str) -> list[int]:
    parts = [p for p in re.split(r"[\s,\[\]]+", text) if p]
    if not parts:
        raise UsageError("empty integer list")
    return [_parse_int(p) for p in parts]


def _point(text: str) -> list[Fraction]:
    parts = [p for p in re.split(r"[\s,\[\]]+", text) if p]
    try:
        return [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid point {text!r}") from None


def _weights_arg(args) -> list[int]:
    if args.weights is not None:
        if args.inputs:
            raise UsageError("give weights either with --weights or as input, not both")
        return _csv_ints(args.weights)
    return _expect(_documents(args.inputs, 1)[0], "weights")


def max_cells_from_env() -> int:
    raw = os.environ.get("WPSKIT_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"WPSKIT_MAX_CELLS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"WPSKIT_MAX_CELLS must be a positive integer, got {raw!r}")
    return value


# ------------------------------------------------------------------ commands


def cmd_reduce_weights(args):
    return {"weights": weights.reduced_weights(_weights_arg(args))}


def cmd_gorenstein(args):
    Q = _weights_arg(args)
    return {
        "q_sum": weights.q_sum(Q),
        "q_delta": weights.q_delta(Q),
        "index": weights.gorenstein_index(Q),
        "gorenstein": weights.is_gorenstein(Q),
    }


def cmd_fan(args):
    return {"generators": fan.fan_from_weights(_weights_arg(args))}


def cmd_canonical_fan(args):
    return {"generators": fan.canonical_fan(_weights_arg(args))}


def _generators(args) -> list[list[int]]:
    return _expect(_documents(args.inputs, 1)[0], "generators")


def cmd_reduce_fan(args):
    return {"generators": fan.reduced_fan(_generators(args))}


def cmd_recognize_fan(args):
    return {"weights": fan.fan_weights(_generators(args))}


def cmd_is_fan_of(args):
    if args.weights is None:
        raise UsageError("is-fan-of needs --weights")
    return {"is_fan_of": fan.is_fan_of(_generators(args), _csv_ints(args.weights))}


def cmd_polytope(args):
    sources = [args.weights is not None, args.fan_file is not None, bool(args.inputs)]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --weights, --fan-file or an input document")
    if args.fan_file is not None:
        F = _expect(parse_document(_read(args.fan_file)), "generators")
        return {"vertices": polytope.polytope_from_fan(F, args.m)}
    if args.weights is not None:
        return {"vertices": polytope.polytope_from_weights(_csv_ints(args.weights), args.m)}
    key, value = _documents(args.inputs, 1)[0]
    if key == "weights":
        return {"vertices": polytope.polytope_from_weights(value, args.m)}
    if key == "generators":
        return {"vertices": polytope.polytope_from_fan(value, args.m)}
    raise UsageError("polytope needs a 'weights' or 'generators' document")


def cmd_recognize_polytope(args):
    key, value = _documents(args.inputs, 1)[0]
    if key == "matrix":
        wpp = polytope.wpp_decompose(value)
        return {
            "pseudo_weights": wpp.pseudo_weights,
            "what": wpp.what,
            "pseudo_fan": [
                [x.numerator if x.denominator == 1 else x for x in v] for v in wpp.pseudo_fan
            ],
            "polarization": wpp.polarization,
            "admissible": wpp.admissible,
        }
    P = _expect((key, value), "vertices")
    return {
        "weights": polytope.polytope_weights(P),
        "generators": polytope.polytope_fan(P),
        "polarization": polytope.polytope_polarization(P),
    }


def cmd_equiv_fans(args):
    f1, f2 = (_expect(d, "generators") for d in _documents(args.inputs, 2))
    return {"equivalent": equivalence.are_equivalent_fans(f1, f2)}


def cmd_equiv_polytopes(args):
    p1, p2 = (_expect(d, "vertices") for d in _documents(args.inputs, 2))
    return {"equivalent": equivalence.are_equivalent_polytopes(p1, p2)}


def cmd_switch_fans(args):
    f1, f2 = (_expect(d, "generators") for d in _documents(args.inputs, 2))
    data = equivalence.fan_switch_matrices(f1, f2)
    return {
        "alpha": data.alpha,
        "beta": data.beta,
        "gamma": data.gamma,
        "delta": data.delta,
        "sigma": [s + 1 for s in data.sigma],
    }


def cmd_switch_polytopes(args):
    p1, p2 = (_expect(d, "vertices") for d in _documents(args.inputs, 2))
    data = equivalence.polytope_switch_data(p1, p2)
    return {"theta": data.theta, "delta": data.delta, "nu": data.nu}


def cmd_points(args):
    P = _expect(_documents(args.inputs, 1)[0], "vertices")
    enumerate_ = lattice.enumerate_interior_points if args.interior else lattice.enumerate_lattice_points
    count, points = enumerate_(P, max_cells=max_cells_from_env())
    return {"count": count, "points": points}


def cmd_face_dim(args):
    P = _expect(_documents(args.inputs, 1)[0], "vertices")
    pos = lattice.face_dimension(_point(args.point), P)
    if isinstance(pos, lattice.Outside):
        return {"outside": True, "dimension": None}
    return {"outside": False, "dimension": pos.k}


def cmd_cohomology_o(args):
    answer = cohomology.h_line_bundle(args.q, args.m, _weights_arg(args), max_cells=max_cells_from_env())
    if isinstance(answer, cohomology.Indeterminate):
        raise _Indeterminate(answer.reason.value)
    return {"h": answer.h}


def cmd_cohomology_omega(args):
    h = cohomology.h_omega(args.q, args.p, args.m, _weights_arg(args), max_cells=max_cells_from_env())
    return {"h": h}


# ------------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wpskit", description="Exact tools for weighted projective spaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help_: str, weights_flag: bool = False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("inputs", nargs="*", help="JSON input files (default: standard input)")
        if weights_flag:
            p.add_argument("--weights", help="comma-separated weights, instead of an input document")
        p.set_defaults(func=func)
        return p

    add("reduce-weights", cmd_reduce_weights, "reduced weights vector", True)
    add("gorenstein", cmd_gorenstein, "weight sum, lcm and Gorenstein index", True)
    add("fan", cmd_fan, "fan of P(Q)", True)
    add("canonical-fan", cmd_canonical_fan, "canonical fan of P(Q)", True)
    add("reduce-fan", cmd_reduce_fan, "make generators primitive")
    add("recognize-fan", cmd_recognize_fan, "weights of a wps fan")
    add("is-fan-of", cmd_is_fan_of, "is the fan a fan of P(Q)?", True)
    p = add("polytope", cmd_polytope, "polytope of (P(Q), O(m))", True)
    p.add_argument("--fan-file", help="JSON file with a generators document")
    p.add_argument("--m", type=int, default=1, help="polarization (default 1)")
    add("recognize-polytope", cmd_recognize_polytope, "weights, fan and polarization of a polytope")
    add("equiv-fans", cmd_equiv_fans, "do two fans define the same wps?")
    add("equiv-polytopes", cmd_equiv_polytopes, "do two polytopes define the same polarized wps?")
    add("switch-fans", cmd_switch_fans, "matrices alpha, beta, gamma, delta between two fans")
    add("switch-polytopes", cmd_switch_polytopes, "theta, delta, nu between two polytopes")
    p = add("points", cmd_points, "lattice points of a simplex")
    p.add_argument("--interior", action="store_true", help="only strictly interior points")
    p = add("face-dim", cmd_face_dim, "dimension of the smallest face containing a point")
    p.add_argument("--point", required=True, help="comma-separated rational coordinates, e.g. 1,12/5")
    p = add("cohomology-o", cmd_cohomology_o, "dim H^q(P(Q), O(m))", True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("cohomology-omega", cmd_cohomology_omega, "dim H^q(P(Q), Omega^p(m))", True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    return parser


def _envelope_error(kind: str, message: str) -> dict:
    return {"ok": False, "error": {"kind": kind, "message": message}}


def run(argv: Sequence[str] | None = None) -> tuple[int, dict]:
    """Execute a command and return (exit code, envelope) without printing."""
    try:
        args = build_parser().parse_args(argv)
        result = encode(args.func(args))
        return EXIT_OK, {"ok": True, "result": result}
    except UsageError as exc:
        return EXIT_USAGE, _envelope_error("usage", str(exc))
    except (WpsError, SingularMatrixError) as exc:
        return EXIT_DOMAIN, _envelope_error("domain", str(exc))
    except _Indeterminate as exc:
        return EXIT_INDETERMINATE, _envelope_error("indeterminate", str(exc))
    except EnumerationBudgetExceeded as exc:
        return EXIT_BUDGET, _envelope_error("budget", str(exc))
    except InternalConsistencyError as exc:
        return EXIT_DOMAIN, _envelope_error("internal", str(exc))
    except (NegativeLevel, InvalidWeights, ValueError, TypeError, IndexError) as exc:
        return EXIT_USAGE, _envelope_error("usage", str(exc))


def main(argv: Sequence[str] | None = None) -> int:
    code, envelope = run(argv)
    sys.stdout.write(json.dumps(envelope, separators=(",", ":")) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
