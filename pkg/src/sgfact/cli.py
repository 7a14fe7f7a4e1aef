"""Command-line front end.

One subcommand per invariant; a semigroup comes from inline generators
(``--gens``), a generators file, or an equations file describing a full
semigroup.  Output is deterministic: plain text or compact JSON with sorted
keys, vectors as integer arrays, every set sorted.

Exit codes: 0 success, 2 parse/validation error, 3 semantic error (element
outside the semigroup, non-full input where fullness is required), 4 step
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catenary as _catenary
from . import delta as _delta
from . import presentation as _presentation
from . import tame as _tame
from .core import (
    AffineSemigroup,
    Vector,
    affine_semigroup,
    contains,
    delta_of_element,
    factorizations,
    length_set,
)
from .errors import (
    NotFullError,
    NotInSemigroupError,
    ResourceLimitError,
    SgfactError,
    UnsupportedDimensionError,
)
from .hilbert import Relation, diophantine_system, graver_basis, hilbert_basis, minimal_solutions

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SEMANTIC = 3
EXIT_BUDGET = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep control of the exit code and stream
        raise _UsageError(message)


def _parse_vector(text: str) -> Vector:
    text = text.strip()
    if text.startswith("("):
        if not text.endswith(")"):
            raise _UsageError(f"malformed vector {text!r}")
        body = text[1:-1]
        try:
            return tuple(int(c) for c in body.replace(",", " ").split())
        except ValueError:
            raise _UsageError(f"malformed vector {text!r}") from None
    try:
        return (int(text),)
    except ValueError:
        raise _UsageError(f"malformed vector {text!r}") from None


def _parse_generators(text: str) -> list[Vector]:
    text = text.strip()
    if not text:
        raise _UsageError("empty generator list")
    if "(" in text:
        parts = [p for p in text.split(";") if p.strip()]
        return [_parse_vector(p) for p in parts]
    try:
        return [(int(tok),) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise _UsageError(f"malformed generator list {text!r}") from None


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise _UsageError(f"{path}: expected a JSON object")
    return data


def _semigroup_from_args(args, *, max_steps=None) -> tuple[AffineSemigroup, "_tame.FullSemigroupWitness | None"]:
    sources = [s for s in (args.gens, args.gens_file, args.equations) if s]
    if len(sources) != 1:
        raise _UsageError("exactly one of --gens, --gens-file, --equations is required")
    if args.gens:
        text = sys.stdin.read() if args.gens == "-" else args.gens
        return affine_semigroup(_parse_generators(text)), None
    if args.gens_file:
        try:
            with open(args.gens_file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {args.gens_file}: {exc}") from None
        return affine_semigroup(_parse_generators(text)), None
    data = _load_json(args.equations)
    if "matrix" not in data or "moduli" not in data:
        raise _UsageError(f"{args.equations}: need keys 'matrix' and 'moduli'")
    witness = _tame.full_semigroup(data["matrix"], data["moduli"], max_steps=max_steps)
    return witness.semigroup, witness


def _scalarize(S: AffineSemigroup, vec: Vector):
    return vec[0] if S.dim == 1 else list(vec)


def _format_vector(vec: Vector, scalar: bool) -> str:
    if scalar:
        return str(vec[0])
    return "(" + ",".join(str(c) for c in vec) + ")"


def _emit(args, payload: dict, plain_lines: list[str]) -> str:
    if args.format == "json":
        return json.dumps(payload, separators=(",", ":"), sort_keys=True)
    return "\n".join(plain_lines)


def _add_common(parser: _Parser) -> None:
    parser.add_argument("--gens", help="inline generators: '3 4 5' or '(1,0);(1,1)'; '-' reads stdin")
    parser.add_argument("--gens-file", help="file containing a generator list")
    parser.add_argument("--equations", help="JSON file {'matrix': [[..]], 'moduli': [..]} (full semigroup)")
    parser.add_argument("--format", choices=("plain", "json"), default="plain")
    parser.add_argument("--max-steps", type=int, default=None, help="abort completion loops after N steps")


def _build_parser() -> _Parser:
    parser = _Parser(prog="sgfact", description="factorization invariants of affine semigroups")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_common(p)
        return p

    p = command("factorizations", help="all factorizations of an element")
    p.add_argument("--element", required=True)
    p = command("length-set", help="factorization lengths of an element")
    p.add_argument("--element", required=True)
    p = command("delta-element", help="delta set of one element")
    p.add_argument("--element", required=True)
    p = command("delta-set", help="delta set of the whole semigroup")
    p.add_argument("--method", choices=("hilbert", "grobner"), default="grobner")
    command("min-presentation", help="a minimal presentation")
    command("betti", help="Betti elements")
    command("graver", help="Graver basis")
    p = command("catenary", help="catenary degree of an element")
    p.add_argument("--element", required=True)
    p.add_argument("--method", choices=("naive", "dynamic"), default="dynamic")
    p = command("catenary-range", help="catenary degrees of all elements up to a bound")
    p.add_argument("--bound", type=int, required=True)
    p = command("tame", help="tame degree of a full semigroup")
    p.add_argument("--atom-index", type=int, default=None, help="0-based: report t_i only")
    p.add_argument(
        "--restrict-atoms",
        default=None,
        help="comma-separated 0-based atom indices to max over (caller asserts exhaustiveness)",
    )
    p = command("block-monoid", help="atoms of a block monoid over Z_m1 x ... x Z_mr")
    p.add_argument("--moduli", required=True, help="e.g. '2 2 2'")
    p.add_argument("--subset", default=None, help="group elements '(0,1);(1,1)' (default: all nonzero)")
    p = command("hilbert", help="Hilbert basis / minimal solutions of a system file")
    p.add_argument("--system", required=True, help="JSON {'matrix': .., 'relation': 'eq'|'geq', 'rhs': .., 'moduli': ..}")
    return parser


def _run_command(args) -> str:
    if args.command == "block-monoid":
        moduli = [int(tok) for tok in args.moduli.replace(",", " ").split()]
        subset = [_parse_vector(p) for p in args.subset.split(";")] if args.subset else None
        witness = _tame.block_monoid(moduli, subset, max_steps=args.max_steps)
        atoms = witness.semigroup.generators
        payload = {"atoms": [list(a) for a in atoms], "moduli": moduli}
        lines = [_format_vector(a, False) for a in atoms]
        return _emit(args, payload, lines)

    if args.command == "hilbert":
        data = _load_json(args.system)
        if "matrix" not in data:
            raise _UsageError(f"{args.system}: need key 'matrix'")
        relation = Relation(data.get("relation", "eq"))
        system = diophantine_system(
            data["matrix"], relation, data.get("rhs"), data.get("moduli")
        )
        if system.homogeneous:
            vectors = hilbert_basis(system, max_steps=args.max_steps)
        else:
            vectors = minimal_solutions(system, max_steps=args.max_steps)
        payload = {"solutions": [list(v) for v in vectors]}
        return _emit(args, payload, [_format_vector(v, False) for v in vectors])

    S, witness = _semigroup_from_args(args, max_steps=args.max_steps)
    scalar = S.dim == 1

    if args.command == "factorizations":
        element = _parse_vector(args.element)
        facts = factorizations(S, element)
        if not facts and not contains(S, element):
            raise NotInSemigroupError(f"{args.element} is not in the semigroup")
        payload = {"element": _scalarize(S, element), "factorizations": [list(z) for z in facts]}
        return _emit(args, payload, [_format_vector(z, False) for z in facts])

    if args.command in ("length-set", "delta-element"):
        element = _parse_vector(args.element)
        if not contains(S, element):
            raise NotInSemigroupError(f"{args.element} is not in the semigroup")
        if args.command == "length-set":
            values = length_set(S, element)
            payload = {"element": _scalarize(S, element), "length_set": list(values)}
        else:
            values = delta_of_element(S, element)
            payload = {"element": _scalarize(S, element), "delta": list(values)}
        return _emit(args, payload, [" ".join(str(v) for v in values)])

    if args.command == "delta-set":
        fn = _delta.delta_set_hilbert if args.method == "hilbert" else _delta.delta_set_grobner
        values = fn(S, max_steps=args.max_steps)
        payload = {"delta_set": list(values)}
        return _emit(args, payload, [" ".join(str(v) for v in values)])

    if args.command == "min-presentation":
        relations = _presentation.minimal_presentation(S, max_steps=args.max_steps)
        payload = {"relations": [[list(z), list(w)] for z, w in relations]}
        lines = [f"{_format_vector(z, False)} {_format_vector(w, False)}" for z, w in relations]
        return _emit(args, payload, lines)

    if args.command == "betti":
        values = _presentation.betti_elements(S, max_steps=args.max_steps)
        payload = {"betti_elements": [_scalarize(S, v) for v in values]}
        return _emit(args, payload, [_format_vector(v, scalar) for v in values])

    if args.command == "graver":
        pairs = graver_basis(S, max_steps=args.max_steps)
        payload = {"pairs": [[list(z), list(w)] for z, w in pairs]}
        lines = [f"{_format_vector(z, False)} {_format_vector(w, False)}" for z, w in pairs]
        return _emit(args, payload, lines)

    if args.command == "catenary":
        element = _parse_vector(args.element)
        fn = _catenary.catenary_naive if args.method == "naive" else _catenary.catenary_dynamic
        value = fn(S, element)
        payload = {"catenary": value, "element": _scalarize(S, element)}
        return _emit(args, payload, [str(value)])

    if args.command == "catenary-range":
        if args.bound < 0:
            raise _UsageError("--bound must be nonnegative")
        entries = _catenary.catenary_range(S, args.bound)
        payload = {"catenary_range": [[g, c] for g, c in entries]}
        return _emit(args, payload, [f"{g} {c}" for g, c in entries])

    if args.command == "tame":
        if witness is None:
            raise NotFullError("tame degree requires an --equations semigroup (full)")
        if args.atom_index is not None:
            value = _tame.tame_i_full(witness, args.atom_index, max_steps=args.max_steps)
        else:
            indices = None
            if args.restrict_atoms:
                try:
                    indices = [int(tok) for tok in args.restrict_atoms.replace(",", " ").split()]
                except ValueError:
                    raise _UsageError("--restrict-atoms takes integer indices") from None
            value = _tame.tame_full(witness, atom_indices=indices, max_steps=args.max_steps)
        payload = {"tame": value}
        return _emit(args, payload, [str(value)])

    raise AssertionError(f"unhandled command {args.command}")


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute a command line; returns (exit code, stdout text).

    Diagnostics go to stderr; on error the output text is empty, never partial.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        output = _run_command(args)
    except _UsageError as exc:
        print(f"sgfact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""
    except (NotInSemigroupError, NotFullError, UnsupportedDimensionError) as exc:
        print(f"sgfact: error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC, ""
    except ResourceLimitError as exc:
        print(f"sgfact: error: {exc}", file=sys.stderr)
        return EXIT_BUDGET, ""
    except SgfactError as exc:
        print(f"sgfact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""
    return EXIT_OK, output + ("\n" if output else "")


def main(argv: Sequence[str] | None = None) -> int:
    code, output = run(sys.argv[1:] if argv is None else argv)
    if output:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
