"""Command-line interface: load quivers and elements from JSON, run the
classifier, family analysis, and oracle cross-checks, and emit deterministic
machine-readable reports.

Exit codes: 0 successful evaluation (whatever the boolean outcome),
2 malformed input, 3 enumeration budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from pathlib import Path as FsPath

from . import __version__
from .algebra import AlgElem, AlgebraError
from .classify import (
    ClassifyError,
    classify,
    enumerate_full_families_trivial_idem,
    is_full_family,
    strongly_orthogonal,
    try_standard_form,
)
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    OracleError,
    check_special_by_modules,
    check_split_by_sequences,
    enumerate_reps,
    fullness_bruteforce,
    orthogonality_bruteforce,
)
from .quivers import Quiver, QuiverError
from .reps import RepError, in_category_e, morita_surrogate_check
from .rings import Ring, RingError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3

_RING_SHORTHAND = re.compile(r"^(F|Z)(\d+)$|^Q$")


class InputError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _load_json(text_or_path: str):
    s = text_or_path.strip()
    if s.startswith("{") or s.startswith("["):
        try:
            return json.loads(s)
        except json.JSONDecodeError as exc:
            raise InputError("malformed-json", f"inline JSON: {exc}") from exc
    p = FsPath(text_or_path)
    if not p.exists():
        raise InputError("missing-file", f"no such file: {text_or_path}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputError("malformed-json", f"{text_or_path}: {exc}") from exc


def _parse_ring(spec: str) -> Ring:
    m = _RING_SHORTHAND.match(spec.strip())
    try:
        if m:
            if spec.strip() == "Q":
                return Ring("Q")
            kind = "Fp" if m.group(1) == "F" else "Zn"
            return Ring(kind, int(m.group(2)))
        return Ring.from_json(_load_json(spec))
    except RingError as exc:
        raise InputError("bad-ring", str(exc)) from exc


def _parse_quiver(spec: str) -> Quiver:
    try:
        return Quiver.from_json(_load_json(spec))
    except QuiverError as exc:
        raise InputError("bad-quiver", str(exc)) from exc


def _parse_element(q: Quiver, ring: Ring, spec: str) -> AlgElem:
    try:
        return AlgElem.from_json(q, ring, _load_json(spec))
    except (AlgebraError, QuiverError, RingError) as exc:
        raise InputError("bad-element", str(exc)) from exc


def _parse_family(q: Quiver, ring: Ring, spec: str) -> list[AlgElem]:
    obj = _load_json(spec)
    if not isinstance(obj, list):
        raise InputError("bad-family", "family file must be a JSON list of elements")
    try:
        return [AlgElem.from_json(q, ring, item) for item in obj]
    except (AlgebraError, QuiverError, RingError) as exc:
        raise InputError("bad-element", str(exc)) from exc


def _input_hash(*parts) -> str:
    blob = json.dumps(parts, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out:
        tmp = FsPath(out).with_suffix(".tmp")
        tmp.write_text(text)
        tmp.replace(out)
    else:
        sys.stdout.write(text)


def _report(command: str, result: dict, *hash_parts) -> dict:
    return {
        "command": command,
        "version": __version__,
        "input_hash": _input_hash(*hash_parts),
        "result": result,
    }


def _budget(args) -> OracleBudget:
    kwargs = {}
    if getattr(args, "max_dim", None) is not None:
        kwargs["max_total_dim"] = args.max_dim
    if getattr(args, "max_reps", None) is not None:
        kwargs["max_reps"] = args.max_reps
    return OracleBudget(**kwargs)


def _run(args) -> dict:
    ring = _parse_ring(args.ring)
    quiver = _parse_quiver(args.quiver)
    qj, rj = quiver.to_json(), ring.to_json()

    if args.command == "validate":
        result = {"ok": True, "vertices": len(quiver.vertices), "edges": len(quiver.edges)}
        if args.element:
            for spec in args.element:
                _parse_element(quiver, ring, spec)
            result["elements"] = len(args.element)
        return _report("validate", result, qj, rj, args.element)

    if args.command == "classify":
        e = _parse_element(quiver, ring, args.element[0])
        return _report("classify", classify(e).to_json(), qj, rj, e.to_json())

    if args.command == "standard-form":
        e = _parse_element(quiver, ring, args.element[0])
        form, witness = try_standard_form(e)
        result = {
            "special": form is not None,
            "standard_form": form.to_json() if form else None,
            "witness": witness.to_json() if witness else None,
        }
        return _report("standard-form", result, qj, rj, e.to_json())

    if args.command == "orthogonal":
        if len(args.element) != 2:
            raise InputError("bad-arguments", "orthogonal needs exactly two --element")
        e1 = _parse_element(quiver, ring, args.element[0])
        e2 = _parse_element(quiver, ring, args.element[1])
        try:
            structural = strongly_orthogonal(e1, e2)
        except ClassifyError as exc:
            raise InputError("not-special", str(exc)) from exc
        degree = args.degree if args.degree is not None else len(quiver.vertices)
        result = {
            "strongly_orthogonal": structural,
            "bruteforce_degree": degree,
            "bruteforce": orthogonality_bruteforce(e1, e2, degree),
        }
        return _report("orthogonal", result, qj, rj, e1.to_json(), e2.to_json())

    if args.command == "full-family":
        family = _parse_family(quiver, ring, args.family)
        try:
            full = is_full_family(family)
        except ClassifyError as exc:
            raise InputError("not-special", str(exc)) from exc
        return _report(
            "full-family", {"full": full}, qj, rj, [e.to_json() for e in family]
        )

    if args.command == "enumerate-families":
        try:
            families = enumerate_full_families_trivial_idem(quiver, ring)
        except ClassifyError as exc:
            raise InputError("nontrivial-idempotents", str(exc)) from exc
        result = {
            "families": [
                [sorted(p.vertex for p, _ in e.terms) for e in fam]
                for fam in families
            ]
        }
        return _report("enumerate-families", result, qj, rj)

    if args.command in ("oracle-special", "oracle-split"):
        e = _parse_element(quiver, ring, args.element[0])
        budget = _budget(args)
        if args.command == "oracle-special":
            verdict = check_special_by_modules(e, quiver, ring, budget)
        else:
            verdict = check_split_by_sequences(e, quiver, ring, budget)
        return _report(args.command, verdict.to_json(), qj, rj, e.to_json())

    if args.command == "morita-check":
        if not quiver.is_acyclic:
            raise InputError(
                "cyclic-quiver", "morita-check needs an acyclic quiver"
            )
        e = _parse_element(quiver, ring, args.element[0])
        budget = _budget(args)
        reps = [
            m for m in enumerate_reps(quiver, ring, budget) if in_category_e(e, m)
        ]
        pairs = checked = 0
        all_bijective = True
        for m in reps:
            for n in reps:
                pairs += 1
                res = morita_surrogate_check(e, m, n)
                checked += 1
                all_bijective = all_bijective and res["bijective"]
        result = {"pairs_checked": pairs, "all_bijective": all_bijective}
        return _report("morita-check", result, qj, rj, e.to_json())

    raise InputError("bad-arguments", f"unknown command {args.command!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathidem",
        description="Classify special and split idempotents in path algebras, "
        "with brute-force cross-checks.",
    )
    parser.add_argument(
        "command",
        choices=[
            "validate",
            "classify",
            "standard-form",
            "orthogonal",
            "full-family",
            "enumerate-families",
            "oracle-special",
            "oracle-split",
            "morita-check",
        ],
    )
    parser.add_argument("--quiver", required=True, help="quiver JSON file or inline JSON")
    parser.add_argument("--ring", required=True, help='e.g. F5, Z6, Q or {"ring":"Fp","p":5}')
    parser.add_argument(
        "--element",
        action="append",
        default=None,
        help="element JSON file or inline JSON (repeatable)",
    )
    parser.add_argument("--family", help="JSON file with a list of elements")
    parser.add_argument("--max-dim", type=int, default=None, help="oracle total-dimension cap")
    parser.add_argument("--max-reps", type=int, default=None, help="oracle enumeration cap")
    parser.add_argument("--degree", type=int, default=None, help="truncation degree")
    parser.add_argument("--out", help="write the report to this path (atomic)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.element is None:
        args.element = []
    needs_element = args.command in (
        "classify", "standard-form", "orthogonal", "oracle-special",
        "oracle-split", "morita-check",
    )
    try:
        if needs_element and not args.element:
            raise InputError("bad-arguments", f"{args.command} needs --element")
        if args.command == "full-family" and not args.family:
            raise InputError("bad-arguments", "full-family needs --family")
        report = _run(args)
    except InputError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}}, args.out)
        return EXIT_INPUT
    except (RingError, QuiverError, AlgebraError, RepError, ClassifyError) as exc:
        _emit({"error": {"code": "bad-input", "message": str(exc)}}, args.out)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        _emit({"error": {"code": "budget-exhausted", "message": str(exc)}}, args.out)
        return EXIT_BUDGET
    except OracleError as exc:
        _emit({"error": {"code": "oracle-error", "message": str(exc)}}, args.out)
        return EXIT_INPUT
    _emit(report, args.out)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
