"""Command-line entry point ``tropcrit``.

    tropcrit beta|critical|verify|taut <file.json> [--w 1,10,100] [--oracle]
             [--samples N] [--seed S] [--out file.json]

The input file is a matroid document; a bundled fixture name (e.g. ``U24``)
is accepted in place of a path. The result document is printed to stdout.

Exit codes: 0 success, 2 input error, 3 theorem violation or internal bug,
4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from . import errors
from .bergman import AffineMatroid
from .critical import critical_points_fast, critical_points_oracle, verify_theorem
from .documents import (
    MatroidInput,
    fixture_names,
    load_fixture,
    load_matroid_file,
    parse_weights,
    point_to_json,
    rational_to_str,
)
from .errors import (
    DegenerateWeights,
    InputError,
    NotRapidlyIncreasing,
    ResourceCapExceeded,
    TropcritError,
)
from .invariants import char_poly
from .partitions import is_rapidly_increasing, powers_of_ten
from .taut import (
    chern_Q,
    chern_S_dual,
    class_affine_bergman,
    class_inverted_dual,
    divisibility_check,
)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_RESOURCE = 0, 2, 3, 4


def exit_code_for(exc: BaseException | type) -> int:
    kind = exc if isinstance(exc, type) else type(exc)
    if issubclass(kind, InputError):
        return EXIT_INPUT
    if issubclass(kind, ResourceCapExceeded):
        return EXIT_RESOURCE
    return EXIT_VIOLATION


def _canonical(inp: MatroidInput) -> tuple[AffineMatroid, list]:
    A, mapping = AffineMatroid(inp.matroid, inp.special).canonical()
    labels = [None] * inp.matroid.size
    for old, new in mapping.items():
        labels[new] = inp.labels[old]
    return A, labels


def _base(command: str, inp: MatroidInput) -> dict:
    return {"command": command, "input": inp.document}


def _error_doc(doc: dict, exc: BaseException) -> dict:
    doc["status"] = "error"
    doc["error"] = {"kind": type(exc).__name__, "message": str(exc)}
    doc["exit_code"] = exit_code_for(exc)
    return doc


def cmd_beta(inp: MatroidInput) -> dict:
    doc = _base("beta", inp)
    try:
        chi = char_poly(inp.matroid)
    except TropcritError as exc:
        return _error_doc(doc, exc)
    doc.update(
        status="ok",
        beta=abs(chi.derivative()(1)),
        char_poly=list(chi.coeffs),
        char_poly_text=str(chi),
        exit_code=EXIT_OK,
    )
    return doc


def cmd_critical(inp: MatroidInput, w: Optional[str] = "auto", oracle: bool = False) -> dict:
    doc = _base("critical", inp)
    doc["method"] = "oracle" if oracle else "fast"
    try:
        A, labels = _canonical(inp)
        doc["canonical_labels"] = labels
        doc["special_element"] = labels[0]
        weights = powers_of_ten(A.n) if w in (None, "auto") else parse_weights(w)
        doc["w"] = [rational_to_str(v) for v in weights]
        if oracle:
            points = critical_points_oracle(A, weights)
        else:
            if not is_rapidly_increasing(weights):
                raise NotRapidlyIncreasing(
                    "w is not rapidly increasing; pass --oracle to use the brute-force route"
                )
            points = critical_points_fast(A, weights)
        doc["beta"] = abs(char_poly(A.matroid).derivative()(1))
    except DegenerateWeights as exc:
        doc = _error_doc(doc, exc)
        doc["exit_code"] = EXIT_INPUT
        return doc
    except TropcritError as exc:
        return _error_doc(doc, exc)
    doc["count"] = len(points)
    doc["points"] = [point_to_json(p) for p in points]
    doc["status"] = "ok"
    doc["exit_code"] = EXIT_OK
    return doc


def cmd_verify(inp: MatroidInput, samples: int = 3, seed: int = 0) -> dict:
    doc = _base("verify", inp)
    doc["seed"] = seed
    report = verify_theorem(inp.matroid, samples, seed, special=inp.special)
    if report.error is not None:
        doc["status"] = "error"
        doc["error"] = {"kind": report.error_kind, "message": report.error}
        doc["exit_code"] = exit_code_for(getattr(errors, report.error_kind, TropcritError))
        return doc
    doc.update(
        beta=report.beta,
        fast_count=report.fast_count,
        oracle_count=report.oracle_count,
        random_counts=report.random_counts,
        samples=[[rational_to_str(v) for v in w] for w in report.samples],
        resamples=report.resamples,
        agreement={
            "counts": report.counts_agree,
            "point_sets": report.point_sets_equal,
            "flags_from_bnbc": report.flags_from_bnbc,
        },
        points=[point_to_json(p) for p in report.fast_points],
    )
    discrepancies = [k for k, v in doc["agreement"].items() if not v]
    doc["discrepancies"] = discrepancies
    doc["status"] = "ok" if not discrepancies else "violation"
    doc["exit_code"] = EXIT_OK if not discrepancies else EXIT_VIOLATION
    return doc


def cmd_taut(inp: MatroidInput) -> dict:
    doc = _base("taut", inp)
    try:
        A, labels = _canonical(inp)
        doc["canonical_labels"] = labels
        M = A.matroid
        continuity = {}
        for i in range(M.full_rank + 1):
            continuity[f"c{i}(S_dual)"] = chern_S_dual(M, i).is_continuous()
        for j in range(M.size - M.full_rank + 1):
            continuity[f"c{j}(Q)"] = chern_Q(M, j).is_continuous()
        continuity["affine_bergman_class"] = class_affine_bergman(A).is_continuous()
        continuity["inverted_dual_class"] = class_inverted_dual(A).is_continuous()
        report = divisibility_check(A)
    except TropcritError as exc:
        return _error_doc(doc, exc)
    doc["continuity"] = continuity
    doc["chambers"] = [
        {
            "sigma": list(c.sigma),
            "basis": sorted(c.basis),
            "branch": c.branch,
            "divisible": c.divisible,
            "branch_claim_holds": c.branch_claim_holds,
        }
        for c in report.certificates
    ]
    doc["chambers_passed"] = sum(c.divisible and c.branch_claim_holds for c in report.certificates)
    ok = report.passed and all(continuity.values())
    doc["discrepancies"] = [k for k, v in continuity.items() if not v] + [
        "sigma=" + ",".join(map(str, c.sigma))
        for c in report.certificates
        if not (c.divisible and c.branch_claim_holds)
    ]
    doc["status"] = "ok" if ok else "violation"
    doc["exit_code"] = EXIT_OK if ok else EXIT_VIOLATION
    return doc


def _load(path: str) -> MatroidInput:
    if not os.path.exists(path) and path in fixture_names():
        return load_fixture(path).parsed
    try:
        return load_matroid_file(path)
    except OSError as exc:
        raise errors.ParseError(f"cannot read {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropcrit",
        description="Tropical critical points of affine matroids.",
    )
    parser.add_argument("command", choices=["beta", "critical", "verify", "taut"])
    parser.add_argument("file", help="matroid JSON document or bundled fixture name")
    parser.add_argument("--w", default="auto", help="weights, e.g. 1,10,100, or 'auto'")
    parser.add_argument("--oracle", action="store_true", help="use the flag-pair brute force")
    parser.add_argument("--samples", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", help="also write the result document here")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        inp = _load(args.file)
    except TropcritError as exc:
        doc = _error_doc({"command": args.command, "input": None}, exc)
    else:
        if args.command == "beta":
            doc = cmd_beta(inp)
        elif args.command == "critical":
            doc = cmd_critical(inp, args.w, args.oracle)
        elif args.command == "verify":
            doc = cmd_verify(inp, args.samples, args.seed)
        else:
            doc = cmd_taut(inp)
    doc["timing_seconds"] = round(time.perf_counter() - start, 6)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return doc["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
