"""Command-line interface.

Exit codes: 0 on success / positive verdicts, 1 on negative mathematical
verdicts (invalid datum, inadmissible morphism, failed law or fixture),
2 on schema or usage errors.  Output is JSON with sorted keys and is
byte-identical across runs for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .admissibility import NotGenuineError, decide
from .characters import (
    Factor,
    NotACharacterError,
    NotDominantError,
    RankMismatchError,
    RootDatum,
    UnsupportedTypeError,
    WeightChar,
    decompose,
    dual,
    irr_char,
    tensor,
)
from .fixtures import conformance_ok, conformance_rows
from .hodge import auto_cochar, hodge_type
from .isogeny import run_law_suite
from .peldata import (
    DimensionMismatchError,
    StructuredModeRequiredError,
    classify,
    shimura_report,
    validate,
)


def _emit(args, payload) -> None:
    text = serialize.dumps(payload)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_datum(path: str):
    return serialize.datum_from_json(serialize.load_json_file(path), "datum")


def _cmd_validate(args) -> int:
    datum = _load_datum(args.datum)
    report = validate(datum)
    _emit(args, report.to_dict())
    return 0 if report.valid else 1


def _cmd_classify(args) -> int:
    datum = _load_datum(args.datum)
    report = validate(datum)
    if not report.valid:
        _emit(args, {"valid": False, "validation": report.to_dict()})
        return 1
    cl = classify(datum)
    payload = {
        "factors": cl.factorization.to_dict(),
        "shimura": shimura_report(cl.factorization).to_dict(),
        "root_datum": serialize.root_datum_to_json(cl.root_datum),
        "standard_char": serialize.char_to_json(cl.standard_char),
    }
    _emit(args, payload)
    return 0


def _parse_rep(spec: str, cl) -> WeightChar:
    import json as _json

    if spec == "std":
        return cl.standard_char
    try:
        obj = _json.loads(spec)
    except ValueError as exc:
        raise serialize.SchemaError("--rep", f"expected 'std' or a JSON object: {exc}")
    highest = obj.get("highest") if isinstance(obj, dict) else None
    if not isinstance(highest, list) or not all(isinstance(x, int) for x in highest):
        raise serialize.SchemaError("--rep.highest", "expected an integer array")
    return irr_char(cl.root_datum, tuple(highest))


def _cmd_hodge(args) -> int:
    datum = _load_datum(args.datum)
    report = validate(datum)
    if not report.valid:
        _emit(args, {"valid": False, "validation": report.to_dict()})
        return 1
    cl = classify(datum)
    hc = auto_cochar(cl)
    char = _parse_rep(args.rep, cl)
    ht = hodge_type(char, hc)
    _emit(
        args,
        {
            "hodge_type": [list(pq) for pq in ht.sorted_pairs()],
            "cocharacter": hc.to_dict(),
            "unitary_orientation": "agreement-first (swapping a and b conjugates the cocharacter)",
        },
    )
    return 0


def _parse_type(text: str) -> RootDatum:
    factors = []
    for piece in text.split("x"):
        piece = piece.strip()
        if len(piece) < 2 or piece[0] not in "CAD" or not piece[1:].isdigit():
            raise serialize.SchemaError("--type", f"bad factor {piece!r}; expected e.g. C2 or C2xA3")
        factors.append(Factor(piece[0], int(piece[1:])))
    return RootDatum(tuple(factors), central_rank=1)


def _std_char_for_type(rd: RootDatum) -> WeightChar:
    total = rd.total_rank
    acc = {}
    offset = 0
    for f in rd.factors:
        for i in range(f.n):
            for sign in (1, -1):
                w = [0] * total
                w[offset + i] = sign
                w[-1] = 1
                acc[tuple(w)] = acc.get(tuple(w), 0) + 1
        offset += f.n
    return WeightChar(acc)


def _cmd_rep_decompose(args) -> int:
    rd = _parse_type(args.type)
    std = _std_char_for_type(rd)
    chars = []
    for token in args.tensor.split(","):
        token = token.strip()
        if token == "std":
            chars.append(std)
        elif token == "dual(std)":
            chars.append(dual(std))
        else:
            raise serialize.SchemaError("--tensor", f"unknown token {token!r}; use std or dual(std)")
    acc = chars[0]
    for c in chars[1:]:
        acc = tensor(acc, c)
    parts = decompose(rd, acc, genuine=True)
    _emit(
        args,
        {
            "root_datum": serialize.root_datum_to_json(rd),
            "constituents": [{"highest": list(w), "mult": m} for w, m in parts],
            "dimension": acc.dim(),
        },
    )
    return 0


def _cmd_admissible(args) -> int:
    spec = serialize.morphism_from_json(serialize.load_json_file(args.morphism), "morphism")
    verdict = decide(spec)
    _emit(args, verdict.to_dict())
    return 0 if verdict.admissible else 1


def _cmd_isofun_check(args) -> int:
    results = run_law_suite(trials=args.trials, seed=args.seed)
    ok = all(r["pass"] for r in results.values())
    _emit(args, {"laws": results, "pass": ok, "seed": args.seed, "trials": args.trials})
    return 0 if ok else 1


def _cmd_fixtures(args) -> int:
    rows = conformance_rows()
    ok = conformance_ok(rows)
    _emit(args, {"conformance": rows, "pass": ok, "seed": args.seed})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pel",
        description="Exact-arithmetic toolkit for polarized algebra data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write the JSON report to this path instead of stdout")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    p = sub.add_parser("validate", help="check the axioms of a datum file")
    p.add_argument("datum")
    common(p)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("classify", help="real group factorization of a datum file")
    p.add_argument("datum")
    common(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("hodge", help="Hodge type of a representation of a classified datum")
    p.add_argument("--datum", required=True)
    p.add_argument("--rep", required=True, help="'std' or '{\"highest\": [...]}'")
    common(p)
    p.set_defaults(fn=_cmd_hodge)

    p = sub.add_parser("rep", help="character calculus")
    repsub = p.add_subparsers(dest="rep_command", required=True)
    pd = repsub.add_parser("decompose", help="decompose a tensor product of standard characters")
    pd.add_argument("--type", required=True, help="factors like C2 or C2xC1 (one central coordinate)")
    pd.add_argument("--tensor", required=True, help="comma list of std / dual(std)")
    common(pd)
    pd.set_defaults(fn=_cmd_rep_decompose)

    p = sub.add_parser("admissible", help="decide admissibility of a morphism file")
    p.add_argument("--morphism", required=True)
    common(p)
    p.set_defaults(fn=_cmd_admissible)

    for name in ("isofun", "isofun-check"):
        p = sub.add_parser(name, help="run the isogeny-category law suite")
        if name == "isofun":
            isosub = p.add_subparsers(dest="isofun_command", required=True)
            pc = isosub.add_parser("check")
            pc.add_argument("--trials", type=int, default=500)
            common(pc)
            pc.set_defaults(fn=_cmd_isofun_check)
        else:
            p.add_argument("--trials", type=int, default=500)
            common(p)
            p.set_defaults(fn=_cmd_isofun_check)

    p = sub.add_parser("fixtures", help="run the bundled example conformance table")
    common(p)
    p.set_defaults(fn=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except serialize.SchemaError as exc:
        sys.stderr.write(f"schema error: {exc}\n")
        return 2
    except (
        NotGenuineError,
        NotACharacterError,
        NotDominantError,
        RankMismatchError,
        UnsupportedTypeError,
        DimensionMismatchError,
        StructuredModeRequiredError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
