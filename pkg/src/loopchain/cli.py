"""Command-line frontend.

Exit codes: 0 on success, 2 on invalid input (the violated invariant is
named on stderr), 3 on a consistency failure.  The ``--format json``
payloads are stable: re-serializing a parsed payload reproduces the bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import (
    InternalInconsistencyError,
    compute_ranks,
    scrollar_invariants,
)
from .oracle import verify_agreement
from .profiles import (
    DeletionSpec,
    InvalidSpecError,
    TorsionProfile,
    classify_trigonal,
    derive_model,
    gonality,
    is_hyperelliptic,
)
from .tableaux import dyck_word_of, enumerate_types, render_text
from .trigonal import (
    TrigonalParams,
    trigonal_deletion_spec,
    trigonal_rank,
    trigonal_sigma1,
)


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated integer list"
        )


def _profile_arg(text: str) -> TorsionProfile:
    values = _int_list(text)
    try:
        return TorsionProfile(values)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit_json(payload: dict) -> int:
    print(json.dumps(payload, indent=2))
    return 0


def cmd_scrollar(args) -> int:
    spec = DeletionSpec(
        args.genus, col1_deleted=args.col1_del, col0_deleted=args.col0_del
    )
    model = derive_model(spec)
    computed = compute_ranks(model)
    seq = computed.sequence
    report = scrollar_invariants(seq)
    sigma_map = {j: s for j, s in enumerate(report.sigma)}
    if args.format == "json":
        return _emit_json(
            {
                "genus": seq.genus,
                "degree": seq.degree,
                "profile": list(model.profile.orders),
                "rank_sequence": list(seq.ranks),
                "sigma": list(report.sigma),
                "scrollar": list(report.scrollar),
                "ell": report.first_jump,
                "n": report.nonspecial,
                "tableaux": [
                    computed.tableaux[c].to_json_dict()
                    for c in sorted(computed.tableaux)
                ],
            }
        )
    print(f"genus: {seq.genus}")
    print(f"k: {seq.degree}")
    print(f"torsion profile: {list(model.profile.orders)}")
    if args.show_tableaux:
        for c in sorted(computed.tableaux):
            print("D" if c == 1 else f"{c} D")
            print(render_text(computed.tableaux[c]))
    print(f"The rank sequence is: {list(seq.special_ranks)}")
    print(f"The scrollar invariants are: {sigma_map}")
    print(f"scrollar increments: {list(report.scrollar)}")
    jump = report.first_jump if report.first_jump is not None else "none"
    print(f"first jump: {jump}")
    print(f"nonspecial threshold: {report.nonspecial}")
    return 0


def cmd_trigonal(args) -> int:
    g, a, b = args.genus, args.a, args.b
    if not 1 <= a < b <= g:
        raise InvalidSpecError("need 1 <= a < b <= genus")
    params = TrigonalParams(g, a, b)
    closed = [trigonal_rank(params, c) for c in range(params.n + 1)]
    sigma1 = trigonal_sigma1(params)
    experimental = a == 1 or b == g
    mismatches: list[str] = []
    if not experimental:
        model = derive_model(trigonal_deletion_spec(params))
        computed = compute_ranks(model)
        seq = computed.sequence
        report = scrollar_invariants(seq)
        if seq.c_stop != params.n:
            mismatches.append(
                f"nonspecial threshold: engine {seq.c_stop}, closed form {params.n}"
            )
        for c in range(min(seq.c_stop, params.n) + 1):
            if seq.ranks[c] != closed[c]:
                mismatches.append(
                    f"rank at c={c}: engine {seq.ranks[c]}, closed form {closed[c]}"
                )
        if report.first_jump != params.ell:
            mismatches.append(
                f"first jump: engine {report.first_jump}, closed form {params.ell}"
            )
        if report.sigma[1] != sigma1:
            mismatches.append(
                f"sigma_1: engine {report.sigma[1]}, closed form {sigma1}"
            )
    if args.format == "json":
        payload = {
            "genus": g,
            "a": a,
            "b": b,
            "ell": params.ell,
            "n": params.n,
            "rank_sequence": closed,
            "sigma_1": sigma1,
            "cross_check": (
                "skipped" if experimental else ("ok" if not mismatches else "failed")
            ),
            "mismatches": mismatches,
        }
        _emit_json(payload)
    else:
        print(f"genus: {g}  a: {a}  b: {b}")
        print(f"ell: {params.ell}")
        print(f"n: {params.n}")
        print(f"closed-form rank sequence: {closed}")
        print(f"sigma_1: {sigma1}")
        if experimental:
            print("cross-check: skipped (boundary parameters, no engine model)")
        elif mismatches:
            print("cross-check: FAILED")
            for line in mismatches:
                print(f"  {line}")
        else:
            print("cross-check: ok")
    return 3 if mismatches else 0


def cmd_classify(args) -> int:
    profile = args.profile
    if is_hyperelliptic(profile):
        kind, detail = "hyperelliptic", None
    else:
        found = classify_trigonal(profile) if profile.genus >= 3 else None
        if found is not None:
            kind, detail = "trigonal", found
        else:
            kind, detail = "other", None
    if args.format == "json":
        return _emit_json(
            {
                "profile": list(profile.orders),
                "class": kind,
                "a": detail[0] if detail else None,
                "b": detail[1] if detail else None,
            }
        )
    if detail:
        print(f"trigonal (a={detail[0]}, b={detail[1]})")
    else:
        print(kind)
    return 0


def cmd_gonality(args) -> int:
    value = gonality(args.profile)
    if args.format == "json":
        return _emit_json(
            {"profile": list(args.profile.orders), "gonality": value}
        )
    print(value)
    return 0


def cmd_types(args) -> int:
    k = args.k
    words = enumerate_types(k)
    # canonical representative: event t of the word sits on staircase row 2t
    entries = []
    for word in words:
        col1, col0 = [], []
        for t, letter in enumerate(str(word)):
            row = 2 * t
            if letter == "(":
                col1.append(row + 2)
            else:
                col0.append(row + 1)
        g = max(2, 4 * (k - 2) + 1)
        spec = DeletionSpec(
            g, col1_deleted=tuple(col1), col0_deleted=tuple(col0)
        )
        model = derive_model(spec)
        assert str(dyck_word_of(spec)) == str(word)
        entries.append((str(word), g, list(model.profile.orders)))
    if args.format == "json":
        return _emit_json(
            {
                "degree": k,
                "count": len(words),
                "types": [
                    {"word": w, "genus": g, "profile": p}
                    for w, g, p in entries
                ],
            }
        )
    print(f"{len(words)} combinatorial types for degree {k}")
    for w, g, p in entries:
        shown = w if w else "(empty word)"
        print(f"{shown}  genus {g}  profile {p}")
    return 0


def cmd_verify(args) -> int:
    report = verify_agreement(args.max_genus)
    if args.format == "json":
        _emit_json(
            {
                "max_genus": args.max_genus,
                "specs": report.specs,
                "rank_checks": report.rank_checks,
                "emptiness_checks": report.emptiness_checks,
                "dominance_checks": report.dominance_checks,
                "failures": report.failures,
            }
        )
    else:
        print(f"specs checked: {report.specs}")
        print(f"rank agreements: {report.rank_checks}")
        print(f"emptiness certifications: {report.emptiness_checks}")
        print(f"dominance checks: {report.dominance_checks}")
        if report.failures:
            print(f"FAILURES ({len(report.failures)}):")
            for line in report.failures:
                print(f"  {line}")
        else:
            print("all checks passed")
    return 0 if report.ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopchain",
        description=(
            "Rank sequences and composite scrollar invariants of rank-1 "
            "divisor classes on chains of loops.  Torsion profiles are "
            "printed full length, starting at the first loop."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scrollar = sub.add_parser(
        "scrollar", help="rank sequence and scrollar invariants of a divisor"
    )
    scrollar.add_argument("--genus", type=int, required=True)
    scrollar.add_argument(
        "--col1-del",
        type=_int_list,
        required=True,
        metavar="A1,A2,...",
        help="symbols deleted from column 1 (each in 2..g)",
    )
    scrollar.add_argument(
        "--col0-del",
        type=_int_list,
        required=True,
        metavar="B1,B2,...",
        help="symbols deleted from column 0 (each in 1..g-1)",
    )
    scrollar.add_argument("--show-tableaux", action="store_true")
    scrollar.set_defaults(func=cmd_scrollar)

    trig = sub.add_parser(
        "trigonal", help="closed-form degree-3 invariants with engine cross-check"
    )
    trig.add_argument("--genus", type=int, required=True)
    trig.add_argument("--a", type=int, required=True)
    trig.add_argument("--b", type=int, required=True)
    trig.set_defaults(func=cmd_trigonal)

    classify = sub.add_parser(
        "classify", help="hyperelliptic / trigonal / other, from a profile"
    )
    classify.add_argument(
        "--profile", type=_profile_arg, required=True, metavar="M1,M2,..."
    )
    classify.set_defaults(func=cmd_classify)

    gon = sub.add_parser("gonality", help="gonality of a torsion profile")
    gon.add_argument(
        "--profile", type=_profile_arg, required=True, metavar="M1,M2,..."
    )
    gon.set_defaults(func=cmd_gonality)

    types = sub.add_parser(
        "types", help="combinatorial types of degree-k rank-1 tableaux"
    )
    types.add_argument("--k", type=int, required=True)
    types.set_defaults(func=cmd_types)

    verify = sub.add_parser(
        "verify", help="certify the greedy engine against exhaustive search"
    )
    verify.add_argument("--max-genus", type=int, required=True)
    verify.set_defaults(func=cmd_verify)

    for command in (scrollar, trig, classify, gon, types, verify):
        command.add_argument(
            "--format", choices=("text", "json"), default="text"
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
