"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 axiom precondition failure,
4 not representable, 5 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import formats, measures, oracle
from .errors import AxiomError, InternalError, QualBeliefError
from .frame import set_max_frame_size
from .measures import belief_from_mass, check_measure
from .relations import check_relation
from .representation import (
    construct_belief,
    construct_generalized_belief,
    construct_monotonic_belief,
    construct_probability_scott,
    induce_relation,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_NOT_REPRESENTABLE = 4
EXIT_INTERNAL = 5


class InputError(Exception):
    pass


def _load(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_measure(obj: Any) -> tuple[measures.SetFunction, str | None]:
    """Set function from a measure file; mass files (``"kind": "mass"``) are turned into beliefs."""
    if isinstance(obj, dict) and obj.get("kind") == "mass":
        m = formats.mass_from_json(obj)
        world = "closed" if m.closed_world else "open"
        return belief_from_mass(m, world), world
    return formats.measure_from_json(obj), None


def _emit(args, payload: dict, text: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text))


def _fmt_witness(frame, witness) -> str:
    return "(" + ", ".join(frame.format(a) for a in witness) + ")"


def _measure_lines(g, report) -> list[str]:
    frame = g.frame
    lines = [f"strongest class: {report.strongest_class}"]
    for axiom, ok in report.axioms.items():
        line = f"  {axiom:<3} {'pass' if ok else 'FAIL'}"
        if not ok:
            line += f"  witness {_fmt_witness(frame, report.witnesses[axiom])}"
        lines.append(line)
    lines.append("Moebius masses (closed world):")
    for a, v in enumerate(report.masses):
        mark = "  <- negative" if v < 0 else ""
        lines.append(f"  m{frame.format(a)} = {v}  (approx {formats.approx(v)}){mark}")
    lines.append(f"inferred m(empty) for the open world: {report.empty_mass}")
    return lines


def cmd_check_measure(args) -> int:
    g, world = _load_measure(_load(args.path))
    report = check_measure(g)
    payload = {"measure": formats.measure_to_json(g), "report": formats.measure_report_to_json(g.frame, report)}
    if world:
        payload["derived_from_mass"] = world
    text = _measure_lines(g, report)
    if args.cross_check:
        n_max = 3
        samples = None if g.frame.size <= 3 else 5000
        direct = oracle.check_supadditivity_direct(g, n_max, samples=samples, seed=args.seed)
        belief_ok = report.axioms["B1"] and report.axioms["B2"] and report.axioms["B3'"]
        expected = g[0] == 0 and g[g.frame.full] == 1 and direct.passed
        agree = belief_ok == expected or (samples is not None and direct.passed)
        payload["cross_check"] = {
            "supadditivity_direct": {
                "passed": direct.passed,
                "n_max": n_max,
                "sampled": samples is not None,
                "witness": None if direct.witness is None else formats._witness(g.frame, direct.witness),
            },
            "agrees": agree,
        }
        text.append(
            f"cross-check: direct sup-additivity (n <= {n_max}{', sampled' if samples else ''}) "
            f"{'pass' if direct.passed else 'FAIL'}; agrees with Moebius check: {agree}"
        )
        if not agree:
            _emit(args, payload, text)
            return EXIT_INTERNAL
    _emit(args, payload, text)
    return EXIT_OK


def _scott(args, r):
    result = construct_probability_scott(r)
    if args.verbose:
        print(result.system.dump(), file=sys.stderr)
    return result


def _scott_json(result) -> dict:
    out: dict[str, Any] = {"representable": result.representable, "lp_status": result.outcome.status}
    if result.epsilon is not None:
        out["epsilon"] = formats.rational(result.epsilon)
    if result.probability is not None:
        out["probability"] = formats.measure_to_json(result.probability, provenance="scott")
    return out


def cmd_check_relation(args) -> int:
    r = formats.relation_from_json(_load(args.path))
    frame = r.frame
    report = check_relation(r)
    scott = _scott(args, r)
    payload = {
        "relation": formats.relation_to_json(r),
        "report": formats.relation_report_to_json(frame, report),
        "scott": _scott_json(scott),
    }
    text = [f"structure class: {report.structure_class}"]
    for axiom, ok in report.axioms.items():
        line = f"  {axiom:<3} {'pass' if ok else 'FAIL'}"
        if not ok:
            line += f"  witness {_fmt_witness(frame, report.witnesses[axiom])}"
        text.append(line)
    if scott.representable:
        p = scott.probability
        values = ", ".join(f"P{frame.format(1 << i)} = {p[1 << i]}" for i in range(frame.size))
        text.append(f"probability representation: yes (epsilon = {scott.epsilon}; {values})")
    else:
        text.append(f"probability representation: no (LP {scott.outcome.status}, epsilon = {scott.epsilon})")

    status = EXIT_OK
    if args.cross_check:
        cross: dict[str, Any] = {}
        agree = True
        if frame.size <= 3:
            grid = oracle.search_probability_grid(r, 60)
            cross["grid_denominator"] = 60
            cross["grid_found"] = grid is not None
            if grid is not None and not scott.representable:
                agree = False
            text.append(f"cross-check: grid (1/60) {'found' if grid else 'found none'}")
        if frame.size <= 2:
            bounded = oracle.check_scott_axiom_direct(r, 2)
            cross["bounded_balance_axiom"] = {
                "passed": bounded.passed,
                "n_max": 2,
                "note": "refutation oracle: a pass does not prove the axiom",
            }
            if not bounded.passed and scott.representable:
                agree = False
            text.append(
                "cross-check: bounded balance axiom (n <= 2, refutation only) "
                + ("pass" if bounded.passed else "refuted")
            )
        cross["agrees"] = agree
        payload["cross_check"] = cross
        text.append(f"cross-check agreement: {agree}")
        if not agree:
            status = EXIT_INTERNAL
    _emit(args, payload, text)
    return status


def cmd_construct(args) -> int:
    r = formats.relation_from_json(_load(args.path))
    if args.target == "probability":
        result = _scott(args, r)
        if not result.representable:
            print(
                f"not representable by a probability function (LP {result.outcome.status}, "
                f"epsilon = {result.epsilon})",
                file=sys.stderr,
            )
            return EXIT_NOT_REPRESENTABLE
        p = result.probability
        masses = measures.mass_from_set_function(p)
        print(json.dumps(formats.measure_to_json(p, masses=masses, provenance="scott"), indent=2))
        return EXIT_OK
    builder = {
        "belief": construct_belief,
        "monotonic": construct_monotonic_belief,
        "generalized": construct_generalized_belief,
    }[args.target]
    built = builder(r)
    out = formats.measure_to_json(built.measure, masses=built.masses, provenance=built.provenance)
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_induce(args) -> int:
    g, _ = _load_measure(_load(args.path))
    r = induce_relation(g)
    report = check_relation(r)
    payload = formats.relation_to_json(r)
    payload["report"] = formats.relation_report_to_json(r.frame, report)
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _add_global(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None

    def d(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--cross-check", action="store_true", default=d(False), help="also run brute-force oracles")
    p.add_argument("--max-frame-size", type=int, default=default, metavar="N", help="override frame-size caps")
    p.add_argument("--seed", type=int, default=d(0), help="seed for sampled oracle checks")
    p.add_argument("-v", "--verbose", action="store_true", default=d(False), help="dump LP systems to stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qualbelief",
        description="Check belief measures and preference relations, and convert between them.",
    )
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-measure", help="axiom verdicts and class of a set function")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_measure)

    p = sub.add_parser("check-relation", help="axiom verdicts and structure of a relation")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_relation)

    p = sub.add_parser("construct", help="build a compatible measure from a relation")
    p.add_argument("path")
    p.add_argument("--target", required=True, choices=("belief", "probability", "monotonic", "generalized"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("induce", help="relation induced by a set function")
    p.add_argument("path")
    p.set_defaults(func=cmd_induce)

    for p in sub.choices.values():
        _add_global(p, suppress=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        set_max_frame_size(args.max_frame_size)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (QualBeliefError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        set_max_frame_size(None)


if __name__ == "__main__":
    sys.exit(main())
