"""JSON wire formats for frames, measures, relations and reports.

Subsets travel as lists of element labels.  Rationals travel as ``"p/q"``
strings; decimal strings are accepted on input and converted exactly.  Output
values carry an extra ``"approx"`` field with a 6-place decimal rendering.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import FormatError, InvalidSubsetError
from .frame import Frame
from .measures import MassFunction, MeasureReport, SetFunction, SignedMoebius, as_rational
from .relations import PreferenceRelation, RankedPartition, RelationReport, from_ranking, from_statements, partition


def rational(x: Fraction) -> str:
    return str(x)


def approx(x: Fraction) -> str:
    return f"{float(x):.6f}"


def frame_to_json(frame: Frame) -> dict:
    return {"elements": list(frame.elements)}


def frame_from_json(obj: Any) -> Frame:
    if not isinstance(obj, dict) or "elements" not in obj:
        raise FormatError('frame must be an object with an "elements" list')
    elements = obj["elements"]
    if not isinstance(elements, list):
        raise FormatError('"elements" must be a list')
    try:
        return Frame(elements)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def subset_from_json(frame: Frame, labels: Any) -> int:
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise FormatError(f"a subset must be a list of labels, got {labels!r}")
    try:
        return frame.subset(labels)
    except InvalidSubsetError as exc:
        raise FormatError(str(exc)) from exc


def subset_to_json(frame: Frame, a: int) -> list[str]:
    return frame.labels(a)


def _value_table(frame: Frame, entries: Any, key: str) -> dict[int, Fraction]:
    if not isinstance(entries, list):
        raise FormatError(f'"{key}" must be a list of {{"subset", "value"}} objects')
    table: dict[int, Fraction] = {}
    for entry in entries:
        if not isinstance(entry, dict) or "subset" not in entry or "value" not in entry:
            raise FormatError(f"malformed entry {entry!r}")
        a = subset_from_json(frame, entry["subset"])
        if a in table:
            raise FormatError(f"subset {frame.format(a)} listed twice")
        try:
            table[a] = as_rational(entry["value"])
        except (TypeError, ValueError) as exc:
            raise FormatError(str(exc)) from exc
    return table


def _require_object(obj: Any) -> dict:
    if not isinstance(obj, dict) or "frame" not in obj:
        raise FormatError('expected an object with a "frame" key')
    return obj


def measure_from_json(obj: Any) -> SetFunction:
    """Set function from ``{"frame": ..., "values": [...]}``; must be total."""
    obj = _require_object(obj)
    frame = frame_from_json(obj["frame"])
    if "values" not in obj:
        raise FormatError('measure needs a "values" list')
    return SetFunction(frame, _value_table(frame, obj["values"], "values"))


def mass_from_json(obj: Any) -> MassFunction:
    """Mass function; ``"masses"`` is preferred, ``"values"`` accepted.

    Subsets not listed get mass 0.
    """
    obj = _require_object(obj)
    frame = frame_from_json(obj["frame"])
    key = "masses" if "masses" in obj else "values"
    if key not in obj:
        raise FormatError('mass function needs a "masses" list')
    table = _value_table(frame, obj[key], key)
    return MassFunction(frame, [table.get(a, Fraction(0)) for a in range(frame.n_subsets)])


def _entries(frame: Frame, values) -> list[dict]:
    return [
        {"subset": frame.labels(a), "value": rational(v), "approx": approx(v)}
        for a, v in enumerate(values)
    ]


def measure_to_json(g: SetFunction, *, masses=None, provenance: str | None = None) -> dict:
    out: dict[str, Any] = {"frame": frame_to_json(g.frame), "values": _entries(g.frame, g.values)}
    if masses is not None:
        out["masses"] = _entries(g.frame, masses.masses if isinstance(masses, MassFunction) else masses)
    if provenance is not None:
        out["provenance"] = provenance
    return out


def mass_to_json(m: MassFunction | SignedMoebius) -> dict:
    return {
        "frame": frame_to_json(m.frame),
        "masses": _entries(m.frame, m.masses),
        "is_mass_function": isinstance(m, MassFunction),
    }


def relation_from_json(obj: Any) -> PreferenceRelation:
    """Relation in statement form (``"strict"``) or ranking form (``"ranking"``)."""
    obj = _require_object(obj)
    frame = frame_from_json(obj["frame"])
    if "strict" in obj and "ranking" in obj:
        raise FormatError('give either "strict" or "ranking", not both')
    if "strict" in obj:
        pairs = obj["strict"]
        if not isinstance(pairs, list):
            raise FormatError('"strict" must be a list of [A, B] pairs')
        parsed = []
        for pair in pairs:
            if not isinstance(pair, list) or len(pair) != 2:
                raise FormatError(f"malformed strict pair {pair!r}")
            parsed.append((subset_from_json(frame, pair[0]), subset_from_json(frame, pair[1])))
        return from_statements(frame, parsed)
    if "ranking" in obj:
        groups = obj["ranking"]
        if not isinstance(groups, list) or not all(isinstance(g, list) for g in groups):
            raise FormatError('"ranking" must be a list of subset groups, lowest first')
        return from_ranking(frame, [[subset_from_json(frame, a) for a in g] for g in groups])
    raise FormatError('relation needs a "strict" or a "ranking" key')


def ranking_to_json(frame: Frame, part: RankedPartition) -> list[list[list[str]]]:
    return [[frame.labels(a) for a in cls] for cls in part.classes]


def relation_to_json(r: PreferenceRelation) -> dict:
    """Ranking form for weak orders, statement form otherwise."""
    from .errors import NotWeakOrderError

    try:
        part = partition(r)
    except NotWeakOrderError:
        return {
            "frame": frame_to_json(r.frame),
            "strict": [[r.frame.labels(a), r.frame.labels(b)] for a, b in r.strict_pairs()],
        }
    return {"frame": frame_to_json(r.frame), "ranking": ranking_to_json(r.frame, part)}


def _witness(frame: Frame, witness) -> list[list[str]]:
    return [frame.labels(a) for a in witness]


def measure_report_to_json(frame: Frame, report: MeasureReport) -> dict:
    out: dict[str, Any] = {
        "strongest_class": report.strongest_class,
        "axioms": dict(report.axioms),
        "witnesses": {k: _witness(frame, w) for k, w in report.witnesses.items()},
    }
    if report.masses is not None:
        out["moebius"] = _entries(frame, report.masses)
    if report.empty_mass is not None:
        out["inferred_empty_mass"] = {"value": rational(report.empty_mass), "approx": approx(report.empty_mass)}
    return out


def relation_report_to_json(frame: Frame, report: RelationReport) -> dict:
    return {
        "structure_class": report.structure_class,
        "axioms": dict(report.axioms),
        "witnesses": {k: _witness(frame, w) for k, w in report.witnesses.items()},
    }
