"""The system document format: parse and serialize without losing exactness.

A document is JSON holding a universe, named coverings of named fuzzy sets,
and optionally named query sets and point mappings. Memberships travel as
strings ("0.45", "1", "2/3") so no float ever enters the pipeline, and every
diagnostic carries the JSON path it refers to.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .covering import CoveringFamily, FuzzyCovering
from .errors import FuzzyCoverError, ParseError
from .mapping import PointMapping
from .sets import DEFAULT_GRID, FuzzySet, Universe, format_grade, make_fuzzy_set

FORMAT_VERSION = 1


@dataclass
class SystemDocument:
    universe: Universe
    family: CoveringFamily
    sets: dict[str, FuzzySet] = field(default_factory=dict)
    mappings: dict[str, PointMapping] = field(default_factory=dict)
    denominator: int = DEFAULT_GRID
    format_version: int = FORMAT_VERSION


def _expect(value: Any, kind: type, what: str, path: str) -> Any:
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"expected {what}, got {type(value).__name__}", path=path)
    return value


def _expect_str_list(value: Any, what: str, path: str) -> list[str]:
    _expect(value, list, f"an array of {what}", path)
    out = []
    for i, item in enumerate(value):
        out.append(_expect(item, str, what, f"{path}[{i}]"))
    return out


def parse_document(text: str, denominator_override: int | None = None) -> SystemDocument:
    """Parse document text; any problem raises with a line or path location."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e.msg}", path=f"line {e.lineno}, column {e.colno}") from None
    _expect(raw, dict, "a top-level object", "$")

    version = raw.get("format_version", FORMAT_VERSION)
    _expect(version, int, "an integer format_version", "format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version}", path="format_version")

    if denominator_override is not None:
        denominator = denominator_override
    else:
        denominator = raw.get("denominator", DEFAULT_GRID)
        _expect(denominator, int, "an integer denominator", "denominator")
    if denominator <= 0:
        raise ParseError(f"denominator must be positive, got {denominator}", path="denominator")

    labels = _expect_str_list(raw.get("universe"), "element labels", "universe")
    if not labels:
        raise ParseError("universe must not be empty", path="universe")
    if len(set(labels)) != len(labels):
        raise ParseError("universe labels must be unique", path="universe")
    universe = Universe.of(labels)

    def read_set(obj: Any, path: str, target: Universe) -> tuple[str, FuzzySet]:
        _expect(obj, dict, "an object", path)
        name = _expect(obj.get("name"), str, "a set name", f"{path}.name")
        values = obj.get("memberships")
        _expect(values, list, "an array of membership grades", f"{path}.memberships")
        fs = make_fuzzy_set(target, values, denominator, path=f"{path}.memberships")
        return name, fs

    coverings_raw = raw.get("coverings")
    _expect(coverings_raw, list, "an array of coverings", "coverings")
    named_coverings: list[tuple[str, FuzzyCovering]] = []
    for ci, cov_obj in enumerate(coverings_raw):
        cpath = f"coverings[{ci}]"
        _expect(cov_obj, dict, "an object", cpath)
        cname = _expect(cov_obj.get("name"), str, "a covering name", f"{cpath}.name")
        sets_raw = cov_obj.get("sets")
        _expect(sets_raw, list, "an array of member sets", f"{cpath}.sets")
        members = [read_set(s, f"{cpath}.sets[{si}]", universe) for si, s in enumerate(sets_raw)]
        try:
            named_coverings.append((cname, FuzzyCovering(universe, members)))
        except FuzzyCoverError as e:
            if e.path is None:
                raise type(e)(str(e), path=cpath) from None
            raise
    try:
        family = CoveringFamily(universe, named_coverings)
    except FuzzyCoverError as e:
        if e.path is None:
            raise type(e)(str(e), path="coverings") from None
        raise

    sets: dict[str, FuzzySet] = {}
    if "sets" in raw:
        _expect(raw["sets"], list, "an array of sets", "sets")
        for si, obj in enumerate(raw["sets"]):
            name, fs = read_set(obj, f"sets[{si}]", universe)
            if name in sets:
                raise ParseError(f"set name {name!r} appears twice", path=f"sets[{si}].name")
            sets[name] = fs

    mappings: dict[str, PointMapping] = {}
    if "mappings" in raw:
        _expect(raw["mappings"], list, "an array of mappings", "mappings")
        for mi, obj in enumerate(raw["mappings"]):
            mpath = f"mappings[{mi}]"
            _expect(obj, dict, "an object", mpath)
            name = _expect(obj.get("name"), str, "a mapping name", f"{mpath}.name")
            if name in mappings:
                raise ParseError(f"mapping name {name!r} appears twice", path=f"{mpath}.name")
            target_labels = _expect_str_list(obj.get("target"), "target labels", f"{mpath}.target")
            if not target_labels or len(set(target_labels)) != len(target_labels):
                raise ParseError("target labels must be non-empty and unique", path=f"{mpath}.target")
            pairs_raw = obj.get("pairs")
            _expect(pairs_raw, list, "an array of [source, target] pairs", f"{mpath}.pairs")
            pairs = []
            for pi, pair in enumerate(pairs_raw):
                ppath = f"{mpath}.pairs[{pi}]"
                _expect(pair, list, "a [source, target] pair", ppath)
                if len(pair) != 2:
                    raise ParseError("a pair must have exactly two entries", path=ppath)
                pairs.append(
                    (
                        _expect(pair[0], str, "a source label", f"{ppath}[0]"),
                        _expect(pair[1], str, "a target label", f"{ppath}[1]"),
                    )
                )
            strict = obj.get("strict", True)
            if not isinstance(strict, bool):
                raise ParseError("expected a boolean strict flag", path=f"{mpath}.strict")
            target = Universe.of(target_labels)
            try:
                mappings[name] = PointMapping.from_pairs(universe, target, pairs, strict=strict)
            except FuzzyCoverError as e:
                if e.path is None:
                    raise type(e)(str(e), path=mpath) from None
                raise

    return SystemDocument(universe, family, sets, mappings, denominator, version)


def serialize_document(doc: SystemDocument) -> str:
    """Canonical JSON text; parsing it back reproduces the same object model."""
    obj: dict[str, Any] = {
        "format_version": doc.format_version,
        "denominator": doc.denominator,
        "universe": list(doc.universe.labels),
        "coverings": [
            {
                "name": cname,
                "sets": [
                    {"name": mname, "memberships": [format_grade(v) for v in member.values]}
                    for mname, member in covering
                ],
            }
            for cname, covering in doc.family
        ],
    }
    if doc.sets:
        obj["sets"] = [
            {"name": name, "memberships": [format_grade(v) for v in fs.values]}
            for name, fs in doc.sets.items()
        ]
    if doc.mappings:
        obj["mappings"] = [
            {
                "name": name,
                "target": list(m.target.labels),
                "pairs": [[s, t] for s, t in m.pairs()],
                **({} if m.strict else {"strict": False}),
            }
            for name, m in doc.mappings.items()
        ]
    return json.dumps(obj, indent=2) + "\n"
