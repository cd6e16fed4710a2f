"""Tab-delimited report rendering for the CLI.

Reports are plain text, one record per line, fields separated by tabs.
Exact values are printed first, with a decimal rendering (at most six
places, computed by integer arithmetic, never through floats) alongside
where a ratio is involved. Output is deterministic for identical inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .covering import CoveringFamily, FuzzyCovering
from .mapping import Partition, PointMapping
from .sets import FuzzySet, format_grade


def decimal_text(q: Fraction, places: int = 6) -> str:
    """Decimal rendering of a rational, rounded half-even to `places`."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    scale = 10**places
    scaled = q * scale
    whole = scaled.numerator // scaled.denominator
    rem = scaled - whole
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and whole % 2):
        whole += 1
    digits = str(whole).rjust(places + 1, "0")
    text = f"{digits[:-places]}.{digits[-places:]}".rstrip("0").rstrip(".")
    return sign + (text or "0")


def rational_fields(q: Fraction) -> list[str]:
    """Exact and decimal renderings, as two report fields."""
    return [str(q), decimal_text(q)]


def set_row(tag: str, name: str, fs: FuzzySet) -> str:
    return "\t".join([tag, name, *[format_grade(v) for v in fs.values]])


def header_row(universe_labels: Iterable[str]) -> str:
    return "\t".join(["#", "name", *universe_labels])


def covering_rows(tag: str, c: FuzzyCovering) -> list[str]:
    rows = [set_row(tag, name, member) for name, member in c]
    rows += [f"warning\tduplicate-member\t{dropped}\tmerged-into\t{kept}" for kept, dropped in c.merged]
    return rows


def partition_row(tag: str, name: str, p: Partition) -> str:
    blocks = " | ".join("{" + " ".join(b) + "}" for b in p.label_blocks())
    return f"{tag}\t{name}\t{blocks}"


def mapping_rows(name: str, m: PointMapping) -> list[str]:
    pairs = " ".join(f"{s}->{t}" for s, t in m.pairs())
    return [f"mapping\t{name}\t{pairs}"]


def family_rows(family: CoveringFamily) -> list[str]:
    rows = [header_row(family.universe.labels)]
    for name, covering in family:
        rows.extend(covering_rows(f"member[{name}]", covering))
    return rows


def render(lines: Iterable[str]) -> str:
    return "\n".join(lines) + "\n"
