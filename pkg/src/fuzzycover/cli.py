"""Command line interface.

Reports are tab-delimited text on stdout, deterministic for identical
inputs and seeds. Domain errors exit 1 after printing their stable code
to stderr; usage errors exit 2. The positional document argument is a
file path, or the name of a packaged fixture when no such file exists.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import figures
from .approximation import (
    approximate,
    neighborhood_union,
    roughness,
    roughness_ab,
    subcovering_bound,
)
from .checks import run_all
from .covering import (
    CoveringFamily,
    FuzzyCovering,
    covering_intersection,
    covering_union,
    intersection_core,
    is_coarser,
    reduce_covering,
)
from .document import SystemDocument, parse_document, serialize_document
from .errors import FuzzyCoverError, NotCovered, ParseError, SizeGuard
from .fixtures import fixture_text
from .infosys import (
    CompressionResult,
    PartitionTable,
    add_covering,
    build_homomorphism,
    reduct_report,
    remove_covering,
)
from .report import (
    covering_rows,
    family_rows,
    header_row,
    mapping_rows,
    partition_row,
    rational_fields,
    render,
    set_row,
)


class UsageError(Exception):
    """Bad invocation detected after argparse; exits 2 like argparse does."""


def _load_document(source: str, denominator: Optional[int]) -> SystemDocument:
    path = Path(source)
    if path.exists():
        text = path.read_text(encoding="utf-8")
    else:
        stem = path.name
        if stem.endswith(".json"):
            stem = stem[: -len(".json")]
        try:
            text = fixture_text(stem)
        except FileNotFoundError:
            raise ParseError(f"no such file or packaged fixture: {source!r}")
    return parse_document(text, denominator_override=denominator)


def _pick_covering(doc: SystemDocument, name: Optional[str]) -> tuple[str, FuzzyCovering]:
    if name is not None:
        return name, doc.family.covering_named(name)
    if len(doc.family) == 1:
        return doc.family.names[0], doc.family.coverings[0]
    options = ", ".join(doc.family.names)
    raise UsageError(f"document holds several coverings ({options}); pass --covering")


def _pick_set(doc: SystemDocument, name: Optional[str]):
    if name is None:
        raise UsageError("this subcommand needs --set NAME")
    if name not in doc.sets:
        options = ", ".join(sorted(doc.sets)) or "none"
        raise UsageError(f"no set named {name!r} in the document (have: {options})")
    return doc.sets[name]


def _figure_dir(args) -> Optional[str]:
    directory = getattr(args, "figures", None)
    if directory is None:
        return None
    os.makedirs(directory, exist_ok=True)
    return directory


def _emit(args, lines: list[str]) -> None:
    text = render(lines)
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
        sys.stdout.write(f"wrote\t{args.out}\n")
    else:
        sys.stdout.write(text)


def _cmd_validate(args) -> int:
    doc = _load_document(args.document, args.denominator)
    lines = [
        "universe\t" + " ".join(doc.universe.labels),
        f"denominator\t{doc.denominator}",
    ]
    lines += family_rows(doc.family)
    for name in sorted(doc.sets):
        lines.append(set_row("set", name, doc.sets[name]))
    for name in sorted(doc.mappings):
        lines += mapping_rows(name, doc.mappings[name])
    lines.append(
        f"counts\tcoverings={len(doc.family)}\tsets={len(doc.sets)}"
        f"\tmappings={len(doc.mappings)}"
    )
    _emit(args, lines)
    return 0


def _cmd_neighborhood(args) -> int:
    doc = _load_document(args.document, args.denominator)
    name, covering = _pick_covering(doc, args.covering)
    lines = [header_row(doc.universe.labels)]
    for label, nbhd in zip(doc.universe.labels, covering.neighborhoods()):
        lines.append(set_row("neighborhood", label, nbhd))
    directory = _figure_dir(args)
    if directory:
        path = figures.save_covering_heatmap(
            covering, os.path.join(directory, f"covering-{name}.png")
        )
        lines.append(f"figure\t{path}")
    _emit(args, lines)
    return 0


def _cmd_approx(args) -> int:
    doc = _load_document(args.document, args.denominator)
    cov_name, covering = _pick_covering(doc, args.covering)
    x = _pick_set(doc, args.set)
    pair = approximate(covering, x)
    lines = [
        header_row(doc.universe.labels),
        set_row("set", args.set, x),
        set_row("lower", args.set, pair.lower),
        set_row("upper", args.set, pair.upper),
        set_row("nbhd-union", args.set, neighborhood_union(covering, x)),
    ]
    try:
        lines.append(set_row("subcover-bound", args.set, subcovering_bound(covering, x)))
    except (NotCovered, SizeGuard) as e:
        # the bound only exists when the set sits below the member union
        lines.append(f"subcover-bound\t{args.set}\t{e.code}")
    lines.append(
        "\t".join(["roughness", args.set, *rational_fields(roughness(covering, x))])
    )
    if (args.alpha is None) != (args.beta is None):
        raise UsageError("--alpha and --beta go together")
    if args.alpha is not None:
        mu = roughness_ab(covering, x, args.alpha, args.beta)
        lines.append(
            "\t".join(
                [
                    "roughness-cut",
                    args.set,
                    f"alpha={args.alpha}",
                    f"beta={args.beta}",
                    *rational_fields(mu),
                ]
            )
        )
    directory = _figure_dir(args)
    if directory:
        path = figures.save_approximation_bars(
            x, pair, os.path.join(directory, f"approx-{cov_name}-{args.set}.png")
        )
        lines.append(f"figure\t{path}")
    _emit(args, lines)
    return 0


def _cmd_reduce_covering(args) -> int:
    doc = _load_document(args.document, args.denominator)
    name, covering = _pick_covering(doc, args.covering)
    reduced = reduce_covering(covering) if args.mode == "red" else intersection_core(covering)
    kept = set(reduced.names)
    removed = [n for n in covering.names if n not in kept]
    lines = [header_row(doc.universe.labels)]
    lines += covering_rows(f"member[{args.mode}]", reduced)
    lines.append("removed\t" + (" ".join(removed) if removed else "-"))
    directory = _figure_dir(args)
    if directory:
        path = figures.save_covering_heatmap(
            reduced, os.path.join(directory, f"{args.mode}-{name}.png")
        )
        lines.append(f"figure\t{path}")
    _emit(args, lines)
    return 0


def _cmd_lattice(args) -> int:
    doc = _load_document(args.document, args.denominator)
    names = args.covering or []
    if len(names) != 2:
        raise UsageError("lattice needs exactly two --covering flags")
    a = doc.family.covering_named(names[0])
    b = doc.family.covering_named(names[1])
    lines = [header_row(doc.universe.labels)]
    figure_source = None
    if args.operation == "union":
        result = covering_union(a, b)
        lines += covering_rows("member[union]", result)
        figure_source = ("union", result)
    elif args.operation == "intersection":
        result = covering_intersection(a, b)
        lines += covering_rows("member[intersection]", result)
        figure_source = ("intersection", result)
    else:
        lines.append(f"coarser\t{names[0]}->{names[1]}\t{str(is_coarser(a, b)).lower()}")
        lines.append(f"coarser\t{names[1]}->{names[0]}\t{str(is_coarser(b, a)).lower()}")
    directory = _figure_dir(args)
    if directory and figure_source:
        tag, result = figure_source
        path = figures.save_covering_heatmap(
            result, os.path.join(directory, f"{tag}-{names[0]}-{names[1]}.png")
        )
        lines.append(f"figure\t{path}")
    _emit(args, lines)
    return 0


def _compression_lines(result: CompressionResult, table: PartitionTable) -> list[str]:
    lines = []
    for name in result.image.names:
        lines.append(partition_row("partition", name, table.partition_for(name)))
    lines.append(partition_row("partition", "delta", table.delta))
    lines.append(partition_row("partition", "blocks", result.blocks))
    lines.append(f"refined\t{str(result.refined).lower()}")
    lines += mapping_rows("quotient", result.mapping)
    for target, sources in result.provenance:
        lines.append(f"block\t{target}\t" + " ".join(sources))
    lines.append(header_row(result.image.universe.labels))
    lines += family_rows(result.image)[1:]
    return lines


def _image_document(result: CompressionResult, denominator: int) -> SystemDocument:
    return SystemDocument(
        universe=result.image.universe,
        family=result.image,
        sets={},
        mappings={},
        denominator=denominator,
    )


def _cmd_compress(args) -> int:
    doc = _load_document(args.document, args.denominator)
    table = PartitionTable.from_family(doc.family)
    result = build_homomorphism(doc.family, table)
    lines = _compression_lines(result, table)
    directory = _figure_dir(args)
    if directory:
        path = figures.save_partition_chart(
            result.blocks, os.path.join(directory, "blocks.png"), title="quotient blocks"
        )
        lines.append(f"figure\t{path}")
    if args.out:
        Path(args.out).write_text(
            serialize_document(_image_document(result, doc.denominator)),
            encoding="utf-8",
        )
        lines.append(f"wrote\t{args.out}")
    sys.stdout.write(render(lines))
    return 0


def _cmd_reduct(args) -> int:
    doc = _load_document(args.document, args.denominator)
    on_image = args.on_image == "true"
    if on_image:
        result = build_homomorphism(doc.family)
        report = reduct_report(result.image)
    else:
        report = reduct_report(doc.family)
    lines = [f"computed-on\t{'image' if on_image else 'original'}"]
    for reduct in report.reducts:
        lines.append("reduct\t" + " ".join(reduct))
    lines.append("core\t" + (" ".join(report.core) if report.core else "-"))
    lines.append(
        "superfluous\t" + (" ".join(report.superfluous) if report.superfluous else "-")
    )
    lines.append(
        "reduct-intersection\t"
        + (" ".join(report.reduct_intersection) if report.reduct_intersection else "-")
    )
    lines.append(
        f"core-matches-intersection\t{str(report.core_matches_reduct_intersection).lower()}"
    )
    _emit(args, lines)
    return 0


def _cmd_dynamic(args, adding: bool) -> int:
    doc = _load_document(args.document, args.denominator)
    if args.covering is None:
        raise UsageError("this subcommand needs --covering NAME")
    name = args.covering
    if adding:
        # the named covering arrives: start from the family without it
        rest = [(n, c) for n, c in doc.family if n != name]
        if len(rest) == len(doc.family):
            raise UsageError(f"no covering named {name!r} in the document")
        base = CoveringFamily(doc.universe, rest)
        table = PartitionTable.from_family(base)
        family, table, result = add_covering(
            base, table, name, doc.family.covering_named(name)
        )
        operation = "dyn-add"
    else:
        table = PartitionTable.from_family(doc.family)
        family, table, result = remove_covering(doc.family, table, name)
        operation = "dyn-remove"
    scratch = build_homomorphism(family)
    verified = (
        result.mapping.image == scratch.mapping.image
        and result.blocks.blocks == scratch.blocks.blocks
    )
    lines = [f"operation\t{operation}\t{name}"]
    lines.append(f"verified\tincremental-matches-scratch\t{str(verified).lower()}")
    lines += _compression_lines(result, table)
    directory = _figure_dir(args)
    if directory:
        path = figures.save_partition_chart(
            result.blocks, os.path.join(directory, "blocks.png"), title="quotient blocks"
        )
        lines.append(f"figure\t{path}")
    if args.out:
        Path(args.out).write_text(
            serialize_document(_image_document(result, doc.denominator)),
            encoding="utf-8",
        )
        lines.append(f"wrote\t{args.out}")
    sys.stdout.write(render(lines))
    return 0


def _cmd_check(args) -> int:
    result = run_all(seed=args.seed)
    lines = list(result.lines())
    passed = sum(1 for c in result.checks if c.passed)
    lines.append(f"summary\t{passed}/{len(result.checks)} passed\tseed={args.seed}")
    _emit(args, lines)
    return 0 if result.ok else 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzycover",
        description="Fuzzy covering rough sets: approximations, reduction, compression.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, document=True):
        if document:
            p.add_argument("document", help="system file path or packaged fixture name")
        p.add_argument("--denominator", type=int, help="override the document grid")
        p.add_argument("--out", help="write the subcommand's output file here")

    p = sub.add_parser("validate", help="parse and echo a system document")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("neighborhood", help="neighborhood of every element")
    common(p)
    p.add_argument("--covering", help="covering name (optional when unique)")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=_cmd_neighborhood)

    p = sub.add_parser("approx", help="lower/upper approximations and roughness")
    common(p)
    p.add_argument("--covering", help="covering name (optional when unique)")
    p.add_argument("--set", required=True, help="name of the set to approximate")
    p.add_argument("--alpha", type=_fraction, help="lower cut level")
    p.add_argument("--beta", type=_fraction, help="upper cut level")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("reduce-covering", help="remove reducible or intersectional members")
    common(p)
    p.add_argument("--covering", help="covering name (optional when unique)")
    p.add_argument("--mode", choices=["red", "is"], default="red")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=_cmd_reduce_covering)

    p = sub.add_parser("lattice", help="covering union, intersection, or coarseness")
    p.add_argument("operation", choices=["union", "intersection", "coarser"])
    common(p)
    p.add_argument(
        "--covering",
        action="append",
        help="covering name; pass exactly twice",
    )
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("compress", help="quotient the system by its finest constant partition")
    common(p)
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("reduct", help="reducts, core, and superfluous coverings")
    common(p)
    p.add_argument(
        "--on-image",
        choices=["true", "false"],
        default="true",
        help="compress first and scan the image system (default true)",
    )
    p.set_defaults(func=_cmd_reduct)

    p = sub.add_parser("dyn-add", help="treat one covering as newly arrived")
    common(p)
    p.add_argument("--covering", help="name of the arriving covering")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=lambda a: _cmd_dynamic(a, adding=True))

    p = sub.add_parser("dyn-remove", help="drop one covering incrementally")
    common(p)
    p.add_argument("--covering", help="name of the covering to drop")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=lambda a: _cmd_dynamic(a, adding=False))

    p = sub.add_parser("check", help="golden examples plus seeded law suites")
    common(p, document=False)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except FuzzyCoverError as e:
        print(f"error\t{e.code}\t{e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
