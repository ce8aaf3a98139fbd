"""Command-line front end: every calculator behind one deterministic binary.

Subcommands: pardeg, stability, toledo, mw, hitchin, components, tables,
dims, vcoh, orbifold, characters, roots, s1-report.  Output is JSON by
default (Markdown for ``tables``), switchable with ``--format``; identical
inputs produce byte-identical output.  Validation failures exit with code 2
and a machine-readable error object ({"error": code, ...}) on stdout.  The
enumeration cap (default 10^6 tuples) can be overridden with ``--cap`` or
the ``PARHIGGS_CAP`` environment variable.
"""

from __future__ import annotations

import argparse
import csv as csv_module
import io
import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction

from . import components as comp
from . import dimension as dim
from .exact_core import DomainError, rat_to_str
from .orbifold import (
    VLineBundle,
    kawasaki_euler,
    pic_v_structure,
    square_root_types,
    vline_degree,
    vline_to_json,
    z2_character_count,
    z2_character_enumerate,
)
from .parbun import bundle_from_json, line_from_json, pardeg, parslope
from .stability import (
    arrow_feasibility_violations,
    general_mw_interval,
    hitchin_model,
    hitchin_sp_triple,
    is_maximal,
    milnor_wood_bound,
    model_from_json,
    model_to_json,
    sp_triple_from_json,
    sp_triple_to_json,
    stability_verdict,
    toledo,
)
from .surface import (
    MarkedPoint,
    MarkedSurface,
    require_hyperbolic,
    standard_surface,
)
from .vcoh import v_cohomology_ranks

__all__ = ["main"]

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class CommandOutput:
    payload: dict
    markdown: str | None = None
    csv: str | None = None
    trailer: str | None = None
    default_format: str = "json"


# --------------------------------------------------------------------------
# serialization helpers


def _jsonable(value):
    if isinstance(value, Fraction):
        return rat_to_str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _dump(payload: dict) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2)


def _inline(value) -> str:
    converted = _jsonable(value)
    if isinstance(converted, str):
        return converted
    return json.dumps(converted, sort_keys=True, separators=(",", ":"))


def _generic_markdown(payload: dict) -> str:
    lines = ["| field | value |", "| --- | --- |"]
    for key in sorted(payload):
        lines.append(f"| {key} | {_inline(payload[key])} |")
    return "\n".join(lines)


def _generic_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv_module.writer(buf, lineterminator="\n")
    writer.writerow(["field", "value"])
    for key in sorted(payload):
        writer.writerow([key, _inline(payload[key])])
    return buf.getvalue().rstrip("\n")


# --------------------------------------------------------------------------
# argument helpers


def _parse_orders(text: str | None, s: int) -> tuple[int, ...]:
    if text is None:
        return (2,) * s
    orders = tuple(int(x) for x in text.split(",") if x.strip())
    if len(orders) != s:
        raise DomainError("orders_length_mismatch", expected=s,
                          got=len(orders))
    return orders


def _build_surface(g: int, s: int, orders_text: str | None) -> MarkedSurface:
    orders = _parse_orders(orders_text, s)
    points = tuple(MarkedPoint(f"x{i + 1}", order)
                   for i, order in enumerate(orders))
    surface = MarkedSurface(g, points)
    # the library oracles accept spherical input; the CLI sticks to the
    # hyperbolic range every downstream formula is stated for
    require_hyperbolic(surface)
    return surface


def _parse_bits(text: str, length: int, what: str) -> tuple[int, ...]:
    bits = tuple(int(x) for x in text.split(",") if x.strip())
    if len(bits) != length:
        raise DomainError("bits_length_mismatch", field=what,
                          expected=length, got=len(bits))
    return bits


def _load_json(text: str, what: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError("bad_json_argument", field=what,
                          detail=str(exc)) from exc


_SP_NAME = re.compile(r"^sp(\d+)$")

_MODES = {
    "max": comp.CountMode.max_union(),
    "fixed-even": comp.CountMode.fixed_parity("even"),
    "fixed-odd": comp.CountMode.fixed_parity("odd"),
    "punctured": comp.CountMode.punctured(),
    "nonparabolic": comp.CountMode.nonparabolic(),
    "kd-twisted": comp.CountMode.kd_twisted(),
}


def _parse_group(name: str, n: int | None) -> comp.GroupDescriptor:
    text = name.lower()
    match = _SP_NAME.match(text)
    if match:
        value = int(match.group(1))
        if value % 2 != 0 or value < 2:
            raise DomainError("unknown_group", name=name)
        return comp.sp2nr(value // 2)
    if text == "sp2n":
        if n is None:
            raise DomainError("group_needs_n", name=name)
        return comp.sp2nr(n)
    if text == "su":
        if n is None:
            raise DomainError("group_needs_n", name=name)
        return comp.sunn(n)
    if text in ("so-star", "sostar"):
        if n is None:
            raise DomainError("group_needs_n", name=name)
        return comp.so_star_2n(n)
    if text in ("so0-23", "so023"):
        return comp.so0_2n(3)
    if text in ("so0-2n", "so02n"):
        if n is None:
            raise DomainError("group_needs_n", name=name)
        return comp.so0_2n(n)
    if text == "e7":
        return comp.e7_minus25()
    if name.startswith("split:"):
        return comp.split_group(name.split(":", 1)[1])
    raise DomainError("unknown_group", name=name)


def _resolve_cap(args) -> int:
    if args.cap is not None:
        cap = args.cap
    else:
        cap = int(os.environ.get("PARHIGGS_CAP", DEFAULT_CAP))
    if cap <= 0:
        raise DomainError("bad_cap", cap=cap)
    return cap


# --------------------------------------------------------------------------
# subcommand handlers


def _cmd_pardeg(args, cap) -> CommandOutput:
    surface = _build_surface(args.g, args.s, args.orders)
    if (args.line is None) == (args.bundle is None):
        raise DomainError("need_exactly_one_of", fields=["line", "bundle"])
    if args.line is not None:
        line = line_from_json(_load_json(args.line, "line"))
        return CommandOutput({"pardeg": pardeg(line, surface)})
    bundle = bundle_from_json(_load_json(args.bundle, "bundle"))
    return CommandOutput({"pardeg": pardeg(bundle, surface),
                          "parslope": parslope(bundle, surface),
                          "rank": bundle.rank})


def _cmd_stability(args, cap) -> CommandOutput:
    if (args.model is None) == (args.triple is None):
        raise DomainError("need_exactly_one_of", fields=["model", "triple"])
    if args.model is not None:
        model = model_from_json(_load_json(args.model, "model"))
    else:
        triple = sp_triple_from_json(_load_json(args.triple, "triple"))
        model = triple.to_decomposable()
    report = stability_verdict(model)
    payload = report.to_json()
    payload["feasibility_violations"] = [list(a) for a in sorted(
        arrow_feasibility_violations(model))]
    return CommandOutput(payload)


def _cmd_toledo(args, cap) -> CommandOutput:
    triple = sp_triple_from_json(_load_json(args.triple, "triple"))
    surface = triple.surface
    bound = milnor_wood_bound(triple.n, surface.genus, surface.s)
    return CommandOutput({"toledo": toledo(triple), "bound": bound,
                          "is_maximal": is_maximal(triple), "n": triple.n})


def _cmd_mw(args, cap) -> CommandOutput:
    payload = {"bound": milnor_wood_bound(args.n, args.g, args.s)}
    if (args.rk_plus is None) != (args.rk_minus is None):
        raise DomainError("need_both_or_neither",
                          fields=["rk-plus", "rk-minus"])
    if args.rk_plus is not None:
        lower, upper = general_mw_interval(args.rk_plus, args.rk_minus,
                                           args.g, args.s)
        payload["interval"] = {"lower": lower, "upper": upper}
    return CommandOutput(payload)


def _cmd_hitchin(args, cap) -> CommandOutput:
    model = hitchin_model(args.k, args.g, args.s)
    report = stability_verdict(model)
    payload = {
        "model": model_to_json(model),
        "pardegs": [pardeg(l, model.surface) for l in model.summands],
        "total_pardeg": sum((pardeg(l, model.surface)
                             for l in model.summands), Fraction(0)),
        "verdict": report.verdict,
    }
    if args.triple:
        triple = hitchin_sp_triple(args.k, args.g, args.s)
        payload["sp_triple"] = sp_triple_to_json(triple)
        payload["toledo"] = toledo(triple)
        payload["bound"] = milnor_wood_bound(triple.n, args.g, args.s)
        payload["is_maximal"] = is_maximal(triple)
    return CommandOutput(payload)


def _components_markdown(report: comp.ComponentCountReport) -> str:
    lines = [f"## {report.group.display()}, genus {report.genus}, "
             f"marked points {report.marked_points}, "
             f"mode {report.mode.variant}"
             + (f" ({report.mode.parity})" if report.mode.parity else ""),
             "",
             "| case | enumerated | closed form |",
             "| --- | --- | --- |"]
    for case in report.cases:
        lines.append(f"| {case.label} | {case.enumerated} | "
                     f"{case.closed_form} |")
    lines.append(f"| total ({report.count_kind}) | "
                 f"{report.total_enumerated} | {report.total_closed_form} |")
    lines.append("")
    lines.append(f"match: {str(report.match).lower()}")
    if report.verdict:
        lines.append(f"verdict: {report.verdict}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _components_csv(report: comp.ComponentCountReport) -> str:
    buf = io.StringIO()
    writer = csv_module.writer(buf, lineterminator="\n")
    writer.writerow(["case", "enumerated", "closed_form"])
    for case in report.cases:
        writer.writerow([case.label, case.enumerated, case.closed_form])
    writer.writerow(["total", report.total_enumerated,
                     report.total_closed_form])
    return buf.getvalue().rstrip("\n")


def _cmd_components(args, cap) -> CommandOutput:
    group = _parse_group(args.group, args.n)
    mode = _MODES[args.mode]
    report = comp.count_components(group, args.g, args.s, mode, cap=cap)
    trailer = None
    if args.emit_tables:
        trailer = comp.tables_markdown(comp.emit_tables(args.g, args.s),
                                       args.g, args.s)
    return CommandOutput(comp.report_to_json(report),
                         markdown=_components_markdown(report),
                         csv=_components_csv(report),
                         trailer=trailer)


def _tables_payload(tables) -> dict:
    return {"tables": [
        {"title": t.title,
         "rows": [{"label": r.label, "count": r.count,
                   "teichmuller": r.teichmuller} for r in t.rows],
         "footnotes": list(t.footnotes)} for t in tables]}


def _tables_csv(tables) -> str:
    buf = io.StringIO()
    writer = csv_module.writer(buf, lineterminator="\n")
    writer.writerow(["table", "label", "count", "teichmuller"])
    for index, table in enumerate(tables, start=1):
        for row in table.rows:
            writer.writerow([index, row.label, row.count, row.teichmuller])
    return buf.getvalue().rstrip("\n")


def _cmd_tables(args, cap) -> CommandOutput:
    tables = comp.emit_tables(args.g, args.s)
    payload = dict(_tables_payload(tables), genus=args.g,
                   marked_points=args.s)
    return CommandOutput(payload,
                         markdown=comp.tables_markdown(tables, args.g, args.s),
                         csv=_tables_csv(tables),
                         default_format="markdown")


def _parse_flag_spec(text: str, n: int, s: int):
    if text == "full":
        return dim.full_flag_multiplicities(n, s)
    if text == "trivial":
        return ((n,),) * s
    spec = _load_json(text, "flags")
    if not isinstance(spec, list):
        raise DomainError("bad_json_argument", field="flags",
                          detail="expected a list of multiplicity lists")
    return [tuple(int(k) for k in point) for point in spec]


_DIMS_REQUIRED = {"paradim": "n", "sparadim": "n", "complex": "dim_c",
                  "teich": "lie_group"}


def _cmd_dims(args, cap) -> CommandOutput:
    needed = _DIMS_REQUIRED[args.formula]
    if getattr(args, needed) is None:
        raise DomainError("missing_argument",
                          field=needed.replace("_", "-"),
                          formula=args.formula)
    if args.formula == "paradim":
        value = dim.dim_parabolic_gl(args.n, args.g, args.s)
        return CommandOutput({"formula": "paradim", "dimension": value})
    if args.formula == "sparadim":
        mults = _parse_flag_spec(args.flags, args.n, args.s)
        value = dim.dim_strongly_parabolic_gl(args.n, args.g, args.s, mults)
        return CommandOutput({"formula": "sparadim", "dimension": value})
    if args.formula == "complex":
        data = dim.complex_group_data(args.name, args.dim_c)
        report = dim.dim_complex_group(data, args.g, args.s)
        payload = dict(dim.dim_report_to_json(report), formula="complex",
                       group=data.name)
        return CommandOutput(payload)
    data = dim.lie_catalog(args.lie_group)
    report = dim.teichmuller_dimension(data, args.g, args.s,
                                       rk_m_c=args.rk_mc)
    payload = dict(dim.dim_report_to_json(report), formula="teich",
                   group=data.name)
    return CommandOutput(payload)


def _cmd_vcoh(args, cap) -> CommandOutput:
    require_hyperbolic(standard_surface(args.g, args.s))
    ranks, provenance = v_cohomology_ranks(args.g, args.s, args.mode)
    return CommandOutput({"h0": ranks.h0, "h1": ranks.h1, "h2": ranks.h2,
                          "euler": ranks.euler(), "mode": args.mode,
                          "provenance": provenance})


def _vline_from_args(args, surface) -> VLineBundle:
    bits = _parse_bits(args.isotropy, surface.s, "isotropy") \
        if args.isotropy else (0,) * surface.s
    isotropy = {label: bit for label, bit in zip(surface.labels(), bits)}
    return VLineBundle(args.desing_degree, isotropy)


def _cmd_orbifold(args, cap) -> CommandOutput:
    surface = _build_surface(args.g, args.s, args.orders)
    vline = _vline_from_args(args, surface)
    payload = {
        "degree": vline_degree(vline, surface),
        "kawasaki_euler": kawasaki_euler(vline, surface),
        "pic_identity_component":
            pic_v_structure(surface).identity_component_label(),
    }
    try:
        payload["square_root_total"] = square_root_types(
            vline, surface).total
    except DomainError:
        payload["square_root_total"] = None
    return CommandOutput(payload)


def _cmd_characters(args, cap) -> CommandOutput:
    surface = _build_surface(args.g, args.s, args.orders)
    payload = {"count": z2_character_count(surface)}
    if args.enumerate:
        characters = z2_character_enumerate(surface, cap=cap)
        payload["characters"] = [{"ab": list(ch.ab), "sigma": list(ch.sigma)}
                                 for ch in characters]
    return CommandOutput(payload)


def _cmd_roots(args, cap) -> CommandOutput:
    surface = _build_surface(args.g, args.s, args.orders)
    vline = _vline_from_args(args, surface)
    family = square_root_types(vline, surface)
    return CommandOutput({
        "types": [vline_to_json(t) for t in family.types],
        "type_count": len(family.types),
        "torsion_multiplicity": family.torsion_multiplicity,
        "total": family.total,
    })


def _cmd_s1_report(args, cap) -> CommandOutput:
    group = _parse_group(args.group, args.n)
    report = comp.s1_reduction_report(group, args.g)
    return CommandOutput(comp.s1_report_to_json(report))


# --------------------------------------------------------------------------
# parser


def _add_surface_flags(sub, with_orders=True):
    sub.add_argument("--g", type=int, required=True, help="genus")
    sub.add_argument("--s", type=int, required=True,
                     help="number of marked points")
    if with_orders:
        sub.add_argument("--orders", help="comma-separated isotropy orders "
                                          "(default: all 2)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parhiggs",
        description="Exact invariants of parabolic G-Higgs bundle moduli.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown", "csv"),
                        help="output format (default json; markdown for "
                             "'tables')")
    common.add_argument("--cap", type=int,
                        help=f"enumeration cap (default {DEFAULT_CAP}, or "
                             "PARHIGGS_CAP)")
    subs = parser.add_subparsers(dest="command", required=True,
                                 parser_class=lambda **kw: argparse.ArgumentParser(
                                     parents=[common], **kw))

    sub = subs.add_parser("pardeg", help="parabolic degree of a line/bundle")
    _add_surface_flags(sub)
    sub.add_argument("--line", help="parabolic line bundle JSON")
    sub.add_argument("--bundle", help="parabolic bundle JSON")
    sub.set_defaults(handler=_cmd_pardeg)

    sub = subs.add_parser("stability", help="stability verdict for a model")
    sub.add_argument("--model", help="decomposable model JSON")
    sub.add_argument("--triple", help="Sp(2n,R) triple JSON")
    sub.set_defaults(handler=_cmd_stability)

    sub = subs.add_parser("toledo", help="Toledo invariant of a triple")
    sub.add_argument("--triple", required=True, help="Sp(2n,R) triple JSON")
    sub.set_defaults(handler=_cmd_toledo)

    sub = subs.add_parser("mw", help="Milnor-Wood bound (and interval)")
    sub.add_argument("--n", type=int, required=True)
    _add_surface_flags(sub, with_orders=False)
    sub.add_argument("--rk-plus", type=int, dest="rk_plus")
    sub.add_argument("--rk-minus", type=int, dest="rk_minus")
    sub.set_defaults(handler=_cmd_mw)

    sub = subs.add_parser("hitchin", help="Hitchin-section model at rank k")
    sub.add_argument("--k", type=int, required=True)
    _add_surface_flags(sub, with_orders=False)
    sub.add_argument("--triple", action="store_true",
                     help="include the Sp form (k even)")
    sub.set_defaults(handler=_cmd_hitchin)

    sub = subs.add_parser("components", help="connected-component counts")
    sub.add_argument("--group", required=True,
                     help="sp2|sp4|sp2n|su|so-star|so0-23|so0-2n|e7|split:NAME")
    sub.add_argument("--n", type=int, help="family parameter where needed")
    _add_surface_flags(sub, with_orders=False)
    sub.add_argument("--mode", choices=sorted(_MODES), default="max")
    sub.add_argument("--emit-tables", action="store_true", dest="emit_tables",
                     help="append the three Markdown tables")
    sub.set_defaults(handler=_cmd_components)

    sub = subs.add_parser("tables", help="instantiate the component tables")
    _add_surface_flags(sub, with_orders=False)
    sub.set_defaults(handler=_cmd_tables)

    sub = subs.add_parser("dims", help="moduli dimension formulas")
    sub.add_argument("--formula", required=True,
                     choices=("paradim", "sparadim", "complex", "teich"))
    sub.add_argument("--n", type=int, help="rank for paradim/sparadim")
    _add_surface_flags(sub, with_orders=False)
    sub.add_argument("--flags", default="full",
                     help="'full', 'trivial', or JSON multiplicities")
    sub.add_argument("--dim-c", type=int, dest="dim_c",
                     help="complex dimension for --formula complex")
    sub.add_argument("--name", default="complex group",
                     help="group name for --formula complex")
    sub.add_argument("--lie-group", dest="lie_group",
                     help="catalog name for --formula teich")
    sub.add_argument("--rk-mc", type=int, dest="rk_mc",
                     help="rank of E(m^C) for the statement reading")
    sub.set_defaults(handler=_cmd_dims)

    sub = subs.add_parser("vcoh", help="V-surface cohomology ranks")
    _add_surface_flags(sub, with_orders=False)
    sub.add_argument("--mode", default="order2",
                     choices=("order2", "punctured", "odd_order"))
    sub.set_defaults(handler=_cmd_vcoh)

    sub = subs.add_parser("orbifold", help="line V-bundle invariants")
    _add_surface_flags(sub)
    sub.add_argument("--desing-degree", type=int, required=True,
                     dest="desing_degree")
    sub.add_argument("--isotropy", help="comma-separated residues")
    sub.set_defaults(handler=_cmd_orbifold)

    sub = subs.add_parser("characters", help="Z2 character counts")
    _add_surface_flags(sub)
    sub.add_argument("--enumerate", action="store_true")
    sub.set_defaults(handler=_cmd_characters)

    sub = subs.add_parser("roots", help="square-root types of a V-bundle")
    _add_surface_flags(sub)
    sub.add_argument("--desing-degree", type=int, required=True,
                     dest="desing_degree")
    sub.add_argument("--isotropy", help="comma-separated residues")
    sub.set_defaults(handler=_cmd_roots)

    sub = subs.add_parser("s1-report", help="single-puncture reduction")
    sub.add_argument("--group", required=True)
    sub.add_argument("--n", type=int)
    sub.add_argument("--g", type=int, required=True)
    sub.set_defaults(handler=_cmd_s1_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0

    try:
        cap = _resolve_cap(args)
        output = args.handler(args, cap)
    except DomainError as err:
        print(_dump(err.payload()))
        return 2

    fmt = args.format or output.default_format
    if fmt == "json":
        text = _dump(output.payload)
    elif fmt == "markdown":
        text = output.markdown if output.markdown is not None \
            else _generic_markdown(output.payload)
    else:
        text = output.csv if output.csv is not None \
            else _generic_csv(output.payload)
    print(text)
    if output.trailer is not None:
        print()
        print(output.trailer)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
