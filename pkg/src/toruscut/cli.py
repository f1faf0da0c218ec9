"""Command line interface.

Subcommands operate on cut spec files (see specfile) and print a Report
in text or JSON form.  Exit codes: 0 on success, 2 for unreadable input
or grammar errors, 3 for semantic violations (non-contact profiles,
invalid cut data, mismatched endpoints).
"""

from __future__ import annotations

import argparse
import re
import sys

from .angles import Angle, Direction, QUARTER_TURN, format_angle, parse_angle
from .cuts import (
    CutSpec,
    LensDescriptor,
    LensKind,
    classify_lens,
    slice_by_ray,
    validate_cutspec,
)
from .errors import SpecSemanticError, SpecSyntaxError
from .forms import InvariantContactForm, contact_check, sweep
from .invariants import (
    MODE_FIXED,
    MODE_GL2Z,
    cc_count,
    cc_profile,
    detect_overtwisted,
    distinguish,
    homotopy_certificate,
)
from .models import alpha_cutspec, lens_cutspec, rotating_line_form
from .report import Item, Record, Report, digest, render_json, render_text
from .specfile import parse_spec
from .symplectization import check_cut_symplectization_commute

EXIT_OK = 0
EXIT_SYNTAX = 2
EXIT_SEMANTIC = 3

_LENS_TABLE = ((1, 1), (2, 1), (1, 2), (2, 3))


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _CliError(EXIT_SYNTAX, f"cannot read {path}: {e.strerror or e}")


def _load(path: str, validate: bool = True):
    text = _read(path)
    try:
        obj = parse_spec(text, validate=validate)
    except SpecSyntaxError as e:
        raise _CliError(EXIT_SYNTAX, f"{path}: {e}")
    except SpecSemanticError as e:
        raise _CliError(EXIT_SEMANTIC, f"{path}: {e}")
    return text, obj


def _require_cut(obj, path: str) -> CutSpec:
    if not isinstance(obj, CutSpec):
        raise _CliError(
            EXIT_SEMANTIC,
            f"{path}: no collapse data; this command needs collapse0 and collapse1",
        )
    return obj


def _angle_item(key: str, a: Angle) -> Item:
    return Item(key, format_angle(a), a.value())


def _pair_str(v) -> str:
    x, y = (v.x, v.y) if isinstance(v, Direction) else v
    return f"{x},{y}"


def _classification_items(desc: LensDescriptor) -> list[Item]:
    return [
        Item("kind", desc.kind.value),
        Item("slope", "-" if desc.slope is None else str(desc.slope)),
        Item(
            "normal-form",
            "-" if desc.normal_form is None else _pair_str(desc.normal_form),
        ),
        Item("basis-image", _pair_str(desc.raw_basis_data)),
    ]


def _is_standard_tight(spec: CutSpec, desc: LensDescriptor) -> bool:
    return (
        desc.kind is LensKind.SPHERE
        and desc.slope == 0
        and detect_overtwisted(spec) is None
        and sweep(spec.form) == QUARTER_TURN
    )


def _overtwisted_items(spec) -> list[Item]:
    cert = detect_overtwisted(spec)
    if cert is None:
        return [Item("overtwisted", "none-found")]
    return [
        Item("overtwisted", "disk-found"),
        Item("disk-side", str(cert.side)),
        Item("disk-j", str(cert.j)),
        Item("disk-t*", str(cert.point), cert.point.t_float()),
        _angle_item("disk-target", cert.target),
        Item("disk-coordinate", str(cert.fixed_coordinate)),
        Item("disk-description", cert.description),
    ]


def _profile_items(prof) -> list[Item]:
    items = [
        _angle_item("swept", prof.swept),
        Item("min", str(prof.min_count)),
        Item("max", str(prof.max_count)),
    ]
    for i, arc in enumerate(prof.arcs):
        items.append(
            Item(
                f"arc{i}",
                f"[{format_angle(arc.start)} .. {format_angle(arc.end)}] "
                f"span {format_angle(arc.span)} count {arc.count}",
                arc.span.value(),
            )
        )
    return items


def _witness_items(w) -> list[Item]:
    if w is None:
        return [Item("result", "indistinguishable")]
    items = [Item("result", "distinguished"), Item("mode", w.mode)]
    items.append(Item("xi+", _pair_str(w.xi_plus)))
    items.append(Item("counts+", f"{w.counts_plus[0]} vs {w.counts_plus[1]}"))
    if w.xi_minus is not None:
        items.append(Item("xi-", _pair_str(w.xi_minus)))
        items.append(Item("counts-", f"{w.counts_minus[0]} vs {w.counts_minus[1]}"))
    items.append(Item("summary-a", f"min {w.summary_a[0]} max {w.summary_a[1]}"))
    items.append(Item("summary-b", f"min {w.summary_b[0]} max {w.summary_b[1]}"))
    return items


# -- handlers -------------------------------------------------------------


def _cmd_check(args) -> tuple[Report, int]:
    text, obj = _load(args.file, validate=False)
    if isinstance(obj, InvariantContactForm):
        rec = Record(
            "contact-check",
            (
                Item("input", "invariant form (no collapse data)"),
                Item("contact", "yes"),
                Item("orientation", f"{contact_check(obj):+d}"),
                _angle_item("sweep", sweep(obj)),
            ),
        )
        return Report(f"check {args.file}", digest(text), (rec,)), EXIT_OK
    violations = validate_cutspec(obj)
    items = [
        Item("collapse0", _pair_str(obj.v0)),
        Item("collapse1", _pair_str(obj.v1)),
        Item("valid", "yes" if not violations else "no"),
    ]
    for i, v in enumerate(violations):
        where = "form" if v.end is None else f"end {v.end}"
        items.append(Item(f"violation{i}", f"{v.code} at {where}: {v.message}"))
    rec = Record("cut-validation", tuple(items))
    code = EXIT_OK if not violations else EXIT_SEMANTIC
    return Report(f"check {args.file}", digest(text), (rec,)), code


def _cmd_cut(args) -> tuple[Report, int]:
    text, obj = _load(args.file)
    spec = _require_cut(obj, args.file)
    desc = classify_lens(spec)
    items = _classification_items(desc)
    if _is_standard_tight(spec, desc):
        items.append(Item("tag", "standard-tight"))
    rec = Record("classification", tuple(items))
    return Report(f"cut {args.file}", digest(text), (rec,)), EXIT_OK


def _cmd_invariants(args) -> tuple[Report, int]:
    text, obj = _load(args.file)
    m, n = args.direction
    count = cc_count(obj, (m, n))
    rec = Record(
        "invariants",
        (
            Item("direction", _pair_str((m, n))),
            Item(f"cc({m},{n})", str(count)),
        ),
    )
    return Report(
        f"invariants {args.file} --direction {m},{n}", digest(text), (rec,)
    ), EXIT_OK


def _cmd_profile(args) -> tuple[Report, int]:
    text, obj = _load(args.file)
    rec = Record("cc-profile", tuple(_profile_items(cc_profile(obj))))
    return Report(f"profile {args.file}", digest(text), (rec,)), EXIT_OK


def _cmd_distinguish(args) -> tuple[Report, int]:
    text_a, a = _load(args.file_a)
    text_b, b = _load(args.file_b)
    mode = MODE_GL2Z if args.mod_gl2z else MODE_FIXED
    rec = Record("distinguish", tuple(_witness_items(distinguish(a, b, mode))))
    echo = f"distinguish {args.file_a} {args.file_b}"
    if args.mod_gl2z:
        echo += " --mod-gl2z"
    return Report(echo, digest(text_a + "\x00" + text_b), (rec,)), EXIT_OK


def _cmd_overtwisted(args) -> tuple[Report, int]:
    text, obj = _load(args.file)
    rec = Record("overtwisted", tuple(_overtwisted_items(obj)))
    return Report(f"overtwisted {args.file}", digest(text), (rec,)), EXIT_OK


def _cmd_homotopy(args) -> tuple[Report, int]:
    text_a, a = _load(args.file_a)
    text_b, b = _load(args.file_b)
    cert = homotopy_certificate(a, b)
    items = [Item("rule", cert.rule)]
    for i, z in enumerate(cert.zeros):
        items.append(
            Item(
                f"zero{i}",
                f"t = {z.point}, profiles differ by {z.odd_multiple} pi, "
                f"s = {z.s}, third component {z.third_component}",
                z.point.t_float(),
            )
        )
    for i, (lo, hi) in enumerate(cert.zero_intervals):
        items.append(Item(f"interval{i}", f"t in [{lo}, {hi}], s = 0.5"))
    items.append(Item("planar-zeros", str(len(cert.zeros))))
    items.append(Item("zero-intervals", str(len(cert.zero_intervals))))
    items.append(Item("argument", cert.argument))
    rec = Record("homotopy", tuple(items))
    echo = f"homotopy {args.file_a} {args.file_b}"
    return Report(echo, digest(text_a + "\x00" + text_b), (rec,)), EXIT_OK


def _cmd_slice(args) -> tuple[Report, int]:
    text, obj = _load(args.file)
    form = obj.form if isinstance(obj, CutSpec) else obj
    m, n = args.eta
    w0, w1 = args.window
    pieces = slice_by_ray(form, (m, n), (w0, w1))
    records = [
        Record(
            "slices",
            (
                Item("eta", _pair_str((m, n))),
                _angle_item("window-lo", w0),
                _angle_item("window-hi", w1),
                Item("count", str(len(pieces))),
            ),
        )
    ]
    for i, piece in enumerate(pieces):
        desc = classify_lens(piece)
        items = [
            Item("valid", "yes" if not validate_cutspec(piece) else "no"),
            _angle_item("value-lo", piece.form.phi.values[0]),
            _angle_item("value-hi", piece.form.phi.values[-1]),
        ]
        items += _classification_items(desc)
        items += _overtwisted_items(piece)
        records.append(Record(f"slice{i}", tuple(items)))
    echo = (
        f"slice {args.file} --eta {m},{n} "
        f"--window {format_angle(w0)} {format_angle(w1)}"
    )
    return Report(echo, digest(text), tuple(records)), EXIT_OK


def _cmd_symplectization(args) -> tuple[Report, int]:
    text, obj = _load(args.file)
    spec = _require_cut(obj, args.file)
    rep = check_cut_symplectization_commute(spec)
    items = [
        Item(row.name, f"{'pass' if row.passed else 'FAIL'}: {row.detail}")
        for row in rep.rows
    ]
    items.append(Item("verdict", "commute" if rep.passed else "failed"))
    rec = Record("symplectization", tuple(items))
    code = EXIT_OK if rep.passed else EXIT_SEMANTIC
    return Report(f"symplectization-check {args.file}", digest(text), (rec,)), code


def _reproduce_records(kmax: int) -> list[Record]:
    records = []
    specs = {k: alpha_cutspec(k) for k in range(kmax + 1)}
    for k in range(kmax + 1):
        spec = specs[k]
        desc = classify_lens(spec)
        prof = cc_profile(spec)
        items = _classification_items(desc)
        items.append(Item("cc(-1,1)", str(cc_count(spec, (-1, 1)))))
        items.append(Item("cc(1,-1)", str(cc_count(spec, (1, -1)))))
        items.append(Item("profile-min", str(prof.min_count)))
        items.append(Item("profile-max", str(prof.max_count)))
        items += _overtwisted_items(spec)
        if _is_standard_tight(spec, desc):
            items.append(Item("tag", "standard-tight"))
        records.append(Record(f"alpha[k={k}]", tuple(items)))
    for k in range(1, kmax + 1):
        for l in range(k + 1, kmax + 1):
            items = []
            w = distinguish(specs[k], specs[l], MODE_FIXED)
            items.append(Item("fixed-action", "distinguished" if w else "indistinguishable"))
            if w is not None:
                items.append(Item("xi+", _pair_str(w.xi_plus)))
                items.append(
                    Item("counts+", f"{w.counts_plus[0]} vs {w.counts_plus[1]}")
                )
                items.append(Item("xi-", _pair_str(w.xi_minus)))
                items.append(
                    Item("counts-", f"{w.counts_minus[0]} vs {w.counts_minus[1]}")
                )
            g = distinguish(specs[k], specs[l], MODE_GL2Z)
            items.append(Item("modulo-GL2Z", "distinguished" if g else "indistinguishable"))
            if g is not None:
                items.append(Item("summary-a", f"min {g.summary_a[0]} max {g.summary_a[1]}"))
                items.append(Item("summary-b", f"min {g.summary_b[0]} max {g.summary_b[1]}"))
            records.append(Record(f"distinguish[k={k},l={l}]", tuple(items)))
    for k, l in _LENS_TABLE:
        for j in (1, 2, 3):
            spec = lens_cutspec(k, l, j)
            desc = classify_lens(spec)
            prof = cc_profile(spec)
            items = _classification_items(desc)
            items.append(Item("profile-min", str(prof.min_count)))
            items.append(Item("profile-max", str(prof.max_count)))
            records.append(Record(f"lens[k={k},l={l},j={j}]", tuple(items)))
    line = rotating_line_form(3)
    window = (Angle(Direction(-1, 0), -2), Angle(Direction(-1, 0), 1))
    pieces = slice_by_ray(line, (0, 1), window)
    items = [
        Item("eta", "0,1"),
        _angle_item("window-lo", window[0]),
        _angle_item("window-hi", window[1]),
        Item("count", str(len(pieces))),
    ]
    for i, piece in enumerate(pieces):
        desc = classify_lens(piece)
        ot = detect_overtwisted(piece)
        items.append(
            Item(
                f"slice{i}",
                f"kind {desc.kind.value}, overtwisted "
                f"{'none-found' if ot is None else 'disk-found'}",
            )
        )
    records.append(Record("line-slices", tuple(items)))
    return records


def _cmd_reproduce(args) -> tuple[Report, int]:
    if args.kmax < 0:
        raise _CliError(EXIT_SYNTAX, "--kmax must be nonnegative")
    records = _reproduce_records(args.kmax)
    echo = f"reproduce-paper --kmax {args.kmax}"
    return Report(echo, digest(echo), tuple(records)), EXIT_OK


# -- argument parsing ------------------------------------------------------


def _pair_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected an integer pair m,n, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer pair m,n, got {text!r}")


def _angle_arg(text: str) -> Angle:
    try:
        return parse_angle(text)
    except (ValueError, ArithmeticError) as e:
        raise argparse.ArgumentTypeError(str(e))


# Integer pairs and angle literals may start with '-', which argparse
# would read as an option; widening the negative-number matcher makes
# tokens like -1,1 and -1,0;-2 parse as values.
_DASH_VALUE = re.compile(r"^-\d+(?:,-?\d+)?(?:;-?\d+)?$")


def _allow_dash_values(p: argparse.ArgumentParser) -> None:
    if hasattr(p, "_negative_number_matcher"):
        p._negative_number_matcher = _DASH_VALUE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toruscut",
        description="exact invariants of torus-invariant contact cuts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output rendering (default: text)",
        )
        return p

    p = add("check", _cmd_check, "validate a spec file and report violations")
    p.add_argument("file")

    p = add("cut", _cmd_cut, "classify the closed cut space")
    p.add_argument("file")

    p = add("invariants", _cmd_invariants, "ray component count along a direction")
    _allow_dash_values(p)
    p.add_argument("file")
    p.add_argument("--direction", type=_pair_arg, required=True, metavar="M,N")

    p = add("profile", _cmd_profile, "full count-by-ray profile")
    p.add_argument("file")

    p = add("distinguish", _cmd_distinguish, "compare two cut data by their counts")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--mod-gl2z", action="store_true", help="compare modulo relabeling")

    p = add("overtwisted", _cmd_overtwisted, "search the standard disk family")
    p.add_argument("file")

    p = add("homotopy", _cmd_homotopy, "explicit homotopy between covector fields")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = add("slice", _cmd_slice, "cut pieces of a long form along a ray")
    _allow_dash_values(p)
    p.add_argument("file")
    p.add_argument("--eta", type=_pair_arg, required=True, metavar="M,N")
    p.add_argument(
        "--window",
        type=_angle_arg,
        nargs=2,
        required=True,
        metavar=("W0", "W1"),
        help="angle literals x,y;n bounding the profile values",
    )

    p = add(
        "symplectization-check",
        _cmd_symplectization,
        "verify cut and symplectization commute",
    )
    p.add_argument("file")

    p = add("reproduce-paper", _cmd_reproduce, "recompute the worked examples")
    p.add_argument("--kmax", type=int, default=3)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        report, code = args.handler(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except SpecSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    except (SpecSemanticError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC
    render = render_json if args.format == "json" else render_text
    sys.stdout.write(render(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
