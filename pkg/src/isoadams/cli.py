"""Command-line surface: element arithmetic, resolutions, chart
emission/comparison, Massey products, and the isotropic-vs-classical
chart identification.

Exit codes: 0 success/match, 1 mismatch, 2 usage error, 3 window
truncation under --strict.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import adem, charts, homological as H, isotropic as iso, milnor
from .charts import ExtChart

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3


@dataclass
class JobConfig:
    """Reproducibility record stamped into emitted charts: identical
    configs yield byte-identical outputs."""

    command: str
    flavor: str = "classical"
    tmax: int = 12
    smax: int = 8
    qmin: Optional[int] = None
    qmax: Optional[int] = None
    nmax: Optional[int] = None
    seed: int = 0
    fmt: str = "csv"
    strict: bool = False

    @classmethod
    def from_args(cls, args) -> "JobConfig":
        return cls(
            command=args.command,
            flavor=getattr(args, "flavor", "isotropic"),
            tmax=args.tmax,
            smax=args.smax,
            qmin=args.qmin,
            qmax=args.qmax,
            nmax=args.nmax,
            seed=args.seed,
            fmt=args.format,
            strict=args.strict,
        )

    def as_meta(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def _emit(chart: ExtChart, fmt: str, out: Optional[str]) -> None:
    if fmt == "csv":
        text = charts.to_csv(chart)
    elif fmt == "json":
        text = charts.to_json(chart)
    elif fmt == "svg":
        text = charts.to_svg(chart)
    elif fmt == "ascii":
        text = charts.to_ascii(chart)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _filter_weights(chart: ExtChart, qmin: Optional[int], qmax: Optional[int]) -> None:
    if qmin is None and qmax is None:
        return
    keep = {}
    for (s, deg), dim in chart.cells.items():
        if len(deg) == 2:
            if qmin is not None and deg[1] < qmin:
                continue
            if qmax is not None and deg[1] > qmax:
                continue
        keep[(s, deg)] = dim
    chart.cells = keep


def _load_chart(path: str) -> ExtChart:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return charts.from_json(text)
    return charts.from_csv(text, flavor=Path(path).stem)


# ---------------------------------------------------------------------------
# commands


def cmd_mul(args) -> int:
    flavor = args.flavor
    try:
        if flavor == "A0":
            lhs = milnor.parse_element(args.lhs)
            rhs = milnor.parse_element(args.rhs)
            product = milnor.multiply(lhs, rhs)
            if args.basis == "qepr":
                print(milnor.format_element(product))
            else:
                print(milnor.format_prqe(milnor.qepr_to_prqe(product)))
        else:
            u = adem.parse_word(args.lhs)
            v = adem.parse_word(args.rhs)
            word_flavor = adem.CLASSICAL if flavor == "classical" else adem.EVEN
            product = adem.multiply_words(
                adem.adem_reduce(u, word_flavor), adem.adem_reduce(v, word_flavor)
            )
            print(product)
    except (milnor.ParseError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _field_chart(flavor: str, smax: int, tmax: int) -> tuple[ExtChart, H.FreeResolution]:
    alg = H.algebra_for(flavor, tmax + 2)
    res = H.resolve(alg, smax=smax, pmax=tmax)
    chart = H.ext_chart_field(res)
    _fill_product_table(chart, res)
    return chart, res


def _fill_product_table(chart: ExtChart, res: H.FreeResolution) -> None:
    """Pairwise Yoneda products of the named classes, recorded by name
    where the result cell carries a name and by cell otherwise."""
    names = sorted(chart.classes)
    for n1 in names:
        for n2 in names:
            s1, d1, i1 = chart.classes[n1]
            s2, d2, i2 = chart.classes[n2]
            s, deg = s1 + s2, H.add_deg(d1, d2)
            if s > chart.smax or deg[0] > chart.tmax:
                continue
            prod = H.yoneda_product(
                res, H.class_of_generator(res, s1, d1, i1), H.class_of_generator(res, s2, d2, i2)
            )
            if prod.bits == 0:
                chart.products[(n1, n2)] = "0"
                continue
            named = None
            for k in range(res.gen_count(s, deg)):
                if prod.bits == 1 << k:
                    named = chart.class_name_at(s, deg, k)
            chart.products[(n1, n2)] = named or {
                "s": s,
                "t": deg[0],
                **({"u": deg[1]} if len(deg) > 1 else {}),
                "indices": [k for k in range(res.gen_count(s, deg)) if (prod.bits >> k) & 1],
            }


def _isotropic_charts(
    smax: int,
    tmax_classical: int,
    nmax: Optional[int],
    pmin: Optional[int] = None,
    pmax_h: int = 0,
):
    """The isotropic chart plus the classical chart it is compared to.

    Returns (iso chart, classical chart, action table report)."""
    pmax = 2 * tmax_classical
    if nmax is None and pmin is None:
        window = iso.window_for_depth(-(pmax + 2))
    elif pmin is None:
        # shallowest depth the requested generator range supports
        window = iso.IsotropicWindow(nmax, iso.r_degree(nmax + 1).p + 1, pmax_h)
    elif nmax is None:
        window = iso.window_for_depth(pmin)
    else:
        window = iso.IsotropicWindow(nmax, pmin, pmax_h)
    table = iso.solve_action_table(n_max=window.n_max, w_max=tmax_classical)
    coeffs = iso.isotropic_coefficients(table, window)

    def covers(d):
        decoded = iso.ext_from_degree(d)
        return decoded is None or window.contains(decoded)

    res = H.resolve(H.algebra_for("A0", pmax + 2), smax=smax, pmax=pmax)
    ichart = H.ext_chart_coefficients(res, coeffs, flavor="isotropic", covers=covers)
    cchart, _ = _field_chart("classical", smax, tmax_classical)
    return ichart, cchart, table.report


def cmd_resolve(args) -> int:
    if args.flavor == "isotropic":
        ichart, _, report = _isotropic_charts(args.smax, args.tmax // 2, args.nmax, args.pmin, args.pmax or 0)
        if not report.unique:
            print("action table not unique:", report.underdetermined, report.inconsistent, file=sys.stderr)
            return EXIT_MISMATCH
        chart = ichart
    else:
        chart, _ = _field_chart(args.flavor, args.smax, args.tmax)
    _filter_weights(chart, args.qmin, args.qmax)
    chart.meta["job"] = JobConfig.from_args(args).as_meta()
    _emit(chart, args.format, args.out)
    truncated_inside = [c for c in chart.truncated if c[1][0] <= args.tmax]
    if args.strict and truncated_inside:
        print(f"window-truncated cells: {sorted(truncated_inside)[:10]}", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_compare(args) -> int:
    a = _load_chart(args.chart_a)
    b = _load_chart(args.chart_b)
    if args.mode == "doubling":
        report = charts.compare_doubling(a, b)
    else:
        report = charts.compare_equality(a, b)
    for line in report.lines():
        print(line)
    if args.out:
        import json

        Path(args.out).write_text(
            json.dumps(
                {
                    "mode": report.mode,
                    "checked": report.checked,
                    "match": report.ok,
                    "mismatches": [
                        {"s": c[0], "deg": list(c[1]), "left": da, "right": db}
                        for c, da, db in report.mismatches
                    ],
                },
                indent=1,
                sort_keys=True,
            )
            + "\n"
        )
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _named_class(res: H.FreeResolution, chart: ExtChart, name: str) -> H.ChartClass:
    if name not in chart.classes:
        raise KeyError(f"unknown class {name!r}; known: {sorted(chart.classes)}")
    s, deg, index = chart.classes[name]
    return H.class_of_generator(res, s, deg, index)


def _describe_class(res: H.FreeResolution, chart: ExtChart, s: int, deg, bits: int) -> str:
    if bits == 0:
        return "0"
    # try to present the class as a product of two named classes
    names = sorted(chart.classes)
    for n1 in names:
        for n2 in names:
            c1 = _named_class(res, chart, n1)
            c2 = _named_class(res, chart, n2)
            if c1.s + c2.s == s and H.add_deg(c1.deg, c2.deg) == tuple(deg):
                if H.yoneda_product(res, c1, c2).bits == bits:
                    return f"{n1}^2" if n1 == n2 else f"{n1}*{n2}"
    return f"class at (s={s}, deg={deg}) with coordinates {bits:#b}"


def cmd_massey(args) -> int:
    if args.flavor == "isotropic":
        print("error: massey products are computed on the classical/G/A0 charts", file=sys.stderr)
        return EXIT_USAGE
    chart, res = _field_chart(args.flavor, args.smax, args.tmax)
    try:
        a = _named_class(res, chart, args.a)
        b = _named_class(res, chart, args.b)
        c = _named_class(res, chart, args.c)
    except KeyError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = H.massey_triple(res, a, b, c)
    except H.MasseyPreconditionError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    desc = _describe_class(res, chart, result.s, result.deg, result.bits)
    print(f"<{args.a},{args.b},{args.c}> = {desc}")
    if result.indeterminacy:
        print(f"indeterminacy rank {len(result.indeterminacy)}: {[f'{v:#b}' for v in result.indeterminacy]}")
    else:
        print("indeterminacy 0")
    if args.out:
        chart.brackets.append(
            {
                "args": [args.a, args.b, args.c],
                "s": result.s,
                "t": result.deg[0],
                **({"u": result.deg[1]} if len(result.deg) > 1 else {}),
                "value": desc,
                "indeterminacy_rank": len(result.indeterminacy),
            }
        )
        chart.meta["job"] = JobConfig.from_args(args).as_meta()
        _emit(chart, args.format, args.out)
    return EXIT_OK


def cmd_isotropic(args) -> int:
    tmax_classical = args.tmax // 2 if args.tmax else 22
    ichart, cchart, report = _isotropic_charts(args.smax, tmax_classical, args.nmax, args.pmin, args.pmax or 0)
    if not report.unique:
        # fall back to the even-subalgebra chart, which needs no action table
        print("action table ambiguous; assessing the even-subalgebra chart alone", file=sys.stderr)
        print("underdetermined:", report.underdetermined, "inconsistent:", report.inconsistent, file=sys.stderr)
        gchart, _ = _field_chart("G", args.smax, 2 * tmax_classical)
        rep = charts.compare_doubling(cchart, gchart)
        for line in rep.lines():
            print(line)
        return EXIT_OK if rep.ok else EXIT_MISMATCH
    _filter_weights(ichart, args.qmin, args.qmax)
    ichart.meta["job"] = JobConfig.from_args(args).as_meta()
    if args.out:
        _emit(ichart, args.format, args.out)
    rep = charts.compare_doubling(cchart, ichart)
    van = charts.vanishing_check(ichart)
    for line in rep.lines():
        print(line)
    print(f"vanishing regions: {'ok' if van.ok else van.violations}")
    truncated_inside = [c for c in ichart.truncated if c[1][0] <= 2 * tmax_classical]
    if args.strict and truncated_inside:
        print(f"window-truncated cells: {sorted(truncated_inside)[:10]}", file=sys.stderr)
        return EXIT_TRUNCATED
    if not (rep.ok and van.ok):
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoadams",
        description="Mod-2 generalized/isotropic Steenrod algebra calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def window_flags(p, tmax_default=12):
        p.add_argument("--tmax", type=int, default=tmax_default)
        p.add_argument("--smax", type=int, default=8)
        p.add_argument("--qmin", type=int, default=None)
        p.add_argument("--qmax", type=int, default=None)
        p.add_argument("--nmax", type=int, default=None)
        p.add_argument("--pmin", type=int, default=None)
        p.add_argument("--pmax", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--strict", action="store_true")
        p.add_argument("--format", choices=["csv", "json", "svg", "ascii"], default="csv")
        p.add_argument("--out", type=str, default=None)

    p_mul = sub.add_parser("mul", help="multiply two elements")
    p_mul.add_argument("lhs")
    p_mul.add_argument("rhs")
    p_mul.add_argument("--flavor", choices=["classical", "G", "A0"], default="A0")
    p_mul.add_argument("--basis", choices=["qepr", "prqe"], default="prqe")
    p_mul.set_defaults(func=cmd_mul)

    p_res = sub.add_parser("resolve", help="minimal resolution and Ext chart")
    p_res.add_argument("--flavor", choices=["classical", "G", "A0", "isotropic"], default="classical")
    window_flags(p_res)
    p_res.set_defaults(func=cmd_resolve)

    p_cmp = sub.add_parser("compare", help="compare two chart files")
    p_cmp.add_argument("chart_a")
    p_cmp.add_argument("chart_b")
    p_cmp.add_argument("--mode", choices=["doubling", "equality"], default="equality")
    p_cmp.add_argument("--out", type=str, default=None)
    p_cmp.set_defaults(func=cmd_compare)

    p_mas = sub.add_parser("massey", help="triple Massey product of named classes")
    p_mas.add_argument("a")
    p_mas.add_argument("b")
    p_mas.add_argument("c")
    p_mas.add_argument("--flavor", choices=["classical", "G", "A0", "isotropic"], default="classical")
    window_flags(p_mas)
    p_mas.set_defaults(func=cmd_massey)

    p_iso = sub.add_parser(
        "isotropic", help="isotropic chart and comparison against the classical chart"
    )
    window_flags(p_iso, tmax_default=44)
    p_iso.set_defaults(func=cmd_isotropic)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
