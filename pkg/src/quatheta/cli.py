"""Batch query front-end.

Subcommands: branch, theta, ktypes, infchar, aq, verify, plot.  JSON
output is UTF-8 with sorted keys; identical argv produces byte-identical
output.  Exit codes: 0 success, 1 domain error, 2 verification failure,
64 usage error.  The environment variable QUATHETA_DIM_CAP bounds the
dimension the character oracle is willing to expand (default 20000).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .rootdata import HalfInt, Weight
from .charoracle import OracleCapError
from .branchrules import (
    branch_sp,
    branch_spin_even,
    branch_spin_odd,
    f4_to_spin9_table,
    restrict_e7_to_su2_spin12,
)
from .charoracle import irrep, weyl_dim
from .quaternionic import QuatModule, inf_char, ktypes
from .thetamaps import (
    theta_e6_torus,
    theta_e6_u2,
    theta_e7,
    theta_e8_spin8,
    theta_e8_spin9,
    theta_f4,
)
from .aqmodules import AqCase, abc_to_xy, aq_data, cone_extreme_rays
from .verify import SUITE_ORDER, run_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(64)


def _half(s: str) -> HalfInt:
    return HalfInt.parse(s)


def _coords(s: str) -> tuple:
    return tuple(_half(x) for x in s.split(","))


def _ints(s: str) -> tuple:
    return tuple(int(x) for x in s.split(","))


def _wm(s: str) -> tuple:
    return tuple(tuple(_half(x) for x in f.split(",")) for f in s.split(";"))


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def _coord_json(c: HalfInt):
    return int(c) if c.is_integer() else str(c)


def _fmt_tuple(t) -> str:
    return "(" + ",".join(str(c) for c in t) + ")"


# ---------------------------------------------------------------------------
# branch


def _cmd_branch(args) -> int:
    rule = args.rule
    if rule == "f4-spin9":
        if args.ab is None:
            raise ValueError("--rule f4-spin9 needs --ab a,b")
        a, b = args.ab
        rows = sorted(f4_to_spin9_table(a, b).items(), reverse=True)
        comps = [
            {"w": [_coord_json(c) for c in w], "mult": m,
             "dim": weyl_dim(irrep("B4", w))}
            for w, m in rows
        ]
        if args.json:
            _print_json({"rule": rule, "ab": [a, b], "components": comps})
        else:
            for c in comps:
                print(f"{_fmt_tuple(c['w'])} x{c['mult']} dim {c['dim']}")
        return 0
    if rule == "e7-su2spin12":
        if args.k is None:
            raise ValueError("--rule e7-su2spin12 needs --k")
        rows = restrict_e7_to_su2_spin12(args.k)
        comps = [
            {"su2": m, "spin12": w.to_json()} for m, w in rows
        ]
        if args.json:
            _print_json({"rule": rule, "k": args.k, "components": comps})
        else:
            for m, w in rows:
                print(f"su2 ({m})  spin12 {_fmt_tuple(w.coords)}")
        return 0
    if args.lam is None:
        raise ValueError(f"--rule {rule} needs --lam")
    lam = args.lam
    if rule == "sp":
        table = branch_sp(lam)
        comps = [
            {"mu": [_coord_json(c) for c in mu],
             "su2": {str(k): m for k, m in sorted(cg.items()) if m}}
            for mu, cg in sorted(table.items())
        ]
        comps = [c for c in comps if c["su2"]]
        if args.json:
            _print_json({
                "rule": rule, "lam": [_coord_json(c) for c in lam],
                "components": comps,
            })
        else:
            for c in comps:
                body = ", ".join(f"({k}) x{m}" for k, m in c["su2"].items())
                print(f"{_fmt_tuple(c['mu'])} : {body}")
        return 0
    if rule in ("spin-odd", "spin-even"):
        fn = branch_spin_odd if rule == "spin-odd" else branch_spin_even
        table = fn(lam)
        comps = []
        for mu, mod in sorted(table.items()):
            entries = [
                [_coord_json(HalfInt(t)), m] for t, m in mod.entries if m
            ]
            if entries:
                comps.append({
                    "mu": [_coord_json(c) for c in mu], "spin2": entries,
                })
        if args.json:
            _print_json({
                "rule": rule, "lam": [_coord_json(c) for c in lam],
                "components": comps,
            })
        else:
            for c in comps:
                body = ", ".join(f"({w}) x{m}" for w, m in c["spin2"])
                print(f"{_fmt_tuple(c['mu'])} : {body}")
        return 0
    raise ValueError(f"unknown branch rule {rule!r}")


# ---------------------------------------------------------------------------
# theta


def _cmd_theta(args) -> int:
    amb = args.ambient
    given = [
        name for name in ("torus", "u2", "type", "spin8", "spin9", "su2")
        if getattr(args, "type_" if name == "type" else name) is not None
    ]
    if len(given) != 1:
        raise ValueError("give exactly one source type for the ambient group")
    src = given[0]
    allowed = {
        "E6": ("torus", "u2"), "E7": ("type",),
        "E8": ("spin8", "spin9"), "F4": ("su2",),
    }
    if src not in allowed[amb]:
        raise ValueError(f"--{src} does not apply to ambient {amb}")
    if src == "torus":
        lift = theta_e6_torus(*args.torus, sign=args.sign)
    elif src == "u2":
        lift = theta_e6_u2(*args.u2, sign=args.sign)
    elif src == "type":
        if args.sign is not None:
            raise ValueError("--sign does not apply to ambient E7")
        lift = theta_e7(*args.type_)
    elif src == "spin8":
        if args.sign is not None:
            raise ValueError("--sign does not apply to ambient E8")
        lift = theta_e8_spin8(*args.spin8)
    elif src == "spin9":
        if args.sign is not None:
            raise ValueError("--sign does not apply to ambient E8")
        lift = theta_e8_spin9(*args.spin9)
    else:
        lift = theta_f4(args.su2, sign=args.sign)
    _print_json(lift.to_json())
    return 0


# ---------------------------------------------------------------------------
# ktypes / infchar


def _module_from_args(args) -> QuatModule:
    kind = "sigma" if args.sigma else "A"
    return QuatModule(args.g, args.wm, args.s, kind)


def _cmd_ktypes(args) -> int:
    mod = _module_from_args(args)
    led = ktypes(mod, args.kmax, cap=args.cap)
    _print_json(led.to_json())
    return 0


def _cmd_infchar(args) -> int:
    mod = _module_from_args(args)
    w = inf_char(mod)
    _print_json({
        "module": mod.to_json(), "system": w.system, "inf_char": w.to_json(),
    })
    return 0


# ---------------------------------------------------------------------------
# aq


_GROUPS = {"g2": "G2", "pu21": "PU21"}


def _cmd_aq(args) -> int:
    group = _GROUPS[args.group]
    case = AqCase(group, args.case, args.lam)
    data = aq_data(case)
    _print_json({
        "case": {"group": group, "id": args.case, "lambda": list(args.lam)},
        "data": data.to_json(),
    })
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    lines, ok = run_suite(args.suite, args.max_entry)
    for line in lines:
        print(line)
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# plot

_PAD = 30
_UX = 40
_UY = 70  # _UX * 7/4: hexagonal-lattice vertical scaling


def _px(x, xmin) -> str:
    return f"{float(_PAD + (Fraction(x) - xmin) * _UX):.2f}"


def _py(y, ymax) -> str:
    return f"{float(_PAD + (ymax - Fraction(y)) * _UY):.2f}"


_PALETTE = ("#c0392b", "#27ae60", "#2980b9", "#e67e22")


def _cone_cases(group: str, lam: tuple) -> list:
    """The case/parameter pairs drawn together for one figure: the
    regular chamber triple, or the four modules at a wall parameter."""
    a, b, c = lam
    if a == b > 0 and c == -2 * a:
        ib = (2 * a, -a, -a) if group == "G2" else (a, -2 * a, a)
        return [("Ia.1", lam), ("Ia.2", lam), ("Ia.3", lam), ("Ib", ib)]
    if (group == "G2" and b == 0 and a > 0 and c == -a) or (
        group == "PU21" and b == c < 0 and a == -2 * b
    ):
        iib = (0, a, -a) if group == "G2" else (c, -2 * c, c)
        return [("IIa.1", lam), ("IIa.2", lam), ("IIa.3", lam), ("IIb", iib)]
    if group == "G2":
        return [("I", lam), ("II", (-c, -b, -a)), ("III", (b, a, c))]
    return [("I", lam), ("II", (a, c, b)), ("III", (b, a, c))]


def _ray_end(apex, d, xmin, xmax, ymin, ymax):
    """Farthest point of apex + t*d inside the viewport box, exact."""
    ts = []
    for a0, dv, lo, hi in (
        (apex[0], d[0], xmin, xmax), (apex[1], d[1], ymin, ymax)
    ):
        if dv > 0:
            ts.append(Fraction(hi - a0, dv))
        elif dv < 0:
            ts.append(Fraction(lo - a0, dv))
    t = min(ts)
    return (apex[0] + t * d[0], apex[1] + t * d[1])


def emit_svg(spec: dict) -> str:
    """Render a figure spec to SVG text.

    kinds: {"figure": "cones", "group": "G2"|"PU21", "lam": (a,b,c)|None}
    draws the K-type cones sharing one infinitesimal character (lattice
    only when lam is None); {"figure": "ledger", "module": QuatModule,
    "kmax": N, "cap": int|None} draws the outer-label histogram.
    """
    if spec["figure"] == "cones":
        return _svg_cones(spec["group"], spec.get("lam"))
    if spec["figure"] == "ledger":
        led = ktypes(spec["module"], spec["kmax"], cap=spec.get("cap"))
        return _svg_ledger(led)
    raise ValueError(f"unknown figure kind {spec['figure']!r}")


def _svg_cones(group: str, lam) -> str:
    overlays = []
    if lam is not None:
        for (cid, sub_lam), color in zip(_cone_cases(group, lam), _PALETTE):
            case = AqCase(group, cid, sub_lam)
            data = aq_data(case)
            overlays.append((
                cid, color, data.minimal_type_xy, cone_extreme_rays(case),
                abc_to_xy(sub_lam),
            ))
    if overlays:
        xs = [p[0] for _, _, apex, _, lxy in overlays for p in (apex, lxy)]
        ys = [p[1] for _, _, apex, _, lxy in overlays for p in (apex, lxy)]
        xmin = 0 if group == "G2" else min(0, min(xs) - 1)
        xmax = max(xs) + 1
        ymin = 0 if group == "G2" else min(0, min(ys))
        ymax = max(ys) + 1
    else:
        xmin, xmax, ymin, ymax = 0, 14, 0, 8
    width = 2 * _PAD + (xmax - xmin) * _UX
    height = 2 * _PAD + (ymax - ymin) * _UY
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for y in range(ymin, ymax + 1):
        for x in range(xmin, xmax + 1):
            if group == "G2" and (x < 0 or y < 0):
                continue
            if group == "PU21" and x < -3 * y:
                continue
            out.append(
                f'<circle cx="{_px(x, xmin)}" cy="{_py(y, ymax)}" r="2" '
                f'fill="#bbbbbb"/>'
            )
    for cid, color, apex, rays, lxy in overlays:
        for d in dict.fromkeys(rays):
            ex, ey = _ray_end(apex, d, xmin, xmax, ymin, ymax)
            out.append(
                f'<line x1="{_px(apex[0], xmin)}" y1="{_py(apex[1], ymax)}" '
                f'x2="{_px(ex, xmin)}" y2="{_py(ey, ymax)}" '
                f'stroke="{color}" stroke-width="2.5"/>'
            )
        out.append(
            f'<circle cx="{_px(apex[0], xmin)}" cy="{_py(apex[1], ymax)}" '
            f'r="5" fill="{color}"/>'
        )
        out.append(
            f'<circle cx="{_px(lxy[0], xmin)}" cy="{_py(lxy[1], ymax)}" '
            f'r="5" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        tx = float(_px(apex[0], xmin)) + 8
        ty = float(_py(apex[1], ymax)) - 8
        out.append(
            f'<text x="{tx:.2f}" y="{ty:.2f}" fill="{color}" '
            f'font-family="sans-serif" font-size="14">{cid}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _svg_ledger(led) -> str:
    dims = [led.level_dimension(k) for k in range(led.kmax + 1)]
    labels = [su0 for su0, _ in led.levels]
    n = len(dims)
    bar_w, gap, plot_h = 40, 20, 300
    width = 2 * _PAD + n * (bar_w + gap)
    height = 2 * _PAD + plot_h + 20
    top = _PAD
    base = _PAD + plot_h
    peak = max(dims) if dims else 1
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{_PAD}" y1="{base}" x2="{width - _PAD}" y2="{base}" '
        f'stroke="#333333" stroke-width="1"/>',
    ]
    for i, (su0, dim) in enumerate(zip(labels, dims)):
        h = Fraction(dim * plot_h, peak)
        x = _PAD + i * (bar_w + gap) + gap // 2
        y = base - h
        out.append(
            f'<rect x="{x}" y="{float(y):.2f}" width="{bar_w}" '
            f'height="{float(h):.2f}" fill="#2980b9"/>'
        )
        out.append(
            f'<text x="{x + bar_w // 2}" y="{base + 16}" fill="#333333" '
            f'font-family="sans-serif" font-size="12" '
            f'text-anchor="middle">{su0}</text>'
        )
        out.append(
            f'<text x="{x + bar_w // 2}" y="{float(y) - 4:.2f}" '
            f'fill="#333333" font-family="sans-serif" font-size="10" '
            f'text-anchor="middle">{dim}</text>'
        )
    out.append(
        f'<text x="{width // 2}" y="{base + 36}" fill="#333333" '
        f'font-family="sans-serif" font-size="12" '
        f'text-anchor="middle">outer SU(2) label</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _cmd_plot(args) -> int:
    if args.figure == "cones":
        if args.group is None:
            raise ValueError("--figure cones needs --group")
        lam = args.lam
        sys.stdout.write(emit_svg({
            "figure": "cones", "group": _GROUPS[args.group],
            "lam": tuple(lam) if lam is not None else None,
        }))
        return 0
    if args.figure == "ledger":
        for flag in ("g", "wm", "s", "kmax"):
            if getattr(args, flag) is None:
                raise ValueError(f"--figure ledger needs --{flag}")
        mod = _module_from_args(args)
        sys.stdout.write(emit_svg({
            "figure": "ledger", "module": mod, "kmax": args.kmax,
            "cap": args.cap,
        }))
        return 0
    raise ValueError(f"unknown figure {args.figure!r}")


# ---------------------------------------------------------------------------
# parser


def _add_module_flags(p, required=True):
    p.add_argument("--g", required=required,
                   help='group label, e.g. "Spin(4,3)"')
    p.add_argument("--wm", type=_wm, required=required,
                   help='M-type per factor, e.g. "1;2" or "1,1,0,0,0,0"')
    p.add_argument("--s", type=int, required=required,
                   help="outer parameter s")
    p.add_argument("--sigma", action="store_true",
                   help="take the irreducible quotient")
    p.add_argument("--cap", type=int, default=None,
                   help="override the oracle dimension cap")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="quatheta",
        description="Branching, theta-lift, and K-type queries for "
                    "quaternionic exceptional groups.",
        epilog="QUATHETA_DIM_CAP caps the dimensions the character oracle "
               "will expand (default 20000).",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("branch", parents=[], help="closed-form branching")
    p.add_argument("--rule", required=True,
                   choices=("sp", "spin-odd", "spin-even", "f4-spin9",
                            "e7-su2spin12"))
    p.add_argument("--lam", type=_coords, default=None,
                   help="dominant weight, e.g. 2,1 or 3/2,1/2")
    p.add_argument("--ab", type=_ints, default=None,
                   help="f4-spin9 parameters a,b")
    p.add_argument("--k", type=int, default=None,
                   help="e7-su2spin12 level k")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(func=_cmd_branch)

    p = sub.add_parser("theta", help="theta-correspondence parameter maps")
    p.add_argument("--ambient", required=True,
                   choices=("E6", "E7", "E8", "F4"))
    p.add_argument("--torus", type=_ints, default=None,
                   help="E6: torus character a,b,c (use --torus=-1,0,1 "
                        "for a leading minus)")
    p.add_argument("--u2", type=_ints, default=None,
                   help="E6: U(2) type a,b")
    p.add_argument("--type", dest="type_", type=_ints, default=None,
                   help="E7: Sp(2) x Sp(1) type a,b,c")
    p.add_argument("--spin8", type=_coords, default=None,
                   help="E8: Spin(8) weight a,b,c,d")
    p.add_argument("--spin9", type=_coords, default=None,
                   help="E8: Spin(9) weight a,b,c,d")
    p.add_argument("--su2", type=int, default=None, help="F4: SU(2) label n")
    p.add_argument("--sign", choices=("+", "-"), default=None,
                   help="select one member of a split pair")
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("ktypes", help="K-type ledger of A(G, W[s])")
    _add_module_flags(p)
    p.add_argument("--kmax", type=int, required=True, help="highest level")
    p.set_defaults(func=_cmd_ktypes)

    p = sub.add_parser("infchar", help="infinitesimal character of A(G, W[s])")
    _add_module_flags(p)
    p.set_defaults(func=_cmd_infchar)

    p = sub.add_parser("aq", help="cohomologically induced module data")
    p.add_argument("--group", required=True, choices=("g2", "pu21"))
    p.add_argument("--case", required=True,
                   help="case id: I, II, III, Ia.1..Ia.3, Ib, "
                        "IIa.1..IIa.3, IIb")
    p.add_argument("--lambda", dest="lam", type=_ints, required=True,
                   help="sum-zero parameter a,b,c (use --lambda=2,1,-3)")
    p.set_defaults(func=_cmd_aq)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", required=True,
                   choices=SUITE_ORDER + ("all",))
    p.add_argument("--max-entry", type=int, default=None,
                   help="weight-entry bound for enumerated suites")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("plot", help="deterministic SVG figures")
    p.add_argument("--figure", required=True, choices=("cones", "ledger"))
    p.add_argument("--group", choices=("g2", "pu21"), default=None,
                   help="cones: dual-pair member")
    p.add_argument("--lambda", dest="lam", type=_ints, default=None,
                   help="cones: parameter a,b,c; omit for a bare lattice")
    _add_module_flags(p, required=False)
    p.add_argument("--kmax", type=int, default=None,
                   help="ledger: highest level")
    p.set_defaults(func=_cmd_plot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OracleCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
