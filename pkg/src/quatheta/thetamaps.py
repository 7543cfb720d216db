"""Theta-correspondence parameter maps for dual pairs in quaternionic
exceptional groups.

Each map sends a representation parameter of the compact-side group to
the quaternionic-side module it lifts to: torus characters and U(2)
types inside the rank-2 ambient group map to Spin(4,4) and Spin(4,3)
modules, Sp(2) x Sp(1)-type parameters map to Spin(4,3) modules, Spin(8)
and Spin(9) weights map to Spin(4,4) and Spin(4,3) modules inside the
rank-8 ambient group, and SU(2) labels map to Spin(4,3) modules in the
rank-4 ambient case.  Every table carries an infinitesimal-character
cross-check, and the rank-8 pair also satisfies a see-saw identity that
is verified here as a truncated K-type multiset equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import HalfInt, Weight, build_root_system, dominant_representative
from .quaternionic import QuatModule, inf_char, ktypes


def _h(x) -> HalfInt:
    return HalfInt.of(x)


@dataclass(frozen=True)
class ThetaLift:
    """Outcome of a theta map: modules with multiplicities, or zero.

    sign tags the tau-split variants; upper_bound marks lifts the
    source theorem states as inclusions rather than equalities.
    stated_inf_char carries an infinitesimal character when the theorem
    displays one explicitly.
    """

    lifts: tuple  # tuple of (QuatModule, positive multiplicity)
    sign: str | None = None
    upper_bound: bool = False
    stated_inf_char: Weight | None = None

    def __post_init__(self):
        if any(mult <= 0 for _, mult in self.lifts):
            raise ValueError("multiplicities must be positive")

    @property
    def zero(self) -> bool:
        return not self.lifts

    def modules(self) -> tuple:
        return tuple(m for m, _ in self.lifts)

    def inf_chars(self) -> tuple:
        return tuple(inf_char(m) for m, _ in self.lifts)

    def to_json(self) -> dict:
        if self.zero:
            out = {"zero": True}
        elif (
            len(self.lifts) == 1
            and self.lifts[0][1] == 1
            and self.lifts[0][0].kind == "sigma"
        ):
            out = {"sigma": _module_json(self.lifts[0][0])}
        elif len(self.lifts) == 1 and self.lifts[0][0].kind == "A":
            mod, mult = self.lifts[0]
            out = {"A": _module_json(mod), "mult": mult}
        elif (
            len(self.lifts) == 2
            and self.sign is None
            and all(m.kind == "sigma" and mult == 1 for m, mult in self.lifts)
        ):
            # unsplit tau-pair; entries carry their own sign tags
            out = {"lifts": [
                {"sigma": _module_json(mod), "sign": sgn}
                for (mod, _), sgn in zip(self.lifts, ("+", "-"))
            ]}
        else:
            out = {"lifts": [
                {mod.kind: _module_json(mod), "mult": mult}
                for mod, mult in self.lifts
            ]}
        if self.sign is not None:
            out["sign"] = self.sign
        if self.upper_bound:
            out["upper_bound"] = True
        if self.stated_inf_char is not None:
            out["inf_char"] = self.stated_inf_char.to_json()
        return out

    @staticmethod
    def from_json(data: dict) -> "ThetaLift":
        kw = {
            "sign": data.get("sign"),
            "upper_bound": bool(data.get("upper_bound", False)),
            "stated_inf_char": (
                Weight.from_json(data["inf_char"], "B3")
                if "inf_char" in data else None
            ),
        }
        if data.get("zero"):
            return ThetaLift((), **kw)
        if "sigma" in data:
            return ThetaLift(
                ((_module_from_json(data["sigma"], "sigma"), 1),), **kw
            )
        if "A" in data:
            return ThetaLift(
                ((_module_from_json(data["A"], "A"), data.get("mult", 1)),),
                **kw,
            )
        lifts = []
        for entry in data["lifts"]:
            kind = "sigma" if "sigma" in entry else "A"
            lifts.append(
                (_module_from_json(entry[kind], kind), entry.get("mult", 1))
            )
        return ThetaLift(tuple(lifts), **kw)


def _module_json(m: QuatModule) -> dict:
    return {"G": m.g_label, "wm": m.wm_json(), "s": m.s}


def _module_from_json(d: dict, kind: str) -> QuatModule:
    wm = tuple(
        tuple(HalfInt.parse(c) if isinstance(c, str) else c for c in f)
        for f in d["wm"]
    )
    return QuatModule(d["G"], wm, d["s"], kind)


def _sigma(g: str, wm, s: int) -> QuatModule:
    return QuatModule(g, tuple((x,) for x in wm), s, "sigma")


def _full(g: str, wm, s: int) -> QuatModule:
    return QuatModule(g, tuple((x,) for x in wm), s, "A")


def _check_sign(sign):
    if sign not in (None, "+", "-"):
        raise ValueError("sign must be '+' or '-'")
    return sign


# ---------------------------------------------------------------------------
# rank-2 ambient group: torus and U(2) duals


def theta_e6_torus(a: int, b: int, c: int, sign: str | None = None) -> ThetaLift:
    """Lift of the torus character (a, b, c), a+b+c = 0, to Spin(4,4).

    A character whose entries are not all zero is first normalized so
    that exactly one entry is strictly negative (negating all three
    entries leaves the lift unchanged); the position of the negative
    entry selects one of three cyclically related parameter patterns.
    The zero character splits into a +/- pair.
    """
    _check_sign(sign)
    t = (int(a), int(b), int(c))
    if sum(t) != 0:
        raise ValueError("torus character must sum to zero")
    if t == (0, 0, 0):
        if sign is None:
            return ThetaLift((
                (_sigma("Spin(4,4)", (0, 0, 0), 4), 1),
                (_sigma("Spin(4,4)", (0, 0, 0), 6), 1),
            ))
        s = 4 if sign == "+" else 6
        return ThetaLift(((_sigma("Spin(4,4)", (0, 0, 0), s), 1),), sign=sign)
    if sign is not None:
        raise ValueError("sign tag only applies to the zero character")
    if sum(1 for x in t if x < 0) >= 2:
        t = tuple(-x for x in t)
    neg = [i for i, x in enumerate(t) if x < 0]
    assert len(neg) == 1
    i = neg[0]
    # rotate so the pattern reads (p, q, -p-q); wm is the matching
    # rotation of (q, p, 0)
    p, q = t[(i + 1) % 3], t[(i + 2) % 3]
    base = (q, p, 0)
    r = (i - 2) % 3
    wm = base[-r:] + base[:-r] if r else base
    return ThetaLift(((_sigma("Spin(4,4)", wm, 4 + p + q), 1),))


def theta_e6_u2(a: int, b: int, sign: str | None = None) -> ThetaLift:
    """Lift of the U(2) type (a, b), a >= b, to Spin(4,3).

    Negative-total types are normalized through (a, b) -> (-b, -a).
    On the boundary a + b = 0 the lift splits into a +/- pair of
    inclusions (recorded with upper_bound); the minus lift of (0, 0)
    vanishes.
    """
    _check_sign(sign)
    a, b = int(a), int(b)
    if a < b:
        raise ValueError("need a >= b")
    if a + b < 0:
        a, b = -b, -a
    if a + b != 0:
        if sign is not None:
            raise ValueError("sign tag only applies when a + b = 0")
        if b > 0:
            return ThetaLift(((_sigma("Spin(4,3)", (0, a - b), 4 + a + b), 1),))
        return ThetaLift(((_sigma("Spin(4,3)", (-b, a + b), 4 + a), 1),))
    # boundary: tau-split pair, inclusions only
    plus = (_sigma("Spin(4,3)", (a, 0), 4 + a), 1)
    if a == 0:
        if sign == "-":
            return ThetaLift((), sign="-")
        if sign == "+":
            return ThetaLift((plus,), sign="+", upper_bound=True)
        return ThetaLift((plus,), upper_bound=True)
    minus = (_sigma("Spin(4,3)", (a - 1, 0), 5 + a), 1)
    if sign == "+":
        return ThetaLift((plus,), sign="+", upper_bound=True)
    if sign == "-":
        return ThetaLift((minus,), sign="-", upper_bound=True)
    return ThetaLift((plus, minus), upper_bound=True)


# ---------------------------------------------------------------------------
# rank-3 ambient group: Sp(2) x Sp(1) dual


def theta_e7(a: int, b: int, c: int) -> ThetaLift:
    """Lift of the Sp(2) x Sp(1) type ((a, b); c) to Spin(4,3).

    Three regimes: c <= a-b, a-b < c <= a+b (which requires a+b-c
    even), and c > a+b (zero).
    """
    a, b, c = int(a), int(b), int(c)
    if not (a >= b >= 0):
        raise ValueError("need a >= b >= 0")
    if c < 0:
        raise ValueError("need c >= 0")
    if c <= a - b:
        return ThetaLift(((_sigma("Spin(4,3)", (b, c), 6 + a), 1),))
    if c <= a + b:
        if (a + b - c) % 2:
            raise ValueError("a + b - c must be even in the middle regime")
        wm = ((a + b - c) // 2, a - b)
        return ThetaLift(((_sigma("Spin(4,3)", wm, 6 + (a + b + c) // 2), 1),))
    return ThetaLift(())


# ---------------------------------------------------------------------------
# rank-8 ambient group: Spin(8) and Spin(9) duals


def theta_e8_spin8(a, b, c, d) -> ThetaLift:
    """Lift of the Spin(8) type (a, b, c, d) to Spin(4,4):
    (b-c+1) copies of A(Spin(4,4), (a-b, c+d, c-d)[10+a+b])."""
    a, b, c, d = (_h(x) for x in (a, b, c, d))
    if not (a >= b >= c >= abs(d)):
        raise ValueError("weight must be dominant for Spin(8)")
    if len({x.twice % 2 for x in (a, b, c, d)}) > 1:
        raise ValueError("weight entries must be congruent mod 1")
    wm = (int(a - b), int(c + d), int(c - d))
    mult = int(b - c) + 1
    s = 10 + int(a + b)
    return ThetaLift(((_full("Spin(4,4)", wm, s), mult),))


def theta_e8_spin9(a, b, c, d) -> ThetaLift:
    """Lift of the Spin(9) type (a, b, c, d) to Spin(4,3):
    A(Spin(4,3), (a-b, 2d)[10+a+b]), independently of c, with
    infinitesimal character (a+7/2, b+5/2, d+1/2)."""
    a, b, c, d = (_h(x) for x in (a, b, c, d))
    if not (a >= b >= c >= d >= 0):
        raise ValueError("weight must be dominant for Spin(9)")
    if len({x.twice % 2 for x in (a, b, c, d)}) > 1:
        raise ValueError("weight entries must be congruent mod 1")
    wm = (int(a - b), int(2 * d))
    s = 10 + int(a + b)
    stated = Weight.from_twice(
        (a.twice + 7, b.twice + 5, d.twice + 1), "B3"
    )
    return ThetaLift(
        ((_full("Spin(4,3)", wm, s), 1),), stated_inf_char=stated
    )


# ---------------------------------------------------------------------------
# rank-4 ambient group: SU(2) dual


def theta_f4(n: int, sign: str | None = None) -> ThetaLift:
    """Lift of the SU(2) label n to Spin(4,3): even labels 2k (k > 0)
    give sigma((k,0)[k+3]), odd labels 2k+1 give sigma((k,1)[k+4]), and
    n = 0 splits into sigma((0,0)[3]) and sigma((0,0)[5])."""
    _check_sign(sign)
    n = int(n)
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        plus = (_sigma("Spin(4,3)", (0, 0), 3), 1)
        minus = (_sigma("Spin(4,3)", (0, 0), 5), 1)
        if sign == "+":
            return ThetaLift((plus,), sign="+")
        if sign == "-":
            return ThetaLift((minus,), sign="-")
        return ThetaLift((plus, minus))
    if sign is not None:
        raise ValueError("sign tag only applies to n = 0")
    k, r = divmod(n, 2)
    if r == 0:
        return ThetaLift(((_sigma("Spin(4,3)", (k, 0), k + 3), 1),))
    return ThetaLift(((_sigma("Spin(4,3)", (k, 1), k + 4), 1),))


# ---------------------------------------------------------------------------
# infinitesimal-character cross-checks


def _dom(system: str, twice_vec) -> Weight:
    return dominant_representative(Weight.from_twice(twice_vec, system))


def _d4_outer_orbit(w: Weight) -> set:
    """Dominant representatives of the outer-automorphism orbit of a
    D4 weight: the group generated by the vector/half-spin swap and the
    last-coordinate flip (order 6)."""

    def apply_swap(t):
        s = (t[0] + t[1] + t[2] + t[3], t[0] + t[1] - t[2] - t[3],
             t[0] - t[1] + t[2] - t[3], t[0] - t[1] - t[2] + t[3])
        if any(x % 2 for x in s):
            return None
        return tuple(x // 2 for x in s)

    def apply_flip(t):
        return (t[0], t[1], t[2], -t[3])

    seen = set()
    frontier = [dominant_representative(w).twice()]
    while frontier:
        t = frontier.pop()
        if t in seen:
            continue
        seen.add(t)
        for img in (apply_swap(t), apply_flip(t)):
            if img is not None:
                td = _dom("D4", img).twice()
                if td not in seen:
                    frontier.append(td)
    return {Weight.from_twice(t, "D4") for t in seen}


def infchar_crosscheck(which: str, params) -> bool:
    """Check a theorem's displayed infinitesimal-character formula
    against the general mu + s alpha0/2 + rho evaluation of the lifted
    module; Weyl-canonicalized equality.

    which: 'tmain', 'e7', 'e8_spin9', 'e8_spin8', 'f4', or 't161'.
    """
    if which == "tmain":
        a, b = (int(x) for x in params)
        lift = theta_e6_u2(a, b)
        want = _dom("B3", (a + b + 1, a + b - 1, a - b + 1))
        return all(inf_char(m) == want for m in lift.modules())
    if which == "e7":
        a, b, c = (int(x) for x in params)
        lift = theta_e7(a, b, c)
        if lift.zero:
            return True
        want = _dom("B3", (a + b + 3, a - b + 1, c + 1))
        return all(inf_char(m) == want for m in lift.modules())
    if which == "e8_spin9":
        lift = theta_e8_spin9(*params)
        want = dominant_representative(lift.stated_inf_char)
        return all(inf_char(m) == want for m in lift.modules())
    if which == "e8_spin8":
        a, b, c, d = (_h(x) for x in params)
        lift = theta_e8_spin8(a, b, c, d)
        rho2 = build_root_system("D4").rho.twice()
        lam2 = tuple(x.twice for x in (a, b, c, d))
        want = _dom("D4", tuple(x + r for x, r in zip(lam2, rho2)))
        return all(inf_char(m) == want for m in lift.modules())
    if which == "f4":
        n = int(params[0]) if isinstance(params, (tuple, list)) else int(params)
        lift = theta_f4(n)
        want = _dom("B3", (n, 2, 1))
        return all(inf_char(m) == want for m in lift.modules())
    if which == "t161":
        a, b = (int(x) for x in params)
        if a < 0 or b < 0 or (a, b) == (0, 0):
            raise ValueError("need a, b >= 0, not both zero")
        s = 4 + a + b
        chars = [
            inf_char(_sigma("Spin(4,4)", wm, s))
            for wm in ((b, a, 0), (0, b, a), (a, 0, b))
        ]
        orbit = _d4_outer_orbit(chars[0])
        return all(ch in orbit for ch in chars)
    raise ValueError(f"unknown cross-check {which!r}")


# ---------------------------------------------------------------------------
# see-saw truncation


def _ktype_multiset(module: QuatModule, nmax: int, acc: dict, mult: int = 1):
    """Accumulate {su0_label: {M-irrep: mult}} for levels with SU_0(2)
    label <= nmax."""
    kmax = nmax - (module.s - 2)
    if kmax < 0:
        return
    ledger = ktypes(module, kmax)
    for su0, dec in ledger:
        bucket = acc.setdefault(su0, {})
        for r, m in dec.items():
            key = r.twice_concat()
            bucket[key] = bucket.get(key, 0) + m * mult


def seesaw_truncation_check(b, d, nmax: int) -> bool:
    """Truncated see-saw identity for the rank-8 pair.

    LHS: K-types of the Spin(9)-parameter lifts summed over a >= b and
    over the middle entries c in [d, b]; RHS: (b-d+1) times the
    K-types of A(Spin(4,3), (a-b, 2d)[10+a+b]) summed over a >= b.
    Both sides are truncated to SU_0(2) labels <= nmax and compared as
    exact multisets level by level.
    """
    b, d = _h(b), _h(d)
    if not b >= d >= 0:
        raise ValueError("need b >= d >= 0")
    if (b.twice - d.twice) % 2:
        raise ValueError("b and d must be congruent mod 1")
    copies = int(b - d) + 1
    lhs: dict = {}
    rhs: dict = {}
    a = b
    while True:
        s = 10 + int(a + b)
        if s - 2 > nmax:
            break
        cs = [HalfInt(t) for t in range(d.twice, b.twice + 1, 2)]
        for c in cs:
            lift = theta_e8_spin9(a, b, c, d)
            for mod, mult in lift.lifts:
                _ktype_multiset(mod, nmax, lhs, mult)
        rhs_mod = QuatModule(
            "Spin(4,3)", ((int(a - b),), (int(2 * d),)), s, "A"
        )
        _ktype_multiset(rhs_mod, nmax, rhs, copies)
        a = a + 1
    return lhs == rhs
