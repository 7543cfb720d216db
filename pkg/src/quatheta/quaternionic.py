"""Modules attached to quaternionic real forms.

A group G from the quaternionic family has maximal compact subgroup
K = SU_0(2) x M.  For an irreducible M-representation W with highest
weight wm and an integer s >= 2, the module A(G, W[s]) has K-type
decomposition

    A(G, W[s]) = sum over k >= 0 of (s + k - 2) (x) (S^k(V_M) (x) W),

with V_M the defining M-constituent of the isotropy representation.
sigma(G, W[s]) denotes the unique irreducible quotient; it shares the
data (G, wm, s) and its K-types form a subset of those of A.  All
K-type computations here operate on the full module A.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .rootdata import (
    HalfInt,
    Weight,
    build_root_system,
    dominant_representative,
    quaternionic_structure,
)
from . import charoracle
from .charoracle import (
    CharMultiset,
    Irrep,
    IsoDecomp,
    char_weights,
    strip_dominant,
    weyl_dim,
)
from .branchrules import clebsch_gordan


@dataclass(frozen=True)
class QuatModule:
    """A(G, W[s]) or its irreducible quotient sigma(G, W[s]).

    wm is a tuple of per-factor highest-weight tuples for M; SU(2)
    factors use the integer label convention (dimension = label + 1).
    """

    g_label: str
    wm: tuple
    s: int
    kind: str = "A"  # "A" for the full module, "sigma" for the quotient

    def __post_init__(self):
        qs = quaternionic_structure(self.g_label)
        wm = self.wm
        if len(wm) and not isinstance(wm[0], (tuple, list)):
            wm = (tuple(wm),)  # single-factor convenience
        wm = tuple(tuple(HalfInt.of(c) for c in f) for f in wm)
        if len(wm) != len(qs.m_factors):
            raise ValueError(
                f"{self.g_label} needs {len(qs.m_factors)} factor weights"
            )
        object.__setattr__(self, "wm", wm)
        self.m_irrep()  # validates dominance and congruence per factor
        if not isinstance(self.s, int) or self.s < 2:
            raise ValueError("need integer s >= 2")
        if self.kind not in ("A", "sigma"):
            raise ValueError("kind must be 'A' or 'sigma'")

    def structure(self):
        return quaternionic_structure(self.g_label)

    def m_irrep(self) -> Irrep:
        qs = quaternionic_structure(self.g_label)
        if len(qs.m_factors) == 1:
            return Irrep(qs.m_factors[0], self.wm[0])
        return Irrep(qs.m_factors, self.wm)

    def quotient(self) -> "QuatModule":
        return replace(self, kind="sigma")

    def wm_json(self) -> list:
        return [
            [int(c) if c.is_integer() else str(c) for c in f]
            for f in self.wm
        ]

    def to_json(self) -> dict:
        return {
            "G": self.g_label,
            "wm": self.wm_json(),
            "s": self.s,
            "quotient": self.kind == "sigma",
        }

    @staticmethod
    def from_json(d: dict) -> "QuatModule":
        wm = tuple(
            tuple(HalfInt.parse(c) if isinstance(c, str) else c for c in f)
            for f in d["wm"]
        )
        kind = "sigma" if d.get("quotient") else "A"
        return QuatModule(d["G"], wm, d["s"], kind)


def quat_module(g_label: str, wm, s: int, kind: str = "A") -> QuatModule:
    return QuatModule(g_label, tuple(wm), int(s), kind)


def minimal_type(m: QuatModule) -> tuple:
    """Lowest K-type: SU_0(2) label s-2 with M-type W itself."""
    return (m.s - 2, m.wm)


# ---------------------------------------------------------------------------
# symmetric powers


def _vm_irrep(qs) -> Irrep:
    if len(qs.m_factors) == 1:
        return Irrep(qs.m_factors[0], qs.vm_hw[0])
    return Irrep(qs.m_factors, qs.vm_hw)


def _sym_char_chain(base: CharMultiset, kmax: int) -> list:
    """Characters of S^0, ..., S^kmax of the module with character base,
    via the power-sum recursion k h_k = sum_{i=1..k} p_i h_{k-i}."""
    powers = [None] + [
        charoracle.adams(base, i).mults for i in range(1, kmax + 1)
    ]
    zero = tuple(0 for _ in next(iter(base.mults)))
    hs = [{zero: Fraction(1)}]
    for k in range(1, kmax + 1):
        acc = {}
        for i in range(1, k + 1):
            for t1, m1 in powers[i].items():
                for t2, m2 in hs[k - i].items():
                    t = tuple(a + b for a, b in zip(t1, t2))
                    acc[t] = acc.get(t, Fraction(0)) + m1 * m2
        hk = {}
        for t, m in acc.items():
            v = m / k
            if v:
                if v.denominator != 1:
                    raise AssertionError("symmetric power not integral")
                hk[t] = v
        hs.append(hk)
    out = []
    for h in hs:
        out.append(CharMultiset(
            base.labels, {t: int(m) for t, m in h.items()}
        ))
    return out


def sym_power(vm: Irrep, k: int, cap: int | None = None) -> IsoDecomp:
    """Decomposition of the k-th symmetric power of an irreducible."""
    if k < 0:
        raise ValueError("need k >= 0")
    base = char_weights(vm, cap=cap)
    chain = _sym_char_chain(base, k)
    return strip_dominant(chain[k], cap=cap)


def sym_power_chain(vm: Irrep, kmax: int, cap: int | None = None) -> list:
    """IsoDecomps of S^0(vm), ..., S^kmax(vm)."""
    base = char_weights(vm, cap=cap)
    return [strip_dominant(c, cap=cap) for c in _sym_char_chain(base, kmax)]


# ---------------------------------------------------------------------------
# K-types


@dataclass(frozen=True)
class KTypeLedger:
    """Levels 0..kmax of the K-type decomposition of A(G, W[s]):
    level k pairs the SU_0(2) label s+k-2 with tau_k = S^k(V_M) (x) W."""

    module: QuatModule
    levels: tuple  # tuple of (su0_label, IsoDecomp)

    @property
    def kmax(self) -> int:
        return len(self.levels) - 1

    def __getitem__(self, k: int):
        return self.levels[k]

    def __iter__(self):
        return iter(self.levels)

    def level_dimension(self, k: int) -> int:
        su0, dec = self.levels[k]
        return (su0 + 1) * dec.dimension()

    def to_json(self) -> dict:
        return {
            "module": self.module.to_json(),
            "levels": [
                {"k": k, "su0": su0, "mtypes": dec.to_json()}
                for k, (su0, dec) in enumerate(self.levels)
            ],
        }

    @staticmethod
    def from_json(d: dict) -> "KTypeLedger":
        mod = QuatModule.from_json(d["module"])
        labels = mod.structure().m_factors
        levels = []
        for lv in d["levels"]:
            mults = {}
            for entry in lv["mtypes"]:
                hw = entry["hw"]
                if len(labels) == 1:
                    r = Irrep(labels[0], tuple(HalfInt.of(c) for c in hw))
                else:
                    r = Irrep(labels, tuple(
                        tuple(HalfInt.of(c) for c in f) for f in hw
                    ))
                mults[r] = entry["mult"]
            levels.append((lv["su0"], IsoDecomp(mults)))
        return KTypeLedger(mod, tuple(levels))


def ktypes(m: QuatModule, kmax: int, cap: int | None = None) -> KTypeLedger:
    """K-type ledger of A(G, W[s]) up to level kmax."""
    if kmax < 0:
        raise ValueError("need kmax >= 0")
    qs = m.structure()
    base = char_weights(_vm_irrep(qs), cap=cap)
    w_char = char_weights(m.m_irrep(), cap=cap)
    levels = []
    for k, sym_c in enumerate(_sym_char_chain(base, kmax)):
        tau = charoracle.convolve(sym_c, w_char)
        levels.append((m.s + k - 2, strip_dominant(tau, cap=cap)))
    return KTypeLedger(m, tuple(levels))


def ktype_dimension(m: QuatModule, k: int, cap: int | None = None) -> int:
    """Dimension of the level-k K-type of A(G, W[s])."""
    return ktypes(m, k, cap=cap).level_dimension(k)


# ---------------------------------------------------------------------------
# infinitesimal character


def _mu_ambient(m: QuatModule) -> tuple:
    """Doubled ambient coordinates of wm under the M-embedding; only
    available when every M-factor is an SU(2) spanned by a known root."""
    qs = m.structure()
    if qs.m_simple_coords is None:
        raise ValueError(
            f"no torus embedding data for M of {m.g_label}"
        )
    sys = build_root_system(qs.system)
    acc = [0] * sys.dim
    for root2, fac in zip(qs.m_simple_coords, m.wm):
        (c,) = fac
        # label c contributes (c/2) * root; root2 and acc are doubled
        for i, r in enumerate(root2):
            num = c.twice * r
            if num % 4:
                raise AssertionError("non half-integral embedding image")
            acc[i] += num // 4
    return tuple(acc)


def inf_char(m: QuatModule) -> Weight:
    """Infinitesimal character of A(G, W[s]) as the dominant
    representative of mu + (s/2) alpha0 + rho in the ambient system."""
    qs = m.structure()
    sys = build_root_system(qs.system)
    mu2 = _mu_ambient(m)
    a02 = qs.alpha0.twice()
    rho2 = sys.rho.twice()
    tot = []
    for x, a, r in zip(mu2, a02, rho2):
        num = 2 * x + m.s * a + 2 * r
        if num % 2:
            raise AssertionError("non half-integral character")
        tot.append(num // 2)
    return dominant_representative(Weight.from_twice(tot, qs.system))


# ---------------------------------------------------------------------------
# restriction filtration


def restrict_filtration(m: QuatModule, kmax: int) -> list:
    """Filtration levels of A(Spin(4,4), W[s]) restricted to Spin(4,3).

    Entry k of the returned list holds the level-k subquotient: the
    direct sum of A(Spin(4,3), (u, v)[s+k]) over u in CG(k, alpha) and
    v in CG(beta, gamma), where wm = (alpha, beta, gamma): the SU(2)
    factor along e1-e2 survives, the last two fuse diagonally into
    Spin(3), and the level-k normal direction contributes an SU(2)
    label k.
    """
    if m.g_label != "Spin(4,4)":
        raise ValueError("filtration is for Spin(4,4) modules")
    if kmax < 0:
        raise ValueError("need kmax >= 0")
    (a,), (b,), (g,) = m.wm
    alpha, beta, gamma = int(a), int(b), int(g)
    vs = clebsch_gordan(beta, gamma)
    out = []
    for k in range(kmax + 1):
        level = [
            QuatModule("Spin(4,3)", ((u,), (v,)), m.s + k, m.kind)
            for u in clebsch_gordan(k, alpha)
            for v in vs
        ]
        out.append(sorted(
            level, key=lambda q: (q.wm[0][0].twice, q.wm[1][0].twice)
        ))
    return out


# ---------------------------------------------------------------------------
# surjectivity of the cubic-to-quadratic contraction


def _poly_mult_matrix(n: int):
    """Matrix of f: S^3 (x) S^n -> S^2 (x) S^{n+1} built from the
    comultiplication images of the cubic basis."""
    # basis of S^m: x^(m-j) y^j for j = 0..m
    # images of cubics in S^2 (x) S^1, coordinates over (quad j2, lin j1)
    cubic_img = {
        0: {(0, 0): 1},              # x^3 -> x^2 (x) x
        1: {(1, 0): 2, (0, 1): 1},   # x^2 y -> 2xy (x) x + x^2 (x) y
        2: {(2, 0): 1, (1, 1): 2},   # x y^2 -> y^2 (x) x + 2xy (x) y
        3: {(2, 1): 1},              # y^3 -> y^2 (x) y
    }
    rows = []
    for c in range(4):
        for j in range(n + 1):
            row = [0] * (3 * (n + 2))
            for (q, l), coef in cubic_img[c].items():
                # multiply x^(1-l) y^l into x^(n-j) y^j
                jj = j + l
                row[q * (n + 2) + jj] += coef
            rows.append(row)
    return rows


def _rank(rows) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col] / pv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def check_lemma_surjectivity(n: int) -> tuple:
    """Rank data of the composite (3)(x)(n) -> (2)(x)(1)(x)(n) ->
    (2)(x)(n+1): returns (rank, codomain_dim, surjective)."""
    if n < 0:
        raise ValueError("need n >= 0")
    rows = _poly_mult_matrix(n)
    rank = _rank(rows)
    codom = 3 * (n + 2)
    return (rank, codom, rank == codom)
