"""Brute-force character arithmetic used as ground truth.

Weight multisets are computed by Freudenthal's recursion, products by
multiset convolution, and restrictions by pushing weights through an
integer coordinate map; decompositions are recovered by repeatedly
stripping the character of the top remaining dominant weight.  Every
path is exact (doubled-integer coordinates, Fraction intermediates).

Irreps of product groups are supported throughout: the group is a tuple
of labels and the highest weight a matching tuple of Weights.  A weight
of a product is stored as the concatenation of the factors' doubled
coordinate vectors.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootdata import Weight, _sys

DEFAULT_DIM_CAP = 20000

# the stripping loop never enumerates E-series characters
CHAR_EXCLUDED = ("E6", "E7", "E8")


class OracleCapError(RuntimeError):
    """Raised when a character computation would exceed the dimension cap."""


def dim_cap() -> int:
    """Current oracle dimension cap (env QUATHETA_DIM_CAP overrides)."""
    raw = os.environ.get("QUATHETA_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError("QUATHETA_DIM_CAP must be positive")
    return cap


def _as_tuple(x):
    return x if isinstance(x, tuple) else (x,)


@dataclass(frozen=True)
class Irrep:
    """Irreducible representation labeled by a dominant highest weight.

    group: a root-system label, or a tuple of labels for products;
    hw: a Weight, or a tuple of Weights matching the group factors.
    Coordinates may be given as raw numbers; they are wrapped.
    """

    group: object
    hw: object

    def __post_init__(self):
        labels = _as_tuple(self.group)
        hws = self.hw if isinstance(self.hw, tuple) and not isinstance(self.group, str) else (self.hw,)
        if isinstance(self.group, str):
            hws = (self.hw,)
        if len(labels) != len(hws):
            raise ValueError("group/hw factor counts differ")
        fixed = []
        for lab, w in zip(labels, hws):
            if not isinstance(w, Weight):
                w = Weight(_as_tuple(w), lab)
            if w.system != lab:
                raise ValueError(f"weight system {w.system} != factor {lab}")
            d = _sys(lab)
            if len(w.coords) != d.dim:
                raise ValueError(f"{lab} weight needs {d.dim} coordinates")
            if not d.is_dominant(w.twice()):
                raise ValueError(f"{w!r} is not dominant for {lab}")
            if lab[0] in ("B", "D") and lab != "Spin2":
                par = {t % 2 for t in w.twice()}
                if len(par) > 1:
                    raise ValueError(f"{w!r}: Spin weights must be congruent mod 1")
            fixed.append(w)
        object.__setattr__(self, "group", labels if len(labels) > 1 else labels[0])
        object.__setattr__(self, "hw", tuple(fixed) if len(fixed) > 1 else fixed[0])

    @property
    def labels(self) -> tuple:
        return _as_tuple(self.group)

    @property
    def hws(self) -> tuple:
        return _as_tuple(self.hw)

    def twice_concat(self) -> tuple:
        out = []
        for w in self.hws:
            out.extend(w.twice())
        return tuple(out)

    def hw_json(self):
        if isinstance(self.group, str):
            return self.hws[0].to_json()
        return [w.to_json() for w in self.hws]

    def __repr__(self):
        parts = [f"({', '.join(str(c) for c in w.coords)})" for w in self.hws]
        return f"Irrep[{'x'.join(self.labels)}]{' x '.join(parts)}"


def irrep(group, *hw) -> Irrep:
    """Convenience constructor: irrep("B3", 1, 0, 0) or
    irrep(("C1","C1"), (1,), (2,))."""
    if isinstance(group, str):
        if len(hw) == 1 and isinstance(hw[0], (tuple, list, Weight)):
            return Irrep(group, hw[0] if isinstance(hw[0], Weight) else tuple(hw[0]))
        return Irrep(group, tuple(hw))
    return Irrep(tuple(group), tuple(tuple(h) if not isinstance(h, Weight) else h for h in hw))


# ---------------------------------------------------------------------------
# character containers


@dataclass(frozen=True)
class CharMultiset:
    """Weight multiset of a (virtual sum of) representations."""

    labels: tuple
    mults: dict  # concatenated doubled coords -> positive int

    def mass(self) -> int:
        return sum(self.mults.values())

    def factor_dims(self) -> tuple:
        return tuple(_sys(lab).dim for lab in self.labels)

    def split(self, tvec) -> tuple:
        out, i = [], 0
        for nd in self.factor_dims():
            out.append(tuple(tvec[i:i + nd]))
            i += nd
        return tuple(out)

    def weights(self):
        """Yields (tuple of Weight per factor, multiplicity)."""
        for t, m in sorted(self.mults.items()):
            yield tuple(
                Weight.from_twice(part, lab)
                for part, lab in zip(self.split(t), self.labels)
            ), m


@dataclass(frozen=True)
class IsoDecomp:
    """Multiplicities of irreducibles in a completely reducible module."""

    mults: dict  # Irrep -> positive int

    def dimension(self) -> int:
        return sum(m * weyl_dim(r) for r, m in self.mults.items())

    def items(self):
        return sorted(self.mults.items(), key=lambda kv: kv[0].twice_concat())

    def __getitem__(self, r: Irrep) -> int:
        return self.mults.get(r, 0)

    def __eq__(self, other):
        return isinstance(other, IsoDecomp) and self.mults == other.mults

    def to_json(self):
        return [
            {"hw": r.hw_json(), "mult": m}
            for r, m in self.items()
        ]


# ---------------------------------------------------------------------------
# Weyl dimension formula


@lru_cache(maxsize=None)
def _dim_single(label: str, thw: tuple) -> int:
    d = _sys(label)
    if d.rank == 0:
        return 1
    num = Fraction(1)
    lam_rho = tuple(a + b for a, b in zip(thw, d.rho2))
    for a in d.pos:
        num *= Fraction(
            sum(x * y for x, y in zip(lam_rho, a)),
            sum(x * y for x, y in zip(d.rho2, a)),
        )
    if num.denominator != 1:
        raise AssertionError("Weyl dimension not an integer")
    return int(num)


def weyl_dim(r: Irrep) -> int:
    n = 1
    for lab, w in zip(r.labels, r.hws):
        n *= _dim_single(lab, w.twice())
    return n


# ---------------------------------------------------------------------------
# Freudenthal weight multiplicities


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _addv(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def _subv(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def _is_weight_of(d, tlam, tdom) -> bool:
    """tdom dominant; True iff tlam - tdom is a Z>=0 combination of
    simple roots (then tdom is a weight of V(tlam))."""
    coeffs = d.simple_root_coefficients(_subv(tlam, tdom))
    if coeffs is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


@lru_cache(maxsize=None)
def _char_single(label: str, thw: tuple) -> dict:
    """Full weight multiset {doubled coords: mult} of one irreducible."""
    d = _sys(label)
    if d.rank == 0:
        return {thw: 1}
    # enumerate the weight diagram: BFS downward by simple roots, keeping
    # exactly the vectors whose dominant representative lies under thw
    weights = {thw}
    frontier = [thw]
    while frontier:
        nxt = []
        for t in frontier:
            for a in d.simple:
                v = _subv(t, a)
                if v in weights:
                    continue
                if _is_weight_of(d, thw, d.dominant_twice(v)):
                    weights.add(v)
                    nxt.append(v)
        frontier = nxt
    dom = sorted(
        (t for t in weights if d.is_dominant(t)),
        key=lambda t: -_dot(t, d.rho2),
    )
    lam_rho = _addv(thw, d.rho2)
    lam_norm = _dot(thw, thw)
    top_norm = _dot(lam_rho, lam_rho)
    mult = {thw: 1}
    for mu in dom:
        if mu == thw:
            continue
        total = 0
        for a in d.pos:
            v = mu
            while True:
                v = _addv(v, a)
                if _dot(v, v) > lam_norm:
                    break
                m = mult.get(d.dominant_twice(v))
                if m:
                    total += m * _dot(v, a)
        mu_rho = _addv(mu, d.rho2)
        denom = top_norm - _dot(mu_rho, mu_rho)
        if denom <= 0 or (2 * total) % denom:
            raise AssertionError("Freudenthal recursion failed")
        mult[mu] = (2 * total) // denom
    out = {t: mult[d.dominant_twice(t)] for t in weights}
    if sum(out.values()) != _dim_single(label, thw):
        raise AssertionError("character mass != Weyl dimension")
    return out


def char_weights(r: Irrep, cap: int | None = None) -> CharMultiset:
    """Weight multiset of an irrep (or product irrep)."""
    if cap is None:
        cap = dim_cap()
    for lab in r.labels:
        if lab in CHAR_EXCLUDED:
            raise OracleCapError(f"{lab} characters are out of oracle scope")
    if weyl_dim(r) > cap:
        raise OracleCapError(
            f"dim {weyl_dim(r)} exceeds oracle cap {cap}"
        )
    mults = {(): 1}
    for lab, w in zip(r.labels, r.hws):
        fac = _char_single(lab, w.twice())
        mults = {
            t1 + t2: m1 * m2
            for t1, m1 in mults.items()
            for t2, m2 in fac.items()
        }
    return CharMultiset(r.labels, mults)


def convolve(c1: CharMultiset, c2: CharMultiset) -> CharMultiset:
    if c1.labels != c2.labels:
        raise ValueError("character groups differ")
    out = {}
    for t1, m1 in c1.mults.items():
        for t2, m2 in c2.mults.items():
            t = _addv(t1, t2)
            out[t] = out.get(t, 0) + m1 * m2
    return CharMultiset(c1.labels, out)


def adams(c: CharMultiset, k: int) -> CharMultiset:
    """k-th Adams operation: every weight scaled by k."""
    out = {}
    for t, m in c.mults.items():
        key = tuple(k * x for x in t)
        out[key] = out.get(key, 0) + m
    return CharMultiset(c.labels, out)


# ---------------------------------------------------------------------------
# dominant stripping


def _strip_key(labels):
    systems = [_sys(lab) for lab in labels]
    dims = [d.dim for d in systems]

    def height(t):
        h, i = 0, 0
        for d, nd in zip(systems, dims):
            h += _dot(t[i:i + nd], d.rho2)
            i += nd
        return h

    def dominant(t):
        i = 0
        for d, nd in zip(systems, dims):
            if not d.is_dominant(t[i:i + nd]):
                return False
            i += nd
        return True

    return height, dominant


def strip_dominant(c: CharMultiset, cap: int | None = None) -> IsoDecomp:
    """Decompose a genuine character into irreducibles.

    Repeatedly strips the character of the remaining dominant weight of
    greatest rho-pairing (lexicographic tiebreak).  Negative residual
    multiplicities mean the input was not a character; that raises.
    """
    height, dominant = _strip_key(c.labels)
    rem = dict(c.mults)
    out = {}
    while rem:
        doms = [t for t, m in rem.items() if m and dominant(t)]
        if not doms:
            nonzero = {t: m for t, m in rem.items() if m}
            if nonzero:
                raise AssertionError("stripping left a dominant-free residue")
            break
        top = max(doms, key=lambda t: (height(t), t))
        m = rem[top]
        if m < 0:
            raise AssertionError("negative multiplicity while stripping")
        i = 0
        hws = []
        for lab in c.labels:
            nd = _sys(lab).dim
            hws.append(Weight.from_twice(top[i:i + nd], lab))
            i += nd
        r = Irrep(
            c.labels if len(c.labels) > 1 else c.labels[0],
            tuple(hws) if len(hws) > 1 else hws[0],
        )
        out[r] = out.get(r, 0) + m
        for t, fm in char_weights(r, cap=cap).mults.items():
            nm = rem.get(t, 0) - m * fm
            if nm < 0:
                raise AssertionError("negative multiplicity while stripping")
            if nm:
                rem[t] = nm
            else:
                rem.pop(t, None)
    return IsoDecomp(out)


def tensor_decompose(r1: Irrep, r2: Irrep, cap: int | None = None) -> IsoDecomp:
    """Decomposition of a tensor product of two irreps of one group."""
    if cap is None:
        cap = dim_cap()
    if r1.labels != r2.labels:
        raise ValueError("tensor factors live on different groups")
    total = weyl_dim(r1) * weyl_dim(r2)
    if total > cap:
        raise OracleCapError(f"product dim {total} exceeds oracle cap {cap}")
    prod = convolve(char_weights(r1, cap=cap), char_weights(r2, cap=cap))
    dec = strip_dominant(prod, cap=cap)
    if dec.dimension() != total:
        raise AssertionError("tensor decomposition lost dimension")
    return dec


# ---------------------------------------------------------------------------
# embeddings and restriction


@dataclass(frozen=True)
class EmbeddingMap:
    """Cartan-coordinate map of a subgroup inclusion.

    matrix rows are indexed by the concatenated target coordinates; the
    map is applied to doubled coordinate vectors (entries are integers,
    so half-integers stay half-integers).
    """

    name: str
    source: str
    targets: tuple
    matrix: tuple

    def __post_init__(self):
        nrows = sum(_sys(lab).dim for lab in self.targets)
        if len(self.matrix) != nrows:
            raise ValueError(f"{self.name}: need {nrows} matrix rows")
        ncols = _sys(self.source).dim
        for row in self.matrix:
            if len(row) != ncols:
                raise ValueError(f"{self.name}: need {ncols} matrix columns")

    def apply(self, tvec: tuple) -> tuple:
        return tuple(_dot(row, tvec) for row in self.matrix)


def _proj_rows(src_dim, rows):
    out = []
    for r in rows:
        row = [0] * src_dim
        row[r] = 1
        out.append(tuple(row))
    return tuple(out)


def _mk_embeddings():
    table = {}

    def add(name, source, targets, matrix):
        table[name] = EmbeddingMap(name, source, tuple(targets), tuple(matrix))

    # split-last embeddings behind the two-step branching rules
    add("Sp2>Sp1xSp1", "C2", ("C1", "C1"), _proj_rows(2, [0, 1]))
    add("Sp3>Sp2xSp1", "C3", ("C2", "C1"), _proj_rows(3, [0, 1, 2]))
    add("Spin5>Spin3xSpin2", "B2", ("B1", "Spin2"), _proj_rows(2, [0, 1]))
    add("Spin7>Spin5xSpin2", "B3", ("B2", "Spin2"), _proj_rows(3, [0, 1, 2]))
    add("Spin9>Spin7xSpin2", "B4", ("B3", "Spin2"), _proj_rows(4, [0, 1, 2, 3]))
    add("Spin6>Spin4xSpin2", "D3", ("D2", "Spin2"), _proj_rows(3, [0, 1, 2]))
    add("Spin8>Spin6xSpin2", "D4", ("D3", "Spin2"), _proj_rows(4, [0, 1, 2, 3]))
    # Gelfand-Zetlin one-step chain
    add("Spin9>Spin8", "B4", ("D4",), _proj_rows(4, [0, 1, 2, 3]))
    add("Spin8>Spin7", "D4", ("B3",), _proj_rows(4, [0, 1, 2]))
    add("Spin7>Spin6", "B3", ("D3",), _proj_rows(3, [0, 1, 2]))
    add("Spin6>Spin5", "D3", ("B2",), _proj_rows(3, [0, 1]))
    add("Spin5>Spin4", "B2", ("D2",), _proj_rows(2, [0, 1]))
    add("Spin4>Spin3", "D2", ("B1",), _proj_rows(2, [0]))
    # multi-step tori/subgroups used by oracle cross-checks
    add("Spin12>Spin9", "D6", ("B4",), _proj_rows(6, [0, 1, 2, 3]))
    add("Sp3>Sp1^3", "C3", ("C1", "C1", "C1"), _proj_rows(3, [0, 1, 2]))
    add("F4>B4", "F4", ("B4",), _proj_rows(4, [0, 1, 2, 3]))
    return table


EMBEDDINGS = _mk_embeddings()


def embedding(name: str) -> EmbeddingMap:
    try:
        return EMBEDDINGS[name]
    except KeyError:
        raise ValueError(f"unknown embedding {name!r}") from None


def restrict(r: Irrep, e: EmbeddingMap, cap: int | None = None) -> IsoDecomp:
    """Restriction of an irrep along an embedding, by weight pushforward
    and dominant stripping."""
    if cap is None:
        cap = dim_cap()
    if not isinstance(r.group, str) or e.source != r.group:
        raise ValueError(f"embedding {e.name} does not start at {r.group}")
    src = char_weights(r, cap=cap)
    pushed = {}
    for t, m in src.mults.items():
        u = e.apply(t)
        pushed[u] = pushed.get(u, 0) + m
    dec = strip_dominant(CharMultiset(e.targets, pushed), cap=cap)
    if dec.dimension() != weyl_dim(r):
        raise AssertionError("restriction lost dimension")
    return dec
