"""Root systems and exact weight arithmetic in epsilon coordinates.

Weights live in an ambient coordinate space per system (Bourbaki
conventions), with every coordinate a half-integer.  HalfInt stores the
doubled value, so all arithmetic and comparisons are exact integer
arithmetic; nothing in this package touches floating point.

Supported system labels:

    A1 A2 A3 A5          su(n+1), ambient dimension n+1
    B1 B2 B3 B4          so(2n+1), ambient dimension n
    C1 C2 C3             sp(n), ambient dimension n
    D2 D3 D4 D6          so(2n), ambient dimension n
    G2                   ambient dimension 3 (coordinates sum to zero)
    F4 E6 E7 E8          ambient dimensions 4, 8, 8, 8
    Spin2                one-dimensional torus, no roots

G2 is realised inside the sum-zero plane of Z^3 with simple roots
(1,-1,0) and (-1,2,-1); the compact dual pair computations elsewhere in
the package rely on this realisation (rho = (2,1,-3)).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# half-integers


@dataclass(frozen=True, eq=False)
class HalfInt:
    """An element of (1/2)Z stored as its doubled value."""

    twice: int

    @staticmethod
    def of(x) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a weight coordinate")
        if isinstance(x, int):
            return HalfInt(2 * x)
        if isinstance(x, Fraction):
            if x.denominator not in (1, 2):
                raise ValueError(f"{x} is not a half-integer")
            return HalfInt(int(x * 2))
        if isinstance(x, str):
            return HalfInt.parse(x)
        raise TypeError(f"cannot interpret {x!r} as a half-integer")

    @staticmethod
    def parse(s: str) -> "HalfInt":
        s = s.strip()
        if "/" in s:
            num, den = s.split("/")
            if den.strip() != "2":
                raise ValueError(f"bad half-integer literal {s!r}")
            return HalfInt(int(num))
        return HalfInt(2 * int(s))

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def _cmp_twice(self, other) -> int:
        return HalfInt.of(other).twice

    def __eq__(self, other):
        try:
            return self.twice == self._cmp_twice(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < self._cmp_twice(other)

    def __le__(self, other):
        return self.twice <= self._cmp_twice(other)

    def __gt__(self, other):
        return self.twice > self._cmp_twice(other)

    def __ge__(self, other):
        return self.twice >= self._cmp_twice(other)

    def __hash__(self):
        # agree with int/Fraction hashing so mixed-type dict keys work
        return hash(self.as_fraction())

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    __repr__ = __str__


def half(x) -> HalfInt:
    """Convenience constructor accepting int, Fraction, str, or HalfInt."""
    return HalfInt.of(x)


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class Weight:
    """A vector of half-integers tagged with its root-system label."""

    coords: tuple
    system: str

    def __post_init__(self):
        object.__setattr__(
            self, "coords", tuple(HalfInt.of(c) for c in self.coords)
        )

    def twice(self) -> tuple:
        return tuple(c.twice for c in self.coords)

    @staticmethod
    def from_twice(tvec, system: str) -> "Weight":
        return Weight(tuple(HalfInt(t) for t in tvec), system)

    def to_json(self) -> list:
        out = []
        for c in self.coords:
            out.append(c.twice // 2 if c.twice % 2 == 0 else str(c))
        return out

    @staticmethod
    def from_json(data, system: str) -> "Weight":
        return Weight(tuple(HalfInt.of(c) for c in data), system)

    def __repr__(self):
        return f"Weight({', '.join(str(c) for c in self.coords)}; {self.system})"


def weight(system: str, *values) -> Weight:
    if len(values) == 1 and isinstance(values[0], (tuple, list)):
        values = tuple(values[0])
    return Weight(tuple(values), system)


# ---------------------------------------------------------------------------
# root-system construction (doubled coordinates throughout)


def _e(i: int, n: int, v: int = 2) -> tuple:
    row = [0] * n
    row[i] = v
    return tuple(row)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _neg(u):
    return tuple(-a for a in u)


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _scale(u, c: int):
    return tuple(c * a for a in u)


def _type_a(n: int):
    dim = n + 1
    simple = [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n)]
    pos = [_sub(_e(i, dim), _e(j, dim)) for i in range(dim) for j in range(dim) if i < j]
    return dim, simple, pos, math.factorial(n + 1)


def _type_b(n: int):
    simple = [_sub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [_e(n - 1, n)]
    pos = [_e(i, n) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_sub(_e(i, n), _e(j, n)))
            pos.append(_add(_e(i, n), _e(j, n)))
    return n, simple, pos, (2 ** n) * math.factorial(n)


def _type_c(n: int):
    simple = [_sub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [_e(n - 1, n, 4)]
    pos = [_e(i, n, 4) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_sub(_e(i, n), _e(j, n)))
            pos.append(_add(_e(i, n), _e(j, n)))
    return n, simple, pos, (2 ** n) * math.factorial(n)


def _type_d(n: int):
    simple = [_sub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)]
    simple.append(_add(_e(n - 2, n), _e(n - 1, n)))
    pos = []
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_sub(_e(i, n), _e(j, n)))
            pos.append(_add(_e(i, n), _e(j, n)))
    return n, simple, pos, (2 ** (n - 1)) * math.factorial(n)


def _type_g2():
    simple = [(2, -2, 0), (-2, 4, -2)]
    pos = [
        (2, -2, 0),
        (0, 2, -2),
        (2, 0, -2),
        (4, -2, -2),
        (-2, 4, -2),
        (2, 2, -4),
    ]
    return 3, simple, pos, 12


def _type_f4():
    simple = [
        (0, 2, -2, 0),
        (0, 0, 2, -2),
        (0, 0, 0, 2),
        (1, -1, -1, -1),
    ]
    pos = [_e(i, 4) for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            pos.append(_sub(_e(i, 4), _e(j, 4)))
            pos.append(_add(_e(i, 4), _e(j, 4)))
    for signs in itertools.product((1, -1), repeat=3):
        pos.append((1, signs[0], signs[1], signs[2]))
    return 4, simple, pos, 1152


def _type_e6():
    # positive roots: +-e_i + e_j (1 <= i < j <= 5) and
    # (e_8 - e_7 - e_6 + sum of +-e_i)/2 with an even number of minus signs
    pos = []
    for j in range(1, 5):
        for i in range(j):
            pos.append(_sub(_e(j, 8), _e(i, 8)))
            pos.append(_add(_e(j, 8), _e(i, 8)))
    for signs in itertools.product((1, -1), repeat=5):
        if signs.count(-1) % 2 == 0:
            pos.append(tuple(signs) + (-1, -1, 1))
    simple = [
        (1, -1, -1, -1, -1, -1, -1, 1),
        (2, 2, 0, 0, 0, 0, 0, 0),
        (-2, 2, 0, 0, 0, 0, 0, 0),
        (0, -2, 2, 0, 0, 0, 0, 0),
        (0, 0, -2, 2, 0, 0, 0, 0),
        (0, 0, 0, -2, 2, 0, 0, 0),
    ]
    return 8, simple, pos, 51840


def _type_e7():
    pos = []
    for j in range(1, 6):
        for i in range(j):
            pos.append(_sub(_e(j, 8), _e(i, 8)))
            pos.append(_add(_e(j, 8), _e(i, 8)))
    pos.append((0, 0, 0, 0, 0, 0, -2, 2))
    for signs in itertools.product((1, -1), repeat=6):
        if signs.count(-1) % 2 == 1:
            pos.append(tuple(signs) + (-1, 1))
    simple = [
        (1, -1, -1, -1, -1, -1, -1, 1),
        (2, 2, 0, 0, 0, 0, 0, 0),
        (-2, 2, 0, 0, 0, 0, 0, 0),
        (0, -2, 2, 0, 0, 0, 0, 0),
        (0, 0, -2, 2, 0, 0, 0, 0),
        (0, 0, 0, -2, 2, 0, 0, 0),
        (0, 0, 0, 0, -2, 2, 0, 0),
    ]
    return 8, simple, pos, 2903040


def _type_e8():
    pos = []
    for j in range(1, 8):
        for i in range(j):
            pos.append(_sub(_e(j, 8), _e(i, 8)))
            pos.append(_add(_e(j, 8), _e(i, 8)))
    for signs in itertools.product((1, -1), repeat=7):
        if signs.count(-1) % 2 == 0:
            pos.append(tuple(signs) + (1,))
    simple = [
        (1, -1, -1, -1, -1, -1, -1, 1),
        (2, 2, 0, 0, 0, 0, 0, 0),
        (-2, 2, 0, 0, 0, 0, 0, 0),
        (0, -2, 2, 0, 0, 0, 0, 0),
        (0, 0, -2, 2, 0, 0, 0, 0),
        (0, 0, 0, -2, 2, 0, 0, 0),
        (0, 0, 0, 0, -2, 2, 0, 0),
        (0, 0, 0, 0, 0, -2, 2, 0),
    ]
    return 8, simple, pos, 696729600


_BUILDERS = {
    "A1": lambda: _type_a(1),
    "A2": lambda: _type_a(2),
    "A3": lambda: _type_a(3),
    "A5": lambda: _type_a(5),
    "B1": lambda: (1, [(2,)], [(2,)], 2),
    "B2": lambda: _type_b(2),
    "B3": lambda: _type_b(3),
    "B4": lambda: _type_b(4),
    "C1": lambda: (1, [(4,)], [(4,)], 2),
    "C2": lambda: _type_c(2),
    "C3": lambda: _type_c(3),
    "D2": lambda: _type_d(2),
    "D3": lambda: _type_d(3),
    "D4": lambda: _type_d(4),
    "D6": lambda: _type_d(6),
    "G2": _type_g2,
    "F4": _type_f4,
    "E6": _type_e6,
    "E7": _type_e7,
    "E8": _type_e8,
    "Spin2": lambda: (1, [], [], 1),
}

SUPPORTED_SYSTEMS = tuple(sorted(_BUILDERS))


class _SysData:
    """Interned per-label root data in doubled coordinates."""

    __slots__ = (
        "label", "dim", "rank", "simple", "pos", "rho2", "weyl_order",
        "_gram_inv", "_coroot_norm",
    )

    def __init__(self, label):
        if label not in _BUILDERS:
            raise ValueError(f"unsupported root system label {label!r}")
        dim, simple, pos, order = _BUILDERS[label]()
        self.label = label
        self.dim = dim
        self.rank = len(simple)
        self.simple = tuple(simple)
        self.pos = tuple(sorted(pos))
        rho2_doubled = [0] * dim  # 2*rho, doubled
        for a in pos:
            rho2_doubled = list(_add(rho2_doubled, a))
        if any(t % 2 for t in rho2_doubled):
            raise AssertionError(f"rho of {label} not a half-integer vector")
        self.rho2 = tuple(t // 2 for t in rho2_doubled)  # doubled rho
        self.weyl_order = order
        self._gram_inv = None
        self._coroot_norm = tuple(_dot(a, a) for a in self.simple)

    def pairing(self, tvec, a) -> Fraction:
        """<w, alpha^vee> for doubled vectors; exact rational."""
        return Fraction(2 * _dot(tvec, a), _dot(a, a))

    def simple_pairings(self, tvec):
        return [self.pairing(tvec, a) for a in self.simple]

    def is_dominant(self, tvec) -> bool:
        return all(_dot(tvec, a) >= 0 for a in self.simple)

    def reflect_simple(self, tvec, i: int):
        a = self.simple[i]
        p = self.pairing(tvec, a)
        if p.denominator != 1:
            raise ValueError("vector not in the weight lattice")
        return _sub(tvec, _scale(a, int(p)))

    def gram_inverse(self):
        if self._gram_inv is None:
            n = self.rank
            g = [
                [Fraction(_dot(self.simple[i], self.simple[j])) for j in range(n)]
                for i in range(n)
            ]
            inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
            for col in range(n):
                piv = next(r for r in range(col, n) if g[r][col] != 0)
                g[col], g[piv] = g[piv], g[col]
                inv[col], inv[piv] = inv[piv], inv[col]
                d = g[col][col]
                g[col] = [x / d for x in g[col]]
                inv[col] = [x / d for x in inv[col]]
                for r in range(n):
                    if r != col and g[r][col] != 0:
                        f = g[r][col]
                        g[r] = [x - f * y for x, y in zip(g[r], g[col])]
                        inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
            self._gram_inv = inv
        return self._gram_inv

    def simple_root_coefficients(self, tvec):
        """Write a doubled vector as sum c_i * alpha_i, or None if outside
        the rational span of the simple roots."""
        rhs = [Fraction(_dot(tvec, a)) for a in self.simple]
        inv = self.gram_inverse()
        coeffs = [
            sum(inv[i][j] * rhs[j] for j in range(self.rank))
            for i in range(self.rank)
        ]
        recon = [Fraction(0)] * self.dim
        for c, a in zip(coeffs, self.simple):
            for k in range(self.dim):
                recon[k] += c * Fraction(a[k], 2)
        if any(recon[k] != Fraction(tvec[k], 2) for k in range(self.dim)):
            return None
        return coeffs

    def dominant_twice(self, t):
        """Dominant Weyl representative of a doubled coordinate vector."""
        if self.rank == 0:
            return tuple(t)
        fam = self.label[0]
        if fam == "A":
            return tuple(sorted(t, reverse=True))
        if fam in ("B", "C"):
            return tuple(sorted((abs(x) for x in t), reverse=True))
        if fam == "D":
            mags = sorted((abs(x) for x in t), reverse=True)
            if sum(1 for x in t if x < 0) % 2:
                mags[-1] = -mags[-1]
            return tuple(mags)
        t = tuple(t)
        guard = 10 * self.weyl_order
        while True:
            for i, a in enumerate(self.simple):
                if _dot(t, a) < 0:
                    t = self.reflect_simple(t, i)
                    break
            else:
                return t
            guard -= 1
            if guard < 0:
                raise AssertionError("reflection descent failed to terminate")


@lru_cache(maxsize=None)
def _sys(label: str) -> _SysData:
    return _SysData(label)


# ---------------------------------------------------------------------------
# public root-system container


@dataclass(frozen=True)
class RootSystem:
    label: str
    dim: int
    rank: int
    simple_roots: tuple
    positive_roots: tuple
    rho: Weight
    weyl_order: int


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    """Root data for a supported label, positive roots in lexicographic
    order of their coordinate vectors."""
    d = _sys(label)
    return RootSystem(
        label=label,
        dim=d.dim,
        rank=d.rank,
        simple_roots=tuple(Weight.from_twice(a, label) for a in d.simple),
        positive_roots=tuple(Weight.from_twice(a, label) for a in d.pos),
        rho=Weight.from_twice(d.rho2, label),
        weyl_order=d.weyl_order,
    )


def highest_root(label: str) -> Weight:
    """The highest root: the dominant root of maximal length (the short
    dominant root is a second dominant root in B/C/F4/G2)."""
    d = _sys(label)
    dom = [a for a in d.pos if d.is_dominant(a)]
    if not dom:
        raise ValueError(f"{label} has no roots")
    top_norm = max(_dot(a, a) for a in dom)
    top = [a for a in dom if _dot(a, a) == top_norm]
    if len(top) != 1:
        raise ValueError(f"{label} is reducible: no unique highest root")
    return Weight.from_twice(top[0], label)


def highest_root_coefficients(label: str) -> tuple:
    """Expansion of the highest root in the simple roots, as integers in
    the simple-root order of build_root_system."""
    d = _sys(label)
    theta = highest_root(label).twice()
    coeffs = d.simple_root_coefficients(theta)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise AssertionError("highest root not an integral combination")
    return tuple(int(c) for c in coeffs)


# ---------------------------------------------------------------------------
# dominant representatives


def dominant_representative(w: Weight, sys: RootSystem | None = None) -> Weight:
    """The dominant Weyl-chamber representative of the orbit of w.

    Classical families use the signed-permutation normal form; the
    exceptional systems walk simple reflections (which requires w to be
    in the weight lattice, i.e. have integral simple pairings).  The
    optional sys argument, if given, must match w.system.
    """
    if sys is not None and sys.label != w.system:
        raise ValueError("root system does not match the weight's label")
    d = _sys(w.system)
    return Weight.from_twice(d.dominant_twice(w.twice()), w.system)


def is_dominant(w: Weight) -> bool:
    return _sys(w.system).is_dominant(w.twice())


def weyl_orbit(w: Weight, max_size: int = 100000) -> set:
    """Full Weyl orbit of w (exceptional systems need lattice weights).

    Exponential in rank; intended as a test oracle for small systems.
    """
    d = _sys(w.system)
    seen = {w.twice()}
    frontier = [w.twice()]
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(d.rank):
                r = d.reflect_simple(t, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        if len(seen) > max_size:
            raise ValueError("orbit too large")
        frontier = nxt
    return {Weight.from_twice(t, w.system) for t in seen}


# ---------------------------------------------------------------------------
# quaternionic structure table


@dataclass(frozen=True)
class QuaternionicStructure:
    """Data of the quaternionic real form attached to a group label.

    m_factors are the root-system labels of the factors of M, in the
    order used for highest weights elsewhere; m_simple_coords gives, for
    the factors that are single SU(2)'s, the simple root of the ambient
    system spanning that factor (doubled coordinates).  vm_hw is the
    highest weight tuple of V_M factor by factor.
    """

    g_label: str
    system: str
    m_label: str
    m_factors: tuple
    vm_hw: tuple
    vm_dim: int
    alpha0: Weight
    k_label: str
    m_simple_coords: tuple
    heisenberg_embedding: dict | None = None


_QUAT_TABLE = {}


def _register_quat(
    g_label, system, m_label, m_factors, vm_hw, vm_dim, k_label,
    m_simple_coords, heisenberg_embedding=None,
):
    theta = highest_root(system)
    alpha0 = Weight.from_twice(_neg(theta.twice()), system)
    _QUAT_TABLE[g_label] = QuaternionicStructure(
        g_label=g_label,
        system=system,
        m_label=m_label,
        m_factors=m_factors,
        vm_hw=vm_hw,
        vm_dim=vm_dim,
        alpha0=alpha0,
        k_label=k_label,
        m_simple_coords=m_simple_coords,
        heisenberg_embedding=heisenberg_embedding,
    )


def _init_quat_table():
    # Spin(4,3): M = SU(2) x Spin(3); both factors carry integer SU(2)
    # weights (m), (n); V_M = (1) (x) (2).  The split G2 sits inside via
    # SU_s(2) diagonal in SU_0(2) x Spin(3) and SU_l(2) equal to the
    # SU(2) factor; under K2 the tangent space is (3) (x) (1).
    _register_quat(
        "Spin(4,3)", "B3", "SU(2)xSpin(3)", ("C1", "C1"),
        ((1,), (2,)), 6, "SU_0(2) x SU(2) x Spin(3)",
        ((2, -2, 0), (0, 0, 2)),
        heisenberg_embedding={
            "subgroup": "G2_2",
            "k2": "SU_s(2) x SU_l(2)",
            "rule": "SU_s(2) diagonal in SU_0(2) x Spin(3); SU_l(2) = SU(2) factor of M",
            "p2_as_k2": ((3,), (1,)),
            "p_as_su0_spin3_su2": ((1,), (2,), (1,)),
        },
    )
    # Spin(4,4): M = SU(2)^3.  Factor order (alpha, beta, gamma) pinned to
    # the simple roots e1-e2, e3+e4, e3-e4 so that the Spin(8) lift table
    # reproduces inf chars equal to lambda + rho.
    _register_quat(
        "Spin(4,4)", "D4", "SU(2)^3", ("C1", "C1", "C1"),
        ((1,), (1,), (1,)), 8, "SU_0(2) x SU(2)^3",
        ((2, -2, 0, 0), (0, 0, 2, 2), (0, 0, 2, -2)),
    )
    _register_quat(
        "E6_4", "E6", "SU(6)", ("A5",),
        ((1, 1, 1, 0, 0, 0),), 20, "SU_0(2) x SU(6)",
        (None,),
    )
    _register_quat(
        "E7_4", "E7", "Spin(12)", ("D6",),
        ((half("1/2"),) * 6,), 32, "SU_0(2) x Spin(12)",
        (None,),
    )
    _register_quat(
        "E8_4", "E8", "E7", ("E7",),
        ((0, 0, 0, 0, 0, 1, half("-1/2"), half("1/2")),), 56, "SU_0(2) x E7",
        (None,),
    )
    _register_quat(
        "F4_4", "F4", "Sp(3)", ("C3",),
        ((1, 1, 1),), 14, "SU_0(2) x Sp(3)",
        (None,),
    )
    # split G2: M is the SU(2) on the short simple root; V_M = (3)
    _register_quat(
        "G2_2", "G2", "SU(2)", ("C1",),
        ((3,),), 4, "SU_0(2) x SU(2)",
        ((2, -2, 0),),
    )


_init_quat_table()

QUATERNIONIC_GROUPS = tuple(_QUAT_TABLE)


def quaternionic_structure(g_label: str) -> QuaternionicStructure:
    try:
        return _QUAT_TABLE[g_label]
    except KeyError:
        raise ValueError(f"no quaternionic structure for {g_label!r}") from None
