"""Cohomologically induced modules for split G2 and PU(2,1).

Both groups share a rank-2 torus realized inside the sum-zero integer
triples.  For each choice of theta-stable parabolic (one per Weyl
chamber for regular lambda, several on the walls) the module A_q(lambda)
has infinitesimal character lambda + rho(case) and minimal K-type
mu = lambda + 2 rho(u cap p).  This module tabulates those data, decides
K-type cone membership, and encodes the decision tables for the unitary
theta correspondence between the two groups, including the restriction
segments of the minimal types of the lifted modules.

Coordinates: K-types are plotted as (x, y) = (b - c, a) for a triple
(a, b, c); PU(2,1) K-types are alternatively written as standard U(2)
highest weights (a, c).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .branchrules import clebsch_gordan
from .thetamaps import theta_e6_u2

CASE_IDS = (
    "I", "II", "III",
    "Ia.1", "Ia.2", "Ia.3", "Ib",
    "IIa.1", "IIa.2", "IIa.3", "IIb",
)

# noncompact root pairs are listed by a representative; compact roots
# determine the K-chamber
NONCOMPACT = {
    "G2": ((1, -1, 0), (-1, 2, -1), (1, 0, -1), (1, 1, -2)),
    "PU21": ((1, -1, 0), (0, 1, -1)),
}
COMPACT = {
    "G2": ((0, 1, -1), (2, -1, -1)),
    "PU21": ((1, 0, -1),),
}

# rho of the chamber attached to each case family
_RHO = {
    ("G2", "I"): (2, 1, -3),
    ("G2", "II"): (3, -1, -2),
    ("G2", "III"): (1, 2, -3),
    ("PU21", "I"): (1, 0, -1),
    ("PU21", "II"): (1, -1, 0),
    ("PU21", "III"): (0, 1, -1),
}

_FAMILY = {
    "I": "I", "II": "II", "III": "III",
    "Ia.1": "I", "Ia.2": "I", "Ia.3": "I", "Ib": "II",
    "IIa.1": "I", "IIa.2": "I", "IIa.3": "I", "IIb": "III",
}

# wall-case u cap p tables; regular cases derive theirs from lambda
_G2_SET_I = ((1, -1, 0), (-1, 2, -1), (1, 0, -1), (1, 1, -2))
_G2_SET_II = ((1, -1, 0), (1, -2, 1), (1, 0, -1), (1, 1, -2))
_G2_SET_III = ((-1, 1, 0), (-1, 2, -1), (1, 0, -1), (1, 1, -2))
_WALL_WEIGHTS = {
    ("G2", "Ia.1"): _G2_SET_I,
    ("G2", "Ia.2"): ((-1, 2, -1), (1, 0, -1), (1, 1, -2)),
    ("G2", "Ia.3"): _G2_SET_III,
    ("G2", "Ib"): _G2_SET_II,
    ("G2", "IIa.1"): _G2_SET_II,
    ("G2", "IIa.2"): ((1, -1, 0), (1, 0, -1), (1, 1, -2)),
    ("G2", "IIa.3"): _G2_SET_I,
    ("G2", "IIb"): _G2_SET_III,
    ("PU21", "Ia.1"): ((0, 1, -1),),
    ("PU21", "Ia.2"): ((-1, 1, 0), (0, 1, -1)),
    ("PU21", "Ia.3"): ((1, -1, 0), (0, 1, -1)),
    ("PU21", "Ib"): ((1, -1, 0), (0, -1, 1)),
    ("PU21", "IIa.1"): ((1, -1, 0),),
    ("PU21", "IIa.2"): ((1, -1, 0), (0, -1, 1)),
    ("PU21", "IIa.3"): ((1, -1, 0), (0, 1, -1)),
    ("PU21", "IIb"): ((-1, 1, 0), (0, 1, -1)),
}


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _neg(u):
    return tuple(-x for x in u)


def abc_to_xy(t):
    return (t[1] - t[2], t[0])


def xy_to_abc(x, y):
    """Inverse of abc_to_xy on the sum-zero lattice: (y, (x-y)/2,
    -(x+y)/2); x and y must have equal parity."""
    if (x - y) % 2:
        raise ValueError("x and y must have equal parity")
    return (y, (x - y) // 2, -(x + y) // 2)


def _check_case(group: str, case_id: str, lam) -> None:
    if group not in ("G2", "PU21"):
        raise ValueError(f"unknown group {group!r}")
    if case_id not in CASE_IDS:
        raise ValueError(f"unknown case {case_id!r}")
    if len(lam) != 3 or any(not isinstance(x, int) for x in lam):
        raise ValueError("lambda must be an integer triple")
    if sum(lam) != 0:
        raise ValueError("lambda must sum to zero")
    l1, l2, l3 = lam
    fam = case_id.split(".")[0]
    if group == "G2":
        # regular parameters (a, b) with a > b > 0 enter the three
        # chambers as (a,b,c), (-c,-b,-a), (b,a,c)
        if case_id == "I":
            ok = l1 > l2 > 0
        elif case_id == "II":
            ok = -l3 > -l2 > 0
        elif case_id == "III":
            ok = l2 > l1 > 0
        elif fam == "Ia":
            ok = l1 == l2 > 0
        elif case_id == "Ib":
            ok = l2 == l3 < 0
        elif fam == "IIa":
            ok = l2 == 0 and l1 > 0
        else:  # IIb
            ok = l1 == 0 and l2 > 0
    else:
        if case_id == "I":
            ok = l1 > l2 > l3
        elif case_id == "II":
            ok = l1 > l3 > l2
        elif case_id == "III":
            ok = l2 > l1 > l3
        elif fam == "Ia":
            ok = l1 == l2 > 0
        elif case_id == "Ib":
            ok = l1 == l3 > 0
        elif fam == "IIa":
            ok = l2 == l3 < 0
        else:  # IIb
            ok = l1 == l3 < 0
    if not ok:
        raise ValueError(
            f"lambda {tuple(lam)} violates the constraints of "
            f"{group} case {case_id}"
        )


@dataclass(frozen=True)
class AqCase:
    """A group, a parabolic case id, and an admissible lambda."""

    group: str
    case_id: str
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        _check_case(self.group, self.case_id, self.lam)


@dataclass(frozen=True)
class AqData:
    """Infinitesimal character and minimal K-type of one A_q(lambda).

    minimal_type_xy is the (b-c, a) image of the minimal type;
    minimal_type_u2 is the standard U(2) pair (a, c), populated for
    PU21 only.
    """

    inf_char: tuple
    minimal_type_abc: tuple
    minimal_type_xy: tuple
    u_cap_p_weights: tuple
    minimal_type_u2: tuple | None = None

    def to_json(self) -> dict:
        out = {
            "inf_char": list(self.inf_char),
            "minimal_type_abc": list(self.minimal_type_abc),
            "minimal_type_xy": list(self.minimal_type_xy),
            "u_cap_p_weights": [list(w) for w in self.u_cap_p_weights],
        }
        if self.minimal_type_u2 is not None:
            out["minimal_type_u2"] = list(self.minimal_type_u2)
        return out

    @staticmethod
    def from_json(data: dict) -> "AqData":
        u2 = data.get("minimal_type_u2")
        return AqData(
            tuple(data["inf_char"]),
            tuple(data["minimal_type_abc"]),
            tuple(data["minimal_type_xy"]),
            tuple(tuple(w) for w in data["u_cap_p_weights"]),
            tuple(u2) if u2 is not None else None,
        )


def _u_cap_p(case: AqCase):
    key = (case.group, case.case_id)
    if key in _WALL_WEIGHTS:
        return _WALL_WEIGHTS[key]
    out = []
    for w in NONCOMPACT[case.group]:
        p = _dot(case.lam, w)
        assert p != 0, "regular case lambda on a noncompact wall"
        out.append(w if p > 0 else _neg(w))
    return tuple(out)


def aq_data(case: AqCase) -> AqData:
    """Infinitesimal character lambda + rho(case) and minimal K-type
    lambda + 2 rho(u cap p), in all coordinate systems."""
    rho = _RHO[(case.group, _FAMILY[case.case_id])]
    weights = _u_cap_p(case)
    mu = case.lam
    for w in weights:
        mu = _add(mu, w)
    inf = _add(case.lam, rho)
    u2 = (mu[0], mu[2]) if case.group == "PU21" else None
    return AqData(inf, mu, abc_to_xy(mu), weights, u2)


def _positive_functional(group: str, weights):
    for fam in ("I", "II", "III"):
        phi = _RHO[(group, fam)]
        if all(_dot(phi, w) > 0 for w in weights):
            return phi
    raise AssertionError("no chamber functional dominates the weight set")


def cone_contains(case: AqCase, query_xy) -> bool:
    """Whether the (x, y) K-type lies in mu + Z>=0-span of the case's
    u cap p weights; decided by exhaustive search bounded by a linear
    functional positive on all generators."""
    data = aq_data(case)
    try:
        q = xy_to_abc(*query_xy)
    except ValueError:
        return False
    delta = tuple(a - b for a, b in zip(q, data.minimal_type_abc))
    if sum(delta) != 0:
        return False
    gens = data.u_cap_p_weights
    phi = _positive_functional(case.group, gens)

    def search(i, rem):
        if all(x == 0 for x in rem):
            return True
        if i == len(gens):
            return False
        w = gens[i]
        bound = _dot(phi, rem) // _dot(phi, w)
        cur = rem
        for n in range(bound + 1):
            if search(i + 1, cur):
                return True
            cur = tuple(r - x for r, x in zip(cur, w))
            if _dot(phi, cur) < 0:
                break
        return False

    if _dot(phi, delta) < 0:
        return False
    return search(0, delta)


def cone_extreme_rays(case: AqCase) -> tuple:
    """Extreme rays of the (x, y) image of the case's K-type cone, as a
    pair of primitive integer vectors (clockwise-most first).  The image
    cone is salient in every case; the two rays coincide when a single
    generator direction remains."""
    data = aq_data(case)
    vecs = set()
    for w in data.u_cap_p_weights:
        x, y = abc_to_xy(w)
        g = gcd(x, y)
        vecs.add((x // g, y // g) if g else (x, y))
    vecs = sorted(vecs)

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    for u in vecs:
        for v in vecs:
            if cross(u, v) == 0 and u[0] * v[0] + u[1] * v[1] < 0:
                raise ValueError("image cone is not salient")
    lo = [u for u in vecs if all(cross(u, v) >= 0 for v in vecs)]
    hi = [u for u in vecs if all(cross(u, v) <= 0 for v in vecs)]
    if not lo or not hi:
        raise ValueError("image cone is not salient")
    return (lo[0], hi[0])


def orbit_key(t):
    """Canonical form under coordinate permutations and global sign
    (the full-rank Weyl symmetry of the sum-zero plane)."""
    return max(tuple(sorted(t, reverse=True)),
               tuple(sorted((-x for x in t), reverse=True)))


def g2_modules_with_infchar(target, amax: int):
    """All G2 cases with parameters up to amax whose infinitesimal
    character lies in the permutation-and-sign orbit of target."""
    key = orbit_key(target)
    found = []

    def consider(case_id, lam):
        try:
            case = AqCase("G2", case_id, lam)
        except ValueError:
            return
        data = aq_data(case)
        if orbit_key(data.inf_char) == key:
            found.append((case, data))

    for a in range(1, amax + 1):
        for b in range(1, a):
            c = -a - b
            consider("I", (a, b, c))
            consider("II", (-c, -b, -a))
            consider("III", (b, a, c))
        for sub in ("Ia.1", "Ia.2", "Ia.3"):
            consider(sub, (a, a, -2 * a))
        consider("Ib", (2 * a, -a, -a))
        for sub in ("IIa.1", "IIa.2", "IIa.3"):
            consider(sub, (a, 0, -a))
        consider("IIb", (0, a, -a))
    return found


# ---------------------------------------------------------------------------
# restriction segments of lifted minimal types


def ftau_restriction_segments(a: int):
    """For the three wall-parameter U(2) types (a-1, -2a-1),
    (a, -2a-1), (a+1, -2a-1): lift each to its rank-7 module, take the
    minimal K-type, and restrict to the rank-2 subgroup generated by
    the outer SU(2) and one module factor.  Each restriction is a
    multiplicity-free Clebsch-Gordan segment, returned as an ascending
    list of (x, y) types."""
    if a <= 0:
        raise ValueError("need a > 0")
    segments = []
    for t in (a - 1, a, a + 1):
        lift = theta_e6_u2(t, -2 * a - 1)
        ((mod, mult),) = lift.lifts
        assert mult == 1 and mod.kind == "sigma"
        m, n = (int(f[0]) for f in mod.wm)
        xs = clebsch_gordan(mod.s - 2, n)
        segments.append([(x, m) for x in xs])
    return segments


# ---------------------------------------------------------------------------
# unitary theta decision tables


@dataclass(frozen=True)
class ThetaUnitaryResult:
    """Outcome for one minimal-type bullet: a definite zero, or a
    minimal (x, y) type that applies only if the lift is nonzero
    (conditional=True records that the nonvanishing itself is left
    open)."""

    zero: bool
    minimal_type_xy: tuple | None = None
    conditional: bool = False

    def to_json(self) -> dict:
        if self.zero:
            return {"zero": True}
        out = {"minimal_type_xy": list(self.minimal_type_xy)}
        if self.conditional:
            out["if_nonzero"] = True
        return out


def theta_unitary(regime: str, params, tau) -> ThetaUnitaryResult:
    """Decision table of the unitary correspondence.

    regime 'wall': params is a > 0; the source has infinitesimal
    character (a+1, a, -2a-1) and tau is one of the four minimal U(2)
    types with that character.  regime 'regular': params = (a, b, c)
    with a > b > c, b > 0, and tau one of the three minimal types for
    character (a+1, b, c-1).
    """
    tau = tuple(int(x) for x in tau)
    if regime == "wall":
        a = int(params)
        if a <= 0:
            raise ValueError("need a > 0")
        if tau == (a + 1, a + 1):
            return ThetaUnitaryResult(zero=True)
        table = {
            (a - 1, -2 * a - 1): (3 * a + 5, a - 1),
            (a, -2 * a - 1): (3 * a + 4, a),
            (a + 1, -2 * a - 1): (3 * a + 3, a + 1),
        }
        if tau in table:
            return ThetaUnitaryResult(False, table[tau], conditional=True)
        raise ValueError(f"{tau} is not a minimal type for wall parameter {a}")
    if regime == "regular":
        a, b, c = (int(x) for x in params)
        if not (a > b > c) or b <= 0 or a + b + c != 0:
            raise ValueError("need a > b > c with b > 0 summing to zero")
        if tau == (a + 1, b + 1):
            return ThetaUnitaryResult(zero=True)
        table = {
            (a + 1, c - 1): (3 - c + b, a + 1),
            (b - 1, c - 1): (5 + a - c, b - 1),
        }
        if tau in table:
            return ThetaUnitaryResult(False, table[tau], conditional=True)
        raise ValueError(f"{tau} is not a minimal type for {(a, b, c)}")
    raise ValueError(f"unknown regime {regime!r}")
