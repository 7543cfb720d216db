import random

import pytest

from quatheta.charoracle import (
    CharMultiset,
    Irrep,
    OracleCapError,
    adams,
    char_weights,
    convolve,
    dim_cap,
    embedding,
    irrep,
    restrict,
    strip_dominant,
    tensor_decompose,
    weyl_dim,
)
from quatheta.rootdata import HalfInt


def h(p):
    return HalfInt(p)


class TestIrrep:
    def test_single_factor(self):
        r = irrep("B3", (1, 1, 0))
        assert r.labels == ("B3",)
        assert r.twice_concat() == (2, 2, 0)
        assert r.hw_json() == [1, 1, 0]

    def test_spinor_coordinates(self):
        r = irrep("B3", (h(1), h(1), h(1)))
        assert r.twice_concat() == (1, 1, 1)
        assert r.hw_json() == ["1/2", "1/2", "1/2"]

    def test_product_group(self):
        r = irrep(("C1", "C1"), (1,), (2,))
        assert r.labels == ("C1", "C1")
        assert r.twice_concat() == (2, 4)
        assert r.hw_json() == [[1], [2]]
        assert weyl_dim(r) == 6

    def test_single_tuple_convenience(self):
        assert irrep("B3", (1, 0, 0)) == Irrep("B3", (1, 0, 0))

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            irrep("B3", (0, 1, 0))

    def test_rejects_mixed_parity_spin_weight(self):
        with pytest.raises(ValueError):
            irrep("B3", (1, h(1), h(1)))

    def test_d_type_signed_last_coordinate(self):
        irrep("D4", (1, 1, 1, -1))
        with pytest.raises(ValueError):
            irrep("D4", (1, 1, -1, 1))


WEYL_DIM_TABLE = [
    ("B3", (1, 0, 0), 7),
    ("B3", (h(1), h(1), h(1)), 8),
    ("B3", (1, 1, 0), 21),
    ("B4", (1, 0, 0, 0), 9),
    ("B4", (h(1), h(1), h(1), h(1)), 16),
    ("C3", (1, 0, 0), 6),
    ("C3", (1, 1, 0), 14),
    ("D4", (1, 0, 0, 0), 8),
    ("A5", (1, 0, 0, 0, 0, 0), 6),
    ("F4", (1, 0, 0, 0), 26),
    ("G2", (1, 0, -1), 7),
    ("G2", (1, 1, -2), 14),
    ("E7", (0, 0, 0, 0, 0, 1, h(-1), h(1)), 56),
]


@pytest.mark.parametrize("label,hw,dim", WEYL_DIM_TABLE)
def test_weyl_dim_goldens(label, hw, dim):
    assert weyl_dim(irrep(label, hw)) == dim


def test_char_weights_golden():
    cw = char_weights(irrep("C1", (1,)))
    assert cw.mults == {(-2,): 1, (2,): 1}
    assert cw.mass() == 2


@pytest.mark.parametrize("label,hw", [
    ("B3", (1, 1, 0)),
    ("B3", (h(3), h(1), h(1))),
    ("C3", (2, 1, 1)),
    ("D4", (1, 1, 0, 0)),
    ("G2", (2, 0, -2)),
])
def test_char_mass_equals_dimension(label, hw):
    r = irrep(label, hw)
    assert char_weights(r).mass() == weyl_dim(r)


def test_convolve_mass_is_multiplicative():
    a = char_weights(irrep("B3", (1, 0, 0)))
    b = char_weights(irrep("B3", (h(1), h(1), h(1))))
    c = convolve(a, b)
    assert c.mass() == a.mass() * b.mass()


def test_adams_scales_weights():
    cw = char_weights(irrep("C1", (1,)))
    a2 = adams(cw, 2)
    assert a2.mults == {(-4,): 1, (4,): 1}
    assert a2.mass() == cw.mass()


@pytest.mark.parametrize("label,hw", [
    ("B3", (1, 1, 0)),
    ("B3", (h(3), h(1), h(1))),
    ("C3", (1, 1, 1)),
    ("D4", (1, 1, 1, -1)),
    ("G2", (2, 1, -3)),
])
def test_strip_dominant_recovers_single_irrep(label, hw):
    r = irrep(label, hw)
    dec = strip_dominant(char_weights(r))
    assert dec.mults == {r: 1}
    assert dec.dimension() == weyl_dim(r)


def test_strip_dominant_random_sums():
    """Stripping a sum of characters recovers the exact multiset."""
    rng = random.Random(11)
    pool = [
        irrep("B3", (1, 0, 0)),
        irrep("B3", (1, 1, 0)),
        irrep("B3", (h(1), h(1), h(1))),
        irrep("B3", (2, 0, 0)),
    ]
    for _ in range(5):
        want = {}
        acc = {}
        for r in pool:
            m = rng.randrange(0, 3)
            if m == 0:
                continue
            want[r] = m
            for k, v in char_weights(r).mults.items():
                acc[k] = acc.get(k, 0) + m * v
        got = strip_dominant(CharMultiset(("B3",), acc))
        assert got.mults == want


def test_tensor_decompose_su2():
    td = tensor_decompose(irrep("C1", (1,)), irrep("C1", (1,)))
    assert {r.twice_concat(): m for r, m in td.items()} == {(0,): 1, (4,): 1}


def test_tensor_decompose_preserves_dimension():
    a = irrep("B3", (1, 0, 0))
    b = irrep("B3", (h(1), h(1), h(1)))
    td = tensor_decompose(a, b)
    assert td.dimension() == weyl_dim(a) * weyl_dim(b)


def test_iso_decomp_json_and_order():
    td = tensor_decompose(irrep("C1", (1,)), irrep("C1", (1,)))
    data = td.to_json()
    assert data == [{"hw": [0], "mult": 1}, {"hw": [2], "mult": 1}]
    keys = [r.twice_concat() for r, _ in td.items()]
    assert keys == sorted(keys)


class TestRestrict:
    def test_spin7_spinor_to_spin5_spin2(self):
        dec = restrict(
            irrep("B3", (h(1), h(1), h(1))), embedding("Spin7>Spin5xSpin2")
        )
        got = {r.twice_concat(): m for r, m in dec.items()}
        assert got == {(1, 1, -1): 1, (1, 1, 1): 1}
        assert dec.dimension() == 8

    def test_sp2_adjoint_to_sp1_sp1(self):
        dec = restrict(irrep("C2", (1, 1)), embedding("Sp2>Sp1xSp1"))
        assert dec.dimension() == weyl_dim(irrep("C2", (1, 1)))

    @pytest.mark.parametrize("name,label,hw", [
        ("Sp2>Sp1xSp1", "C2", (2, 1)),
        ("Sp3>Sp2xSp1", "C3", (1, 1, 0)),
        ("Spin5>Spin3xSpin2", "B2", (1, 1)),
        ("Spin7>Spin5xSpin2", "B3", (1, 1, 0)),
        ("Spin6>Spin4xSpin2", "D3", (1, 1, 0)),
        ("Spin8>Spin6xSpin2", "D4", (1, 1, 0, 0)),
        ("Spin8>Spin7", "D4", (1, 0, 0, 0)),
        ("F4>B4", "F4", (1, 0, 0, 0)),
    ])
    def test_restriction_preserves_dimension(self, name, label, hw):
        r = irrep(label, hw)
        dec = restrict(r, embedding(name))
        assert dec.dimension() == weyl_dim(r)

    def test_unknown_embedding(self):
        with pytest.raises(ValueError):
            embedding("E8>E7")


class TestDimCap:
    def test_cap_error(self):
        with pytest.raises(OracleCapError):
            char_weights(irrep("F4", (1, 0, 0, 0)), cap=10)

    def test_cap_env_default(self):
        assert dim_cap() == 20000

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("QUATHETA_DIM_CAP", "123")
        assert dim_cap() == 123

    def test_oracle_cap_error_is_runtime_error(self):
        assert issubclass(OracleCapError, RuntimeError)
