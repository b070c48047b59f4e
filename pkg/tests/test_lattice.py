import random

import pytest

from cubiclat.errors import (
    Degenerate,
    DimensionMismatch,
    InvariantViolation,
    NotFiniteIndex,
    NotSymmetric,
)
from cubiclat.lattice import (
    Lattice,
    Signature,
    bilinear,
    det_int,
    direct_sum,
    discriminant,
    e8,
    hyperbolic_u,
    is_even,
    k3_lattice,
    orthogonal_complement,
    rank_one,
    rescale,
    signature,
    sublattice_index,
)

import oracles

A_EXE = Lattice(((3, 1, 4), (1, 3, 4), (4, 4, 12)))
A_369 = Lattice(((3, 1, 4), (1, 3, 2), (4, 2, 10)))


def test_hyperbolic_plane():
    u = hyperbolic_u()
    assert u.gram == ((0, 1), (1, 0))
    assert discriminant(u) == -1
    assert signature(u) == Signature(1, 1, 0)
    assert is_even(u)


def test_e8_invariants():
    e = e8()
    assert e.rank == 8
    assert discriminant(e) == 1
    assert signature(e) == Signature(8, 0, 0)
    assert is_even(e)
    # Cartan matrix shape: 2s on the diagonal, off-diagonal -1 exactly on edges
    assert all(e.gram[i][i] == 2 for i in range(8))
    assert sum(x == -1 for row in e.gram for x in row) == 14


def test_k3_lattice_invariants():
    k3 = k3_lattice()
    assert k3.rank == 22
    assert discriminant(k3) == -1
    assert signature(k3) == Signature(3, 19, 0)
    assert is_even(k3)


def test_construction_rejects_bad_gram():
    with pytest.raises(NotSymmetric):
        Lattice(((0, 1), (2, 0)))
    with pytest.raises(NotSymmetric):
        Lattice(((0, 1, 0), (1, 0, 0)))
    with pytest.raises(TypeError):
        Lattice(((0.5, 1), (1, 0)))


def test_bilinear_basics():
    u = hyperbolic_u()
    assert bilinear(u, (1, 0), (0, 1)) == 1
    assert bilinear(u, (1, 1), (1, 1)) == 2
    with pytest.raises(DimensionMismatch):
        bilinear(u, (1, 0, 0), (0, 1))


def test_det_int_matches_gauss_oracle():
    rng = random.Random(101)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det_int(m) == oracles.det_fraction(m)


def test_discriminant_frozen_values():
    assert discriminant(A_EXE) == 32
    assert discriminant(A_369) == 36


def test_signature_invariant_under_unimodular_change():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 4)
        diag = [rng.choice((-4, -2, 0, 2, 6)) for _ in range(n)]
        g = tuple(
            tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)
        )
        u = oracles.random_unimodular(rng, n)
        scrambled = Lattice(oracles.congruence(u, g))
        expected = Signature(
            sum(d > 0 for d in diag),
            sum(d < 0 for d in diag),
            sum(d == 0 for d in diag),
        )
        assert signature(scrambled) == expected


def test_orthogonal_complement_frozen():
    basis, comp = orthogonal_complement(A_EXE, [(1, 0, 0)])
    assert basis == [(1, -3, 0), (0, 4, -1)]
    assert comp.gram == ((24, -24), (-24, 28))
    basis, comp = orthogonal_complement(A_369, [(1, 0, 0)])
    assert comp.gram == ((24, -30), (-30, 42))
    basis, comp = orthogonal_complement(hyperbolic_u(), [(1, 0)])
    assert basis == [(1, 0)]
    assert comp.gram == ((0,),)


def test_orthogonal_complement_is_orthogonal_and_saturated():
    rng = random.Random(55)
    for _ in range(15):
        lat = oracles.random_even_posdef(rng, max_rank=3, disc_cap=400)
        a = tuple(rng.randint(-2, 2) for _ in range(lat.rank))
        if not any(a):
            a = (1,) + (0,) * (lat.rank - 1)
        basis, comp = orthogonal_complement(lat, [a])
        for v in basis:
            assert bilinear(lat, v, a) == 0
        # saturation: every box vector orthogonal to a is an integer
        # combination of the returned basis
        import itertools
        from fractions import Fraction

        for v in itertools.product(range(-2, 3), repeat=lat.rank):
            if bilinear(lat, v, a) != 0:
                continue
            if not basis:
                assert not any(v)
                continue
            # solve sum c_k basis_k = v over Q
            rows = [[Fraction(b[i]) for b in basis] for i in range(lat.rank)]
            rhs = [Fraction(x) for x in v]
            cols = len(basis)
            piv = []
            for c in range(cols):
                p = next(
                    (r for r in range(len(rows)) if r not in piv and rows[r][c] != 0),
                    None,
                )
                assert p is not None
                piv.append(p)
                inv = 1 / rows[p][c]
                rows[p] = [x * inv for x in rows[p]]
                rhs[p] *= inv
                for r in range(len(rows)):
                    if r != p and rows[r][c]:
                        f = rows[r][c]
                        rows[r] = [x - f * y for x, y in zip(rows[r], rows[p])]
                        rhs[r] -= f * rhs[p]
            coeffs = [rhs[piv[c]] for c in range(cols)]
            for r in range(len(rows)):
                if r not in piv:
                    assert rhs[r] == 0
            assert all(c.denominator == 1 for c in coeffs)


def test_sublattice_index_frozen():
    assert sublattice_index(hyperbolic_u(), [(2, 0), (0, 1)]) == 2
    assert sublattice_index(rank_one(2), [(3,)]) == 3


def test_sublattice_index_random_matches_det():
    rng = random.Random(23)
    for _ in range(20):
        lat = oracles.random_even_posdef(rng, max_rank=3, disc_cap=5000)
        n = lat.rank
        while True:
            t = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
            d = oracles.det_fraction(t)
            if d != 0:
                break
        assert sublattice_index(lat, [tuple(row) for row in t]) == abs(d)


def test_sublattice_index_errors():
    u = hyperbolic_u()
    with pytest.raises(NotFiniteIndex):
        sublattice_index(u, [(1, 0)])
    with pytest.raises(NotFiniteIndex):
        sublattice_index(u, [(1, 0), (2, 0)])
    degenerate = Lattice(((2, 2), (2, 2)))
    with pytest.raises(Degenerate):
        sublattice_index(degenerate, [(1, 0), (0, 1)])


def test_rescale_and_direct_sum():
    u = hyperbolic_u()
    assert rescale(u, -1).gram == ((0, -1), (-1, 0))
    with pytest.raises(Degenerate):
        rescale(u, 0)
    s = direct_sum(rank_one(2), rank_one(-4))
    assert s.gram == ((2, 0), (0, -4))
    assert signature(s) == Signature(1, 1, 0)


def test_is_even():
    assert is_even(rank_one(2))
    assert not is_even(rank_one(3))
    assert not is_even(Lattice(((2, 1), (1, 3))))


def test_degenerate_signature():
    lat = Lattice(((2, 2), (2, 2)))
    assert signature(lat) == Signature(1, 0, 1)
    assert discriminant(lat) == 0


def test_json_round_trip():
    lat = Lattice(((3, 1), (1, 3)))
    assert Lattice.from_json(lat.to_json()) == lat
