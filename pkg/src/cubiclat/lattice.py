"""Integral lattices as integer Gram matrices, with exact invariants.

Everything here runs on Python ints and fractions.Fraction; no floating
point is used anywhere, so discriminants and signatures are exact at any
rank and any entry size.
"""

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Sequence

from .errors import (
    Degenerate,
    DimensionMismatch,
    InvariantViolation,
    NotFiniteIndex,
    NotSymmetric,
)

Vector = tuple[int, ...]


class Signature(NamedTuple):
    s_plus: int
    s_minus: int
    s_zero: int


@dataclass(frozen=True)
class Lattice:
    """A free Z-module of finite rank with an integer symmetric bilinear form."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(
            tuple(operator.index(x) for x in row) for row in self.gram
        )
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise NotSymmetric("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise NotSymmetric(
                        f"gram[{i}][{j}] = {rows[i][j]} differs from gram[{j}][{i}] = {rows[j][i]}"
                    )
        object.__setattr__(self, "gram", rows)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def to_json(self) -> dict:
        return {"gram": [list(row) for row in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> "Lattice":
        return cls(tuple(tuple(row) for row in data["gram"]))


def _check_vector(lat: Lattice, v: Sequence[int]) -> Vector:
    if len(v) != lat.rank:
        raise DimensionMismatch(
            f"vector of length {len(v)} against a rank-{lat.rank} lattice"
        )
    return tuple(operator.index(x) for x in v)


def gram_times(lat: Lattice, v: Sequence[int]) -> Vector:
    """The column G*v, i.e. the pairings of v against the basis."""
    v = _check_vector(lat, v)
    return tuple(sum(row[j] * v[j] for j in range(lat.rank)) for row in lat.gram)


def bilinear(lat: Lattice, v: Sequence[int], w: Sequence[int]) -> int:
    """The pairing b(v, w) = v^T G w."""
    w = _check_vector(lat, w)
    gv = gram_times(lat, v)
    return sum(gv[i] * w[i] for i in range(lat.rank))


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix, Bareiss fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: Bareiss guarantees prev divides the product
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def discriminant(lat: Lattice) -> int:
    """det of the Gram matrix; 0 exactly when the form is degenerate."""
    return det_int(lat.gram)


def signature(lat: Lattice) -> Signature:
    """Counts (s_plus, s_minus, s_zero) of the real diagonalization.

    Symmetric Gaussian elimination over Fraction with symmetric pivoting.
    When every remaining diagonal entry is zero but the block is not, an
    off-diagonal entry spans a hyperbolic pair and contributes one +1 and
    one -1 before elimination continues on its Schur complement.
    """
    n = lat.rank
    a = [[Fraction(x) for x in row] for row in lat.gram]
    alive = list(range(n))
    s_plus = s_minus = s_zero = 0
    while alive:
        piv = next((i for i in alive if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                s_plus += 1
            else:
                s_minus += 1
            rest = [i for i in alive if i != piv]
            for i in rest:
                if a[i][piv] == 0:
                    continue
                for j in rest:
                    a[i][j] -= a[i][piv] * a[piv][j] / d
            alive = rest
            continue
        pair = next(
            ((i, j) for i in alive for j in alive if i < j and a[i][j] != 0), None
        )
        if pair is None:
            s_zero += len(alive)
            break
        i0, j0 = pair
        b = a[i0][j0]
        s_plus += 1
        s_minus += 1
        rest = [k for k in alive if k != i0 and k != j0]
        for k in rest:
            for l in rest:
                a[k][l] -= (a[k][i0] * a[j0][l] + a[k][j0] * a[i0][l]) / b
        alive = rest
    return Signature(s_plus, s_minus, s_zero)


def is_even(lat: Lattice) -> bool:
    """True when b(v, v) is even for every v; equivalent to an even diagonal."""
    return all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))


def rescale(lat: Lattice, m: int) -> Lattice:
    if operator.index(m) == 0:
        raise Degenerate("rescaling by 0 kills the form")
    return Lattice(tuple(tuple(m * x for x in row) for row in lat.gram))


def direct_sum(a: Lattice, b: Lattice) -> Lattice:
    na, nb = a.rank, b.rank
    rows = []
    for i in range(na):
        rows.append(tuple(a.gram[i]) + (0,) * nb)
    for i in range(nb):
        rows.append((0,) * na + tuple(b.gram[i]))
    return Lattice(tuple(rows))


def _integer_kernel(rows: list[list[int]], n: int) -> list[Vector]:
    """Basis of {x in Z^n : each row pairs to 0 with x}.

    Unimodular column reduction; the kernel of an integer matrix is
    automatically saturated, so the result is a basis of the full kernel.
    """
    c = [list(r) for r in rows]
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    free = list(range(n))
    for r in range(len(c)):
        while True:
            nz = [j for j in free if c[r][j] != 0]
            if len(nz) <= 1:
                break
            j1, j2 = nz[0], nz[1]
            a, b = c[r][j1], c[r][j2]
            g, x, y = _xgcd(a, b)
            # det of the 2x2 column op is (x*a + y*b)/g = 1
            for mat in (c, t):
                for row in mat:
                    v1, v2 = row[j1], row[j2]
                    row[j1] = x * v1 + y * v2
                    row[j2] = (a // g) * v2 - (b // g) * v1
        nz = [j for j in free if c[r][j] != 0]
        if nz:
            free.remove(nz[0])
    basis = []
    for j in free:
        col = [t[i][j] for i in range(n)]
        lead = next((x for x in col if x != 0), 0)
        if lead < 0:
            col = [-x for x in col]
        basis.append(tuple(col))
    return basis


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with g = gcd > 0 and x*a + y*b = g
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def orthogonal_complement(
    lat: Lattice, vectors: Sequence[Sequence[int]]
) -> tuple[list[Vector], Lattice]:
    """Basis and Gram matrix of {w in L : b(w, v) = 0 for the given v}.

    The sublattice is saturated in L (a kernel always is), so the basis
    extends to no larger sublattice with the same rational span.
    """
    rows = [list(gram_times(lat, v)) for v in vectors]
    basis = _integer_kernel(rows, lat.rank)
    gram = tuple(
        tuple(bilinear(lat, u, w) for w in basis) for u in basis
    )
    return basis, Lattice(gram)


def sublattice_index(lat: Lattice, sub_basis: Sequence[Sequence[int]]) -> int:
    """Index [L : L'] for a finite-index sublattice L' given by its basis.

    Computed as sqrt(d(L')/d(L)) and cross-checked against |det| of the
    coordinate matrix; a mismatch is an internal error, not bad input.
    """
    n = lat.rank
    if len(sub_basis) != n:
        raise NotFiniteIndex(
            f"{len(sub_basis)} vectors cannot span finite index in rank {n}"
        )
    vecs = [_check_vector(lat, v) for v in sub_basis]
    coord = [[vecs[j][i] for j in range(n)] for i in range(n)]
    det_coord = det_int(coord)
    if det_coord == 0:
        raise NotFiniteIndex("vectors are linearly dependent")
    d = discriminant(lat)
    if d == 0:
        raise Degenerate("index formula needs a non-degenerate form")
    sub_gram = tuple(tuple(bilinear(lat, u, w) for w in vecs) for u in vecs)
    d_sub = det_int(sub_gram)
    ratio = Fraction(d_sub, d)
    if ratio.denominator != 1 or ratio <= 0:
        raise InvariantViolation(f"d(L')/d(L) = {ratio} is not a positive integer")
    k = isqrt(ratio.numerator)
    if k * k != ratio.numerator:
        raise InvariantViolation(f"d(L')/d(L) = {ratio} is not a perfect square")
    if k != abs(det_coord):
        raise InvariantViolation(
            f"index {k} from discriminants, {abs(det_coord)} from coordinates"
        )
    return k


# standard building blocks

def hyperbolic_u() -> Lattice:
    return Lattice(((0, 1), (1, 0)))


def rank_one(n: int) -> Lattice:
    return Lattice(((operator.index(n),),))


# E8 as its Cartan matrix, Bourbaki numbering: the chain is
# 1-3-4-5-6-7-8 and node 2 hangs off node 4.
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def e8() -> Lattice:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for a, b in _E8_EDGES:
        g[a - 1][b - 1] = g[b - 1][a - 1] = -1
    return Lattice(tuple(tuple(row) for row in g))


def k3_lattice() -> Lattice:
    """U + U + U + E8(-1) + E8(-1): rank 22, signature (3,19), discriminant -1."""
    u = hyperbolic_u()
    e8_neg = rescale(e8(), -1)
    out = direct_sum(u, u)
    out = direct_sum(out, u)
    out = direct_sum(out, e8_neg)
    return direct_sum(out, e8_neg)
