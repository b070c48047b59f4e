"""Complete short-vector enumeration in positive-definite lattices.

Fincke-Pohst with an exact rational Cholesky-style decomposition: the
search intervals at every level are computed with integer square roots,
never floating point, so the enumeration is provably complete.
"""

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .errors import Degenerate, NotPositiveDefinite, OddLattice, WrongRank
from .lattice import Lattice, Vector, discriminant, gram_times, is_even


def _decompose(lat: Lattice) -> list[list[Fraction]]:
    # Q(x) = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2
    n = lat.rank
    q = [[Fraction(x) for x in row] for row in lat.gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise NotPositiveDefinite("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] = q[k][l] - q[k][i] * q[i][l]
    return q


def _interval(qii: Fraction, s: Fraction, t: Fraction) -> tuple[int, int]:
    # all integers m with qii*(m+s)^2 <= t, as [lo, hi]; empty when lo > hi
    if t < 0:
        return 1, 0
    r = t / qii
    sa, sb = s.numerator, s.denominator
    rp = r * sb * sb
    # largest integer c >= 0 with c^2 <= rp, via floor(sqrt(num*den)) // den
    big = isqrt(rp.numerator * rp.denominator) // rp.denominator
    hi = (big - sa) // sb
    lo = -((big + sa) // sb)
    return lo, hi


def vectors_of_norm(lat: Lattice, n: int) -> list[Vector]:
    """All nonzero v with b(v,v) = n, one representative per {v,-v} pair.

    Representatives have positive first nonzero coordinate and the list is
    sorted lexicographically.  Requires a positive definite lattice.
    """
    q = _decompose(lat)
    if n <= 0:
        # positive definite: only the zero vector sits at norm <= 0
        return []
    rank = lat.rank
    found: list[Vector] = []
    x = [0] * rank
    target = Fraction(n)

    def descend(level: int, remaining: Fraction):
        if level < 0:
            if remaining == 0 and any(x):
                v = tuple(x)
                lead = next(c for c in v if c != 0)
                if lead > 0:
                    found.append(v)
            return
        s = Fraction(0)
        for j in range(level + 1, rank):
            if x[j]:
                s += q[level][j] * x[j]
        lo, hi = _interval(q[level][level], s, remaining)
        for m in range(lo, hi + 1):
            x[level] = m
            used = q[level][level] * (m + s) ** 2
            descend(level - 1, remaining - used)
        x[level] = 0

    descend(rank - 1, target)
    found.sort()
    return found


def short_roots(lat: Lattice) -> list[Vector]:
    """Norm-2 vectors of an even positive-definite lattice."""
    if not is_even(lat):
        raise OddLattice("root enumeration is defined on even lattices")
    return vectors_of_norm(lat, 2)


def long_roots(lat: Lattice) -> list[Vector]:
    """Norm-6 vectors whose pairings with the whole lattice lie in 3Z.

    Divisibility is checked against a basis of the given lattice, i.e.
    G*v must vanish mod 3 componentwise.
    """
    if not is_even(lat):
        raise OddLattice("root enumeration is defined on even lattices")
    out = []
    for v in vectors_of_norm(lat, 6):
        if all(x % 3 == 0 for x in gram_times(lat, v)):
            out.append(v)
    return out


def isotropic_exists(lat: Lattice) -> tuple[bool, Vector | None]:
    """Whether a rank-2 even lattice [[2a,b],[b,2c]] has a nonzero isotropic vector.

    Exists exactly when b^2 - 4ac is a perfect square; the witness
    returned is primitive.
    """
    if lat.rank != 2:
        raise WrongRank(f"rank {lat.rank}, need rank 2")
    if discriminant(lat) == 0:
        raise Degenerate("isotropic test expects a non-degenerate form")
    if not is_even(lat):
        raise OddLattice("isotropic test is stated for even forms")
    a = lat.gram[0][0] // 2
    b = lat.gram[0][1]
    c = lat.gram[1][1] // 2
    disc = b * b - 4 * a * c
    if disc < 0:
        return False, None
    r = isqrt(disc)
    if r * r != disc:
        return False, None
    if a == 0:
        return True, (1, 0)
    x, y = -b + r, 2 * a
    g = gcd(x, y)
    x, y = x // g, y // g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    witness = (x, y)
    if a * x * x + b * x * y + c * y * y != 0:
        raise AssertionError("isotropic witness fails to be isotropic")
    return True, witness
