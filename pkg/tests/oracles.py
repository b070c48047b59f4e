"""Independent oracles used by the test suite.

Everything here recomputes results through a different algorithm than the
library (box search instead of interval descent, Gauss-Jordan instead of
Bareiss, permutation expansion instead of cofactors) so that agreement is
meaningful.
"""

import cmath
import itertools
import math
import random
from fractions import Fraction

from cubiclat.forms import Form, PLANE_VARS
from cubiclat.lattice import Lattice, bilinear


def det_fraction(matrix) -> Fraction:
    """Plain Gauss elimination over Q with partial pivoting by first nonzero."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


def inverse_fraction(matrix):
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def box_vectors_of_norm(lat: Lattice, n: int):
    """Brute-force enumeration: |v_i|^2 <= n * (G^-1)_ii for pos. definite G."""
    if n <= 0:
        return []
    ginv = inverse_fraction(lat.gram)
    bounds = []
    for i in range(lat.rank):
        radius2 = Fraction(n) * ginv[i][i]
        bound = math.isqrt(radius2.numerator // radius2.denominator) + 1
        bounds.append(bound)
    found = set()
    for v in itertools.product(*(range(-b, b + 1) for b in bounds)):
        if not any(v):
            continue
        if bilinear(lat, v, v) != n:
            continue
        first = next(x for x in v if x)
        if first < 0:
            v = tuple(-x for x in v)
        found.add(v)
    return sorted(found)


def rank2_isometry(g1, g2, box: int = 5):
    """Search integer P with det +-1 and P^T g1 P == g2.  Returns P or None."""
    for p00, p01, p10, p11 in itertools.product(range(-box, box + 1), repeat=4):
        if abs(p00 * p11 - p01 * p10) != 1:
            continue
        c00 = g1[0][0] * p00 * p00 + 2 * g1[0][1] * p00 * p10 + g1[1][1] * p10 * p10
        if c00 != g2[0][0]:
            continue
        c11 = g1[0][0] * p01 * p01 + 2 * g1[0][1] * p01 * p11 + g1[1][1] * p11 * p11
        if c11 != g2[1][1]:
            continue
        c01 = (
            g1[0][0] * p00 * p01
            + g1[0][1] * (p00 * p11 + p01 * p10)
            + g1[1][1] * p10 * p11
        )
        if c01 == g2[0][1]:
            return ((p00, p01), (p10, p11))
    return None


def random_unimodular(rng: random.Random, n: int, steps: int = 12):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        k = rng.choice((-2, -1, 1, 2))
        for c in range(n):
            m[i][c] += k * m[j][c]
    if rng.random() < 0.5 and n > 1:
        m[0], m[1] = m[1], m[0]
    return tuple(tuple(row) for row in m)


def congruence(u, g):
    """u^T g u for integer matrices."""
    n = len(g)
    ug = [
        [sum(u[k][i] * g[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    return tuple(
        tuple(sum(ug[i][k] * u[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def random_even_posdef(rng: random.Random, max_rank: int = 4, disc_cap: int = 10**4):
    """Rejection-sample an even positive definite Gram matrix."""
    from cubiclat.lattice import discriminant, signature

    while True:
        r = rng.randint(1, max_rank)
        g = [[0] * r for _ in range(r)]
        for i in range(r):
            g[i][i] = 2 * rng.randint(1, 4)
            for j in range(i + 1, r):
                g[i][j] = g[j][i] = rng.randint(-2, 2)
        lat = Lattice(tuple(tuple(row) for row in g))
        if signature(lat) != (r, 0, 0):
            continue
        if abs(discriminant(lat)) > disc_cap:
            continue
        return lat


def random_posdef(rng: random.Random, max_rank: int = 3, entry_cap: int = 30):
    """Rejection-sample an integer positive definite Gram matrix (odd allowed)."""
    from cubiclat.lattice import signature

    while True:
        r = rng.randint(1, max_rank)
        g = [[0] * r for _ in range(r)]
        for i in range(r):
            g[i][i] = rng.randint(1, entry_cap)
            for j in range(i + 1, r):
                bound = min(entry_cap, (g[i][i] + g[j][j]) // 3 + 1)
                g[i][j] = g[j][i] = rng.randint(-bound, bound)
        lat = Lattice(tuple(tuple(row) for row in g))
        if signature(lat) == (r, 0, 0):
            return lat


def milgram_direct(form) -> int:
    """Residue via a straight complex sum over the public element API."""
    total = 0j
    count = 0
    for elem in form.elements():
        count += 1
        total += cmath.exp(1j * cmath.pi * float(form.value(elem)))
    magnitude = math.sqrt(count)
    assert abs(abs(total) - magnitude) < 1e-6 * magnitude
    angle = cmath.phase(total) / (2 * cmath.pi) * 8
    residue = round(angle) % 8
    assert abs(angle - round(angle)) < 1e-6
    return residue


def permutation_det(entries):
    """Sum over permutations; entries is a square grid of Forms."""
    n = len(entries)
    sample = entries[0][0]
    total = Form.zero(sample.variables, 0, sample.p)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = None
        for i in range(n):
            f = entries[i][perm[i]]
            term = f if term is None else term * f
        total = total + (term if sign > 0 else -term)
    return total


def random_plane_form(rng: random.Random, degree: int, p=None, lo: int = -3, hi: int = 3):
    exps = [
        e
        for e in itertools.product(range(degree + 1), repeat=3)
        if sum(e) == degree
    ]
    coeffs = {}
    for e in exps:
        c = rng.randint(lo, hi)
        if c:
            coeffs[e] = c if p is None else c % p
    return Form(PLANE_VARS, degree, coeffs, p)


def random_form_matrix(rng: random.Random, p=None):
    from cubiclat.detrep import FormMatrix

    lin = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            f = random_plane_form(rng, 1, p)
            lin[i][j] = lin[j][i] = f
    quad = [random_plane_form(rng, 2, p) for _ in range(3)]
    cub = random_plane_form(rng, 3, p)
    entries = [
        [lin[0][0], lin[0][1], lin[0][2], quad[0]],
        [lin[1][0], lin[1][1], lin[1][2], quad[1]],
        [lin[2][0], lin[2][1], lin[2][2], quad[2]],
        [quad[0], quad[1], quad[2], cub],
    ]
    return FormMatrix(entries)
