"""Discriminant groups of non-degenerate lattices and finite quadratic forms.

The discriminant group A_L = L*/L is read off the Smith normal form of the
Gram matrix.  Quadratic values live in Q/2Z (reduced to [0,2)), pairings in
Q/Z (reduced to [0,1)); the only inexact step anywhere is the complex
exponential at the very end of the Gauss sum.
"""

import cmath
import itertools
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import (
    Condition5Violated,
    Degenerate,
    DegenerateForm,
    GroupTooLarge,
    InvariantViolation,
    OddLattice,
)
from .lattice import Lattice, bilinear, discriminant, is_even

DEFAULT_ENUMERATION_CAP = 10**6
GAUSS_SUM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0."""

    u: tuple[tuple[int, ...], ...]
    d: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0)))


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form of an integer matrix, with both transforms."""
    a = [[operator.index(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    for row in a:
        if len(row) != n:
            raise ValueError("ragged matrix")
    u = _identity(m)
    v = _identity(n)

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, k):
        # row_i += k * row_j
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]

    def col_add(i, j, k):
        # col_i += k * col_j
        for r in a:
            r[i] += k * r[j]
        for r in v:
            r[i] += k * r[j]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (
                    best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])
                ):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            row_swap(t, best[0])
        if best[1] != t:
            col_swap(t, best[1])
        while True:
            restart = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q, r = divmod(a[i][t], a[t][t])
                    row_add(i, t, -q)
                    if r:
                        row_swap(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q, r = divmod(a[t][j], a[t][t])
                    col_add(j, t, -q)
                    if r:
                        col_swap(t, j)
                        restart = True
                        break
            if restart:
                continue
            # pivot clears its row and column; force divisibility of the block
            bad = next(
                (
                    (i, j)
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if a[i][j] % a[t][t] != 0
                ),
                None,
            )
            if bad is None:
                break
            row_add(t, bad[0], 1)
        t += 1
    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    freeze = lambda mat: tuple(tuple(row) for row in mat)
    return SmithDecomposition(freeze(u), freeze(a), freeze(v))


def pairing_q(
    lat: Lattice, x: Sequence[Fraction], y: Sequence[Fraction]
) -> Fraction:
    """b extended to L tensor Q."""
    n = lat.rank
    out = Fraction(0)
    for i in range(n):
        if x[i] == 0:
            continue
        row = lat.gram[i]
        out += x[i] * sum(Fraction(row[j]) * y[j] for j in range(n))
    return out


@dataclass(frozen=True)
class DiscriminantGroup:
    """Invariant factors > 1 and rational coordinate generators of L*/L."""

    orders: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def to_json(self) -> dict:
        return {
            "orders": list(self.orders),
            "generators": [[_frac_str(x) for x in g] for g in self.generators],
        }


def discriminant_group(lat: Lattice) -> DiscriminantGroup:
    """Generators and orders of A_L = L*/L.

    From U*G*V = D the dual is spanned by the columns of V*D^-1, so the
    i-th column of V divided by d_i generates a cyclic factor of order d_i.
    Factors with d_i = 1 are dropped.
    """
    disc = discriminant(lat)
    if disc == 0:
        raise Degenerate("degenerate lattice has no finite discriminant group")
    snf = smith_normal_form(lat.gram)
    orders = []
    gens = []
    n = lat.rank
    for i in range(n):
        d = snf.d[i][i]
        if d == 1:
            continue
        orders.append(d)
        gens.append(tuple(Fraction(snf.v[j][i], d) for j in range(n)))
    if math.prod(orders) != abs(disc):
        raise InvariantViolation(
            f"group order {math.prod(orders)} != |disc| {abs(disc)}"
        )
    return DiscriminantGroup(tuple(orders), tuple(gens))


def _mod2(x: Fraction) -> Fraction:
    return x - 2 * (x / 2).__floor__()


def _mod1(x: Fraction) -> Fraction:
    return x - x.__floor__()


def _frac_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _frac_parse(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """A finite abelian group with q: A -> Q/2Z and its pairing b: AxA -> Q/Z.

    Stored on cyclic generators: orders[i] is the order of g_i, q_vals[i]
    is q(g_i) in [0,2), b_vals[i][j] is b(g_i,g_j) in [0,1).  The value on
    an arbitrary element sum(c_i g_i) follows from bilinearity.
    """

    orders: tuple[int, ...]
    q_vals: tuple[Fraction, ...]
    b_vals: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        k = len(self.orders)
        if len(self.q_vals) != k or len(self.b_vals) != k:
            raise InvariantViolation("generator tables have mismatched lengths")
        for d in self.orders:
            if d <= 1:
                raise InvariantViolation("orders must be > 1")
        for i in range(k):
            q = self.q_vals[i]
            if not (0 <= q < 2):
                raise InvariantViolation(f"q value {q} not reduced to [0,2)")
            if (2 * self.orders[i]) % q.denominator != 0:
                raise InvariantViolation(
                    f"q({i}) = {q} has denominator incompatible with order {self.orders[i]}"
                )
            if len(self.b_vals[i]) != k:
                raise InvariantViolation("pairing table is not square")
            if _mod1(q) != self.b_vals[i][i]:
                raise InvariantViolation("q and b disagree on a generator")
            for j in range(k):
                b = self.b_vals[i][j]
                if not (0 <= b < 1):
                    raise InvariantViolation(f"b value {b} not reduced to [0,1)")
                if b != self.b_vals[j][i]:
                    raise InvariantViolation("pairing table is not symmetric")
                if (b * gcd(self.orders[i], self.orders[j])).denominator != 1:
                    raise InvariantViolation(
                        f"b({i},{j}) = {b} incompatible with generator orders"
                    )

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def value(self, coeffs: Sequence[int]) -> Fraction:
        """q(sum c_i g_i) in [0,2)."""
        k = len(self.orders)
        if len(coeffs) != k:
            raise InvariantViolation("coefficient vector has wrong length")
        total = Fraction(0)
        for i in range(k):
            ci = coeffs[i]
            if ci == 0:
                continue
            total += ci * ci * self.q_vals[i]
            for j in range(i + 1, k):
                total += 2 * ci * coeffs[j] * self.b_vals[i][j]
        return _mod2(total)

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """b(sum x_i g_i, sum y_j g_j) in [0,1)."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * self.b_vals[i][j]
        return _mod1(total)

    def elements(self):
        return itertools.product(*(range(d) for d in self.orders))

    def to_json(self) -> dict:
        return {
            "orders": list(self.orders),
            "q": [_frac_str(x) for x in self.q_vals],
            "b": [[_frac_str(x) for x in row] for row in self.b_vals],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteQuadraticForm":
        return cls(
            tuple(int(d) for d in data["orders"]),
            tuple(_frac_parse(s) for s in data["q"]),
            tuple(tuple(_frac_parse(s) for s in row) for row in data["b"]),
        )


def discriminant_form(lat: Lattice) -> FiniteQuadraticForm:
    """q_L(x) = b(x,x) mod 2Z on A_L; defined only for even non-degenerate L."""
    if not is_even(lat):
        raise OddLattice("discriminant form needs an even lattice")
    dg = discriminant_group(lat)
    gens = dg.generators
    q = tuple(_mod2(pairing_q(lat, g, g)) for g in gens)
    b = tuple(
        tuple(_mod1(pairing_q(lat, gi, gj)) for gj in gens) for gi in gens
    )
    return FiniteQuadraticForm(dg.orders, q, b)


def milgram_signature(
    form: FiniteQuadraticForm, enumeration_cap: int = DEFAULT_ENUMERATION_CAP
) -> int:
    """Residue sigma mod 8 with sum over A of exp(pi*i*q(x)) = sqrt(|A|) * e^(2*pi*i*sigma/8).

    Phases are exact rationals mod 2; they are bucketed over a common
    denominator and only the final complex exponential is floating point.
    The sum must land within GAUSS_SUM_TOLERANCE * sqrt(|A|) of an
    eighth-root ray, otherwise the pairing is degenerate and there is no
    residue to report.
    """
    order = form.order
    if order > enumeration_cap:
        raise GroupTooLarge(f"|A| = {order} exceeds cap {enumeration_cap}")
    k = len(form.orders)
    if k == 0:
        return 0
    den = 1
    for x in form.q_vals:
        den = den * x.denominator // gcd(den, x.denominator)
    for row in form.b_vals:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    # integer numerators of q and 2b over the common denominator
    qn = [int(x * den) for x in form.q_vals]
    bn2 = [[2 * int(x * den) for x in row] for row in form.b_vals]
    mod = 2 * den
    buckets = [0] * mod
    for coeffs in form.elements():
        num = 0
        for i in range(k):
            ci = coeffs[i]
            if ci == 0:
                continue
            num += ci * ci * qn[i]
            row = bn2[i]
            for j in range(i + 1, k):
                num += ci * coeffs[j] * row[j]
        buckets[num % mod] += 1
    total = 0j
    for r in range(mod):
        if buckets[r]:
            total += buckets[r] * cmath.exp(1j * math.pi * r / den)
    magnitude = math.sqrt(order)
    if abs(abs(total) - magnitude) > GAUSS_SUM_TOLERANCE * magnitude:
        raise DegenerateForm(
            f"Gauss sum magnitude {abs(total):.6f} != sqrt(|A|) = {magnitude:.6f}"
        )
    sigma = round(cmath.phase(total) / (math.pi / 4)) % 8
    if abs(total - magnitude * cmath.exp(1j * math.pi * sigma / 4)) > (
        GAUSS_SUM_TOLERANCE * magnitude
    ):
        raise DegenerateForm("Gauss sum does not sit on an eighth-root ray")
    return sigma


def mayanskiy_q(lat: Lattice, a: Sequence[int]) -> FiniteQuadraticForm:
    """The twisted form alpha -> (b(alpha,a))^2 - b(alpha,alpha) mod 2Z on A_L.

    Well-defined on L*/L exactly when b(v,a)^2 - b(v,v) is even for every
    v in L; since that expression is linear mod 2, checking a basis
    suffices, and failure raises Condition5Violated.  The polarization is
    b_q(alpha,beta) = b(alpha,a)*b(beta,a) - b(alpha,beta) mod Z.
    """
    if discriminant(lat) == 0:
        raise Degenerate("twisted form needs a non-degenerate lattice")
    n = lat.rank
    av = tuple(a)
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        if (bilinear(lat, av, e) ** 2 - lat.gram[i][i]) % 2 != 0:
            raise Condition5Violated(
                f"b(a,e_{i})^2 - b(e_{i},e_{i}) is odd; the form is ill-defined on A_L"
            )
    dg = discriminant_group(lat)
    gens = dg.generators
    a_frac = tuple(Fraction(x) for x in av)
    evals = []
    for g in gens:
        val = pairing_q(lat, g, a_frac)
        if val.denominator != 1:
            raise InvariantViolation("dual vector pairs non-integrally with a")
        evals.append(val.numerator)
    q = []
    b = []
    for i, gi in enumerate(gens):
        q.append(_mod2(Fraction(evals[i] ** 2) - pairing_q(lat, gi, gi)))
        row = []
        for j, gj in enumerate(gens):
            row.append(_mod1(Fraction(evals[i] * evals[j]) - pairing_q(lat, gi, gj)))
        b.append(tuple(row))
    return FiniteQuadraticForm(dg.orders, tuple(q), tuple(b))
