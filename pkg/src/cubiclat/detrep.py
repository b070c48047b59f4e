"""Symmetric form matrices, the plane-containing cubic, and mod-p smoothness.

The degree pattern for a size-n matrix is: linear entries on the leading
(n-1) x (n-1) block, quadratics along the last row and column, a cubic in
the corner, so the determinant is homogeneous of degree n + 2.  Size 4
gives the sextic story; build_cubic and quadric_gram are mutually inverse
on cubics that contain the plane where the first three coordinates vanish.

Smoothness scans run over all points of projective space over F_p and
certify only the reduction mod p; a witness is returned in a fixed scan
order, so results are deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadPrime,
    HalfIntegerCoefficient,
    NoPlane,
    NotCubic,
    PrimeTooLarge,
    WrongSize,
    WrongVariable,
)
from .forms import AMBIENT_VARS, PLANE_VARS, Form, check_prime, embed_form, parse_form, serialize_form

DEFAULT_PRIME_CAP = 7


def _expected_degree(size: int, i: int, j: int) -> int:
    if i < size - 1 and j < size - 1:
        return 1
    if i == size - 1 and j == size - 1:
        return 3
    return 2


class FormMatrix:
    """Symmetric matrix of plane forms following the degree pattern."""

    __slots__ = ("size", "entries", "p")

    def __init__(self, entries):
        rows = [list(row) for row in entries]
        size = len(rows)
        if size < 1 or any(len(row) != size for row in rows):
            raise WrongSize("entries must form a non-empty square matrix")
        self.size = size
        first = rows[0][0]
        self.p = first.p
        for i in range(size):
            for j in range(size):
                f = rows[i][j]
                if not isinstance(f, Form):
                    raise WrongSize("entries must be Form instances")
                if f.variables != PLANE_VARS:
                    raise WrongVariable(
                        f"matrix entries live in {PLANE_VARS}, got {f.variables}"
                    )
                if f.p != self.p:
                    raise BadPrime("entries mix coefficient fields")
                want = _expected_degree(size, i, j)
                if not f.is_zero() and f.degree != want:
                    raise WrongSize(
                        f"entry ({i},{j}) has degree {f.degree}, pattern wants {want}"
                    )
                if f != rows[j][i]:
                    raise WrongSize(f"entries ({i},{j}) and ({j},{i}) differ")
        # normalize zero-form degree labels to the pattern
        self.entries = tuple(
            tuple(
                Form.zero(PLANE_VARS, _expected_degree(size, i, j), self.p)
                if rows[i][j].is_zero()
                else rows[i][j]
                for j in range(size)
            )
            for i in range(size)
        )

    def __eq__(self, other):
        if not isinstance(other, FormMatrix):
            return NotImplemented
        return (
            self.size == other.size
            and self.p == other.p
            and self.entries == other.entries
        )

    __hash__ = None

    def field_label(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "field": self.field_label(),
            "entries": [
                [serialize_form(f) for f in row] for row in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FormMatrix":
        field = data["field"]
        if field == "Q":
            p = None
        elif isinstance(field, str) and field.startswith("Fp:"):
            p = int(field[3:])
            check_prime(p)
        else:
            raise BadPrime(f"unknown field label {field!r}")
        size = int(data["size"])
        rows = data["entries"]
        if len(rows) != size or any(len(r) != size for r in rows):
            raise WrongSize("entries do not match the declared size")
        parsed = [[parse_form(text, PLANE_VARS, p) for text in row] for row in rows]
        return cls(parsed)


def _det_forms(block) -> Form:
    # cofactor expansion along the first row
    size = len(block)
    if size == 1:
        return block[0][0]
    total = None
    for j in range(size):
        entry = block[0][j]
        if entry.is_zero():
            continue
        minor = [
            [block[i][k] for k in range(size) if k != j] for i in range(1, size)
        ]
        term = entry * _det_forms(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    if total is None:
        sample = block[0][0]
        return Form.zero(sample.variables, 0, sample.p)
    return total


def det_form_matrix(m: FormMatrix) -> Form:
    """Determinant by cofactor expansion; degree size + 2 under the pattern."""
    out = _det_forms([list(row) for row in m.entries])
    if out.is_zero():
        return Form.zero(PLANE_VARS, m.size + 2, m.p)
    return out


def build_cubic(m: FormMatrix) -> Form:
    """The cubic sum_{i,j<=3} Z_i Z_j L_ij + sum_i 2 Z_i Q_i + H in six variables.

    The double sum runs over ordered pairs, so each off-diagonal L_ij
    lands with multiplicity 2, matching quadric_gram's halving on the way
    back.  Requires size 4.
    """
    if m.size != 4:
        raise WrongSize(f"size {m.size}, need 4")
    total = Form.zero(AMBIENT_VARS, 3, m.p)
    for i in range(3):
        for j in range(3):
            total = total + _z_shift(m.entries[i][j], (i, j))
    for i in range(3):
        total = total + _z_shift(m.entries[i][3], (i,)).scale(2)
    total = total + embed_form(m.entries[3][3], AMBIENT_VARS)
    if total.is_zero():
        return Form.zero(AMBIENT_VARS, 3, m.p)
    return total


def _z_shift(f: Form, z_indices) -> Form:
    # multiply the lifted plane form by the product of the chosen Z variables
    lifted = embed_form(f, AMBIENT_VARS)
    out = {}
    for exps, value in lifted.coeffs.items():
        key = list(exps)
        for z in z_indices:
            key[z] += 1
        out[tuple(key)] = value
    return Form(AMBIENT_VARS, lifted.degree + len(z_indices), out, f.p)


def contains_plane(f: Form) -> bool:
    """True when the cubic vanishes on X0 = X1 = X2 = 0."""
    _require_ambient_cubic(f)
    return all(sum(exps[3:]) >= 1 for exps in f.coeffs)


def _require_ambient_cubic(f: Form):
    if f.variables != AMBIENT_VARS:
        raise WrongVariable(
            f"expected the six ambient variables {AMBIENT_VARS}, got {f.variables}"
        )
    if not f.is_zero() and f.degree != 3:
        raise NotCubic(f"degree {f.degree}, need 3")


def quadric_gram(f: Form) -> FormMatrix:
    """Recover the symmetric matrix of the quadric bundle from the cubic.

    Inverse of build_cubic: off-diagonal Z_i Z_j coefficients and the
    Z_i-linear quadratics are halved.  Characteristic 2 has no half, so
    p = 2 is rejected.
    """
    _require_ambient_cubic(f)
    if not contains_plane(f):
        raise NoPlane("the cubic does not vanish on the plane")
    if f.p == 2:
        raise HalfIntegerCoefficient("cannot halve coefficients over F_2")
    half = Fraction(1, 2) if f.p is None else pow(2, -1, f.p)
    buckets: dict[tuple, dict] = {}
    for exps, value in f.coeffs.items():
        zpart = exps[:3]
        xpart = (0, 0, 0) + exps[3:]
        buckets.setdefault(zpart, {})[xpart[3:]] = value
    entries = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            entries[i][j] = Form.zero(PLANE_VARS, _expected_degree(4, i, j), f.p)

    def plane_form(coeffs, degree, scale=None):
        if scale is None:
            return Form(PLANE_VARS, degree, coeffs, f.p)
        return Form(
            PLANE_VARS, degree, {e: v * scale for e, v in coeffs.items()}, f.p
        )

    for zpart, coeffs in buckets.items():
        zdeg = sum(zpart)
        if zdeg == 0:
            entries[3][3] = plane_form(coeffs, 3)
        elif zdeg == 1:
            i = zpart.index(1)
            entries[i][3] = entries[3][i] = plane_form(coeffs, 2, half)
        else:
            ones = [k for k, e in enumerate(zpart) if e >= 1]
            if len(ones) == 1:
                i = ones[0]
                entries[i][i] = plane_form(coeffs, 1)
            else:
                i, j = ones
                entries[i][j] = entries[j][i] = plane_form(coeffs, 1, half)
    return FormMatrix(entries)


def discriminant_curve(f: Form) -> Form:
    """The degree-6 determinant of the quadric bundle of a plane-containing cubic."""
    return det_form_matrix(quadric_gram(f))


@dataclass(frozen=True)
class ScanResult:
    smooth_mod_p: bool
    witness: tuple[int, ...] | None
    points_scanned: int

    def to_json(self) -> dict:
        return {
            "smooth_mod_p": self.smooth_mod_p,
            "witness": list(self.witness) if self.witness is not None else None,
            "points_scanned": self.points_scanned,
        }


def _reduced_terms(f: Form, p: int) -> list[tuple[int, tuple[int, ...]]]:
    terms = []
    for exps, value in f.coeffs.items():
        if f.p is None:
            if value.denominator % p == 0:
                raise BadPrime(f"coefficient {value} is not p-integral at {p}")
            c = value.numerator * pow(value.denominator, -1, p) % p
        else:
            c = value % p
        if c:
            terms.append((c, exps))
    return terms


def _compile_terms(terms, nvars: int, p: int):
    if not terms:
        return lambda *args: 0
    args = ",".join(f"v{i}" for i in range(nvars))
    parts = []
    for c, exps in terms:
        factors = [str(c)]
        for i, e in enumerate(exps):
            factors.extend([f"v{i}"] * e)
        parts.append("*".join(factors))
    src = f"lambda {args}: ({'+'.join(parts)}) % {p}"
    return eval(src, {"__builtins__": {}}, {})


def projective_points(nvars: int, p: int):
    """All points of P^(nvars-1) over F_p, in the fixed scan order.

    Points are listed by the position of their first nonzero coordinate
    (normalized to 1), remaining coordinates in lexicographic order.
    """
    for lead in range(nvars):
        tail = nvars - lead - 1
        counters = [0] * tail
        while True:
            yield (0,) * lead + (1,) + tuple(counters)
            k = tail - 1
            while k >= 0:
                counters[k] += 1
                if counters[k] < p:
                    break
                counters[k] = 0
                k -= 1
            if k < 0:
                break


def _scan(f: Form, p: int, nvars: int) -> ScanResult:
    check_prime(p)
    if f.p is not None and f.p != p:
        raise BadPrime(f"form lives over F_{f.p}, scan requested mod {p}")
    terms = _reduced_terms(f, p)
    if not terms:
        raise BadPrime(f"{p} divides every coefficient")
    value_fn = _compile_terms(terms, nvars, p)
    partial_fns = []
    for i in range(nvars):
        dterms = []
        for c, exps in terms:
            if exps[i]:
                key = exps[:i] + (exps[i] - 1,) + exps[i + 1 :]
                dc = c * exps[i] % p
                if dc:
                    dterms.append((dc, key))
        partial_fns.append(_compile_terms(dterms, nvars, p))
    count = 0
    for point in projective_points(nvars, p):
        count += 1
        if value_fn(*point) != 0:
            continue
        if all(fn(*point) == 0 for fn in partial_fns):
            return ScanResult(False, point, count)
    return ScanResult(True, None, count)


def smooth_plane_curve_fp(f: Form, p: int) -> ScanResult:
    """Scan P^2(F_p) for points where the curve and all three partials vanish.

    Certifies smoothness of the reduction mod p only; it says nothing
    about the curve over Q beyond that.
    """
    if f.variables != PLANE_VARS:
        raise WrongVariable(f"expected plane variables {PLANE_VARS}")
    return _scan(f, p, 3)


def smooth_fourfold_fp(f: Form, p: int, prime_cap: int = DEFAULT_PRIME_CAP) -> ScanResult:
    """Scan P^5(F_p) for singular points of the cubic; p is capped for cost."""
    _require_ambient_cubic(f)
    check_prime(p)
    if p > prime_cap:
        raise PrimeTooLarge(f"p = {p} exceeds the scan cap {prime_cap}")
    return _scan(f, p, 6)
