"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Each test collects its failures into a list so the summary line always
prints, then asserts the list is empty.  Run with -s to see the lines on
success; they also appear in captured output on failure.
"""

import random
import time

from cubiclat.discgroup import (
    discriminant_form,
    discriminant_group,
    mayanskiy_q,
    milgram_signature,
)
from cubiclat.enumeration import isotropic_exists, vectors_of_norm
from cubiclat.fourfold import (
    FamilyClass,
    FamilyParams,
    MarkedFourfold,
    build_family_lattice,
    classify_family,
    delta,
    exists_odd_delta,
    is_trivially_rational_rank3,
    mayanskiy_check,
    ns_to_ax_disc,
    pfaffian_obstruction,
    rk2_discriminant_formula,
)
from cubiclat.detrep import (
    build_cubic,
    det_form_matrix,
    discriminant_curve,
    quadric_gram,
    smooth_fourfold_fp,
    smooth_plane_curve_fp,
)
from cubiclat.forms import AMBIENT_VARS, PLANE_VARS, parse_form
from cubiclat.lattice import (
    Lattice,
    bilinear,
    det_int,
    discriminant,
    e8,
    hyperbolic_u,
    is_even,
    orthogonal_complement,
    rank_one,
    rescale,
    signature,
)

import oracles

A_EXE = Lattice(((3, 1, 4), (1, 3, 4), (4, 4, 12)))
A_369 = Lattice(((3, 1, 4), (1, 3, 2), (4, 2, 10)))
MARK = ((1, 0, 0), (0, 1, 0))


def _report(number: int, label: str, failures: list):
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {number}: {status} - {label}")
    assert not failures, f"criterion {number}: " + "; ".join(failures)


def _want(failures: list, ok: bool, message: str):
    if not ok:
        failures.append(message)


def test_criterion_1_exe_suite():
    failures = []
    _want(failures, discriminant(A_EXE) == 32, "discriminant != 32")

    _, comp = orthogonal_complement(A_EXE, [(1, 0, 0)])
    iso = oracles.rank2_isometry(
        [list(r) for r in comp.gram], [[24, 24], [24, 28]], box=5
    )
    _want(
        failures,
        iso is not None,
        f"complement {comp.gram} not equivalent to [[24,24],[24,28]]",
    )

    _want(
        failures,
        discriminant_group(A_EXE).orders == (4, 8),
        "invariant factors != (4, 8)",
    )

    report = mayanskiy_check(A_EXE, (1, 0, 0))
    _want(
        failures,
        report.all_pass and len(report.conditions) == 6,
        "Mayanskiy conditions 1-6 do not all pass",
    )
    twisted = mayanskiy_q(A_EXE, (1, 0, 0))
    _want(failures, twisted.order == 32, "twisted form group is not of order 32")
    _want(
        failures,
        milgram_signature(twisted) == 0,
        "Milgram residue of the twisted form != 0",
    )

    _want(failures, vectors_of_norm(A_EXE, 10) == [], "norm-10 vectors exist")
    _want(
        failures,
        is_trivially_rational_rank3(MarkedFourfold(A_EXE, *MARK)) is False,
        "trivially rational flag is not False",
    )
    _report(1, "exe suite (disc 32 lattice)", failures)


def test_criterion_2_p369_suite():
    failures = []
    _want(failures, discriminant(A_369) == 36, "discriminant != 36")
    _want(failures, ns_to_ax_disc(-9, 2) == 36, "ns_to_ax_disc(-9, 2) != 36")
    for t in range(-3, 4):
        surf = Lattice(((0, 3), (3, 2 * t)))
        exists, witness = isotropic_exists(surf)
        ok = exists and witness is not None and bilinear(surf, witness, witness) == 0
        _want(failures, ok, f"no norm-0 witness for t = {t}")
    marked = MarkedFourfold(A_369, *MARK)
    _want(failures, exists_odd_delta(marked) is False, "odd delta class exists")
    _want(
        failures,
        is_trivially_rational_rank3(marked) is False,
        "trivially rational flag is not False",
    )
    _report(2, "p369 suite (disc 36 lattice)", failures)


def test_criterion_3_delta_index():
    failures = []
    marked = MarkedFourfold(Lattice(((3, 1), (1, 3))), (1, 0), (0, 1))
    _want(failures, delta(marked, (0, 1)) == -2, "delta(P) != -2")
    _want(failures, delta(marked, (1, 0)) == 2, "delta(H2) != 2")
    q = marked.quadric_class
    gram = [
        [bilinear(marked.lattice, x, y) for y in ((1, 0), q)] for x in ((1, 0), q)
    ]
    _want(failures, gram == [[3, 2], [2, 4]], f"(H2, Q) Gram is {gram}")
    _report(3, "delta-index checks on the rank-2 marking", failures)


def test_criterion_4_rk2_formula():
    failures = []
    start = time.perf_counter()
    cases = 0
    for a in range(-20, 21):
        for b in range(-20, 21):
            for c in range(-20, 21):
                cases += 1
                det = det_int(((3, 2, a), (2, 4, c), (a, c, b)))
                val = rk2_discriminant_formula(a, b, c)
                if val != det:
                    failures.append(f"formula mismatch at {(a, b, c)}")
                if (det % 2 != 0) != (c % 2 != 0):
                    failures.append(f"parity mismatch at {(a, b, c)}")
                if failures:
                    _report(4, "rank-2 closed form", failures)
    elapsed = time.perf_counter() - start
    _want(failures, cases == 68921, f"expected 68921 cases, ran {cases}")
    _want(failures, elapsed < 5.0, f"sweep took {elapsed:.2f}s (budget 5s)")
    _report(4, f"rank-2 closed form, {cases} cases in {elapsed:.2f}s", failures)


def test_criterion_5_milgram_oracle():
    failures = []
    named = [
        hyperbolic_u(),
        e8(),
        rescale(e8(), -1),
        rank_one(2),
        rank_one(-2),
        rank_one(4),
        rank_one(-4),
        Lattice(((2, 0), (0, 6))),
    ]
    rng = random.Random(20260815)
    lattices = named + [
        oracles.random_even_posdef(rng, max_rank=4, disc_cap=10**4)
        for _ in range(50)
    ]
    for lat in lattices:
        sig = signature(lat)
        residue = milgram_signature(discriminant_form(lat))
        if residue != (sig.s_plus - sig.s_minus) % 8:
            failures.append(
                f"{lat.gram}: residue {residue} != signature {sig.s_plus - sig.s_minus} mod 8"
            )
    _report(5, f"Milgram residue vs signature on {len(lattices)} lattices", failures)


def test_criterion_6_enumeration_oracle():
    failures = []
    rng = random.Random(99)
    for i in range(100):
        lat = oracles.random_posdef(rng, max_rank=3, entry_cap=30)
        n = rng.randint(1, 30)
        mine = vectors_of_norm(lat, n)
        box = oracles.box_vectors_of_norm(lat, n)
        if mine != box:
            failures.append(f"case {i}: {lat.gram} norm {n}")
    count = len(vectors_of_norm(e8(), 2))
    _want(failures, count == 120, f"E8 norm-2 representative count {count} != 120")
    _report(6, "enumeration vs box brute force (100 lattices) and E8 roots", failures)


def test_criterion_7_family_sweep():
    failures = []
    cases = 0
    for d in range(-10, 11):
        if d == 0:
            continue
        for c in range(-10, 11):
            if 4 * c - d * d >= 0:
                continue
            cases += 1
            params = FamilyParams(d, c)
            lat = build_family_lattice(params)
            if not is_even(lat):
                failures.append(f"(d={d}, c={c}) not even")
            if signature(lat) != (1, 1, 0):
                failures.append(f"(d={d}, c={c}) signature {signature(lat)}")
            cls = classify_family(params)
            if (cls is FamilyClass.NOT_TRIVIALLY_RATIONAL) != (d % 2 == 0):
                failures.append(f"(d={d}, c={c}) classified {cls}")
            if (discriminant(lat) % 2 == 0) != (d % 2 == 0):
                failures.append(f"(d={d}, c={c}) disc parity off")
    _report(7, f"family sweep over {cases} (d, c) pairs", failures)


def test_criterion_8_detrep_suite():
    failures = []
    rng = random.Random(777)
    for p in (None, 101):
        for i in range(50):
            m = oracles.random_form_matrix(rng, p)
            if quadric_gram(build_cubic(m)) != m:
                failures.append(f"round trip failed (p={p}, case {i})")
                break
    for p in (None, 101):
        for i in range(10):
            m = oracles.random_form_matrix(rng, p)
            if discriminant_curve(build_cubic(m)) != det_form_matrix(m):
                failures.append(f"discriminant curve != det (p={p}, case {i})")
                break
    for i in range(3):
        m = oracles.random_form_matrix(rng)
        if det_form_matrix(m) != oracles.permutation_det(m.entries):
            failures.append(f"det vs permutation expansion (case {i})")

    fermat = parse_form("X0^6+X1^6+X2^6", PLANE_VARS, 7)
    res = smooth_plane_curve_fp(fermat, 7)
    _want(
        failures,
        res.smooth_mod_p and res.points_scanned == 57,
        "Fermat sextic not smooth over F_7 / wrong point count",
    )
    res = smooth_plane_curve_fp(parse_form("X0^2*X1^2*X2^2", PLANE_VARS), 7)
    _want(
        failures,
        res.smooth_mod_p is False and res.witness == (1, 0, 0),
        f"triple conic witness {res.witness} != (1, 0, 0)",
    )

    cubic = parse_form("Z1^3+Z2^3+Z3^3+X0^3+X1^3+X2^3", AMBIENT_VARS)
    start = time.perf_counter()
    res = smooth_fourfold_fp(cubic, 7)
    elapsed = time.perf_counter() - start
    _want(
        failures,
        res.smooth_mod_p and res.points_scanned == 19608,
        "Fermat cubic fourfold not smooth mod 7 / wrong point count",
    )
    _want(failures, elapsed < 10.0, f"P^5(F_7) scan took {elapsed:.2f}s (budget 10s)")
    _report(8, f"determinantal suite, full scan in {elapsed:.2f}s", failures)
