"""Command line front end.

Exit codes: 0 on success, 2 when an input violates a documented
precondition (including bad usage), 1 when an internal cross-check fails.
JSON output is an envelope {command, inputs, result, citations}; the
citations list states the mathematical claim each check relies on, so
logs are readable on their own.  repro output is deterministic:
bit-identical across runs.
"""

import argparse
import json
import sys

from . import detrep, discgroup, enumeration, forms, fourfold, lattice
from .errors import CubiclatError, ParseError, PreconditionError

CLAIMS = {
    "disc": "the discriminant is the exact integer determinant of the Gram matrix",
    "sig": "the signature comes from exact rational symmetric elimination",
    "even": "a lattice is even exactly when every diagonal Gram entry is even",
    "discgroup": "invariant factors of L*/L are read off the Smith normal form of the Gram matrix",
    "milgram": "sum over A of exp(pi*i*q(x)) = sqrt(|A|)*exp(2*pi*i*sigma/8) for non-degenerate q",
    "complement": "the orthogonal complement is the saturated kernel of pairing against the given classes",
    "index": "[L:L'] = sqrt(d(L')/d(L)) for a finite-index sublattice",
    "norm": "short-vector enumeration is complete (exact rational interval bounds at every level)",
    "shortroots": "short roots are the norm-2 vectors of an even positive definite lattice",
    "longroots": "long roots are norm-6 vectors with all basis pairings divisible by 3",
    "isotropic": "a rank-2 even form [[2a,b],[b,2c]] represents zero iff b^2-4ac is a perfect square",
    "delta": "delta(t) = b(t, h2 - p) measures intersection parity with the residual quadric class",
    "oddelta": "delta is linear mod 2, so odd values exist iff one basis vector has odd delta",
    "trivrat": "a rank-3 marked lattice is trivially rational exactly when |disc| is odd",
    "formula": "det [[3,2,a],[2,4,c],[a,c,b]] = -4a^2+8b+4ca-3c^2, odd exactly when c is odd",
    "nsax": "|d(A)| = 4^(epsilon-1)*|d(NS)| transfers a surface discriminant upward",
    "family": "in the family [[2,d],[d,2c]], even d forces an even discriminant: never trivially rational",
    "mayanskiy": "six conditions on (A, a): a^2=3, even complement, no short roots, no long roots, parity, Milgram residue 0",
    "pfaffian": "a pfaffian-shaped sublattice requires a norm-10 class pairing to 4 with h2",
    "det": "the patterned determinant is homogeneous of degree size+2",
    "build": "Z_i*Z_j*L_ij + 2*Z_i*Q_i + H is a cubic containing the plane X0=X1=X2=0",
    "gram": "halving mixed coefficients recovers the symmetric quadric matrix (inverse of build)",
    "disccurve": "the discriminant curve is the determinant of the quadric bundle over the plane",
    "smooth": "the scan certifies smoothness of the reduction mod p only",
}

# frozen instances used by the repro suites
GRAM_DISC32 = [[3, 1, 4], [1, 3, 4], [4, 4, 12]]
GRAM_DISC36 = [[3, 1, 4], [1, 3, 2], [4, 2, 10]]

# demo matrix for the construction walk-through; chosen so that both the
# sextic curve and the cubic fourfold reduce smoothly mod 7
DEMO_MATRIX = {
    "size": 4,
    "field": "Q",
    "entries": [
        [
            "2*X0+X1",
            "-2*X2",
            "2*X1-X2",
            "X0^2-2*X0*X1-X0*X2-X1^2-2*X1*X2-2*X2^2",
        ],
        [
            "-2*X2",
            "2*X0-2*X1-2*X2",
            "-2*X0+X1-2*X2",
            "-X0^2+2*X0*X1-2*X0*X2+X1^2+X1*X2+X2^2",
        ],
        [
            "2*X1-X2",
            "-2*X0+X1-2*X2",
            "-2*X0+X1",
            "-2*X0^2-2*X1^2",
        ],
        [
            "X0^2-2*X0*X1-X0*X2-X1^2-2*X1*X2-2*X2^2",
            "-X0^2+2*X0*X1-2*X0*X2+X1^2+X1*X2+X2^2",
            "-2*X0^2-2*X1^2",
            "-X0^3+X0^2*X1+X0^2*X2-2*X0*X1^2-2*X0*X1*X2-2*X0*X2^2-X1^3-X1^2*X2-2*X1*X2^2+X2^3",
        ],
    ],
}


def _fail(msg: str):
    raise PreconditionError(msg)


def _read_json(args, flag: str):
    inline = getattr(args, flag, None)
    path = args.file
    if (inline is None) == (path is None):
        _fail(f"provide exactly one of --{flag} or --file")
    try:
        if inline is not None:
            return json.loads(inline)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON input: {exc}") from exc
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc}") from exc


def _read_text(args, flag: str) -> str:
    inline = getattr(args, flag, None)
    path = args.file
    if (inline is None) == (path is None):
        _fail(f"provide exactly one of --{flag} or --file")
    if inline is not None:
        return inline
    try:
        with open(path) as fh:
            return fh.read().strip()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc}") from exc


def _load_lattice(args, flag: str = "gram") -> lattice.Lattice:
    data = _read_json(args, flag)
    if isinstance(data, dict):
        if "gram" not in data:
            _fail("expected a top-level 'gram' key")
        data = data["gram"]
    if not isinstance(data, list):
        _fail("gram must be a JSON array of rows")
    return lattice.Lattice(tuple(tuple(row) for row in data))


def _load_marked(args) -> fourfold.MarkedFourfold:
    data = _read_json(args, "marked")
    if not isinstance(data, dict):
        _fail("marked input must be an object with gram, h2, p")
    for key in ("gram", "h2", "p"):
        if key not in data:
            _fail(f"marked input is missing {key!r}")
    return fourfold.MarkedFourfold.from_json(data)


def _load_vector(args, flag: str):
    raw = getattr(args, flag, None)
    if raw is None:
        _fail(f"--{flag} is required")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON vector: {exc}") from exc
    if not isinstance(data, list):
        _fail(f"--{flag} must be a JSON array")
    return tuple(int(x) for x in data)


def _load_matrix(args) -> detrep.FormMatrix:
    data = _read_json(args, "matrix")
    if not isinstance(data, dict):
        _fail("matrix input must be an object with size, field, entries")
    return detrep.FormMatrix.from_json(data)


def _field_arg(args):
    label = getattr(args, "field", "Q")
    if label == "Q":
        return None
    if label.startswith("Fp:"):
        p = int(label[3:])
        forms.check_prime(p)
        return p
    _fail(f"unknown field {label!r} (use Q or Fp:<p>)")


# one handler per subcommand; each returns
# (command, inputs, result, citations, human_lines)

def _h_lat_disc(args):
    lat = _load_lattice(args)
    d = lattice.discriminant(lat)
    return ("lat disc", lat.to_json(), d, [CLAIMS["disc"]], [str(d)])


def _h_lat_sig(args):
    lat = _load_lattice(args)
    sig = lattice.signature(lat)
    result = {"s_plus": sig.s_plus, "s_minus": sig.s_minus, "s_zero": sig.s_zero}
    return (
        "lat sig",
        lat.to_json(),
        result,
        [CLAIMS["sig"]],
        [f"signature (s+, s-, s0) = ({sig.s_plus}, {sig.s_minus}, {sig.s_zero})"],
    )


def _h_lat_even(args):
    lat = _load_lattice(args)
    val = lattice.is_even(lat)
    return ("lat even", lat.to_json(), val, [CLAIMS["even"]], [str(val).lower()])


def _h_lat_discgroup(args):
    lat = _load_lattice(args)
    dg = discgroup.discriminant_group(lat)
    return (
        "lat discgroup",
        lat.to_json(),
        dg.to_json(),
        [CLAIMS["discgroup"]],
        [
            f"invariant factors: {list(dg.orders)}",
            f"generators (rational coordinates): {dg.to_json()['generators']}",
        ],
    )


def _h_lat_milgram(args):
    lat = _load_lattice(args)
    form = discgroup.discriminant_form(lat)
    sigma = discgroup.milgram_signature(form, args.enumeration_cap)
    return (
        "lat milgram",
        lat.to_json(),
        {"residue": sigma, "orders": list(form.orders)},
        [CLAIMS["milgram"]],
        [f"Milgram residue: {sigma} (group orders {list(form.orders)})"],
    )


def _h_lat_complement(args):
    lat = _load_lattice(args)
    if args.vectors is None:
        _fail("--vectors is required")
    try:
        vectors = json.loads(args.vectors)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON vectors: {exc}") from exc
    if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
        _fail("--vectors must be a JSON array of vectors")
    basis, comp = lattice.orthogonal_complement(lat, [tuple(v) for v in vectors])
    result = {"basis": [list(v) for v in basis], "gram": [list(r) for r in comp.gram]}
    return (
        "lat complement",
        {"gram": lat.to_json()["gram"], "vectors": vectors},
        result,
        [CLAIMS["complement"]],
        [f"basis: {result['basis']}", f"gram: {result['gram']}"],
    )


def _h_lat_index(args):
    lat = _load_lattice(args)
    if args.basis is None:
        _fail("--basis is required")
    try:
        basis = json.loads(args.basis)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON basis: {exc}") from exc
    idx = lattice.sublattice_index(lat, [tuple(v) for v in basis])
    return (
        "lat index",
        {"gram": lat.to_json()["gram"], "basis": basis},
        idx,
        [CLAIMS["index"]],
        [str(idx)],
    )


def _h_enum_norm(args):
    lat = _load_lattice(args)
    vecs = enumeration.vectors_of_norm(lat, args.norm)
    return _enum_result("enum norm", lat, vecs, args, extra={"norm": args.norm})


def _h_enum_shortroots(args):
    lat = _load_lattice(args)
    vecs = enumeration.short_roots(lat)
    return _enum_result("enum shortroots", lat, vecs, args, claim="shortroots")


def _h_enum_longroots(args):
    lat = _load_lattice(args)
    vecs = enumeration.long_roots(lat)
    return _enum_result("enum longroots", lat, vecs, args, claim="longroots")


def _enum_result(command, lat, vecs, args, extra=None, claim="norm"):
    inputs = lat.to_json()
    if extra:
        inputs.update(extra)
    result = [list(v) for v in vecs]
    human = [f"{len(vecs)} vector(s)"] + [" ".join(str(x) for x in v) for v in vecs]
    return (command, inputs, result, [CLAIMS[claim]], human)


def _h_enum_isotropic(args):
    lat = _load_lattice(args)
    exists, witness = enumeration.isotropic_exists(lat)
    result = {"exists": exists, "witness": list(witness) if witness else None}
    human = [f"isotropic vector exists: {str(exists).lower()}"]
    if witness:
        human.append(f"witness: {list(witness)}")
    return ("enum isotropic", lat.to_json(), result, [CLAIMS["isotropic"]], human)


def _h_ff_delta(args):
    marked = _load_marked(args)
    t = _load_vector(args, "t")
    val = fourfold.delta(marked, t)
    return (
        "fourfold delta",
        {**marked.to_json(), "t": list(t)},
        val,
        [CLAIMS["delta"]],
        [str(val)],
    )


def _h_ff_oddelta(args):
    marked = _load_marked(args)
    val = fourfold.exists_odd_delta(marked)
    return (
        "fourfold oddelta",
        marked.to_json(),
        val,
        [CLAIMS["oddelta"]],
        [str(val).lower()],
    )


def _h_ff_trivrat(args):
    marked = _load_marked(args)
    val = fourfold.is_trivially_rational_rank3(marked)
    return (
        "fourfold trivrat",
        marked.to_json(),
        val,
        [CLAIMS["trivrat"]],
        [str(val).lower()],
    )


def _h_ff_formula(args):
    det = fourfold.rk2_discriminant_formula(args.a, args.b, args.c)
    result = {"det": det, "det_odd": det % 2 != 0, "c_odd": args.c % 2 != 0}
    return (
        "fourfold formula",
        {"a": args.a, "b": args.b, "c": args.c},
        result,
        [CLAIMS["formula"]],
        [f"det = {det} ({'odd' if det % 2 else 'even'})"],
    )


def _h_ff_nsax(args):
    val = fourfold.ns_to_ax_disc(args.dns, args.epsilon)
    return (
        "fourfold nsax",
        {"dns": args.dns, "epsilon": args.epsilon},
        val,
        [CLAIMS["nsax"]],
        [str(val)],
    )


def _h_ff_family(args):
    params = fourfold.FamilyParams(args.d, args.c)
    lat = fourfold.build_family_lattice(params)
    cls = fourfold.classify_family(params)
    result = {
        "gram": [list(r) for r in lat.gram],
        "classification": cls.value,
        "disc": lattice.discriminant(lat),
    }
    return (
        "fourfold family",
        {"d": args.d, "c": args.c},
        result,
        [CLAIMS["family"]],
        [f"gram: {result['gram']}", f"classification: {cls.value}"],
    )


def _mayanskiy_human(report) -> list[str]:
    lines = []
    for cond in report.conditions:
        status = "PASS" if cond.passed else "FAIL"
        lines.append(f"condition {cond.index} ({cond.label}): {status} [{cond.detail}]")
    lines.append(f"all conditions pass: {str(report.all_pass).lower()}")
    return lines


def _h_ff_mayanskiy(args):
    lat = _load_lattice(args)
    a = _load_vector(args, "a")
    report = fourfold.mayanskiy_check(
        lat, a, args.long_root_variant, args.enumeration_cap
    )
    return (
        "fourfold mayanskiy",
        {"gram": lat.to_json()["gram"], "a": list(a), "variant": args.long_root_variant},
        report.to_json(),
        [CLAIMS["mayanskiy"]],
        _mayanskiy_human(report),
    )


def _h_ff_pfaffian(args):
    marked = _load_marked(args)
    scan = fourfold.pfaffian_obstruction(marked)
    human = [f"obstructed: {str(scan.obstructed).lower()}"]
    for cand in scan.candidates:
        human.append(
            f"candidate {list(cand.vector)}: b(t,h2) = {cand.pair_h2}, "
            f"b(t,p) = {cand.pair_p}"
            + (" [pfaffian pairing]" if cand.pairs_like_pfaffian else "")
        )
    return (
        "fourfold pfaffian",
        marked.to_json(),
        scan.to_json(),
        [CLAIMS["pfaffian"]],
        human,
    )


def _h_det(args):
    m = _load_matrix(args)
    det = detrep.det_form_matrix(m)
    text = forms.serialize_form(det)
    return ("detrep det", m.to_json(), text, [CLAIMS["det"]], [text])


def _h_build(args):
    m = _load_matrix(args)
    cubic = detrep.build_cubic(m)
    text = forms.serialize_form(cubic)
    return ("detrep build", m.to_json(), text, [CLAIMS["build"]], [text])


def _h_gram(args):
    p = _field_arg(args)
    text = _read_text(args, "cubic")
    cubic = forms.parse_form(text, forms.AMBIENT_VARS, p)
    m = detrep.quadric_gram(cubic)
    return (
        "detrep gram",
        {"cubic": text, "field": m.field_label()},
        m.to_json(),
        [CLAIMS["gram"]],
        [json.dumps(m.to_json())],
    )


def _h_disccurve(args):
    if args.matrix or (args.file and not args.cubic):
        m = _load_matrix(args)
        cubic = detrep.build_cubic(m)
        inputs = m.to_json()
    else:
        p = _field_arg(args)
        text = _read_text(args, "cubic")
        cubic = forms.parse_form(text, forms.AMBIENT_VARS, p)
        inputs = {"cubic": text}
    curve = detrep.discriminant_curve(cubic)
    text_out = forms.serialize_form(curve)
    return ("detrep disccurve", inputs, text_out, [CLAIMS["disccurve"]], [text_out])


def _h_smoothcurve(args):
    p = _field_arg(args)
    text = _read_text(args, "form")
    form = forms.parse_form(text, forms.PLANE_VARS, p)
    res = detrep.smooth_plane_curve_fp(form, args.p)
    human = [f"smooth mod {args.p}: {str(res.smooth_mod_p).lower()}"]
    if res.witness:
        human.append(f"singular witness: {list(res.witness)}")
    return (
        "detrep smoothcurve",
        {"form": text, "p": args.p},
        res.to_json(),
        [CLAIMS["smooth"]],
        human,
    )


def _h_smoothfourfold(args):
    p = _field_arg(args)
    text = _read_text(args, "cubic")
    cubic = forms.parse_form(text, forms.AMBIENT_VARS, p)
    res = detrep.smooth_fourfold_fp(cubic, args.p, args.scan_prime_cap)
    human = [f"smooth mod {args.p}: {str(res.smooth_mod_p).lower()}"]
    if res.witness:
        human.append(f"singular witness: {list(res.witness)}")
    return (
        "detrep smoothfourfold",
        {"cubic": text, "p": args.p},
        res.to_json(),
        [CLAIMS["smooth"]],
        human,
    )


def _check(name, passed, detail):
    return {"check": name, "passed": bool(passed), "detail": detail}


def _h_repro_exe(args):
    lat = lattice.Lattice(tuple(tuple(r) for r in GRAM_DISC32))
    a = (1, 0, 0)
    checks = []
    d = lattice.discriminant(lat)
    checks.append(_check("discriminant is 32", d == 32, f"disc = {d}"))
    basis, comp = lattice.orthogonal_complement(lat, [a])
    checks.append(
        _check(
            "complement of a is even of determinant 96",
            lattice.is_even(comp) and lattice.discriminant(comp) == 96,
            f"gram = {[list(r) for r in comp.gram]} on basis {[list(v) for v in basis]}",
        )
    )
    dg = discgroup.discriminant_group(lat)
    checks.append(
        _check(
            "discriminant group is Z/4 x Z/8",
            dg.orders == (4, 8),
            f"invariant factors {list(dg.orders)}",
        )
    )
    reports = {}
    for variant in fourfold.LONG_ROOT_VARIANTS:
        rep = fourfold.mayanskiy_check(lat, a, variant, args.enumeration_cap)
        reports[variant] = rep
        checks.append(
            _check(
                f"all six conditions pass ({variant})",
                rep.all_pass,
                "; ".join(
                    f"{c.index}:{'PASS' if c.passed else 'FAIL'}" for c in rep.conditions
                ),
            )
        )
    form = discgroup.mayanskiy_q(lat, a)
    sigma = discgroup.milgram_signature(form, args.enumeration_cap)
    checks.append(_check("Milgram residue is 0", sigma == 0, f"residue {sigma}"))
    ten = enumeration.vectors_of_norm(lat, 10)
    checks.append(
        _check("no norm-10 vectors: pfaffian shape obstructed", not ten, f"{len(ten)} found")
    )
    marked = fourfold.MarkedFourfold(lat, (1, 0, 0), (0, 1, 0))
    triv = fourfold.is_trivially_rational_rank3(marked)
    checks.append(
        _check("even discriminant: not trivially rational", triv is False, f"trivially rational = {triv}")
    )
    result = {
        "gram": GRAM_DISC32,
        "a": list(a),
        "checks": checks,
        "all_pass": all(c["passed"] for c in checks),
        "mayanskiy": {v: r.to_json() for v, r in reports.items()},
    }
    citations = [
        "the rank-3 lattice [[3,1,4],[1,3,4],[4,4,12]] has discriminant 32",
        "its discriminant group has invariant factors (4, 8)",
        "the twisted form on the discriminant group has Milgram residue 0 mod 8",
        "the complement of the square-3 class is even with no short or long roots",
        "no norm-10 class exists, so no pfaffian-shaped sublattice can be marked",
        "even discriminant: the marked lattice is not trivially rational",
    ]
    human = [
        f"{'PASS' if c['passed'] else 'FAIL'}: {c['check']} ({c['detail']})" for c in checks
    ]
    human.append(f"all checks pass: {str(result['all_pass']).lower()}")
    return ("repro exe", {"gram": GRAM_DISC32, "a": list(a)}, result, citations, human)


def _h_repro_p369(args):
    lat = lattice.Lattice(tuple(tuple(r) for r in GRAM_DISC36))
    checks = []
    d = lattice.discriminant(lat)
    checks.append(_check("discriminant is 36", d == 36, f"disc = {d}"))
    transfer = fourfold.ns_to_ax_disc(-9, 2)
    checks.append(
        _check(
            "4^(2-1) * |-9| = 36 matches",
            transfer == 36 == d,
            f"ns_to_ax_disc(-9, 2) = {transfer}",
        )
    )
    iso_all = []
    for t in range(-3, 4):
        surf = lattice.Lattice(((0, 3), (3, 2 * t)))
        exists, witness = enumeration.isotropic_exists(surf)
        iso_all.append({"t": t, "exists": exists, "witness": list(witness)})
    checks.append(
        _check(
            "[[0,3],[3,2t]] represents zero for t in -3..3",
            all(e["exists"] for e in iso_all),
            f"witnesses {[e['witness'] for e in iso_all]}",
        )
    )
    marked = fourfold.MarkedFourfold(lat, (1, 0, 0), (0, 1, 0))
    odd = fourfold.exists_odd_delta(marked)
    checks.append(_check("no basis class has odd delta", odd is False, f"exists_odd_delta = {odd}"))
    triv = fourfold.is_trivially_rational_rank3(marked)
    checks.append(
        _check("even discriminant: not trivially rational", triv is False, f"trivially rational = {triv}")
    )
    scan = fourfold.pfaffian_obstruction(marked)
    wanted = next(
        (c for c in scan.candidates if c.vector == (0, 0, 1)), None
    )
    checks.append(
        _check(
            "norm-10 candidate (0,0,1) pairs (4,2) with (h2,p)",
            wanted is not None and wanted.pair_h2 == 4 and wanted.pair_p == 2,
            f"candidates {[list(c.vector) for c in scan.candidates]}",
        )
    )
    reports = {
        variant: fourfold.mayanskiy_check(lat, (1, 0, 0), variant, args.enumeration_cap)
        for variant in fourfold.LONG_ROOT_VARIANTS
    }
    result = {
        "gram": GRAM_DISC36,
        "checks": checks,
        "all_pass": all(c["passed"] for c in checks),
        "isotropic": iso_all,
        "pfaffian": scan.to_json(),
        "mayanskiy": {v: r.to_json() for v, r in reports.items()},
    }
    citations = [
        "the rank-3 lattice [[3,1,4],[1,3,2],[4,2,10]] has discriminant 36",
        "a surface lattice of discriminant -9 transfers to 36 at epsilon = 2",
        "the rank-2 form [[0,3],[3,2t]] represents zero for every t",
        "no class in the standard basis has odd delta, so trivial rationality is not detected",
        "the norm-10 class (0,0,1) pairs (4,2) with (h2,p): the pfaffian-shaped sublattice exists",
    ]
    human = [
        f"{'PASS' if c['passed'] else 'FAIL'}: {c['check']} ({c['detail']})" for c in checks
    ]
    human.append(f"all checks pass: {str(result['all_pass']).lower()}")
    return ("repro p369", {"gram": GRAM_DISC36}, result, citations, human)


def _h_repro_mainteo(args):
    sweep = []
    ok_even = ok_sig = ok_parity = ok_class = True
    count = 0
    for d in range(-10, 11):
        if d == 0:
            continue
        for c in range(-10, 11):
            if 4 * c - d * d >= 0:
                continue
            count += 1
            params = fourfold.FamilyParams(d, c)
            lat = fourfold.build_family_lattice(params)
            sig = lattice.signature(lat)
            cls = fourfold.classify_family(params)
            disc = lattice.discriminant(lat)
            ok_even = ok_even and lattice.is_even(lat)
            ok_sig = ok_sig and sig == (1, 1, 0)
            ok_parity = ok_parity and (disc % 2 == 0) == (d % 2 == 0)
            ok_class = ok_class and (
                (cls is fourfold.FamilyClass.NOT_TRIVIALLY_RATIONAL) == (d % 2 == 0)
            )
    checks = [
        _check("every family member is even", ok_even, f"{count} members"),
        _check("every family member has signature (1,1)", ok_sig, f"{count} members"),
        _check("disc parity follows d parity", ok_parity, f"{count} members"),
        _check("classification triggers exactly for even d", ok_class, f"{count} members"),
    ]
    m = detrep.FormMatrix.from_json(DEMO_MATRIX)
    cubic = detrep.build_cubic(m)
    round_trip = detrep.quadric_gram(cubic)
    det = detrep.det_form_matrix(m)
    curve = detrep.discriminant_curve(cubic)
    checks.append(
        _check("cubic contains the plane", detrep.contains_plane(cubic), forms.serialize_form(cubic))
    )
    checks.append(_check("quadric matrix round-trips", round_trip == m, "gram(build(M)) == M"))
    checks.append(
        _check(
            "discriminant curve equals det of the matrix",
            curve == det,
            forms.serialize_form(det),
        )
    )
    curve_scan = detrep.smooth_plane_curve_fp(det, 7)
    fourfold_scan = detrep.smooth_fourfold_fp(cubic, 7, args.scan_prime_cap)
    checks.append(
        _check(
            "sextic curve smooth mod 7",
            curve_scan.smooth_mod_p,
            f"scanned {curve_scan.points_scanned} points"
            + (f", witness {list(curve_scan.witness)}" if curve_scan.witness else ""),
        )
    )
    checks.append(
        _check(
            "cubic fourfold smooth mod 7",
            fourfold_scan.smooth_mod_p,
            f"scanned {fourfold_scan.points_scanned} points"
            + (f", witness {list(fourfold_scan.witness)}" if fourfold_scan.witness else ""),
        )
    )
    result = {
        "family_members": count,
        "checks": checks,
        "all_pass": all(c["passed"] for c in checks),
        "demo_matrix": DEMO_MATRIX,
        "demo_cubic": forms.serialize_form(cubic),
        "demo_sextic": forms.serialize_form(det),
    }
    citations = [
        "the family [[2,d],[d,2c]] with d nonzero and 4c-d^2 < 0 is even of signature (1,1)",
        "even d forces an even discriminant, hence never trivially rational; odd d stays undetermined",
        "a symmetric matrix of linear/quadratic/cubic forms with plane entries produces a plane-containing cubic whose quadric matrix round-trips",
        "the sextic discriminant curve of the quadric bundle equals the matrix determinant",
    ]
    human = [
        f"{'PASS' if c['passed'] else 'FAIL'}: {c['check']} ({c['detail']})" for c in checks
    ]
    human.append(f"all checks pass: {str(result['all_pass']).lower()}")
    return ("repro mainteo", {"range": "1 <= |d| <= 10, |c| <= 10"}, result, citations, human)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output", choices=("human", "json"), default="human", help="output mode"
    )
    common.add_argument("--file", help="read the primary input from a JSON/text file")
    common.add_argument(
        "--enumeration-cap",
        type=int,
        default=discgroup.DEFAULT_ENUMERATION_CAP,
        help="largest discriminant group a Gauss sum will enumerate",
    )
    common.add_argument(
        "--scan-prime-cap",
        type=int,
        default=detrep.DEFAULT_PRIME_CAP,
        help="largest prime allowed in the fourfold smoothness scan",
    )

    parser = argparse.ArgumentParser(
        prog="cubiclat",
        description="exact lattice and determinantal computations for cubic fourfolds containing a plane",
    )
    top = parser.add_subparsers(dest="group")

    lat = top.add_parser("lat", help="lattice invariants").add_subparsers(dest="cmd")
    for name, handler, extras in (
        ("disc", _h_lat_disc, ()),
        ("sig", _h_lat_sig, ()),
        ("even", _h_lat_even, ()),
        ("discgroup", _h_lat_discgroup, ()),
        ("milgram", _h_lat_milgram, ()),
        ("complement", _h_lat_complement, ("vectors",)),
        ("index", _h_lat_index, ("basis",)),
    ):
        sub = lat.add_parser(name, parents=[common])
        sub.add_argument("--gram", help="inline Gram matrix as JSON")
        for extra in extras:
            sub.add_argument(f"--{extra}", help=f"inline {extra} as JSON")
        sub.set_defaults(handler=handler)

    enum = top.add_parser("enum", help="vector enumeration").add_subparsers(dest="cmd")
    for name, handler in (
        ("norm", _h_enum_norm),
        ("shortroots", _h_enum_shortroots),
        ("longroots", _h_enum_longroots),
        ("isotropic", _h_enum_isotropic),
    ):
        sub = enum.add_parser(name, parents=[common])
        sub.add_argument("--gram", help="inline Gram matrix as JSON")
        if name == "norm":
            sub.add_argument("--norm", type=int, required=True, help="target norm")
        if name != "isotropic":
            sub.add_argument(
                "--jsonl",
                action="store_true",
                help="stream one JSON vector per line instead of the envelope",
            )
        sub.set_defaults(handler=handler)

    ff = top.add_parser("fourfold", help="marked lattice criteria").add_subparsers(dest="cmd")
    sub = ff.add_parser("delta", parents=[common])
    sub.add_argument("--marked", help="inline marked lattice as JSON")
    sub.add_argument("--t", help="class to evaluate, inline JSON")
    sub.set_defaults(handler=_h_ff_delta)
    for name, handler in (("oddelta", _h_ff_oddelta), ("trivrat", _h_ff_trivrat), ("pfaffian", _h_ff_pfaffian)):
        sub = ff.add_parser(name, parents=[common])
        sub.add_argument("--marked", help="inline marked lattice as JSON")
        sub.set_defaults(handler=handler)
    sub = ff.add_parser("formula", parents=[common])
    for flag in ("a", "b", "c"):
        sub.add_argument(f"-{flag}", f"--{flag}", type=int, required=True)
    sub.set_defaults(handler=_h_ff_formula)
    sub = ff.add_parser("nsax", parents=[common])
    sub.add_argument("--dns", type=int, required=True, help="surface lattice discriminant")
    sub.add_argument("--epsilon", type=int, required=True, help="1 or 2")
    sub.set_defaults(handler=_h_ff_nsax)
    sub = ff.add_parser("family", parents=[common])
    sub.add_argument("-d", "--d", type=int, required=True)
    sub.add_argument("-c", "--c", type=int, required=True)
    sub.set_defaults(handler=_h_ff_family)
    sub = ff.add_parser("mayanskiy", parents=[common])
    sub.add_argument("--gram", help="inline Gram matrix as JSON")
    sub.add_argument("--a", help="square-3 class, inline JSON")
    sub.add_argument(
        "--long-root-variant",
        choices=fourfold.LONG_ROOT_VARIANTS,
        default="against-A0",
    )
    sub.set_defaults(handler=_h_ff_mayanskiy)

    det = top.add_parser("detrep", help="determinantal representations").add_subparsers(dest="cmd")
    for name, handler in (("det", _h_det), ("build", _h_build)):
        sub = det.add_parser(name, parents=[common])
        sub.add_argument("--matrix", help="inline form matrix as JSON")
        sub.set_defaults(handler=handler)
    sub = det.add_parser("gram", parents=[common])
    sub.add_argument("--cubic", help="cubic form text in the six ambient variables")
    sub.add_argument("--field", default="Q", help="Q or Fp:<p>")
    sub.set_defaults(handler=_h_gram)
    sub = det.add_parser("disccurve", parents=[common])
    sub.add_argument("--matrix", help="inline form matrix as JSON")
    sub.add_argument("--cubic", help="cubic form text (alternative input)")
    sub.add_argument("--field", default="Q", help="Q or Fp:<p>")
    sub.set_defaults(handler=_h_disccurve)
    sub = det.add_parser("smoothcurve", parents=[common])
    sub.add_argument("--form", help="plane form text")
    sub.add_argument("--field", default="Q", help="Q or Fp:<p>")
    sub.add_argument("-p", type=int, required=True, help="prime to reduce at")
    sub.set_defaults(handler=_h_smoothcurve)
    sub = det.add_parser("smoothfourfold", parents=[common])
    sub.add_argument("--cubic", help="cubic form text")
    sub.add_argument("--field", default="Q", help="Q or Fp:<p>")
    sub.add_argument("-p", type=int, required=True, help="prime to reduce at")
    sub.set_defaults(handler=_h_smoothfourfold)

    repro = top.add_parser("repro", help="frozen verification suites").add_subparsers(dest="cmd")
    for name, handler in (
        ("exe", _h_repro_exe),
        ("p369", _h_repro_p369),
        ("mainteo", _h_repro_mainteo),
    ):
        sub = repro.add_parser(name, parents=[common])
        sub.set_defaults(handler=handler)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        command, inputs, result, citations, human = args.handler(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CubiclatError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "jsonl", False):
        for item in result:
            print(json.dumps(item))
        return 0
    if args.output == "json":
        envelope = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "citations": citations,
        }
        print(json.dumps(envelope, indent=2))
    else:
        for line in human:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
