"""Scheme constructions and the bundled catalog.

Builders produce canonically labeled, fully verified schemes:

  * cyclotomic schemes over GF(q) from the index-m subgroup of the
    multiplicative group,
  * Schurian schemes (orbitals of a transitive permutation group given by
    generators),
  * direct and wreath products,
  * small named grascheme constructions (complete, trivial, Petersen).

DEFAULT_CATALOG maps ids to zero-argument builders; run_catalog sweeps
every entry through the full battery of checks and emits one JSON line
per (entry, check).
"""

import json
from fractions import Fraction
from itertools import combinations

import numpy as np

from .core import (
    canonical_form,
    scheme_from_entries,
)
from .errors import BadDivisor, NonCommutative, NotPrime, NotTransitive, TooLarge
from .finitefield import field

MAX_PRODUCT_N = 4096
MAX_SCHURIAN_N = 60


def trivial_scheme():
    """The one-point scheme (d = 0)."""
    return scheme_from_entries(np.zeros((1, 1), dtype=np.int64), d=0)


def complete_scheme(n):
    """K_n as a one-class scheme."""
    if n < 2:
        raise ValueError("complete scheme needs n >= 2")
    e = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
    return scheme_from_entries(e, d=1)


def _prime_power(q):
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = min(f for f in range(2, q + 1) if q % f == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    if q != 1:
        raise NotPrime("field order must be a prime power")
    return p, k


def build_cyclotomic(q, m):
    """Cyclotomic scheme on GF(q): classes are cosets of the index-m
    subgroup of the multiplicative group, colored by difference.

    The affine maps x -> cx + b with c in the subgroup act transitively
    with these orbitals, so the axioms always hold; commutativity is
    automatic for translation schemes over an abelian group.
    """
    p, k = _prime_power(q)
    F = field(p, k)
    if m < 1 or (q - 1) % m != 0:
        raise BadDivisor(f"m = {m} does not divide q - 1 = {q - 1}")
    D = F.digit_matrix()
    pw = p ** np.arange(F.k, dtype=np.int64)
    diff = ((D[None, :, :] - D[:, None, :]) % p * pw).sum(axis=2)
    cls = np.zeros(F.q, dtype=np.int64)
    for e in range(1, F.q):
        cls[e] = 1 + F.log[e - 1] % m
    s = scheme_from_entries(cls[diff], d=m)
    return canonical_form(s)[0]


def cyclic_shift(n):
    return tuple((i + 1) % n for i in range(n))


def multiplier_perm(n, a):
    if np.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    return tuple(a * i % n for i in range(n))


def build_schurian(n, generators):
    """Orbital scheme of the permutation group generated on n points.

    Raises NotTransitive when the point action has more than one orbit,
    NonCommutative when the orbital algebra is not commutative, and
    TooLarge beyond 60 points.
    """
    if n > MAX_SCHURIAN_N:
        raise TooLarge(f"degree {n} exceeds the limit {MAX_SCHURIAN_N}")
    gens = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if sorted(g) != list(range(n)):
            raise ValueError("generator is not a permutation of range(n)")
        gens.append(g)
    orbit = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            if g[x] not in orbit:
                orbit.add(g[x])
                stack.append(g[x])
    if len(orbit) != n:
        raise NotTransitive(f"point orbit of 0 has size {len(orbit)} < {n}")
    color = np.full((n, n), -1, dtype=np.int64)
    nxt = 0
    for sx in range(n):
        for sy in range(n):
            if color[sx, sy] >= 0:
                continue
            if nxt == 0 and sx != sy:
                # diagonal must be class 0; (0, 0) is seeded first
                raise AssertionError("diagonal pair not seeded first")
            color[sx, sy] = nxt
            stack = [(sx, sy)]
            while stack:
                x, y = stack.pop()
                for g in gens:
                    if color[g[x], g[y]] < 0:
                        color[g[x], g[y]] = nxt
                        stack.append((g[x], g[y]))
            nxt += 1
    s = scheme_from_entries(color, d=nxt - 1)
    if not s.is_commutative:
        raise NonCommutative(
            f"orbital algebra on {n} points with {nxt - 1} classes is not commutative"
        )
    return canonical_form(s)[0]


def build_product(s1, s2, kind):
    """Direct or wreath product on the vertex set X1 x X2.

    direct: class of ((x1,x2),(y1,y2)) is the pair (c1(x1,y1), c2(x2,y2)).
    wreath: inner relations of s1 within each fiber of a point of s2,
    relations of s2 between fibers (blown up by J); vertex index is
    x2 * n1 + x1, so inner classes are I (x) A1_i and outer classes are
    A2_j (x) J.
    """
    n1, n2 = s1.n, s2.n
    if n1 * n2 > MAX_PRODUCT_N:
        raise TooLarge(f"product order {n1 * n2} exceeds {MAX_PRODUCT_N}")
    e1 = s1.color.entries.astype(np.int64)
    e2 = s2.color.entries.astype(np.int64)
    d1, d2 = s1.d, s2.d
    if kind == "direct":
        lab = e1[:, None, :, None] * (d2 + 1) + e2[None, :, None, :]
        entries = lab.reshape(n1 * n2, n1 * n2)
        s = scheme_from_entries(entries, d=(d1 + 1) * (d2 + 1) - 1)
    elif kind == "wreath":
        E2 = e2[:, None, :, None]
        E1 = e1[None, :, None, :]
        lab = np.where(E2 == 0, E1, d1 + E2)
        entries = np.broadcast_to(lab, (n2, n1, n2, n1)).reshape(n1 * n2, n1 * n2)
        s = scheme_from_entries(entries, d=d1 + d2)
    else:
        raise ValueError(f"unknown product kind {kind!r}")
    return canonical_form(s)[0]


def build_petersen():
    """Petersen graph as a 2-class scheme on the 2-subsets of a 5-set."""
    V = list(combinations(range(5), 2))
    n = len(V)
    e = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            e[a, b] = 1 if not set(V[a]) & set(V[b]) else 2
    return canonical_form(scheme_from_entries(e, d=2))[0]


def _johnson_5_2_generators():
    V = list(combinations(range(5), 2))
    idx = {v: i for i, v in enumerate(V)}
    gens = []
    for g in [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)]:
        gens.append(tuple(idx[tuple(sorted((g[a], g[b])))] for a, b in V))
    return gens


def _hexagon_reflection():
    return tuple((6 - i) % 6 for i in range(6))


def _qr3():
    return build_cyclotomic(3, 2)


def _paley5():
    return build_cyclotomic(5, 2)


def _qr7():
    return build_cyclotomic(7, 2)


_CYCLOTOMIC_QM = [
    (5, 2), (5, 4),
    (7, 2), (7, 3),
    (11, 2),
    (13, 2), (13, 3), (13, 4),
    (17, 2), (17, 4),
    (19, 2), (19, 3),
    (23, 2),
    (29, 2), (29, 4),
    (31, 2), (31, 3),
    (37, 2), (37, 3), (37, 4),
    (41, 2), (41, 4),
    (9, 4), (16, 3), (16, 5), (25, 3),
]

DEFAULT_CATALOG = {}
for _q, _m in _CYCLOTOMIC_QM:
    DEFAULT_CATALOG[f"cyclo-{_q}-{_m}"] = (
        lambda q=_q, m=_m: build_cyclotomic(q, m)
    )
DEFAULT_CATALOG.update(
    {
        "schurian-z4": lambda: build_schurian(4, [cyclic_shift(4)]),
        "schurian-z8-m3": lambda: build_schurian(
            8, [cyclic_shift(8), multiplier_perm(8, 3)]
        ),
        "schurian-z9-m4": lambda: build_schurian(
            9, [cyclic_shift(9), multiplier_perm(9, 4)]
        ),
        "schurian-frob21": lambda: build_schurian(
            7, [cyclic_shift(7), multiplier_perm(7, 2)]
        ),
        "schurian-d6": lambda: build_schurian(
            6, [cyclic_shift(6), _hexagon_reflection()]
        ),
        "schurian-s5-pairs": lambda: build_schurian(10, _johnson_5_2_generators()),
        "petersen": build_petersen,
        "direct-k2-k2": lambda: build_product(
            complete_scheme(2), complete_scheme(2), "direct"
        ),
        "direct-k3-k3": lambda: build_product(
            complete_scheme(3), complete_scheme(3), "direct"
        ),
        "direct-qr7-k2": lambda: build_product(_qr7(), complete_scheme(2), "direct"),
        "wreath-k5-k2": lambda: build_product(
            complete_scheme(5), complete_scheme(2), "wreath"
        ),
        "wreath-qr3-k2": lambda: build_product(_qr3(), complete_scheme(2), "wreath"),
        "wreath-k2-qr3": lambda: build_product(complete_scheme(2), _qr3(), "wreath"),
        "wreath-qr7-k2": lambda: build_product(_qr7(), complete_scheme(2), "wreath"),
        "wreath-qr7-k3": lambda: build_product(_qr7(), complete_scheme(3), "wreath"),
        "wreath-qr3-qr3": lambda: build_product(_qr3(), _qr3(), "wreath"),
        "wreath-qr3-paley5": lambda: build_product(_qr3(), _paley5(), "wreath"),
        "wreath-paley5-qr3": lambda: build_product(_paley5(), _qr3(), "wreath"),
        "wreath-qr7-paley5": lambda: build_product(_qr7(), _paley5(), "wreath"),
    }
)


def catalog_ids():
    return list(DEFAULT_CATALOG)


def catalog_scheme(entry_id):
    try:
        build = DEFAULT_CATALOG[entry_id]
    except KeyError:
        raise KeyError(f"unknown catalog id {entry_id!r}") from None
    return build()


# ---------------------------------------------------------------------------
# batch verification over the catalog

CHECKS = (
    "axioms",
    "spectra",
    "fusion",
    "amorphic",
    "generators",
    "srg",
    "T1.2",
    "T1.3",
    "T1.4",
    "T3.1",
    "T4.1",
)

ROW_SUM_TOL = 1e-8
FUSION_ENUM_MAX_D = 5
GENERATOR_SWEEP_MAX_D = 6


def _check_axioms(s):
    from .core import verify_axioms

    verify_axioms(s.color)
    return True, True, {
        "n": s.n,
        "d": s.d,
        "kind": s.class_kind,
        "commutative": s.is_commutative,
    }


def _check_spectra(s):
    from .exact import radical_sum
    from .spectra import character_table

    e = character_table(s)
    worst = 0.0
    exact_rows = 0
    for j in range(1, s.d + 1):
        vals = [e.exact[j][i] for i in range(s.d + 1)]
        if all(v is not None for v in vals):
            form = radical_sum(vals)
            if form != (Fraction(0), ()):
                return True, False, {"row": j, "exact_sum": str(form)}
            exact_rows += 1
        else:
            worst = max(worst, abs(complex(e.P[j].sum())))
    holds = worst < ROW_SUM_TOL
    return True, holds, {
        "multiplicities": list(e.multiplicities),
        "exactness_rows_all_exact": exact_rows,
        "max_row_sum_residual": worst,
    }


def _check_fusion(s):
    from .fusion import bannai_muzychuk_check, enumerate_admissible_partitions, fuse_direct
    from .errors import NotAScheme
    from .spectra import character_table

    if s.d > FUSION_ENUM_MAX_D:
        return False, None, {"reason": f"d = {s.d} exceeds enumeration bound"}
    e = character_table(s)
    parts = enumerate_admissible_partitions(s)
    agree = 0
    schemes = 0
    for blocks in parts:
        verdict = bannai_muzychuk_check(e, blocks)
        try:
            fuse_direct(s, blocks)
            direct = True
        except NotAScheme:
            direct = False
        if verdict.is_scheme != direct:
            return True, False, {
                "partition": [list(b) for b in blocks],
                "bm": verdict.is_scheme,
                "direct": direct,
            }
        agree += 1
        schemes += int(direct)
    return True, True, {"partitions": len(parts), "agreements": agree, "schemes": schemes}


def _check_amorphic(s):
    from .errors import NotStronglyRegular, TooManyClasses
    from .fusion import amorphic_normal_form, enumerate_admissible_partitions, is_amorphic
    from .spectra import character_table

    if s.d > FUSION_ENUM_MAX_D:
        return False, None, {"reason": f"d = {s.d} exceeds enumeration bound"}
    am, cert = is_amorphic(s)
    ev = {"is_amorphic": am}
    if not am:
        ev["witness_partition"] = cert.get("witness")
        return True, True, ev
    ev["partitions_checked"] = cert["partitions_checked"]
    if s.class_kind == "symmetric" and s.d >= 2:
        # every 2-block fusion of an amorphic symmetric scheme is strongly regular
        from .srg import srg_params_from_scheme

        checked = 0
        for blocks in enumerate_admissible_partitions(s):
            if len(blocks) != 3:
                continue
            for b in (blocks[1], blocks[2]):
                try:
                    srg_params_from_scheme(s, b)
                except NotStronglyRegular:
                    return True, False, {"is_amorphic": True, "non_srg_union": list(b)}
                checked += 1
        ev["srg_unions_checked"] = checked
    if s.class_kind == "symmetric" and s.d >= 3:
        e = character_table(s)
        nf = amorphic_normal_form(e)
        # additive compatibility of the deviation pattern
        lhs_rhs = []
        ok = True
        for i in range(1, s.d + 1):
            for j in range(1, s.d + 1):
                li = complex(nf.a[i - 1]) + complex(nf.b[j - 1])
                rj = complex(nf.a[j - 1]) + complex(nf.b[i - 1])
                if abs(li - rj) > ROW_SUM_TOL:
                    ok = False
                    lhs_rhs.append([i, j, abs(li - rj)])
        ev["normal_form_additive"] = ok
        if not ok:
            return True, False, ev
    return True, True, ev


def _check_generators(s):
    from .generator import find_generating_unions, minimal_generating

    if s.d > GENERATOR_SWEEP_MAX_D:
        return False, None, {"reason": f"d = {s.d} exceeds sweep bound"}
    reports = find_generating_unions(s)
    gen = [r for r in reports if r.generates]
    verified = all(r.witness_verified for r in gen) if s.n <= 256 else None
    return True, True, {
        "unions": len(reports),
        "generating": len(gen),
        "minimal": [list(u) for u in minimal_generating(reports)],
        "witnesses_verified": verified,
    }


def _check_srg(s):
    from .errors import InfeasibleParameters, NotStronglyRegular
    from .srg import (
        connectivity_classification,
        lambda_from_eigen,
        mu_from_eigen,
        srg_params_from_scheme,
    )

    if s.d > GENERATOR_SWEEP_MAX_D:
        return False, None, {"reason": f"d = {s.d} exceeds sweep bound"}
    found = []
    non_srg = 0
    for mask in range(1, 2 ** s.d):
        u = tuple(i + 1 for i in range(s.d) if mask >> i & 1)
        if set(u) != {s.transpose_map[i] for i in u} or len(u) == s.d:
            continue
        try:
            params = srg_params_from_scheme(s, u)
        except (NotStronglyRegular, InfeasibleParameters):
            non_srg += 1
            continue
        if (
            lambda_from_eigen(params.k, params.r_exact, params.s_exact) != params.lam
            or mu_from_eigen(params.k, params.r_exact, params.s_exact) != params.mu
        ):
            return True, False, {"union": list(u), "reason": "eigenvalue roundtrip failed"}
        cls = connectivity_classification(s, u)
        if not cls["consistent"]:
            return True, False, {"union": list(u), "classification": cls}
        found.append({"union": list(u), "params": params.to_json()})
    return True, True, {"srg_unions": found, "non_srg_unions": non_srg}


def _run_checks(s, checks):
    from .generator import (
        check_theorem_4class,
        check_theorem_amorphic,
        check_theorem_fission,
        check_theorem_one_pair,
        check_theorem_skew_types,
    )

    theorem = {
        "T1.2": check_theorem_one_pair,
        "T1.3": check_theorem_amorphic,
        "T1.4": check_theorem_4class,
        "T3.1": check_theorem_fission,
        "T4.1": check_theorem_skew_types,
    }
    plain = {
        "axioms": _check_axioms,
        "spectra": _check_spectra,
        "fusion": _check_fusion,
        "amorphic": _check_amorphic,
        "generators": _check_generators,
        "srg": _check_srg,
    }
    out = []
    for name in checks:
        rec = {"check": name, "applicable": None, "holds": None, "evidence": None, "error": None}
        try:
            if name in theorem:
                v = theorem[name](s)
                rec["applicable"] = v.applicable
                rec["holds"] = v.holds
                rec["evidence"] = v.evidence
            else:
                app, holds, ev = plain[name](s)
                rec["applicable"] = app
                rec["holds"] = holds
                rec["evidence"] = ev
        except Exception as exc:
            rec["error"] = f"{type(exc).__name__}: {exc}"
        out.append(rec)
    return out


def _run_entry(args):
    eid, checks = args
    try:
        s = catalog_scheme(eid)
    except Exception as exc:
        return eid, [
            {
                "check": name,
                "applicable": None,
                "holds": None,
                "evidence": None,
                "error": f"build failed: {type(exc).__name__}: {exc}",
            }
            for name in checks
        ]
    return eid, _run_checks(s, checks)


def run_catalog(entry_ids=None, checks=None, workers=1):
    """Run verification checks over catalog entries.

    Returns a list of JSON-ready records ordered by (entry id, check
    order), one per (entry, check); per-entry failures are captured in
    the record's error field and never abort the run.  Output is
    byte-identical for any worker count.
    """
    ids = sorted(catalog_ids() if entry_ids is None else entry_ids)
    checks = list(CHECKS) if checks is None else [c for c in CHECKS if c in checks]
    jobs = [(eid, checks) for eid in ids]
    if workers > 1:
        import multiprocessing as mp

        # fork keeps workers independent of __main__ and of import order
        ctx = mp.get_context("fork" if "fork" in mp.get_all_start_methods() else None)
        with ctx.Pool(workers) as pool:
            results = dict(pool.map(_run_entry, jobs))
    else:
        results = dict(map(_run_entry, jobs))
    records = []
    for eid in ids:
        for rec in results[eid]:
            records.append({"id": eid, **rec})
    return records


def records_to_jsonl(records):
    return "\n".join(
        json.dumps(rec, sort_keys=True, separators=(",", ":"), default=_json_default)
        for rec in records
    ) + "\n"


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not JSON-serializable: {type(obj)}")


def catalog_exit_code(records):
    """0 all pass, 1 any failed or errored check, 2 reserved for input errors."""
    bad = any(
        rec["error"] is not None or (rec["applicable"] and rec["holds"] is False)
        for rec in records
    )
    return 1 if bad else 0
