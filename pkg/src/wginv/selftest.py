"""Seeded self-test catalogue behind ``wginv selftest``.

Each suite runs a batch of generated instances through one family of
invariants and reports (passed, total).  The catalogue is a compact
runtime version of the pytest property suites; a fixed seed gives a
deterministic pass/fail matrix.
"""

from __future__ import annotations

import random

from . import axioms, bilateral, classical, generators as gen, indexmp, wcore, wfamily
from .matrix import EXACT, FLOAT, Matrix, equal, index, mat_pow, rank


def _suite_matcore(rng, k):
    ok = total = 0
    for _ in range(k):
        n = rng.randint(1, 5)
        b = gen.rand_matrix(rng, n, n)
        free = n - rank(b)
        q = gen.rand_matrix(rng, free, free)
        total += 1
        from .matrix import one_inverse
        qi = one_inverse(b, q)
        ok += (b @ qi @ b) == b
        a = gen.rand_matrix(rng, n, rng.randint(1, 4))
        total += 1
        from .matrix import range_subset, null_subset
        ok += (range_subset(b @ a, b).holds
               and null_subset(a, gen.rand_matrix(rng, 3, a.rows) @ a).holds)
        total += 1
        f = gen.rand_matrix(rng, n, 1)
        g = gen.rand_matrix(rng, 1, n)
        core = gen.rand_invertible(rng, n)
        mid = g @ core @ f
        if rank(mid) == 1:
            from .matrix import outer_from_full_rank
            x = outer_from_full_rank(f, g, core)
            ok += (x @ core @ x) == x
        else:
            ok += 1
    return ok, total


def _suite_axioms(rng, k):
    ok = total = 0
    for _ in range(k):
        n = rng.randint(2, 5)
        a = gen.rand_index_le1(rng, n)
        held = axioms.classify(a, classical.core(a)).held
        total += 1
        ok += not {"6", "7"} <= held or {"1", "2"} <= held
        held = axioms.classify(a, classical.dual_core(a)).held
        total += 1
        ok += not {"8", "9"} <= held or {"1", "2"} <= held
    return ok, total


def _suite_classical(rng, k):
    ok = total = 0
    for i in range(k):
        backend = EXACT if i % 2 else FLOAT
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        a = gen.rand_matrix(rng, m, n, backend)
        x = classical.moore_penrose(a)
        total += 1
        ok += axioms.check_all(["1", "2", "3", "4"], a, x).overall
        sq = gen.rand_matrix(rng, n, n)
        d = classical.drazin(sq)
        total += 1
        ok += axioms.check_all(["1k", "2", "5"], sq, d).overall
        a1 = gen.rand_index_le1(rng, n)
        total += 1
        ok += equal(classical.core_ep(a1), classical.core(a1))
        mm = gen.rand_pd_metric(rng, m, backend)
        nn = gen.rand_pd_metric(rng, n, backend)
        wmp = classical.weighted_mp(a, mm, nn)
        total += 1
        ok += (axioms.check_all(["1", "2"], a, wmp).overall
               and axioms.check("3M", a, wmp, metric=mm).holds
               and axioms.check("4N", a, wmp, metric_n=nn).holds)
    return ok, total


def _suite_wcore(rng, k):
    ok = total = 0
    for _ in range(k):
        n = rng.randint(2, 5)
        a = gen.rand_index_le1(rng, n)
        m = gen.rand_pd_metric(rng, n)
        x = wcore.m_weighted_core(a, m)
        free = n - rank(a.H @ m.m @ a @ a)
        total += 1
        ok += all(wcore.m_weighted_core(a, m, "algorithm1",
                                        gen.rand_matrix(rng, free, free)) == x
                  for _ in range(2))
        total += 1
        y = wcore.n_weighted_dual_core(a, m)
        ok += (axioms.check("4N", a, y, metric_n=m).holds
               and axioms.check_all(["8", "9"], a, y).overall)
        try:
            pair = gen.rand_a2_ba_pair(rng, n)
        except ValueError:
            continue
        rep = wcore.check_rol_m_core(pair[0], pair[1], m)
        total += 1
        ok += (rep.rol_holds and rep.indices[2] == 1
               and rep.range_incl_1.holds and rep.range_incl_2.holds
               and all(rep.c_membership))
    return ok, total


def _suite_wfamily(rng, k):
    ok = total = 0
    for _ in range(k):
        m, n = rng.choice([(4, 4), (5, 4), (4, 5)])
        kap = rng.choice([1, 2])
        ctx = gen.rand_context(rng, m, n, kap)
        c = wfamily.canonical_w1231k(ctx)
        mem = wfamily.family_member_w1231k(ctx, gen.rand_matrix(rng, m, m))
        total += 1
        ok += wfamily.is_w1231k(ctx, mem, ctx.kappa).overall
        total += 1
        t1 = wfamily.recover_from_member(ctx, c, ctx.kappa)
        t2 = wfamily.recover_from_member(ctx, mem, ctx.kappa)
        ok += all(equal(x, y) for x, y in zip(t1, t2))
        total += 1
        dual = wfamily.family_member_w124k1(ctx, gen.rand_matrix(rng, n, n))
        ok += wfamily.is_w124k1(ctx, dual, ctx.kappa).overall
        if kap == 1:
            sets = wfamily.w_core_condition_sets(ctx, wfamily.w_core_ep(ctx))
            total += 1
            ok += sets["all_equal"] and sets["i"]
    return ok, total


def _suite_decompose(rng, k):
    ok = total = 0
    for _ in range(k):
        m, n = rng.choice([(5, 4), (6, 5), (4, 4)])
        kap = rng.choice([1, 2])
        ctx = gen.rand_context(rng, m, n, kap, backend=FLOAT)
        dec = wfamily.wcep_decompose(ctx)
        from .matrix import block
        r = dec.r_split
        recon = (dec.u @ block([[dec.a1, dec.a2],
                                [Matrix.zeros(m - r, r, FLOAT), dec.a3]]) @ dec.v.H
                 - ctx.a).norm()
        recon += (dec.v @ block([[dec.w1, dec.w2],
                                 [Matrix.zeros(n - r, r, FLOAT), dec.w3]]) @ dec.u.H
                  - ctx.w).norm()
        total += 1
        ok += recon <= 1e-8
        total += 1
        ok += all(equal(indexmp.via_decomposition(dec, which),
                        {"k-mp": indexmp.w_k_mp, "mp-k": indexmp.w_mp_k,
                         "mp-k-mp": indexmp.w_mp_k_mp}[which](ctx), tol=1e-8)
                  for which in ("k-mp", "mp-k", "mp-k-mp"))
    return ok, total


def _suite_indexmp(rng, k):
    ok = total = 0
    for _ in range(k):
        m, n = rng.choice([(4, 4), (5, 4), (4, 5)])
        kap = rng.choice([1, 2])
        ctx = gen.rand_context(rng, m, n, kap)
        for which, fn in (("k-mp", indexmp.w_k_mp), ("mp-k", indexmp.w_mp_k),
                          ("mp-k-mp", indexmp.w_mp_k_mp)):
            x = fn(ctx)
            rep = indexmp.check_characterizations(ctx, which, x)
            total += 1
            ok += rep["all_equal"] and rep["definition"]
            pert = x + gen.rand_perturbation(rng, n, m)
            rep = indexmp.check_characterizations(ctx, which, pert)
            total += 1
            ok += rep["all_equal"] and not rep["definition"]
        total += 1
        ok += indexmp.projector_checks(ctx)["all"]
        total += 1
        ok += (equal(indexmp.solve_projector_system(ctx, "k-mp"), indexmp.w_k_mp(ctx))
               and equal(indexmp.solve_projector_system(ctx, "mp-k"), indexmp.w_mp_k(ctx)))
    return ok, total


def _suite_bilateral(rng, k):
    ok = total = 0
    for _ in range(k):
        n = rng.randint(2, 4)
        ctx = gen.rand_square_context(rng, n)
        try:
            x1 = gen.rand_w2_member(ctx, rng)
            x2 = gen.rand_w1_member(ctx, rng)
        except ValueError:
            continue
        spec = bilateral.bilateral_spec(ctx, x1, x2)
        g = bilateral.solve_bilateral_system(ctx, spec)
        d = bilateral.solve_dual_bilateral_system(ctx, spec)
        total += 1
        ok += (axioms.check("2W", ctx.a, g, ctx=ctx).holds
               and axioms.check("2W", ctx.a, d, ctx=ctx).holds)
        total += 1
        ok += bilateral.self_duality(ctx, spec).equivalent
        h1 = gen.rand_w1_member(ctx, rng)
        spec11 = bilateral.bilateral_spec(ctx, x2, h1,
                                          x1_class={"1W"}, x2_class={"1W"})
        total += 1
        ok += bilateral.self_duality(ctx, spec11).variant == "inner-inner"
    return ok, total


SUITES = {
    "matcore": _suite_matcore,
    "axioms": _suite_axioms,
    "classical": _suite_classical,
    "wcore": _suite_wcore,
    "wfamily": _suite_wfamily,
    "wcep-decompose": _suite_decompose,
    "indexmp": _suite_indexmp,
    "bilateral": _suite_bilateral,
}


def run_all(seed: int = 0, instances: int = 6) -> dict:
    """Run every suite; returns {name: (passed, total)}."""
    import zlib
    results = {}
    for name, fn in SUITES.items():
        rng = random.Random(zlib.crc32(name.encode()) ^ (seed & 0xFFFFFFFF))
        results[name] = fn(rng, instances)
    return results
