"""Acceptance criteria, one test each, at their stated tolerances.

Run ``pytest tests/test_acceptance.py`` (or this file directly); a
PASS/FAIL line per criterion is printed at the end of the session.
"""
import random
import sys
import time

import pytest

from crtkit.bench import OUTPUT_CHECKPOINTS, run_bench
from crtkit.crt import (
    scan_solutions,
    shift_to_range,
    solve_euler,
    solve_fold,
    solve_garner,
    solve_generic,
    solve_search,
    validate_system,
)
from crtkit.equiv import verify_theorem5
from crtkit.euclidean import INTEGERS
from crtkit.integer_core import euler_phi
from crtkit.polynomials import (
    DensePoly,
    PrimeField,
    SparsePoly,
    gfp_poly_domain,
    poly_add,
    poly_eval,
    poly_mul,
    poly_sub,
    to_dense,
    to_sparse,
)
from crtkit.residue_rings import verify_ring_iso, verify_unit_group_iso
from tests.oracles import lagrange_coeffs, random_coprime_moduli

acceptance = pytest.mark.acceptance


def _suite():
    rng = random.Random(20)
    out = []
    for _ in range(500):
        moduli = random_coprime_moduli(rng, rng.randint(2, 6), 2**20)
        out.append(validate_system(moduli, [rng.randrange(m) for m in moduli]))
    return out


SUITE = _suite()


@acceptance(1, "strategy equivalence on 500 systems, m <= 2^20, < 30 s")
def test_strategy_equivalence():
    start = time.perf_counter()
    for s in SUITE:
        assert 2 <= len(s) <= 6 and s.modulus <= 2**20
        u = solve_search(s).u
        assert solve_euler(s, "totient").u == u
        assert solve_euler(s, "extgcd").u == u
        assert solve_garner(s).u == u
        assert solve_fold(s).u == u
        assert solve_generic(INTEGERS, s.moduli, s.residues) == u
    assert time.perf_counter() - start < 30


@acceptance(2, "exhaustive scan finds exactly one solution per suite system")
def test_uniqueness():
    for s in SUITE:
        assert len(scan_solutions(s)) == 1


@acceptance(3, "range shift for 200 (system, a) pairs, a in [-2^64, 2^64]")
def test_range_property():
    rng = random.Random(3)
    starts = [-(2**64), 2**64] + [rng.randint(-(2**64), 2**64) for _ in range(198)]
    for i, a in enumerate(starts):
        s = SUITE[i]
        canonical = solve_search(s)
        out = shift_to_range(solve_garner(s), a)
        assert a <= out.u < a + s.modulus
        assert (out.u - canonical.u) % s.modulus == 0


@acceptance(4, "ring isomorphism on four moduli lists, < 10 s")
def test_ring_iso():
    start = time.perf_counter()
    for moduli in [(3, 5), (3, 5, 7), (4, 9, 25), (2, 3, 5, 7, 11)]:
        report = verify_ring_iso(moduli)
        assert report.bijective and report.additive and report.multiplicative
        assert report.checked <= 10**4
    assert time.perf_counter() - start < 10


@acceptance(5, "unit-group isomorphism for (3,5), (5,7), (8,9) with phi(pq) = phi(p)phi(q)")
def test_unit_group_iso():
    for p, q in [(3, 5), (5, 7), (8, 9)]:
        report = verify_unit_group_iso(p, q)
        assert report.bijective and report.multiplicative
        assert report.unit_counts == (euler_phi(p * q), euler_phi(p), euler_phi(q))
        assert euler_phi(p * q) == euler_phi(p) * euler_phi(q)


@acceptance(6, "set-level CRT exhaustive for n <= 5, < 10 s")
def test_theorem5():
    start = time.perf_counter()
    pairs = {}
    for n in range(6):
        report = verify_theorem5(n)
        assert report.kernel_ok and report.onto_ok
        pairs[n] = report.pairs_checked
    assert pairs[5] == 2704
    assert time.perf_counter() - start < 10


@acceptance(7, "polynomial CRT over GF(5), GF(97) with linear moduli, Lagrange cross-check")
def test_polynomial_crt():
    rng = random.Random(7)
    for trial in range(100):
        p = (5, 97)[trial % 2]
        F = PrimeField(p)
        d = gfp_poly_domain(F)
        k = rng.randint(2, 5)
        xs = rng.sample(range(p), k)
        # c*(x - x_i) with c != 0, so moduli need not be monic
        moduli = [DensePoly(F, (-c * x, c)) for c, x in ((rng.randrange(1, p), x) for x in xs)]
        residues = [DensePoly(F, tuple(rng.randrange(p) for _ in range(rng.randint(0, 4)))) for _ in xs]
        u = solve_generic(d, moduli, residues)
        ys = [poly_eval(r, x) for r, x in zip(residues, xs)]
        assert [poly_eval(u, x) for x in xs] == ys
        assert u == DensePoly(F, tuple(lagrange_coeffs(p, xs, ys)))


@acceptance(8, "dense and sparse paths agree on 500 add/sub/mul triples, roundtrips exact")
def test_representation_equivalence():
    rng = random.Random(8)
    ops = [poly_add, poly_sub, poly_mul]
    for trial in range(500):
        F = PrimeField(rng.choice((2, 3, 5, 7, 97, 65537)))

        def sparse_operand():
            deg = rng.randint(0, 64)
            count = rng.randint(0, (deg + 1) // 4)
            exps = [deg] + rng.sample(range(deg), count - 1) if count else []
            return SparsePoly(F, tuple((e, rng.randrange(1, F.p)) for e in exps))

        a, b = sparse_operand(), sparse_operand()
        for sp in (a, b):
            assert len(sp.terms) <= 0.25 * (max(sp.degree, 0) + 1)
            assert to_sparse(to_dense(sp)) == sp
            assert to_dense(to_sparse(to_dense(sp))) == to_dense(sp)
        op = ops[trial % 3]
        assert to_dense(op(a, b)) == op(to_dense(a), to_dense(b))
        assert op(a, b) == to_sparse(op(to_dense(a), to_dense(b)))


@pytest.fixture(scope="module")
def bench_report():
    return run_bench(8, 64, 50, seed=1)


@acceptance(9, "bench r=8 k=64 t=50: garner operands <= 131 bits, euler accumulation >= 496 bits")
def test_operand_sizes(bench_report):
    for row in bench_report.rows:
        if row.strategy == "garner":
            assert row.max_bits <= 2 * 64 + 3
            for label, bits in row.checkpoint_bits.items():
                if label in OUTPUT_CHECKPOINTS:
                    # recombination assembles u itself, which is bounded by m
                    assert bits <= 8 * 64
                else:
                    assert bits <= 2 * 64 + 3
    totient = bench_report.summary("euler-totient")
    assert totient.checkpoint_bits["accumulate"] >= 8 * 64 - 16


@acceptance(10, "median garner time below median euler-totient time")
def test_performance_direction(bench_report):
    garner = bench_report.summary("garner").median_time_ns
    totient = bench_report.summary("euler-totient").median_time_ns
    assert garner < totient


def test_suite_is_deterministic():
    assert [(s.moduli, s.residues) for s in _suite()[:5]] == [(s.moduli, s.residues) for s in SUITE[:5]]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
