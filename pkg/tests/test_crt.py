import math
import random

import pytest
from hypothesis import given, strategies as st

from crtkit.crt import (
    CrtSolution,
    EulerVariant,
    OperandProbe,
    congruence_witnesses,
    euler_constants,
    garner_digits,
    garner_precompute,
    mixed_radix_value,
    raw_euler_constant_bits,
    scan_solutions,
    shift_to_range,
    solve_euler,
    solve_fold,
    solve_garner,
    solve_generic,
    solve_pair,
    solve_search,
    validate_system,
)
from crtkit.errors import (
    DivisionByZero,
    LengthMismatch,
    NonPositiveModulus,
    NotASolution,
    NotCoprime,
    NotPairwiseCoprime,
    SearchBoundExceeded,
)
from crtkit.euclidean import INTEGERS
from crtkit.integer_core import euler_phi
from crtkit.polynomials import DensePoly, PrimeField, gfp_poly_domain, poly_eval
from tests.oracles import brute_crt, random_coprime_moduli
from tests.strategies import systems

EXAMPLE = validate_system([3, 5, 7], [2, 3, 2])
ALL_STRATEGIES = {
    "search": solve_search,
    "euler-totient": lambda s: solve_euler(s, "totient"),
    "euler-extgcd": lambda s: solve_euler(s, "extgcd"),
    "garner": solve_garner,
    "fold": solve_fold,
}


def test_validate_system():
    s = validate_system([3, 5, 7], [2, 3, 2])
    assert s.moduli == (3, 5, 7) and s.modulus == 105
    assert validate_system([], []).modulus == 1
    assert validate_system([3, 5], [-1, 17]).residues == (2, 2)
    with pytest.raises(NotPairwiseCoprime) as info:
        validate_system([4, 6], [1, 1])
    assert info.value.pair == (4, 6)
    with pytest.raises(LengthMismatch):
        validate_system([3, 5], [1])
    with pytest.raises(NonPositiveModulus):
        validate_system([3, 0], [1, 1])
    with pytest.raises(NonPositiveModulus):
        validate_system([-3], [1])


def test_solution_range_invariant():
    with pytest.raises(ValueError):
        CrtSolution(15, 15)
    with pytest.raises(ValueError):
        CrtSolution(3, 15, 4)


@pytest.mark.parametrize("name", sorted(ALL_STRATEGIES))
@pytest.mark.parametrize(
    "moduli, residues, u, m",
    [([3, 5, 7], [2, 3, 2], 23, 105), ([2], [1], 1, 2), ([], [], 0, 1), ([3, 5], [2, 3], 8, 15), ([3, 5], [0, 0], 0, 15)],
)
def test_strategy_examples(name, moduli, residues, u, m):
    assert ALL_STRATEGIES[name](validate_system(moduli, residues)) == CrtSolution(u, m)


def test_search_bound():
    s = validate_system([1009, 1013, 1019], [1, 2, 3])
    with pytest.raises(SearchBoundExceeded):
        solve_search(s, bound=10**6)


def test_scan_finds_exactly_one():
    assert scan_solutions(EXAMPLE) == [23]


def test_euler_constants_totient_example():
    s = validate_system([3, 5], [0, 0])
    assert euler_constants(s, "totient").constants == (10, 6)


def test_euler_constants_single_modulus():
    for variant in EulerVariant:
        assert euler_constants(validate_system([9], [0]), variant).constants == (1,)
        assert euler_constants(validate_system([1], [0]), variant).constants == (0,)


@given(systems(min_modulus=1), st.sampled_from(list(EulerVariant)))
def test_euler_constants_invariant(sys_, variant):
    s = validate_system(*sys_)
    consts = euler_constants(s, variant).constants
    for i, Mi in enumerate(consts):
        assert 0 <= Mi < s.modulus
        for j, mj in enumerate(s.moduli):
            assert Mi % mj == (1 % mj if i == j else 0)


def test_raw_constants_are_huge():
    bits = raw_euler_constant_bits(EXAMPLE)
    # (35)^phi(3) has 11 bits, (21)^phi(5) 18, (15)^phi(7) 24
    assert bits == [(35**2).bit_length(), (21**4).bit_length(), (15**6).bit_length()]


def test_garner_precompute_examples():
    pre = garner_precompute([3, 5, 7])
    assert (pre.c(0, 1), pre.c(0, 2), pre.c(1, 2)) == (2, 5, 3)
    assert garner_precompute([11]).table == ((),)
    assert garner_precompute([2, 3]).c(0, 1) == 2
    with pytest.raises(NotPairwiseCoprime):
        garner_precompute([4, 6])


@given(st.lists(st.integers(1, 10**6), max_size=6))
def test_garner_table_invariant(candidates):
    moduli = []
    for c in candidates:
        if all(math.gcd(c, m) == 1 for m in moduli):
            moduli.append(c)
    pre = garner_precompute(moduli)
    for j, mj in enumerate(moduli):
        for i in range(j):
            assert 0 <= pre.c(i, j) < mj or mj == 1
            assert pre.c(i, j) * moduli[i] % mj == 1 % mj


def test_garner_digits_examples():
    pre = garner_precompute([3, 5, 7])
    assert garner_digits(pre, [2, 3, 2]).digits == (2, 2, 1)
    assert garner_digits(pre, [0, 0, 0]).digits == (0, 0, 0)
    assert garner_digits(garner_precompute([13]), [40]).digits == (1,)
    with pytest.raises(LengthMismatch):
        garner_digits(pre, [1, 2])


@given(systems(max_modulus=10**6, min_modulus=2))
def test_garner_operand_bounds(sys_):
    s = validate_system(*sys_)
    probe = OperandProbe()
    sol = solve_garner(s, probe=probe)
    if len(s) >= 2:
        bound = max(s.moduli) ** 2
        assert probe.max_bits.get("digit", 0) <= bound.bit_length()
    assert probe.max_bits.get("recombine", 0) <= max(s.modulus - 1, 0).bit_length()
    digits = garner_digits(garner_precompute(s.moduli), s.residues).digits
    assert all(0 <= v < m for v, m in zip(digits, s.moduli))
    assert mixed_radix_value(s.moduli, digits) == sol.u


def test_garner_digit_operands_stay_small():
    # every raw digit operand is below m_i * max(m)
    rng = random.Random(3)
    for _ in range(200):
        moduli = random_coprime_moduli(rng, rng.randint(2, 6), 10**12)
        s = validate_system(moduli, [rng.randrange(m) for m in moduli])
        pre = garner_precompute(s.moduli)
        seen = []
        garner_digits(pre, s.residues, probe=lambda label, v: seen.append(v))
        k = 0
        for j in range(len(moduli)):
            for i in range(j):
                assert abs(seen[k]) < moduli[i] * max(moduli) or abs(seen[k]) < moduli[j] ** 2
                k += 1


def test_garner_large_moduli_agree_with_euler():
    rng = random.Random(64)
    for _ in range(8):
        moduli = []
        while len(moduli) < 8:
            c = rng.getrandbits(64) | 1
            if all(math.gcd(c, m) == 1 for m in moduli):
                moduli.append(c)
        s = validate_system(moduli, [rng.getrandbits(64) for _ in moduli])
        assert solve_garner(s) == solve_euler(s, "extgcd") == solve_fold(s)


@pytest.mark.parametrize(
    "args, expected", [((4, 9, 1, 2), 29), ((3, 5, 2, 3), 8), ((7, 1, 12, 99), 5), ((1, 1, 0, 0), 0)]
)
def test_solve_pair_examples(args, expected):
    assert solve_pair(*args).u == expected
    assert solve_pair(*args).modulus == args[0] * args[1]


def test_solve_pair_errors():
    with pytest.raises(NotCoprime):
        solve_pair(4, 6, 1, 1)
    with pytest.raises(NonPositiveModulus):
        solve_pair(0, 5, 1, 1)


@given(st.integers(1, 200), st.integers(1, 200), st.integers(), st.integers())
def test_solve_pair_matches_brute_force(a, b, u, v):
    if math.gcd(a, b) != 1:
        with pytest.raises(NotCoprime):
            solve_pair(a, b, u, v)
        return
    assert [solve_pair(a, b, u, v).u] == brute_crt([a, b], [u, v])


def test_fold_example_steps():
    assert solve_pair(3, 5, 2, 3) == CrtSolution(8, 15)
    assert solve_pair(15, 7, 8, 2) == CrtSolution(23, 105)
    assert solve_fold(validate_system([11], [25])) == CrtSolution(3, 11)


@given(systems(max_size=4, max_modulus=30))
def test_strategies_match_brute_force(sys_):
    s = validate_system(*sys_)
    expected = brute_crt(s.moduli, s.residues)
    assert len(expected) == 1
    for solve in ALL_STRATEGIES.values():
        assert solve(s).u == expected[0]
    assert solve_generic(INTEGERS, s.moduli, s.residues) == expected[0]


@pytest.mark.parametrize("u, m, a, expected", [(8, 15, 10, 23), (8, 15, 0, 8), (8, 15, -20, -7)])
def test_shift_to_range_examples(u, m, a, expected):
    out = shift_to_range(CrtSolution(u, m), a)
    assert out.u == expected and out.range_start == a


@given(systems(), st.integers(-(2**70), 2**70))
def test_shift_to_range_property(sys_, a):
    s = validate_system(*sys_)
    base = solve_garner(s)
    out = shift_to_range(base, a)
    assert a <= out.u < a + s.modulus
    assert (out.u - base.u) % s.modulus == 0
    assert shift_to_range(out, 0) == base


def test_congruence_witnesses_examples():
    assert congruence_witnesses(CrtSolution(23, 105), EXAMPLE) == [7, 4, 3]
    assert congruence_witnesses(CrtSolution(0, 15), validate_system([3, 5], [0, 0])) == [0, 0]
    assert congruence_witnesses(CrtSolution(8, 15), validate_system([3, 5], [2, 3])) == [2, 1]
    with pytest.raises(NotASolution):
        congruence_witnesses(CrtSolution(22, 105), EXAMPLE)


@given(systems(), st.integers(-(2**40), 2**40))
def test_witness_property(sys_, a):
    s = validate_system(*sys_)
    sol = shift_to_range(solve_fold(s), a)
    xs = congruence_witnesses(sol, s)
    assert {m * x + r for m, x, r in zip(s.moduli, xs, s.residues)} <= {sol.u}


def test_generic_integer_examples():
    assert solve_generic(INTEGERS, [3, 5, 7], [2, 3, 2]) == 23
    assert solve_generic(INTEGERS, [11], [-1]) == 10
    assert solve_generic(INTEGERS, [-3, 5], [2, 3]) == 8
    with pytest.raises(NotPairwiseCoprime):
        solve_generic(INTEGERS, [4, 6], [1, 1])
    with pytest.raises(DivisionByZero):
        solve_generic(INTEGERS, [0, 5], [1, 1])
    with pytest.raises(LengthMismatch):
        solve_generic(INTEGERS, [3, 5], [1])


def test_generic_polynomial_example():
    F = PrimeField(5)
    d = gfp_poly_domain(F)
    x = DensePoly(F, (0, 1))
    x_minus_1 = DensePoly(F, (4, 1))
    u = solve_generic(d, [x, x_minus_1], [DensePoly(F, (2,)), DensePoly(F, (3,))])
    assert u == DensePoly(F, (2, 1))
    assert (poly_eval(u, 0), poly_eval(u, 1)) == (2, 3)


def test_generic_single_modulus():
    F = PrimeField(7)
    d = gfp_poly_domain(F)
    m = DensePoly(F, (1, 0, 1))
    u = DensePoly(F, (3, 2, 1, 5))
    assert solve_generic(d, [m], [u]) == d.rem(u, m)


def test_generic_matches_garner_on_random_systems():
    rng = random.Random(500)
    for _ in range(500):
        moduli = random_coprime_moduli(rng, rng.randint(1, 6), 2**40)
        residues = [rng.randint(-(2**50), 2**50) for _ in moduli]
        s = validate_system(moduli, residues)
        assert solve_generic(INTEGERS, moduli, residues) == solve_garner(s).u


def test_phi_used_by_totient_variant():
    # the totient route goes through euler_phi, so composite moduli work too
    s = validate_system([8, 9, 25], [3, 4, 5])
    for i, mi in enumerate(s.moduli):
        cof = s.modulus // mi
        assert euler_constants(s, "totient").constants[i] == pow(cof, euler_phi(mi), s.modulus)
