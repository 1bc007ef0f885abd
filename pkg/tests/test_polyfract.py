import itertools
import random
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from funcdeg import (
    FunctionTable,
    Group,
    GroupMismatch,
    InvalidInput,
    NoRepresentation,
    Polyfract,
    Unsupported,
    classify,
    delta_i,
    delta_i_symbolic,
    deg,
    deg_i,
    evaluate,
    evaluate_table,
    fdeg,
    format_polyfract,
    interpolate_table,
    is_periodic,
    lagrange,
    monofract_value,
    parse_polyfract,
    pdeg,
    primary_decomposition,
    shift,
    taylor_interpolate_z,
    tensor_product,
)
from funcdeg.polyfract import binom, minimal_support_index
from funcdeg.verify import all_tables, random_finite_table, random_group

from conftest import SAMPLE_TEXT

Z2, Z4 = Group((2,)), Group((4,))


def falling_binom(x, k):
    """x(x-1)...(x-k+1)/k! straight from the product definition."""
    num = prod(x - j for j in range(k))
    den = prod(range(1, k + 1))
    assert num % den == 0
    return num // den


def test_binom_matches_product_definition():
    for x in range(-12, 13):
        for k in range(0, 9):
            assert binom(x, k) == falling_binom(x, k)


def test_monofract_value_examples():
    for e in range(8):
        assert monofract_value((e,), (e,)) == 1
    assert monofract_value((2,), (3,)) == 0
    assert monofract_value((-1,), (2,)) == 1
    assert monofract_value((5, -2), (2, 3)) == 10 * falling_binom(-2, 3)
    with pytest.raises(InvalidInput):
        monofract_value((1, 2), (1,))


def test_evaluate_examples(sample):
    assert evaluate(sample, (0, 0, 0)) == (0, 3, 4, 5)
    zero = Polyfract(2, Group((5,)))
    assert evaluate(zero, (7, -3)) == (0,)
    p = Polyfract(1, Z2, {(3,): (1,), (1,): (1,)})
    assert evaluate(p, (3,)) == (0,)


def test_evaluate_over_integers():
    p = Polyfract(1, Group((0,)), {(2,): (1,), (0,): (-3,)})
    assert [evaluate(p, (x,))[0] for x in range(-2, 4)] == [falling_binom(x, 2) - 3 for x in range(-2, 4)]


def test_add_examples(sample):
    zero = Polyfract(3, sample.codomain)
    assert sample + zero == sample
    assert (sample + (-sample)).is_zero()
    x = Polyfract(1, Z2, {(1,): (1,)})
    assert (x + x).is_zero()
    with pytest.raises(GroupMismatch):
        x + Polyfract(1, Z4, {(1,): (1,)})


def test_canonical_form_drops_zeros():
    p = Polyfract(1, Group((3,)), {(2,): (3,), (1,): (4,)})
    assert p.terms == {(1,): (1,)}


def test_delta_symbolic_examples():
    m = Group((7,))
    for l in range(5):
        assert delta_i_symbolic(Polyfract(1, m, {(l + 1,): (1,)}), 0) == Polyfract(1, m, {(l,): (1,)})
    assert delta_i_symbolic(Polyfract(1, m, {(0,): (1,)}), 0).is_zero()
    p = Polyfract(2, m, {(2, 1): (3,)})
    assert delta_i_symbolic(p, 0) == Polyfract(2, m, {(1, 1): (3,)})


def test_deg_examples(sample):
    assert deg(sample) == 3
    assert deg(Polyfract(2, Z4, {(0, 0): (3,)})) == 0
    p = Polyfract(2, Group((11,)), {(2, 5): (4,)})
    assert (deg(p), deg_i(p, 0), deg_i(p, 1)) == (7, 2, 5)
    assert deg(Polyfract(2, Z4)) == 0 and deg_i(Polyfract(2, Z4), 1) == 0


def test_taylor_examples():
    assert taylor_interpolate_z({(0,): (0,), (1,): (1,)}, (1,), Group((0,))) == Polyfract(
        1, Group((0,)), {(1,): (1,)}
    )
    c = Polyfract(2, Group((5,)), {(0, 0): (3,)})
    assert taylor_interpolate_z(lambda x: (3,), (2, 3), Group((5,))) == c
    # chi lifted from Z_2 -> Z_4: samples 1, 0, 1
    got = taylor_interpolate_z({(0,): (1,), (1,): (0,), (2,): (1,)}, (2,), Z4)
    assert got.terms == {(0,): (1,), (1,): (3,), (2,): (2,)}
    with pytest.raises(InvalidInput):
        taylor_interpolate_z({(0,): (1,)}, (1,), Z4)


def test_interpolate_table_examples(sample, sample_domain):
    pp = interpolate_table(lagrange(Z2, Z2))
    assert pp.polyfract.terms == {(0,): (1,), (1,): (1,)} and pp.periods == Z2
    assert interpolate_table(evaluate_table(sample, sample_domain)).polyfract == sample
    assert interpolate_table(FunctionTable.zero(Group((3, 2)), Z4)).polyfract.is_zero()
    with pytest.raises(NoRepresentation):
        interpolate_table(FunctionTable(Z2, Group((3,)), ((0,), (1,))))


def test_shift_examples():
    m = Group((0,))
    x = Polyfract(1, m, {(1,): (1,)})
    assert shift(x, (0,)) == x
    assert shift(x, (1,)) == Polyfract(1, m, {(1,): (1,), (0,): (1,)})
    x2 = Polyfract(1, m, {(2,): (1,)})
    want = Polyfract(1, m, {(2,): (1,), (1,): (2,), (0,): (1,)})
    assert shift(x2, (2,)) == want
    for v in range(5):
        assert evaluate(want, (v,)) == evaluate(x2, (v + 2,))


polyfracts = st.builds(
    lambda n, m, terms: Polyfract(n, Group((m,)), {d[:n]: (c,) for d, c in terms}),
    st.integers(1, 3),
    st.sampled_from([0, 2, 4, 9]),
    st.lists(st.tuples(st.tuples(*[st.integers(0, 4)] * 3), st.integers(-20, 20)), max_size=5),
)


@given(p=polyfracts, data=st.data())
def test_shift_is_pointwise_translation_and_an_action(p, data):
    n = p.n_vars
    a = data.draw(st.tuples(*[st.integers(-4, 4)] * n))
    b = data.draw(st.tuples(*[st.integers(-4, 4)] * n))
    sa = shift(p, a)
    for x in itertools.product(range(-2, 3), repeat=n):
        assert evaluate(sa, x) == evaluate(p, tuple(u + v for u, v in zip(x, a)))
    assert shift(sa, b) == shift(p, tuple(u + v for u, v in zip(a, b)))
    assert deg(sa) == deg(p)


@given(p=polyfracts)
def test_injectivity_at_minimal_support_index(p):
    if p.is_zero():
        return
    eps = minimal_support_index(p)
    assert evaluate(p, eps) == p.terms[eps]
    assert any(evaluate(p, eps))


@given(p=polyfracts, data=st.data())
def test_repeated_symbolic_difference_vanishes_iff_no_larger_index(p, data):
    d = data.draw(st.tuples(*[st.integers(0, 5)] * p.n_vars))
    q = p
    for i, k in enumerate(d):
        for _ in range(k):
            q = delta_i_symbolic(q, i)
    assert (not q.is_zero()) == any(all(x >= y for x, y in zip(delta, d)) for delta in p.terms)


def test_is_periodic_examples():
    assert is_periodic(Polyfract(2, Z4, {(0, 0): (3,)}), Group((2, 3)))
    assert is_periodic(Polyfract(1, Z2, {(1,): (1,)}), Z2)
    assert not is_periodic(Polyfract(1, Z4, {(1,): (1,)}), Z2)
    # period 0 (the integers) imposes nothing
    assert is_periodic(Polyfract(1, Z4, {(1,): (1,)}), Group((0,)))


def test_z2_polyfracts_with_period_four_are_those_of_degree_below_four():
    for bits in itertools.product((0, 1), repeat=7):
        p = Polyfract(1, Z2, {(k,): (b,) for k, b in enumerate(bits)})
        assert is_periodic(p, Z4) == (deg(p) < 4)


def test_tensor_product_examples():
    m = Group((2,))
    p = Polyfract(1, m, {(0,): (1,), (1,): (1,)})
    one = Polyfract(1, m, {(0,): (1,)})
    assert tensor_product(p, one) == Polyfract(2, m, {(0, 0): (1,), (1, 0): (1,)})
    pq = tensor_product(p, p)
    assert pq.terms == {(0, 0): (1,), (1, 0): (1,), (0, 1): (1,), (1, 1): (1,)}
    for x in itertools.product(range(4), repeat=2):
        assert evaluate(pq, x)[0] == evaluate(p, x[:1])[0] * evaluate(p, x[1:])[0] % 2
    with pytest.raises(Unsupported):
        tensor_product(Polyfract(1, Group((2, 2))), Polyfract(1, Group((2, 2))))


def test_tensor_degree_adds_when_top_coefficients_are_units():
    from math import gcd

    from funcdeg import lagrange_coefficients, max_degree_p_group, PGroupSpec

    for p, alphas, beta in [(2, (1, 2), 1), (3, (1, 1), 1), (2, (2, 2), 1), (5, (1, 1), 1)]:
        factors = [lagrange_coefficients(p, (a,), beta) for a in alphas]
        tops = [f.terms[(deg(f),)][0] for f in factors]
        assert all(gcd(t, p) == 1 for t in tops)
        assert deg(tensor_product(*factors)) == sum(deg(f) for f in factors)
    # with beta > 1 the top coefficients are multiples of p and the sum overshoots
    for p, alphas, beta in [(2, (1, 2), 2), (3, (1, 1), 2), (2, (1, 1, 2), 3)]:
        chi = lagrange_coefficients(p, alphas, beta)
        assert deg(chi) == max_degree_p_group(PGroupSpec(p, alphas, (beta,)))


def test_symbolic_difference_commutes_with_tabulation():
    rng = random.Random(7)
    for _ in range(40):
        a, b = random_group(rng, 36), random_group(rng, 36)
        f = random_finite_table(rng, a, b)
        p = interpolate_table(f).polyfract
        for i in range(a.rank):
            assert evaluate_table(delta_i_symbolic(p, i), a) == delta_i(f, i)


def test_degrees_of_periodic_polyfracts_match_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        a, b = random_group(rng, 256, max_rank=4), random_group(rng, 16)
        p = interpolate_table(random_finite_table(rng, a, b)).polyfract
        f = evaluate_table(p, a)
        assert is_periodic(p, a)
        assert deg(p) == fdeg(f)
        assert all(deg_i(p, i) == pdeg(f, i) for i in range(a.rank))
        assert interpolate_table(f).polyfract == p


def _prime_power_groups(rng):
    choices = [1, 2, 4, 3, 9, 5]
    a = Group(tuple(rng.choice(choices) for _ in range(rng.randint(1, 3))))
    b = Group(tuple(rng.choice(choices) for _ in range(rng.randint(1, 3))))
    return a, b


def test_nonconstant_terms_live_in_one_prime_block():
    rng = random.Random(3)
    seen = 0
    while seen < 80:
        a, b = _prime_power_groups(rng)
        if a.order > 90 or b.order > 90:
            continue
        seen += 1
        f = random_finite_table(rng, a, b)
        p = interpolate_table(f).polyfract
        primes = classify(f).primes
        da = primary_decomposition(a, primes)
        db = primary_decomposition(b, primes)
        block_a = [maps[0][0] if maps else None for maps in da.coordinate_maps]
        block_b = [maps[0][0] if maps else None for maps in db.coordinate_maps]
        for delta, coeff in p.terms.items():
            if not any(delta):
                continue
            js = {block_b[k] for k, c in enumerate(coeff) if c}
            assert len(js) == 1
            (j,) = js
            assert all(block_a[i] == j for i, d in enumerate(delta) if d)


def test_text_format_round_trip(sample):
    assert format_polyfract(sample) == SAMPLE_TEXT
    assert parse_polyfract(SAMPLE_TEXT) == sample
    assert format_polyfract(Polyfract(2, Z4)) == "vars: 2\ncodomain: 4\n"


@pytest.mark.parametrize(
    "text",
    [
        "vars: 1\ncodomain: 2\n1 : 0\n",
        "vars: 1\ncodomain: 2\n1 : 1\n1 : 1\n",
        "vars: 2\ncodomain: 2\n1 : 1\n",
        "codomain: 2\n1 : 1\n",
        "vars: 1\ncodomain: 2\n-1 : 1\n",
        "vars: x\ncodomain: 2\n",
    ],
)
def test_text_format_rejects(text):
    with pytest.raises(InvalidInput):
        parse_polyfract(text)
