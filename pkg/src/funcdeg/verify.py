"""Self-check suites run by ``funcdeg verify``: each recomputes a closed-form
result by brute force and reports one line per check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod

from . import bounds, calculus, groupring, polyfract
from .calculus import INFINITE, FunctionTable
from .groups import Group, primary_decomposition


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def all_tables(domain: Group, codomain: Group):
    """Every map domain -> codomain, in lexicographic order of value lists."""
    points = [y.coords for y in codomain.elements()]
    for vals in itertools.product(points, repeat=domain.order):
        yield FunctionTable(domain, codomain, vals)


_MODULI = (1, 2, 3, 4, 5, 6, 8, 9, 12)


def random_group(rng: random.Random, max_order: int, max_rank: int = 3) -> Group:
    while True:
        rank = rng.randint(1, max_rank)
        moduli = tuple(rng.choice(_MODULI) for _ in range(rank))
        if prod(moduli) <= max_order:
            return Group(moduli)


def random_finite_table(rng: random.Random, domain: Group, codomain: Group) -> FunctionTable:
    """A uniformly random map among those whose degree is finite.

    Such maps are exactly products of independent maps between matching
    primary components, so pick those and glue them back together.
    """
    primes = sorted({p for q in domain.moduli + codomain.moduli for p in _primes(q)})
    da = primary_decomposition(domain, primes)
    db = primary_decomposition(codomain, primes)
    parts = []
    for a_j, b_j in zip(da.components, db.components):
        pts = [y.coords for y in b_j.elements()]
        parts.append({x.coords: rng.choice(pts) for x in a_j.elements()})
    return FunctionTable.from_function(
        domain,
        codomain,
        lambda x: db.reassemble([parts[j][c.coords] for j, c in enumerate(da.split(x))]).coords,
    )


def _primes(q: int):
    from sympy import primefactors

    return primefactors(q)


def suite_small() -> list[Check]:
    checks = []
    cases = [(Group((2, 3)), Group((3,))), (Group((2, 3)), Group((2,)))]
    for a, b in cases:
        bad = 0
        eq9 = 0
        count = 0
        for f in all_tables(a, b):
            count += 1
            fin = calculus.classify(f).finite
            d = calculus.fdeg(f)
            if fin != (d != INFINITE):
                bad += 1
            if d != INFINITE:
                ps = [calculus.pdeg(f, i) for i in range(a.rank)]
                if not (all(x <= d for x in ps) and d <= sum(ps)):
                    eq9 += 1
        checks.append(Check(f"classify<->fdeg {a.spec()}->{b.spec()}", bad == 0, f"{count} maps, {bad} exceptions"))
        checks.append(Check(f"pdeg<=fdeg<=sum pdeg {a.spec()}->{b.spec()}", eq9 == 0, f"{eq9} violations"))
    for a, b, spec in [
        (Group((2, 2)), Group((2,)), bounds.PGroupSpec(2, (1, 1), (1,))),
        (Group((3,)), Group((3,)), bounds.PGroupSpec(3, (1,), (1,))),
    ]:
        top = max(calculus.fdeg(f) for f in all_tables(a, b))
        want = bounds.max_degree_p_group(spec)
        checks.append(Check(f"max fdeg {a.spec()}->{b.spec()}", top == want, f"brute {top}, formula {want}"))
    return checks


def top_coefficient_grid(primes=(2, 3, 5), exps=(1, 2, 3)):
    for p in primes:
        for alpha in exps:
            for beta in exps:
                yield p, alpha, beta


def suite_top_coefficient() -> list[Check]:
    checks = []
    for p, alpha, beta in top_coefficient_grid():
        m = p**beta
        star = bounds.max_degree_cyclic(p, alpha, beta)
        at = bounds.c_hat(star, alpha, p, beta)
        ok = at != 0 and at == (-p) ** (beta - 1) % m
        ok &= all(bounds.c_hat(d, alpha, p, beta) == 0 for d in range(star + 1, star + 2 * p**alpha + 1))
        ok &= all(
            bounds.c_hat(d, alpha, p, beta) == bounds.c_hat_via_reduction(d, alpha, p, beta)
            for d in range(star, star + 2 * p**alpha + 1)
        )
        checks.append(Check(f"p={p} alpha={alpha} beta={beta}", ok, f"delta*={star} c_hat={at}"))
    return checks


def suite_roundtrip(count: int = 200, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    fails = 0
    for _ in range(count):
        a = random_group(rng, 60)
        b = random_group(rng, 60)
        f = random_finite_table(rng, a, b)
        pp = polyfract.interpolate_table(f).polyfract
        ok = polyfract.evaluate_table(pp, a) == f
        ok &= polyfract.deg(pp) == calculus.fdeg(f)
        ok &= all(polyfract.deg_i(pp, i) == calculus.pdeg(f, i) for i in range(a.rank))
        fails += not ok
    return [Check("interpolate/evaluate round trip", fails == 0, f"{count} tables, {fails} failures")]


def nilpotency_grid(primes=(2, 3), budget: int = 32, betas=(1, 2, 3)):
    """Sorted alpha tuples with sum of p^alpha_j at most ``budget``."""
    for p in primes:
        def tuples(remaining, largest):
            yield ()
            for a in range(largest, 0, -1):
                if p**a <= remaining:
                    for rest in tuples(remaining - p**a, a):
                        yield (a,) + rest

        top = 1
        while p ** (top + 1) <= budget:
            top += 1
        for alphas in tuples(budget, top):
            if alphas:
                for beta in betas:
                    yield p, alphas, beta


def suite_nilpotency(budget: int = 32) -> list[Check]:
    checks = []
    for p, alphas, beta in nilpotency_grid(budget=budget):
        spec = bounds.PGroupSpec(p, alphas, (beta,))
        want = bounds.nilpotency_degree(spec)
        got = groupring.nilpotency_oracle(p**beta, spec.domain())
        checks.append(Check(f"p={p} alphas={alphas} beta={beta}", want == got, f"formula {want}, oracle {got}"))
    return checks


SUITES = {
    "small": suite_small,
    "lemma51": suite_top_coefficient,
    "roundtrip": suite_roundtrip,
    "nilpotency": suite_nilpotency,
}
