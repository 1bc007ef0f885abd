"""Closed-form maximal degrees, nilpotency degrees and Taylor coefficients of
the Lagrange (indicator) function on p-groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Sequence

from sympy import isprime, primefactors

from .errors import InvalidInput, Unsupported
from .groups import Group, primary_decomposition


def _check_prime(p: int):
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")


def _check_positive(name: str, values: Sequence[int]):
    if not values or any(int(v) < 1 for v in values):
        raise InvalidInput(f"{name} must be a non-empty list of positive integers")


@dataclass(frozen=True)
class PGroupSpec:
    """Domain Z_{p^a1} x ... x Z_{p^an}, codomain Z_{p^b1} x ... x Z_{p^bt}."""

    p: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(int(b) for b in self.betas))
        _check_prime(self.p)
        _check_positive("alphas", self.alphas)
        _check_positive("betas", self.betas)

    @property
    def beta(self) -> int:
        return max(self.betas)

    def domain(self) -> Group:
        return Group(tuple(self.p**a for a in self.alphas))

    def codomain(self) -> Group:
        return Group(tuple(self.p**b for b in self.betas))


def c_hat(delta: int, alpha: int, p: int, beta: int) -> int:
    """Taylor coefficient of the indicator Z_{p^alpha} -> Z_{p^beta} at binom(x, delta).

    Alternating binomial sum over i = delta (mod p^alpha), in exact integers,
    reduced once at the end.
    """
    _check_prime(p)
    if delta < 0 or alpha < 1 or beta < 1:
        raise InvalidInput("need delta >= 0 and alpha, beta >= 1")
    n = p**alpha
    total = sum((-1) ** i * comb(delta, i) for i in range(delta % n, delta + 1, n))
    return total % p**beta


def c_hat_via_reduction(delta: int, alpha: int, p: int, beta: int) -> int:
    """Same coefficient, read off (1 - x)^delta in Z_{p^beta}[x]/(x^{p^alpha} - 1).

    The power is taken of (x - 1) and corrected by (-1)^delta.
    """
    from .groupring import quotient_power

    coeffs = quotient_power(p, alpha, beta, delta)
    value = coeffs[delta % p**alpha]
    return (-value if delta % 2 else value) % p**beta


def max_degree_cyclic(p: int, alpha: int, beta: int) -> int:
    _check_prime(p)
    if alpha < 1 or beta < 1:
        raise InvalidInput("alpha and beta must be positive")
    return beta * p**alpha - (beta - 1) * p ** (alpha - 1) - 1


def max_degree_p_to_product(spec: PGroupSpec) -> int:
    """Largest finite degree of a map between the p-groups of ``spec``."""
    p, alphas = spec.p, spec.alphas
    return sum(p**a for a in alphas) - len(alphas) + (spec.beta - 1) * (p - 1) * p ** (max(alphas) - 1)


def max_degree_p_group(spec: PGroupSpec) -> int:
    """Single cyclic codomain case; with several betas only the largest matters."""
    return max_degree_p_to_product(spec)


def nilpotency_degree(spec: PGroupSpec) -> int:
    """Nilpotency degree of the augmentation ideal of Z_{p^beta}[domain]."""
    return max_degree_p_to_product(spec) + 1


@dataclass(frozen=True)
class PrimeBound:
    p: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    bound: int


@dataclass(frozen=True)
class MaxDegreeVerdict:
    """``kind`` is ``"bound"``, ``"constants_only"`` or ``"trivial"``."""

    kind: str
    bound: int | None = None
    breakdown: tuple[PrimeBound, ...] = ()

    @property
    def cap(self) -> int:
        return self.bound if self.kind == "bound" else 0


def _exponents(g: Group, p: int) -> tuple[int, ...]:
    out = []
    for q in g.moduli:
        e = 0
        while q % p == 0 and q > 1:
            q //= p
            e += 1
        if e:
            out.append(e)
    return tuple(out)


def max_degree_general(a: Group, b: Group) -> MaxDegreeVerdict:
    """Best upper bound on the degree of finite-degree maps ``a -> b``."""
    if not (a.is_finite and b.is_finite):
        raise Unsupported("degree bounds need finite groups")
    if a.order == 1 or b.order == 1:
        return MaxDegreeVerdict("trivial", 0)
    common = gcd(a.order, b.order)
    if common == 1:
        return MaxDegreeVerdict("constants_only", 0)
    parts = []
    for p in primefactors(common):
        spec = PGroupSpec(p, _exponents(a, p), _exponents(b, p))
        parts.append(PrimeBound(p, spec.alphas, spec.betas, max_degree_p_to_product(spec)))
    return MaxDegreeVerdict("bound", max(pb.bound for pb in parts), tuple(parts))


def lagrange_coefficients(p: int, alphas: Sequence[int], beta: int):
    """Binomial-basis expansion of the indicator of 0 on prod Z_{p^alpha_j} into Z_{p^beta}."""
    from .polyfract import Polyfract, tensor_product

    spec = PGroupSpec(p, tuple(alphas), (beta,))
    m = p**beta
    codomain = Group((m,))
    result = None
    for alpha in spec.alphas:
        top = max_degree_cyclic(p, alpha, beta)
        factor = Polyfract(
            1, codomain, {(d,): (c_hat(d, alpha, p, beta),) for d in range(top + 1)}
        )
        result = factor if result is None else tensor_product(result, factor)
    return result
