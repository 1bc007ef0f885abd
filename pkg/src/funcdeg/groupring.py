"""Group rings Z_m[G] of finite abelian groups, computed directly.

This module never consults the closed-form degree formulas; it exists to check
them. ``nilpotency_oracle`` finds the nilpotency degree of the augmentation
ideal by multiplying out products of generator differences (x_{e_i} - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy import factorint, isprime

from . import _kernels
from .errors import GroupMismatch, InternalInconsistency, InvalidInput, Unsupported
from .groups import Group


@dataclass(frozen=True)
class GroupRingElement:
    modulus: int
    group: Group
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidInput("group ring modulus must be at least 2")
        if not self.group.is_finite:
            raise Unsupported("group rings need a finite group")
        if len(self.coeffs) != self.group.order:
            raise InvalidInput("one coefficient per group element is required")
        object.__setattr__(self, "coeffs", tuple(c % self.modulus for c in self.coeffs))

    @classmethod
    def basis(cls, m: int, g: Group, coords: Sequence[int]) -> GroupRingElement:
        """The group element ``coords`` viewed in Z_m[g]."""
        c = [0] * g.order
        c[g.index(g.reduce(coords))] = 1
        return cls(m, g, tuple(c))

    @classmethod
    def one(cls, m: int, g: Group) -> GroupRingElement:
        return cls.basis(m, g, (0,) * g.rank)

    @classmethod
    def generator_difference(cls, m: int, g: Group, i: int) -> GroupRingElement:
        """x_{e_i} - 1."""
        e = [0] * g.rank
        e[i] = 1
        return cls.basis(m, g, e) - cls.one(m, g)

    def _check(self, other: GroupRingElement):
        if (self.modulus, self.group) != (other.modulus, other.group):
            raise GroupMismatch("group ring elements from different rings")

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._check(other)
        return GroupRingElement(
            self.modulus, self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        self._check(other)
        return GroupRingElement(
            self.modulus, self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return multiply(self, other)

    def __pow__(self, k: int) -> GroupRingElement:
        result = GroupRingElement.one(self.modulus, self.group)
        for _ in range(k):
            result = result * self
        return result

    def augmentation(self) -> int:
        return sum(self.coeffs) % self.modulus

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution (ab)(h) = sum_g a(g) b(h - g) mod m."""
    a._check(b)
    out = _kernels.convolve(list(a.coeffs), list(b.coeffs), a.group.moduli, a.modulus)
    return GroupRingElement(a.modulus, a.group, tuple(out))


def _ideal_chain_cap(m: int, g: Group) -> int:
    # A strictly descending chain of submodules of Z_m^|G| has at most
    # |G| * (number of prime factors of m) steps.
    return g.order * sum(factorint(m).values())


def _nilpotency_dense(m: int, g: Group, cap: int) -> int:
    gens = [GroupRingElement.generator_difference(m, g, i) for i in range(g.rank)]
    gens = [x for x in gens if not x.is_zero()]
    if not gens:
        return 1
    best = 0
    stack = [(GroupRingElement.one(m, g), 0, 0)]
    while stack:
        prod_, start, order = stack.pop()
        best = max(best, order)
        if best > cap:
            raise InternalInconsistency(f"augmentation ideal of Z_{m}[{g}] is not nilpotent")
        for pos in range(start, len(gens)):
            nxt = prod_ * gens[pos]
            if not nxt.is_zero():
                stack.append((nxt, pos, order + 1))
    return best + 1


def _valuation(c: int, p: int, beta: int) -> int:
    if c == 0:
        return beta
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


def _nilpotency_tensor(m: int, g: Group, cap: int) -> int:
    """Factorwise route for m = p^beta.

    A product of generator differences is the outer product of univariate
    powers (x - 1)^{d_i} in Z_m[Z_{q_i}], and an outer product over Z_{p^beta}
    vanishes iff the minimal p-adic valuations of the factors sum to >= beta.
    """
    (p, beta), = factorint(m).items()
    options = []
    for q in g.moduli:
        if q == 1:
            continue
        line = Group((q,))
        base = GroupRingElement.generator_difference(m, line, 0)
        power = GroupRingElement.one(m, line)
        vals = []
        for d in range(cap + 2):
            v = min((_valuation(c, p, beta) for c in power.coeffs if c), default=beta)
            if v >= beta:
                break
            vals.append((d, v))
            power = power * base
        else:
            raise InternalInconsistency(f"augmentation ideal of Z_{m}[{g}] is not nilpotent")
        options.append(vals)
    # knapsack: largest total exponent whose valuations still sum below beta
    best = [0] + [-1] * (beta - 1)
    for vals in options:
        new = [-1] * beta
        for budget, total in enumerate(best):
            if total < 0:
                continue
            for d, v in vals:
                if budget + v < beta:
                    new[budget + v] = max(new[budget + v], total + d)
        best = new
    return max(best) + 1


def nilpotency_oracle(m: int, g: Group, method: str = "auto") -> int:
    """Smallest nu with I^nu = 0 for the augmentation ideal I of Z_m[g].

    ``method`` is ``"dense"`` (multiply out every product of generator
    differences), ``"tensor"`` (prime-power m only, factor by factor) or
    ``"auto"``, which uses dense for groups of order at most 256.
    """
    if m < 2:
        raise InvalidInput("modulus must be at least 2")
    if not g.is_finite:
        raise Unsupported("group must be finite")
    cap = _ideal_chain_cap(m, g)
    if method == "auto":
        method = "dense" if g.order <= 256 or len(factorint(m)) > 1 else "tensor"
    if method == "dense":
        return _nilpotency_dense(m, g, cap)
    if method == "tensor":
        if len(factorint(m)) != 1:
            raise Unsupported("the tensor route needs a prime-power modulus")
        return _nilpotency_tensor(m, g, cap)
    raise InvalidInput(f"unknown method {method!r}")


def quotient_power(p: int, alpha: int, beta: int, delta: int) -> list[int]:
    """Coefficients of (x - 1)^delta in Z_{p^beta}[x]/(x^{p^alpha} - 1)."""
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")
    if alpha < 1 or beta < 1 or delta < 0:
        raise InvalidInput("need alpha, beta >= 1 and delta >= 0")
    n, m = p**alpha, p**beta
    base = [0] * n
    base[0] = m - 1
    base[1] = 1
    result = [1] + [0] * (n - 1)
    while delta:
        if delta & 1:
            result = _kernels.cyclic_mul(result, base, m)
        base = _kernels.cyclic_mul(base, base, m)
        delta >>= 1
    return [c % m for c in result]
