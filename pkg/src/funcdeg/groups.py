"""Finitely generated commutative groups Z_{q_1} x ... x Z_{q_n}.

A modulus of 0 stands for the integers and a modulus of 1 for the trivial
factor. The coordinate order is part of the group's identity: degree notions
are coordinate-dependent, so nothing here normalizes or sorts moduli.

>>> g = make_group([4, 3])
>>> g.order
12
>>> add(g.element([3, 2]), g.element([1, 1]))
GroupElement(group=Group(moduli=(4, 3)), coords=(0, 0))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from sympy import factorint

from .errors import GroupMismatch, InvalidInput, Unsupported

__all__ = [
    "Group",
    "GroupElement",
    "PrimaryDecomposition",
    "make_group",
    "parse_group",
    "add",
    "unit_vector",
    "enumerate_group",
    "primary_decomposition",
    "project_to_component",
]


@dataclass(frozen=True)
class Group:
    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(q) for q in self.moduli)
        if not moduli:
            raise InvalidInput("a group needs at least one modulus")
        if any(q < 0 for q in moduli):
            raise InvalidInput(f"moduli must be non-negative, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_finite(self) -> bool:
        return all(q >= 1 for q in self.moduli)

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise Unsupported(f"{self.spec()} is infinite")
        return prod(self.moduli)

    @property
    def is_trivial(self) -> bool:
        return all(q == 1 for q in self.moduli)

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.rank:
            raise InvalidInput(
                f"expected {self.rank} coordinates for {self.spec()}, got {len(coords)}"
            )
        return tuple(int(c) % q if q else int(c) for c, q in zip(coords, self.moduli))

    def element(self, coords: Sequence[int]) -> GroupElement:
        return GroupElement(self, self.reduce(coords))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic order of canonical coordinates."""
        if not self.is_finite:
            raise Unsupported(f"cannot enumerate the infinite group {self.spec()}")
        for coords in itertools.product(*(range(q) for q in self.moduli)):
            yield GroupElement(self, coords)

    def index(self, coords: Sequence[int]) -> int:
        """Position of a canonical element in :meth:`elements` order."""
        k = 0
        for c, q in zip(coords, self.moduli):
            k = k * q + c
        return k

    def coords_at(self, k: int) -> tuple[int, ...]:
        out = []
        for q in reversed(self.moduli):
            k, c = divmod(k, q)
            out.append(c)
        return tuple(reversed(out))

    def spec(self) -> str:
        return ",".join(str(q) for q in self.moduli)

    def __str__(self) -> str:
        return " x ".join("Z" if q == 0 else f"Z_{q}" for q in self.moduli)


@dataclass(frozen=True)
class GroupElement:
    group: Group
    coords: tuple[int, ...]

    def __add__(self, other: GroupElement) -> GroupElement:
        return add(self, other)

    def __neg__(self) -> GroupElement:
        return self.group.element([-c for c in self.coords])

    def __sub__(self, other: GroupElement) -> GroupElement:
        return add(self, -other)

    def __rmul__(self, k: int) -> GroupElement:
        return self.group.element([k * c for c in self.coords])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return ",".join(map(str, self.coords))


def make_group(moduli: Sequence[int]) -> Group:
    return Group(tuple(moduli))


def parse_group(text: str) -> Group:
    """Parse a comma-separated modulus list such as ``"4,3,5"``."""
    parts = [p.strip() for p in text.strip().split(",")]
    try:
        return Group(tuple(int(p) for p in parts))
    except ValueError:
        raise InvalidInput(f"bad group spec {text!r}") from None


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.group != b.group:
        raise GroupMismatch(f"cannot add elements of {a.group} and {b.group}")
    return a.group.element([x + y for x, y in zip(a.coords, b.coords)])


def unit_vector(g: Group, i: int) -> GroupElement:
    """The generator e_i (0-based ``i``); zero when the i-th factor is trivial."""
    if not 0 <= i < g.rank:
        raise InvalidInput(f"coordinate index {i} out of range for rank {g.rank}")
    coords = [0] * g.rank
    coords[i] = 1
    return g.element(coords)


def enumerate_group(g: Group) -> list[GroupElement]:
    return list(g.elements())


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Splitting of a finite group into its p-primary components.

    ``coordinate_maps[i]`` lists ``(j, pos, p**e)`` for every nontrivial
    prime-power part of modulus ``i``: that part lives at coordinate ``pos`` of
    ``components[j]``.
    """

    group: Group
    primes: tuple[int, ...]
    components: tuple[Group, ...]
    coordinate_maps: tuple[tuple[tuple[int, int, int], ...], ...]

    def project(self, x: GroupElement | Sequence[int], j: int) -> GroupElement:
        if not 0 <= j < len(self.primes):
            raise InvalidInput(f"prime index {j} out of range")
        coords = x.coords if isinstance(x, GroupElement) else self.group.reduce(x)
        out = [0] * self.components[j].rank
        for c, parts in zip(coords, self.coordinate_maps):
            for jj, pos, pe in parts:
                if jj == j:
                    out[pos] = c % pe
        return GroupElement(self.components[j], tuple(out))

    def split(self, x: GroupElement | Sequence[int]) -> tuple[GroupElement, ...]:
        return tuple(self.project(x, j) for j in range(len(self.primes)))

    def reassemble(self, parts: Sequence[GroupElement | Sequence[int]]) -> GroupElement:
        """Inverse of :meth:`split`, by the Chinese remainder theorem."""
        if len(parts) != len(self.components):
            raise InvalidInput("need one element per primary component")
        pc = [p.coords if isinstance(p, GroupElement) else tuple(p) for p in parts]
        coords = []
        for q, maps in zip(self.group.moduli, self.coordinate_maps):
            value = 0
            for j, pos, pe in maps:
                rest = q // pe
                value += pc[j][pos] * rest * pow(rest, -1, pe)
            coords.append(value)
        return self.group.element(coords)


def primary_decomposition(g: Group, primes: Sequence[int] | None = None) -> PrimaryDecomposition:
    """Decompose ``g`` over ``primes`` (default: the prime divisors of |g|).

    Primes are sorted ascending; within a component the original coordinate
    order is kept. A prime contributing nothing gets the component ``Z_1``.
    """
    if not g.is_finite:
        raise Unsupported(f"cannot decompose the infinite group {g.spec()}")
    factored = [factorint(q) for q in g.moduli]
    needed = set().union(*factored)
    if primes is None:
        primes = sorted(needed)
    else:
        primes = sorted(set(int(p) for p in primes))
        if not needed <= set(primes):
            raise InvalidInput(f"primes {primes} miss divisors of |{g.spec()}|")
    comp_moduli: list[list[int]] = [[] for _ in primes]
    maps = []
    for f in factored:
        parts = []
        for j, p in enumerate(primes):
            e = f.get(p, 0)
            if e:
                parts.append((j, len(comp_moduli[j]), p**e))
                comp_moduli[j].append(p**e)
        maps.append(tuple(parts))
    components = tuple(Group(tuple(m) if m else (1,)) for m in comp_moduli)
    return PrimaryDecomposition(g, tuple(primes), components, tuple(maps))


def project_to_component(x: GroupElement, d: PrimaryDecomposition, j: int) -> GroupElement:
    if x.group != d.group:
        raise GroupMismatch("element is not in the decomposed group")
    return d.project(x, j)
