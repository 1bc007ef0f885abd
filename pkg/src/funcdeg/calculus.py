"""Dense function tables on finite groups and brute-force degree computation.

This layer is the ground truth the symbolic modules are checked against: every
degree here is read off from iterated difference tables, never from a formula.
The only formula used is the certified cap on finite degrees, which turns the
search for an infinite degree into a decision procedure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import _kernels
from .errors import GroupMismatch, InvalidInput, Unsupported
from .groups import (
    Group,
    GroupElement,
    PrimaryDecomposition,
    parse_group,
    primary_decomposition,
    unit_vector,
)

INFINITE = math.inf

Coords = tuple[int, ...]


@dataclass(frozen=True)
class FunctionTable:
    """A total map ``domain -> codomain`` stored as one value per element.

    ``values[k]`` is the canonical image of ``domain.coords_at(k)``.
    """

    domain: Group
    codomain: Group
    values: tuple[Coords, ...]

    def __post_init__(self):
        if not self.domain.is_finite:
            raise Unsupported(f"table domain {self.domain.spec()} must be finite")
        if len(self.values) != self.domain.order:
            raise InvalidInput(
                f"expected {self.domain.order} values, got {len(self.values)}"
            )
        object.__setattr__(
            self, "values", tuple(self.codomain.reduce(v) for v in self.values)
        )

    @classmethod
    def from_function(
        cls, domain: Group, codomain: Group, fn: Callable[[Coords], Sequence[int]]
    ) -> FunctionTable:
        return cls(domain, codomain, tuple(fn(x.coords) for x in domain.elements()))

    @classmethod
    def zero(cls, domain: Group, codomain: Group) -> FunctionTable:
        return cls(domain, codomain, (codomain.zero().coords,) * domain.order)

    @classmethod
    def constant(cls, domain: Group, codomain: Group, c: Sequence[int]) -> FunctionTable:
        return cls(domain, codomain, (tuple(c),) * domain.order)

    def __call__(self, x: GroupElement | Sequence[int]) -> Coords:
        coords = x.coords if isinstance(x, GroupElement) else self.domain.reduce(x)
        return self.values[self.domain.index(coords)]

    def _check(self, other: FunctionTable):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise GroupMismatch("tables have different domain or codomain")

    def __add__(self, other: FunctionTable) -> FunctionTable:
        self._check(other)
        vals = (tuple(a + b for a, b in zip(u, v)) for u, v in zip(self.values, other.values))
        return FunctionTable(self.domain, self.codomain, tuple(vals))

    def __sub__(self, other: FunctionTable) -> FunctionTable:
        self._check(other)
        vals = (tuple(a - b for a, b in zip(u, v)) for u, v in zip(self.values, other.values))
        return FunctionTable(self.domain, self.codomain, tuple(vals))

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.values)

    def flat(self) -> list[int]:
        return [c for v in self.values for c in v]


@dataclass(frozen=True)
class DegreeReport:
    fdeg: int | float
    pdeg: tuple[int | float, ...]


def _require_finite_codomain(f: FunctionTable):
    if not f.codomain.is_finite:
        raise Unsupported(f"codomain {f.codomain.spec()} must be finite")


def delta_g(f: FunctionTable, g: GroupElement | Sequence[int]) -> FunctionTable:
    """Pointwise x -> f(x + g) - f(x)."""
    if isinstance(g, GroupElement):
        if g.group != f.domain:
            raise GroupMismatch("shift element is not in the table's domain")
        g = g.coords
    else:
        g = f.domain.reduce(g)
    dom = f.domain
    vals = []
    for k, v in enumerate(f.values):
        x = dom.coords_at(k)
        w = f.values[dom.index(dom.reduce([a + b for a, b in zip(x, g)]))]
        vals.append(tuple(a - b for a, b in zip(w, v)))
    return FunctionTable(dom, f.codomain, tuple(vals))


def delta_i(f: FunctionTable, i: int) -> FunctionTable:
    return delta_g(f, unit_vector(f.domain, i))


def _cap(domain: Group, codomain: Group) -> int:
    from .bounds import max_degree_general

    return max_degree_general(domain, codomain).cap


def fdeg(f: FunctionTable) -> int | float:
    """Functional degree by exhaustive iterated differences.

    Returns ``INFINITE`` when some difference of order cap + 1 is nonzero,
    where cap is the largest degree a finite-degree map between these groups
    can have.
    """
    _require_finite_codomain(f)
    cap = _cap(f.domain, f.codomain)
    r = _kernels.max_nonzero_order(f.flat(), f.domain.moduli, f.codomain.moduli, cap)
    if r > cap:
        return INFINITE
    return max(r, 0)


def pdeg(f: FunctionTable, i: int) -> int | float:
    """Partial degree in coordinate ``i`` (0-based)."""
    _require_finite_codomain(f)
    if not 0 <= i < f.domain.rank:
        raise InvalidInput(f"coordinate index {i} out of range for rank {f.domain.rank}")
    # Each section along i is a map Z_{q_i} -> codomain, so its cap applies.
    cap = _cap(Group((f.domain.moduli[i],)), f.codomain)
    r = _kernels.partial_nonzero_order(
        f.flat(), f.domain.moduli, f.codomain.moduli, i, cap
    )
    if r > cap:
        return INFINITE
    return max(r, 0)


def degree_report(f: FunctionTable) -> DegreeReport:
    return DegreeReport(fdeg(f), tuple(pdeg(f, i) for i in range(f.domain.rank)))


def fdeg_wrt(f: FunctionTable, generators: Iterable[GroupElement | Sequence[int]]) -> int | float:
    """Functional degree with respect to an arbitrary generating set.

    Slow set-based search; meant for spot checks on tiny groups.
    """
    _require_finite_codomain(f)
    gens = [g.coords if isinstance(g, GroupElement) else f.domain.reduce(g) for g in generators]
    cap = _cap(f.domain, f.codomain)
    level = set() if f.is_zero() else {f}
    order = -1
    while level:
        order += 1
        if order > cap:
            return INFINITE
        level = {t for t in (delta_g(h, g) for h in level for g in gens) if not t.is_zero()}
    return max(order, 0)


def section(f: FunctionTable, i: int, a: GroupElement | Sequence[int]) -> FunctionTable:
    """Restriction of ``f`` to the line through ``a`` along coordinate ``i``."""
    if isinstance(a, GroupElement):
        if a.group != f.domain:
            raise GroupMismatch("base point is not in the table's domain")
        a = a.coords
    else:
        a = f.domain.reduce(a)
    if not 0 <= i < f.domain.rank:
        raise InvalidInput(f"coordinate index {i} out of range for rank {f.domain.rank}")
    line = Group((f.domain.moduli[i],))
    return FunctionTable.from_function(
        line, f.codomain, lambda x: f(a[:i] + (x[0],) + a[i + 1:])
    )


def lagrange(domain: Group, codomain: Group) -> FunctionTable:
    """Indicator of 0: all-ones at the origin, zero elsewhere."""
    ones = (1,) * codomain.rank
    zero = codomain.zero().coords
    return FunctionTable(
        domain, codomain, tuple(ones if k == 0 else zero for k in range(domain.order))
    )


@dataclass(frozen=True)
class Classification:
    finite: bool
    primes: tuple[int, ...]
    domain_decomposition: PrimaryDecomposition
    codomain_decomposition: PrimaryDecomposition
    components: tuple[FunctionTable, ...] | None = None
    # (domain prime, codomain prime): moving x inside the first prime's
    # component changes the second prime's component of f(x).
    witness: tuple[int, int] | None = None


def classify(f: FunctionTable) -> Classification:
    """Decide finiteness of the degree by the primary splitting criterion.

    The degree is finite exactly when the p-component of f(x) depends only on
    the p-component of x, for every prime p of |A||B|.
    """
    _require_finite_codomain(f)
    order_product = f.domain.order * f.codomain.order
    from sympy import primefactors

    primes = tuple(primefactors(order_product))
    da = primary_decomposition(f.domain, primes)
    db = primary_decomposition(f.codomain, primes)
    xs = [da.split(x) for x in f.domain.elements()]
    ys = [db.split(v) for v in f.values]
    maps: list[dict[Coords, Coords]] = [{} for _ in primes]
    first: list[dict[Coords, int]] = [{} for _ in primes]
    for k, (xp, yp) in enumerate(zip(xs, ys)):
        for j in range(len(primes)):
            key = xp[j].coords
            seen = maps[j].setdefault(key, yp[j].coords)
            if seen != yp[j].coords:
                witness = _witness(f, da, db, first[j][key], k, j)
                return Classification(False, primes, da, db, witness=witness)
            first[j].setdefault(key, k)
    components = tuple(
        FunctionTable(
            da.components[j],
            db.components[j],
            tuple(maps[j][a.coords] for a in da.components[j].elements()),
        )
        for j in range(len(primes))
    )
    return Classification(True, primes, da, db, components=components)


def _witness(f, da, db, k1, k2, j):
    """Walk from x to y one primary component at a time until f's j-part moves."""
    x = da.split(f.domain.coords_at(k1))
    y = da.split(f.domain.coords_at(k2))
    z = list(x)
    before = db.project(f(da.reassemble(z)), j)
    for l in range(len(z)):
        if l == j or z[l] == y[l]:
            continue
        z[l] = y[l]
        after = db.project(f(da.reassemble(z)), j)
        if after != before:
            return (da.primes[l], da.primes[j])
        before = after
    raise AssertionError("no primary component moves the image")  # unreachable


def parse_table(text: str) -> FunctionTable:
    """Read the line-oriented ``x -> f(x)`` format; every element exactly once."""
    domain = codomain = None
    rows: dict[Coords, Coords] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("domain:"):
            domain = parse_group(line.split(":", 1)[1])
        elif line.startswith("codomain:"):
            codomain = parse_group(line.split(":", 1)[1])
        elif "->" in line:
            if domain is None or codomain is None:
                raise InvalidInput(f"line {lineno}: value row before domain/codomain header")
            lhs, rhs = line.split("->", 1)
            try:
                x = domain.reduce([int(t) for t in lhs.split(",")])
                y = codomain.reduce([int(t) for t in rhs.split(",")])
            except ValueError:
                raise InvalidInput(f"line {lineno}: cannot parse {raw!r}") from None
            if x in rows:
                raise InvalidInput(f"line {lineno}: duplicate row for {x}")
            rows[x] = y
        else:
            raise InvalidInput(f"line {lineno}: unrecognised line {raw!r}")
    if domain is None or codomain is None:
        raise InvalidInput("missing domain or codomain header")
    if not domain.is_finite:
        raise Unsupported("table domain must be finite")
    missing = [x.coords for x in domain.elements() if x.coords not in rows]
    if missing:
        raise InvalidInput(f"{len(missing)} domain elements have no value, e.g. {missing[0]}")
    return FunctionTable(domain, codomain, tuple(rows[x.coords] for x in domain.elements()))


def format_table(f: FunctionTable) -> str:
    lines = [f"domain: {f.domain.spec()}", f"codomain: {f.codomain.spec()}"]
    for k, v in enumerate(f.values):
        x = f.domain.coords_at(k)
        lines.append(f"{','.join(map(str, x))} -> {','.join(map(str, v))}")
    return "\n".join(lines) + "\n"
