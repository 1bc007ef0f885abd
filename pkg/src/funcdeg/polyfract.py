"""Polyfracts: finite sums of b_delta * binom(X_1, d_1) ... binom(X_n, d_n).

Coefficients live in a finitely generated commutative group and are kept in
canonical form (reduced, zeros dropped), so structural equality coincides with
equality of the induced functions on Z^n.

>>> p = Polyfract(1, Group((2,)), {(3,): (1,), (1,): (1,)})
>>> evaluate(p, (3,))
(0,)
>>> deg(p)
3
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod
from typing import Callable, Iterator, Mapping, Sequence

from . import calculus
from .errors import GroupMismatch, InvalidInput, NoRepresentation, Unsupported
from .groups import Group, parse_group

MultiIndex = tuple[int, ...]
Coeff = tuple[int, ...]


def binom(x: int, k: int) -> int:
    """x(x-1)...(x-k+1)/k! for any integer x."""
    if k < 0:
        return 0
    if x >= 0:
        return comb(x, k)
    return (-1) ** k * comb(k - x - 1, k)


def monofract_value(x: Sequence[int], delta: Sequence[int]) -> int:
    if len(x) != len(delta):
        raise InvalidInput("point and multi-index differ in length")
    return prod(binom(xi, di) for xi, di in zip(x, delta))


def _scale(codomain: Group, k: int, b: Coeff) -> Coeff:
    return tuple((k % q) * c % q if q else k * c for c, q in zip(b, codomain.moduli))


class Polyfract:
    """Canonical polyfract in ``n_vars`` variables over ``codomain``."""

    __slots__ = ("n_vars", "codomain", "_terms")

    def __init__(self, n_vars: int, codomain: Group, terms: Mapping[Sequence[int], Sequence[int]] = ()):
        if n_vars < 1:
            raise InvalidInput("a polyfract needs at least one variable")
        self.n_vars = n_vars
        self.codomain = codomain
        canon: dict[MultiIndex, Coeff] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for delta, b in items:
            delta = tuple(int(d) for d in delta)
            if len(delta) != n_vars or any(d < 0 for d in delta):
                raise InvalidInput(f"bad multi-index {delta} for {n_vars} variables")
            b = codomain.reduce(b)
            if delta in canon:
                b = codomain.reduce([u + v for u, v in zip(canon[delta], b)])
            canon[delta] = b
        self._terms = {d: b for d, b in canon.items() if any(b)}

    @property
    def terms(self) -> dict[MultiIndex, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[MultiIndex, Coeff]]:
        """Terms in descending lexicographic order of multi-index."""
        return iter(sorted(self._terms.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, Polyfract):
            return NotImplemented
        return (self.n_vars, self.codomain, self._terms) == (
            other.n_vars,
            other.codomain,
            other._terms,
        )

    def __hash__(self):
        return hash((self.n_vars, self.codomain, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Polyfract({self.n_vars}, {self.codomain!r}, {dict(self.items())!r})"

    def __add__(self, other: Polyfract) -> Polyfract:
        return add(self, other)

    def __neg__(self) -> Polyfract:
        return Polyfract(
            self.n_vars, self.codomain, {d: tuple(-c for c in b) for d, b in self._terms.items()}
        )

    def __sub__(self, other: Polyfract) -> Polyfract:
        return add(self, -other)

    def __call__(self, x: Sequence[int]) -> Coeff:
        return evaluate(self, x)


@dataclass(frozen=True)
class PeriodicPolyfract:
    polyfract: Polyfract
    periods: Group


def _same_space(p: Polyfract, q: Polyfract):
    if (p.n_vars, p.codomain) != (q.n_vars, q.codomain):
        raise GroupMismatch("polyfracts differ in variable count or codomain")


def evaluate(p: Polyfract, x: Sequence[int]) -> Coeff:
    if len(x) != p.n_vars:
        raise InvalidInput(f"expected {p.n_vars} coordinates, got {len(x)}")
    total = [0] * p.codomain.rank
    for delta, b in p._terms.items():
        k = monofract_value(x, delta)
        if k:
            total = [t + s for t, s in zip(total, _scale(p.codomain, k, b))]
    return p.codomain.reduce(total)


def add(p: Polyfract, q: Polyfract) -> Polyfract:
    _same_space(p, q)
    return Polyfract(p.n_vars, p.codomain, itertools.chain(p._terms.items(), q._terms.items()))


def delta_i_symbolic(p: Polyfract, i: int) -> Polyfract:
    """Forward difference in variable ``i`` via Pascal's rule on each monofract."""
    if not 0 <= i < p.n_vars:
        raise InvalidInput(f"variable index {i} out of range")
    out = {}
    for delta, b in p._terms.items():
        if delta[i]:
            out[delta[:i] + (delta[i] - 1,) + delta[i + 1:]] = b
    return Polyfract(p.n_vars, p.codomain, out)


def deg(p: Polyfract) -> int:
    return max((sum(d) for d in p._terms), default=0)


def deg_i(p: Polyfract, i: int) -> int:
    if not 0 <= i < p.n_vars:
        raise InvalidInput(f"variable index {i} out of range")
    return max((d[i] for d in p._terms), default=0)


def minimal_support_index(p: Polyfract) -> MultiIndex:
    """A componentwise-minimal multi-index carrying a nonzero coefficient."""
    if p.is_zero():
        raise InvalidInput("the zero polyfract has empty support")
    return min(p._terms, key=lambda d: (sum(d), d))


def taylor_interpolate_z(
    values: Mapping[Sequence[int], Sequence[int]] | Callable[[MultiIndex], Sequence[int]],
    d: Sequence[int],
    codomain: Group,
) -> Polyfract:
    """Discrete Taylor expansion from samples on the box [0, d_1] x ... x [0, d_n].

    The coefficient at delta is [Delta^delta f](0); it is obtained from a
    forward-difference tableau run one axis at a time.
    """
    d = tuple(int(x) for x in d)
    if not d or any(x < 0 for x in d):
        raise InvalidInput("box bounds must be non-negative")
    box = [tuple(x) for x in itertools.product(*(range(x + 1) for x in d))]
    if callable(values):
        grid = {x: list(codomain.reduce(values(x))) for x in box}
    else:
        lookup = {tuple(k): v for k, v in values.items()}
        missing = [x for x in box if x not in lookup]
        if missing:
            raise InvalidInput(f"grid misses {len(missing)} box points, e.g. {missing[0]}")
        grid = {x: list(codomain.reduce(lookup[x])) for x in box}
    for axis, top in enumerate(d):
        for base in itertools.product(*(range(x + 1) if a != axis else (0,) for a, x in enumerate(d))):
            line = [base[:axis] + (t,) + base[axis + 1:] for t in range(top + 1)]
            for k in range(1, top + 1):
                for j in range(top, k - 1, -1):
                    grid[line[j]] = [u - v for u, v in zip(grid[line[j]], grid[line[j - 1]])]
    return Polyfract(len(d), codomain, grid)


def interpolate_table(f: calculus.FunctionTable) -> PeriodicPolyfract:
    """The periodic polyfract inducing ``f`` on its domain's representatives."""
    ds = [calculus.pdeg(f, i) for i in range(f.domain.rank)]
    if any(x == calculus.INFINITE for x in ds):
        raise NoRepresentation("table has infinite degree; no polyfract represents it")
    p = taylor_interpolate_z(lambda x: f(x), ds, f.codomain)
    return PeriodicPolyfract(p, f.domain)


def evaluate_table(p: Polyfract, domain: Group) -> calculus.FunctionTable:
    """Tabulate ``p`` on the canonical representatives of ``domain``."""
    if domain.rank != p.n_vars:
        raise GroupMismatch("domain rank differs from variable count")
    return calculus.FunctionTable.from_function(domain, p.codomain, lambda x: evaluate(p, x))


def shift(p: Polyfract, a: Sequence[int]) -> Polyfract:
    """X -> P(X + a), expanded with Vandermonde's identity variable by variable."""
    if len(a) != p.n_vars:
        raise InvalidInput(f"expected {p.n_vars} shift components, got {len(a)}")
    terms = list(p._terms.items())
    for i, ai in enumerate(a):
        if not ai:
            continue
        nxt = []
        for delta, b in terms:
            for k in range(delta[i] + 1):
                c = binom(ai, delta[i] - k)
                if c:
                    nxt.append((delta[:i] + (k,) + delta[i + 1:], _scale(p.codomain, c, b)))
        terms = list(Polyfract(p.n_vars, p.codomain, nxt)._terms.items())
    return Polyfract(p.n_vars, p.codomain, terms)


def is_periodic(p: Polyfract, periods: Group) -> bool:
    if periods.rank != p.n_vars:
        raise InvalidInput("period group rank differs from variable count")
    for i, q in enumerate(periods.moduli):
        if q >= 1:
            a = [0] * p.n_vars
            a[i] = q
            if shift(p, a) != p:
                return False
    return True


def tensor_product(p: Polyfract, q: Polyfract) -> Polyfract:
    """P(X) * Q(Y) on disjoint variable blocks, coefficients multiplied in Z_m."""
    if p.codomain != q.codomain or p.codomain.rank != 1:
        raise Unsupported("tensor products need one common cyclic coefficient ring")
    (m,) = p.codomain.moduli
    out = []
    for (d1, (b1,)), (d2, (b2,)) in itertools.product(p._terms.items(), q._terms.items()):
        out.append((d1 + d2, (b1 * b2 % m if m else b1 * b2,)))
    return Polyfract(p.n_vars + q.n_vars, p.codomain, out)


def parse_polyfract(text: str) -> Polyfract:
    """Read the ``vars:`` / ``codomain:`` / ``delta : coefficient`` format."""
    n_vars = codomain = None
    terms: dict[MultiIndex, Coeff] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vars:"):
            try:
                n_vars = int(line.split(":", 1)[1])
            except ValueError:
                raise InvalidInput(f"line {lineno}: bad variable count") from None
        elif line.startswith("codomain:"):
            codomain = parse_group(line.split(":", 1)[1])
        elif ":" in line:
            if n_vars is None or codomain is None:
                raise InvalidInput(f"line {lineno}: term before vars/codomain header")
            lhs, rhs = line.split(":", 1)
            try:
                delta = tuple(int(t) for t in lhs.split(","))
                b = codomain.reduce([int(t) for t in rhs.split(",")])
            except ValueError:
                raise InvalidInput(f"line {lineno}: cannot parse {raw!r}") from None
            if len(delta) != n_vars or any(x < 0 for x in delta):
                raise InvalidInput(f"line {lineno}: bad multi-index {delta}")
            if not any(b):
                raise InvalidInput(f"line {lineno}: zero coefficient")
            if delta in terms:
                raise InvalidInput(f"line {lineno}: duplicate multi-index {delta}")
            terms[delta] = b
        else:
            raise InvalidInput(f"line {lineno}: unrecognised line {raw!r}")
    if n_vars is None or codomain is None:
        raise InvalidInput("missing vars or codomain header")
    return Polyfract(n_vars, codomain, terms)


def format_polyfract(p: Polyfract) -> str:
    lines = [f"vars: {p.n_vars}", f"codomain: {p.codomain.spec()}"]
    for delta, b in p.items():
        lines.append(f"{','.join(map(str, delta))} : {','.join(map(str, b))}")
    return "\n".join(lines) + "\n"
