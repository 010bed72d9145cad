"""Finite abelian groups in primary decomposition.

A group is a direct sum of cyclic groups of prime-power order, stored as a
sorted tuple of moduli.  Elements are residue tuples, one coordinate per
factor.  Elements are indexed lexicographically by their coordinates, so the
identity always has index 0.

>>> G = parse_group("4,2")
>>> G.name
'C2xC4'
>>> element_order(G.element((1, 1)))
4
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

DEFAULT_CAP = 10_000
SWEEP_CAP = 200


class GroupSpecError(ValueError):
    """A textual group description could not be parsed."""


class CapacityError(ValueError):
    """A group exceeds the configured order cap."""


def order_cap(default: int = DEFAULT_CAP) -> int:
    """The order cap, overridable through ``POWERLAB_CAP``."""
    raw = os.environ.get("POWERLAB_CAP")
    if raw is None:
        return default
    try:
        cap = int(raw)
    except ValueError:
        raise GroupSpecError(f"POWERLAB_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise GroupSpecError("POWERLAB_CAP must be positive")
    return cap


# -- elementary number theory --------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division, as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` when ``q == p**k`` with ``k >= 1``, else None."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def euler_phi(n: int) -> int:
    """Number of integers in ``[1, n]`` coprime to ``n``."""
    if n < 1:
        raise ValueError("euler_phi is defined for n >= 1")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def partitions(n: int):
    """Integer partitions of ``n`` as non-increasing tuples, largest first.

    >>> list(partitions(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n == 0:
        yield ()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(n, n)


def partition_count(n: int) -> int:
    return sum(1 for _ in partitions(n))


# -- groups ---------------------------------------------------------------------

def _factor_key(q: int) -> tuple[int, int]:
    p, k = prime_power(q)
    return p, k


@dataclass(frozen=True)
class AbelianGroup:
    """Direct sum of cyclic groups of prime-power order.

    ``factors`` is kept in canonical order: ascending by prime, then by
    exponent.  The trivial group has no factors.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(q) for q in self.factors)
        for q in factors:
            if prime_power(q) is None:
                raise GroupSpecError(f"factor {q} is not a prime power > 1")
        object.__setattr__(self, "factors", tuple(sorted(factors, key=_factor_key)))

    @classmethod
    def from_cyclic_orders(cls, orders) -> "AbelianGroup":
        """Build from arbitrary cyclic factor orders, CRT-splitting composites."""
        factors: list[int] = []
        for m in orders:
            m = int(m)
            if m < 1:
                raise GroupSpecError(f"cyclic factor order must be positive, got {m}")
            factors.extend(p**k for p, k in factorize(m).items())
        return cls(tuple(factors))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def name(self) -> str:
        if not self.factors:
            return "C1"
        return "x".join(f"C{q}" for q in self.factors)

    @property
    def spec(self) -> str:
        return ",".join(str(q) for q in self.factors) or "1"

    def __str__(self):
        return self.name

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(prime_power(q)[0] for q in self.factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    def sylow_factors(self, p: int) -> tuple[int, ...]:
        return tuple(q for q, r in zip(self.factors, self.primes) if r == p)

    @property
    def sort_key(self) -> tuple:
        return (self.order, self.factors)

    # element indexing ---------------------------------------------------------

    @cached_property
    def strides(self) -> np.ndarray:
        f = np.array(self.factors, dtype=np.int64)
        if f.size == 0:
            return f
        return np.concatenate([np.cumprod(f[::-1])[::-1][1:], [1]]).astype(np.int64)

    @cached_property
    def coords_array(self) -> np.ndarray:
        """All element coordinates, shape ``(order, len(factors))``, lexicographic."""
        if not self.factors:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.indices(self.factors, dtype=np.int64)
        return grids.reshape(len(self.factors), -1).T.copy()

    @cached_property
    def orders_array(self) -> np.ndarray:
        """Element orders indexed like :attr:`coords_array`."""
        c = self.coords_array
        if c.shape[1] == 0:
            return np.ones(1, dtype=np.int64)
        f = np.array(self.factors, dtype=np.int64)
        parts = f // np.gcd(c, f)
        return np.lcm.reduce(parts, axis=1)

    @cached_property
    def residue_indices(self) -> np.ndarray:
        """Element index of the residue ``k`` for ``k = 0..n-1`` (cyclic groups only).

        Residue ``k`` of Z_n is ``k`` times the generator with all coordinates 1.
        """
        if len(set(self.primes)) != len(self.factors):
            raise ValueError(f"{self.name} is not cyclic; residues do not label its elements")
        if not self.factors:
            return np.zeros(1, dtype=np.int64)
        k = np.arange(self.order, dtype=np.int64)[:, None]
        return (k % np.array(self.factors, dtype=np.int64)) @ self.strides

    def residue(self, k: int) -> "GroupElement":
        return self.element_at(int(self.residue_indices[k % self.order]))

    def residue_of(self, index: int) -> int:
        """Inverse of :meth:`residue` on element indices."""
        return int(np.argsort(self.residue_indices)[index])

    def index_of(self, coords) -> int:
        return int(np.dot(np.asarray(coords, dtype=np.int64), self.strides)) if self.factors else 0

    def element(self, coords) -> "GroupElement":
        return GroupElement(tuple(int(c) for c in coords), self)

    def element_at(self, index: int) -> "GroupElement":
        return GroupElement(tuple(int(c) for c in self.coords_array[index]), self)

    @property
    def identity(self) -> "GroupElement":
        return GroupElement((0,) * len(self.factors), self)

    def elements(self) -> list["GroupElement"]:
        return [GroupElement(c, self) for c in itertools.product(*(range(q) for q in self.factors))]

    def subgroup_indices(self, index: int) -> np.ndarray:
        """Indices of the cyclic subgroup generated by element ``index``."""
        o = int(self.orders_array[index])
        if not self.factors:
            return np.zeros(1, dtype=np.int64)
        f = np.array(self.factors, dtype=np.int64)
        mult = (np.arange(o, dtype=np.int64)[:, None] * self.coords_array[index]) % f
        return mult @ self.strides


@dataclass(frozen=True)
class GroupElement:
    coords: tuple[int, ...]
    group: AbelianGroup

    def __post_init__(self):
        if len(self.coords) != len(self.group.factors):
            raise ValueError(
                f"{self.coords} has {len(self.coords)} coordinates, "
                f"{self.group.name} needs {len(self.group.factors)}")
        for c, q in zip(self.coords, self.group.factors):
            if not 0 <= c < q:
                raise ValueError(f"coordinate {c} out of range for factor C{q}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return add(self, other)

    def __mul__(self, k: int) -> "GroupElement":
        return GroupElement(
            tuple((k * c) % q for c, q in zip(self.coords, self.group.factors)), self.group)

    __rmul__ = __mul__

    @property
    def index(self) -> int:
        return self.group.index_of(self.coords)

    @property
    def is_identity(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"{self.coords}@{self.group.name}"


# -- operations -----------------------------------------------------------------

def add(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.group != b.group:
        raise TypeError(f"cannot add elements of {a.group.name} and {b.group.name}")
    return GroupElement(
        tuple((x + y) % q for x, y, q in zip(a.coords, b.coords, a.group.factors)), a.group)


def element_order(a: GroupElement) -> int:
    """lcm over coordinates of ``q / gcd(c, q)``."""
    return math.lcm(*(q // math.gcd(c, q) for c, q in zip(a.coords, a.group.factors))) \
        if a.coords else 1


def cyclic_subgroup(a: GroupElement) -> frozenset[GroupElement]:
    return frozenset(k * a for k in range(element_order(a)))


def is_cyclic(G: AbelianGroup) -> bool:
    primes = G.primes
    return len(set(primes)) == len(primes)


def p_group_prime(G: AbelianGroup) -> int | None:
    """The prime ``p`` when ``G`` is a non-trivial p-group, else None."""
    primes = set(G.primes)
    return primes.pop() if len(primes) == 1 else None


def is_p_group(G: AbelianGroup) -> bool:
    return p_group_prime(G) is not None


def enumerate_abelian_groups(n: int) -> list[AbelianGroup]:
    """One group per isomorphism class of abelian groups of order ``n``.

    Ordered by taking partitions of each prime's exponent from the
    cyclic (single part) one downwards, primes ascending.
    """
    if n < 1:
        raise ValueError("group order must be positive")
    per_prime = [
        [tuple(p**k for k in part) for part in partitions(e)]
        for p, e in sorted(factorize(n).items())
    ]
    return [AbelianGroup(sum(choice, ())) for choice in itertools.product(*per_prime)]


def abelian_groups_in_range(lo: int, hi: int) -> list[AbelianGroup]:
    return [G for n in range(max(lo, 1), hi + 1) for G in enumerate_abelian_groups(n)]


_NAME_RE = re.compile(r"^C?(\d+)$", re.IGNORECASE)


def parse_group(text: str) -> AbelianGroup:
    """Parse ``"4,2"``, ``"6"``, ``"C4xC2"`` or ``"C4+C2"`` into a group.

    Composite factors are split into prime powers.  ``"1"`` or ``"C1"`` is
    the trivial group.
    """
    raw = text.strip()
    if not raw:
        raise GroupSpecError("empty group spec")
    parts = re.split(r"\s*(?:,|x|X|\+|⊕|\*)\s*", raw)
    orders = []
    for part in parts:
        if not part.strip():
            raise GroupSpecError(f"empty or malformed factor in {text!r}; expected e.g. '4,2' or 'C4xC2'")
        m = _NAME_RE.match(part.strip())
        if m is None:
            raise GroupSpecError(
                f"cannot parse {part!r} in {text!r}; expected e.g. '4,2' or 'C4xC2'")
        orders.append(int(m.group(1)))
    if any(m == 0 for m in orders):
        raise GroupSpecError(f"cyclic factor order must be positive in {text!r}")
    return AbelianGroup.from_cyclic_orders(orders)


def cyclic_group(n: int) -> AbelianGroup:
    return AbelianGroup.from_cyclic_orders([n])


def check_cap(G: AbelianGroup, cap: int | None = None) -> None:
    cap = order_cap() if cap is None else cap
    if G.order > cap:
        raise CapacityError(f"{G.name} has order {G.order}, above the cap of {cap} "
                            "(set POWERLAB_CAP to raise it)")


__all__ = [
    "AbelianGroup", "GroupElement", "GroupSpecError", "CapacityError",
    "add", "element_order", "cyclic_subgroup", "enumerate_abelian_groups",
    "abelian_groups_in_range", "euler_phi", "is_cyclic", "is_p_group",
    "p_group_prime", "parse_group", "cyclic_group", "factorize", "prime_power",
    "is_prime", "partitions", "partition_count", "check_cap", "order_cap",
    "DEFAULT_CAP", "SWEEP_CAP",
]
