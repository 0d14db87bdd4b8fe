"""Explicit small finite groups: Cayley tables, direct products, subgroup
enumeration, and brute-force automorphism groups.

This is the independent ground truth for every closed formula in the
package, so construction is paranoid: tables are checked to be Latin
squares with identity, and associativity is verified exhaustively up to
order 200 (sampled deterministically above that).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property

from .config import DEFAULT_BOUNDS
from .errors import BoundExceededError

_ASSOC_EXHAUSTIVE_MAX = 200
_ASSOC_SAMPLES = 20_000


@dataclass(frozen=True)
class CayleyGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    identity_index: int

    @classmethod
    def from_table(
        cls, table: tuple[tuple[int, ...], ...], labels: tuple[str, ...] | None = None
    ) -> "CayleyGroup":
        n = len(table)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        ident = _find_identity(table)
        group = cls(order=n, table=table, labels=labels, identity_index=ident)
        group._validate()
        return group

    def _validate(self) -> None:
        n = self.order
        if len(self.labels) != n:
            raise ValueError("label count does not match order")
        full = frozenset(range(n))
        for i, row in enumerate(self.table):
            if frozenset(row) != full:
                raise ValueError(f"row {i} is not a permutation")
        for j in range(n):
            if frozenset(row[j] for row in self.table) != full:
                raise ValueError(f"column {j} is not a permutation")
        t = self.table
        if n <= _ASSOC_EXHAUSTIVE_MAX:
            for i in range(n):
                ti = t[i]
                for j in range(n):
                    tij = ti[j]
                    tj = t[j]
                    for k in range(n):
                        if t[tij][k] != ti[tj[k]]:
                            raise ValueError(f"associativity fails at ({i},{j},{k})")
        else:
            rng = random.Random(0xA550C)  # fixed seed: reproducible spot-checks
            for _ in range(_ASSOC_SAMPLES):
                i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if t[t[i][j]][k] != t[i][t[j][k]]:
                    raise ValueError(f"associativity fails at ({i},{j},{k})")

    # -- basic arithmetic ----------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity_index)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity_index:
            x = self.table[x][i]
            k += 1
        return k

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(i) for i in range(self.order))

    def closure(self, seed: frozenset[int] | set[int]) -> frozenset[int]:
        """Subgroup generated by the seed (products suffice: the group is
        finite, so inverses arrive as powers)."""
        members = {self.identity_index} | set(seed)
        elems = sorted(members)
        queue = list(elems)
        while queue:
            x = queue.pop()
            idx = 0
            while idx < len(elems):
                y = elems[idx]
                idx += 1
                for z in (self.table[x][y], self.table[y][x]):
                    if z not in members:
                        members.add(z)
                        elems.append(z)
                        queue.append(z)
        return frozenset(members)

    def dump_table(self) -> str:
        """Bit-exact text form: order on the first line, then the rows."""
        lines = [str(self.order)]
        lines.extend(" ".join(str(x) for x in row) for row in self.table)
        return "\n".join(lines) + "\n"


def _find_identity(table) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            return e
    raise ValueError("table has no two-sided identity")


@dataclass(frozen=True)
class Subgroup:
    parent: CayleyGroup
    members: tuple[int, ...]  # sorted indices

    @property
    def order(self) -> int:
        return len(self.members)

    def as_group(self) -> CayleyGroup:
        """The subgroup as a standalone group (indices renumbered)."""
        old_to_new = {g: i for i, g in enumerate(self.members)}
        table = tuple(
            tuple(old_to_new[self.parent.table[x][y]] for y in self.members)
            for x in self.members
        )
        labels = tuple(self.parent.labels[g] for g in self.members)
        return CayleyGroup.from_table(table, labels)


def cyclic_group(k: int) -> CayleyGroup:
    """C_k with elements 0..k-1 under addition."""
    if k < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {k}")
    table = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
    labels = tuple("e" if i == 0 else f"g^{i}" for i in range(k))
    return CayleyGroup.from_table(table, labels)


def direct_product(
    factors: list[CayleyGroup] | tuple[CayleyGroup, ...],
    table_bound: int = DEFAULT_BOUNDS.table,
) -> CayleyGroup:
    """Componentwise product; index tuples are flattened factor-major."""
    if len(factors) == 0:
        return cyclic_group(1)
    if len(factors) == 1:
        return factors[0]
    order = math.prod(g.order for g in factors)
    if order > table_bound:
        raise BoundExceededError(f"product order {order} > table bound {table_bound}")
    sizes = [g.order for g in factors]
    strides = [1] * len(factors)
    for i in range(len(factors) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]

    def split(idx: int) -> tuple[int, ...]:
        return tuple((idx // strides[i]) % sizes[i] for i in range(len(factors)))

    def join(parts) -> int:
        return sum(p * s for p, s in zip(parts, strides))

    table = tuple(
        tuple(
            join(f.table[x][y] for f, x, y in zip(factors, split(i), split(j)))
            for j in range(order)
        )
        for i in range(order)
    )
    labels = tuple(
        "(" + ",".join(f.labels[p] for f, p in zip(factors, split(i))) + ")"
        for i in range(order)
    )
    return CayleyGroup.from_table(table, labels)


def subgroups(
    group: CayleyGroup, subgroup_bound: int = DEFAULT_BOUNDS.subgroups
) -> list[Subgroup]:
    """Every subgroup, by breadth-first closure: seed with the cyclic
    subgroups, then repeatedly extend each known subgroup by one outside
    element and close.  Output is sorted by (order, member tuple) so runs
    are reproducible."""
    if group.order > subgroup_bound:
        raise BoundExceededError(
            f"order {group.order} > subgroup enumeration bound {subgroup_bound}"
        )
    known: set[frozenset[int]] = {frozenset([group.identity_index])}
    frontier = []
    for g in range(group.order):
        s = group.closure({g})
        if s not in known:
            known.add(s)
            frontier.append(s)
    while frontier:
        fresh = []
        for s in frontier:
            for g in range(group.order):
                if g in s:
                    continue
                t = group.closure(s | {g})
                if t not in known:
                    known.add(t)
                    fresh.append(t)
        frontier = fresh
    out = [Subgroup(group, tuple(sorted(s))) for s in known]
    out.sort(key=lambda s: (s.order, s.members))
    return out


def _generating_sequence(group: CayleyGroup) -> list[int]:
    """Greedy: highest-order element first, then keep adding a highest-order
    element outside the closure (smallest index on ties)."""
    gens: list[int] = []
    have = frozenset([group.identity_index])
    orders = group.element_orders
    while len(have) < group.order:
        best = max(
            (i for i in range(group.order) if i not in have),
            key=lambda i: (orders[i], -i),
        )
        gens.append(best)
        have = group.closure(set(gens))
    return gens


def automorphisms_bruteforce(
    group: CayleyGroup, aut_bound: int = DEFAULT_BOUNDS.aut
) -> list[tuple[int, ...]]:
    """All table-preserving bijections, as index permutations (sorted).

    Backtracks on the images of a greedy generating sequence.  A partial
    assignment is propagated breadth-first (phi(x*g) := phi(x)*phi(g));
    any clash of images, or a repeated image, prunes the branch.  Checking
    phi(x*g) = phi(x)phi(g) for every x and every generator g is enough:
    induction over words in the generators extends it to all pairs.
    """
    n = group.order
    if n > aut_bound:
        raise BoundExceededError(f"order {n} > automorphism bound {aut_bound}")
    if n == 1:
        return [(0,)]
    gens = _generating_sequence(group)
    orders = group.element_orders
    table = group.table
    ident = group.identity_index
    found: list[tuple[int, ...]] = []

    def propagate(phi: list[int], used: set[int], assigned: list[int]) -> bool:
        """Close phi under right multiplication by the assigned generators,
        checking consistency on every (element, generator) pair."""
        reached = [i for i in range(n) if phi[i] >= 0]
        queue = list(reached)
        while queue:
            x = queue.pop()
            for g in assigned:
                z = table[x][g]
                w = table[phi[x]][phi[g]]
                if phi[z] < 0:
                    if w in used:
                        return False  # two preimages; not injective
                    phi[z] = w
                    used.add(w)
                    queue.append(z)
                elif phi[z] != w:
                    return False
        return True

    def backtrack(level: int, phi: list[int], used: set[int]) -> None:
        if level == len(gens):
            if all(x >= 0 for x in phi):
                found.append(tuple(phi))
            return
        g = gens[level]
        for img in range(n):
            if img in used or orders[img] != orders[g]:
                continue
            phi2 = phi[:]
            used2 = set(used)
            phi2[g] = img
            used2.add(img)
            if propagate(phi2, used2, gens[: level + 1]):
                backtrack(level + 1, phi2, used2)

    phi0 = [-1] * n
    phi0[ident] = ident
    backtrack(0, phi0, {ident})
    found.sort()
    return found


def absolute_center_bruteforce(
    group: CayleyGroup, aut_bound: int = DEFAULT_BOUNDS.aut
) -> Subgroup:
    """Elements fixed by every automorphism of the table."""
    auts = automorphisms_bruteforce(group, aut_bound)
    fixed = [i for i in range(group.order) if all(p[i] == i for p in auts)]
    return Subgroup(group, tuple(fixed))


def center_bruteforce(group: CayleyGroup) -> Subgroup:
    """Elements commuting with everything, straight off the table."""
    t = group.table
    n = group.order
    members = [
        i for i in range(n) if all(t[i][j] == t[j][i] for j in range(n))
    ]
    return Subgroup(group, tuple(members))


def is_cyclic(s: Subgroup) -> tuple[bool, int]:
    """(True iff some member generates all of s, |s|)."""
    k = s.order
    return any(s.parent.element_orders[g] == k for g in s.members), k
