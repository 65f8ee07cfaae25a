"""Independent linear-algebra side of the tensor calculus.

The bundle algebra predicts tensor decompositions through the
Clebsch-Gordan index rule.  This module recovers the same answer from raw
matrices: a unipotent block of size n is the n x n Jordan matrix with
eigenvalue 1, the Kronecker product of two blocks is again unipotent in
characteristic 0, and its Jordan type is read off from exact ranks of
powers of the nilpotent part T:

    #(blocks of size k) = rank(T^(k-1)) - 2*rank(T^k) + rank(T^(k+1)).

Everything is integer/rational arithmetic; floating point is never used.

On top of the block calculus sits the product category of pairs
(character mod m, block size), mirroring representations of mu_m times a
unipotent group: characters add modulo m, blocks combine by
:func:`jordan_tensor`.  :func:`phi_transport` is the dictionary sending
``E_r (x) L`` with ``L`` in the cyclic subgroup generated by the class
``(1/m, 0)`` to the pair ``(character of L, r)``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .bundles import BundleObject

__all__ = [
    "exact_rank",
    "jordan_tensor",
    "ProductObject",
    "product_tensor",
    "phi_transport",
    "ModulusMismatchError",
    "TransportError",
]


class ModulusMismatchError(ValueError):
    """Tensor of product objects that live over different ambient groups."""


class TransportError(ValueError):
    """Bundle twist not representable in the chosen cyclic torsion subgroup."""


Matrix = list[list[int]]


def exact_rank(rows: Sequence[Sequence[Union[int, Fraction]]]) -> int:
    """Rank over Q of a matrix with integer or Fraction entries.

    Fraction-free Gaussian elimination: rows are scaled to integers, pivots
    eliminated by exact cross-multiples, and every derived row is divided by
    the gcd of its entries (row scaling leaves the rank unchanged and keeps
    the integers small).
    """
    work: list[list[int]] = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) for x in row]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        if any(ints):
            work.append(ints)
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        prow = work[rank]
        p = prow[col]
        for i in range(rank + 1, len(work)):
            row = work[i]
            f = row[col]
            if not f:
                continue
            g = math.gcd(p, f)
            a, b = p // g, f // g
            new = [a * u - b * v for u, v in zip(row, prow)]
            g2 = 0
            for x in new:
                g2 = math.gcd(g2, x)
            if g2 > 1:
                new = [x // g2 for x in new]
            work[i] = new
        rank += 1
        if rank == len(work):
            break
    return rank


def _unipotent_block(n: int) -> Matrix:
    return [[1 if j in (i, i + 1) else 0 for j in range(n)] for i in range(n)]


def _kron(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b)
    out = [[0] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            v = a[i][j]
            if not v:
                continue
            for k in range(m):
                brow = b[k]
                orow = out[i * m + k]
                for l in range(m):
                    if brow[l]:
                        orow[j * m + l] = v * brow[l]
    return out


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    out = [[0] * cols for _ in range(len(a))]
    for i, arow in enumerate(a):
        orow = out[i]
        for k, v in enumerate(arow):
            if not v:
                continue
            brow = b[k]
            for j, w in enumerate(brow):
                if w:
                    orow[j] += v * w
    return out


@lru_cache(maxsize=None)
def jordan_tensor(r: int, s: int) -> tuple[int, ...]:
    """Jordan type of the product of unipotent blocks of sizes r and s.

    Returns a nonincreasing partition of r*s.  Results are memoised; the
    cache is only ever appended to under the GIL, so concurrent callers may
    duplicate work but always observe complete, identical values.
    """
    if r < 1 or s < 1:
        raise ValueError("block sizes must be positive")
    n = r * s
    kron = _kron(_unipotent_block(r), _unipotent_block(s))
    t = [[kron[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    ranks = [n]
    power = t
    while True:
        rk = exact_rank(power)
        ranks.append(rk)
        if rk == 0:
            break
        power = _mat_mul(power, t)
    ranks.append(0)
    parts: list[int] = []
    for k in range(1, len(ranks) - 1):
        mult = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        parts.extend([k] * mult)
    parts.sort(reverse=True)
    if sum(parts) != n:
        raise ArithmeticError("rank profile does not sum to the dimension")
    return tuple(parts)


Component = tuple[int, int]  # (character mod m, block size)


@dataclass(frozen=True)
class ProductObject:
    """Multiset of (character mod m, unipotent block size) pairs."""

    modulus: int
    components: tuple[tuple[Component, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        keys = [comp for comp, _ in self.components]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("components must be strictly sorted")
        for (char, block), mult in self.components:
            if not 0 <= char < self.modulus:
                raise ValueError("character not reduced modulo the modulus")
            if block < 1 or mult < 1:
                raise ValueError("block sizes and multiplicities must be positive")

    @classmethod
    def of(
        cls,
        modulus: int,
        items: Union[Mapping[Component, int], Iterable[Component]] = (),
    ) -> "ProductObject":
        acc: Counter[Component] = Counter()
        pairs = items.items() if isinstance(items, Mapping) else ((c, 1) for c in items)
        for (char, block), mult in pairs:
            acc[(char % modulus, block)] += mult
        return cls(modulus, tuple(sorted((c, m) for c, m in acc.items() if m)))

    def dim(self) -> int:
        return sum(block * mult for (_, block), mult in self.components)

    def __str__(self) -> str:
        if not self.components:
            return f"mod {self.modulus}: 0"
        terms = [
            f"{mult}*({char},{block})" if mult != 1 else f"({char},{block})"
            for (char, block), mult in self.components
        ]
        return f"mod {self.modulus}: " + " + ".join(terms)


def product_tensor(a: ProductObject, b: ProductObject) -> ProductObject:
    """Tensor in the product category: characters add, blocks combine."""
    if a.modulus != b.modulus:
        raise ModulusMismatchError(
            f"inconsistent ambient groups: modulus {a.modulus} vs {b.modulus}"
        )
    m = a.modulus
    acc: Counter[Component] = Counter()
    for (ca, ra), ma in a.components:
        for (cb, rb), mb in b.components:
            char = (ca + cb) % m
            for part in jordan_tensor(ra, rb):
                acc[(char, part)] += ma * mb
    return ProductObject.of(m, acc)


def phi_transport(obj: BundleObject, modulus: int) -> ProductObject:
    """Transport a bundle object along the cyclic-subgroup dictionary.

    Each summand twist must be a power of the torsion class ``(1/m, 0)``,
    i.e. have second coordinate zero, no free part, and first-coordinate
    denominator dividing m; otherwise :class:`TransportError` is raised.
    """
    if not isinstance(modulus, int) or modulus < 1:
        raise ValueError("modulus must be a positive integer")
    acc: Counter[Component] = Counter()
    for ind, mult in obj.summands:
        twist = ind.twist
        if twist.free or twist.t2:
            raise TransportError(
                f"twist {twist} lies outside the cyclic subgroup of order {modulus}"
            )
        scaled = twist.t1 * modulus
        if scaled.denominator != 1:
            raise TransportError(
                f"twist {twist} has order not dividing the modulus {modulus}"
            )
        acc[(int(scaled) % modulus, ind.rank)] += mult
    return ProductObject.of(modulus, acc)
