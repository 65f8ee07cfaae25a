"""Krull-Schmidt algebra of semifinite degree-0 bundles on an elliptic curve.

Every indecomposable degree-0 bundle is ``E_r (x) L``: the rank-r Atiyah
bundle (the unique indecomposable of rank r and degree 0 with a nonzero
global section, built by iterated self-extensions of the trivial bundle)
twisted by a degree-0 line bundle class.  A general object is a finite
multiset of indecomposables; keeping the multiset sorted makes it a normal
form, so ``==`` decides isomorphism.

The tensor product follows the Clebsch-Gordan pattern

    (E_r (x) L) (x) (E_s (x) M) = sum over i=1..min(r,s) of
                                  E_{|r-s|+2i-1} (x) LM,

each ``E_r`` is self-dual, ``dim Gamma(E_r (x) L)`` is 1 when L is trivial
and 0 otherwise, and ``Hom(A, B) = Gamma(A^dual (x) B)``.  The classifiers
at the bottom express the trichotomy on this curve: finite objects are sums
of torsion line bundles, unipotent objects are sums of the ``E_r``, and
semifinite objects are sums of ``E_r (x) L`` with ``L`` torsion.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .picard import TRIVIAL, LineBundleClass

__all__ = [
    "Indecomposable",
    "BundleObject",
    "ZERO",
    "UNIT",
    "atiyah",
    "tensor_rank_indices",
    "tensor",
    "hom_dim",
    "end_dim_projective_check",
]


def tensor_rank_indices(r: int, s: int) -> tuple[int, ...]:
    """Ranks of the indecomposable pieces of E_r (x) E_s, each occurring once."""
    if r < 1 or s < 1:
        raise ValueError("ranks must be positive")
    d = abs(r - s)
    return tuple(d + 2 * i - 1 for i in range(1, min(r, s) + 1))


@dataclass(frozen=True)
class Indecomposable:
    """An Atiyah bundle E_rank twisted by a line bundle class."""

    rank: int
    twist: LineBundleClass = TRIVIAL

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError("rank must be a positive integer")

    def dual(self) -> "Indecomposable":
        return Indecomposable(self.rank, ~self.twist)

    def sort_key(self):
        return (self.rank, self.twist.sort_key())

    def __str__(self) -> str:
        if self.twist.is_trivial:
            return f"E[{self.rank}]"
        return f"E[{self.rank}]*{self.twist}"


Summands = tuple[tuple[Indecomposable, int], ...]


@dataclass(frozen=True)
class BundleObject:
    """A direct sum of indecomposables in canonical (sorted multiset) form.

    The empty multiset is the zero object; ``+`` is direct sum, ``*`` is the
    tensor product and ``n * obj`` an n-fold direct sum.
    """

    summands: Summands = ()

    def __post_init__(self) -> None:
        keys = [ind.sort_key() for ind, _ in self.summands]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("summands must be strictly sorted")
        if any(mult < 1 for _, mult in self.summands):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def of(
        cls,
        items: Union[
            Mapping[Indecomposable, int],
            Iterable[Union[Indecomposable, tuple[Indecomposable, int]]],
        ] = (),
    ) -> "BundleObject":
        acc: Counter[Indecomposable] = Counter()
        pairs = items.items() if isinstance(items, Mapping) else items
        for item in pairs:
            if isinstance(item, Indecomposable):
                acc[item] += 1
            else:
                ind, mult = item
                if mult < 0:
                    raise ValueError("multiplicities must be nonnegative")
                acc[ind] += mult
        return cls._from_counter(acc)

    @classmethod
    def _from_counter(cls, acc: Mapping[Indecomposable, int]) -> "BundleObject":
        return cls(
            tuple(
                sorted(
                    ((ind, mult) for ind, mult in acc.items() if mult),
                    key=lambda pair: pair[0].sort_key(),
                )
            )
        )

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def classes(self) -> frozenset[Indecomposable]:
        return frozenset(ind for ind, _ in self.summands)

    def multiplicity(self, ind: Indecomposable) -> int:
        for other, mult in self.summands:
            if other == ind:
                return mult
        return 0

    def __add__(self, other: "BundleObject") -> "BundleObject":
        if not isinstance(other, BundleObject):
            return NotImplemented
        acc = Counter(dict(self.summands))
        for ind, mult in other.summands:
            acc[ind] += mult
        return BundleObject._from_counter(acc)

    def __rmul__(self, count: int) -> "BundleObject":
        if not isinstance(count, int):
            return NotImplemented
        if count < 0:
            raise ValueError("multiplicities must be nonnegative")
        return BundleObject(tuple((ind, mult * count) for ind, mult in self.summands) if count else ())

    def __mul__(self, other: "BundleObject") -> "BundleObject":
        if not isinstance(other, BundleObject):
            return NotImplemented
        acc: Counter[Indecomposable] = Counter()
        for x, mx in self.summands:
            for y, my in other.summands:
                twist = x.twist * y.twist
                for rank in tensor_rank_indices(x.rank, y.rank):
                    acc[Indecomposable(rank, twist)] += mx * my
        return BundleObject._from_counter(acc)

    def dual(self) -> "BundleObject":
        return BundleObject._from_counter({ind.dual(): mult for ind, mult in self.summands})

    # -- numerical invariants ------------------------------------------

    def rank(self) -> int:
        return sum(ind.rank * mult for ind, mult in self.summands)

    def det(self) -> LineBundleClass:
        out = TRIVIAL
        for ind, mult in self.summands:
            out = out * ind.twist ** (ind.rank * mult)
        return out

    def gamma_dim(self) -> int:
        """Dimension of the space of global sections."""
        return sum(mult for ind, mult in self.summands if ind.twist.is_trivial)

    # -- classifiers ----------------------------------------------------

    @property
    def is_unipotent(self) -> bool:
        """True iff every summand is an untwisted E_r."""
        return all(ind.twist.is_trivial for ind, _ in self.summands)

    @property
    def is_finite(self) -> bool:
        """True iff the object is a sum of torsion line bundles."""
        return all(ind.rank == 1 and ind.twist.is_torsion for ind, _ in self.summands)

    @property
    def is_semifinite(self) -> bool:
        """True iff every twist is torsion (ranks unconstrained)."""
        return all(ind.twist.is_torsion for ind, _ in self.summands)

    def jh_factors(self) -> "BundleObject":
        """Semisimplification: E_r (x) L filters with r quotients equal to L."""
        acc: Counter[Indecomposable] = Counter()
        for ind, mult in self.summands:
            acc[Indecomposable(1, ind.twist)] += ind.rank * mult
        return BundleObject._from_counter(acc)

    def __str__(self) -> str:
        if not self.summands:
            return "Z"
        return " + ".join(
            f"{mult}*{ind}" if mult != 1 else str(ind) for ind, mult in self.summands
        )


ZERO = BundleObject()
UNIT = BundleObject(((Indecomposable(1), 1),))


def atiyah(rank: int, twist: LineBundleClass = TRIVIAL) -> BundleObject:
    """The object with a single indecomposable summand E_rank (x) twist."""
    return BundleObject(((Indecomposable(rank, twist), 1),))


def tensor(a: BundleObject, b: BundleObject) -> BundleObject:
    return a * b


def hom_dim(a: BundleObject, b: BundleObject) -> int:
    """dim Hom(a, b): on indecomposables min(r, s) gated by equal twists.

    Agrees with ``(a.dual() * b).gamma_dim()``, i.e. with counting sections
    of the internal Hom.
    """
    total = 0
    for x, mx in a.summands:
        for y, my in b.summands:
            if x.twist == y.twist:
                total += mx * my * min(x.rank, y.rank)
    return total


def end_dim_projective_check(rank: int) -> bool:
    """Numerical projectivity criterion: dim End(E_r) must equal r."""
    if rank < 1:
        raise ValueError("rank must be positive")
    e = atiyah(rank)
    return hom_dim(e, e) == rank
