"""Partitions, compositions and index subsets, with the Set/Comp conversions.

These index the quasisymmetric and Schur expansions: a subset S of
{1,...,n-1} corresponds to the composition of n whose partial sums are S.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))

    @property
    def n(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)


def hook_partition(n, d):
    """The hook (d+1, 1^(n-d-1)) of n, for 0 <= d <= n-1."""
    if not 0 <= d <= n - 1:
        raise ValueError("hook needs 0 <= d <= n-1")
    return Partition((d + 1,) + (1,) * (n - d - 1))


@dataclass(frozen=True)
class Composition:
    """A tuple of positive integers; the empty composition of 0 is allowed."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError("composition parts must be positive: %r" % (parts,))

    @property
    def n(self):
        return sum(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class IndexSubset:
    """A subset of {1,...,n-1} for an ambient n, kept sorted."""

    elements: tuple
    n: int

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        object.__setattr__(self, "elements", elems)
        if len(set(elems)) != len(elems):
            raise ValueError("repeated elements: %r" % (elems,))
        if any(not 1 <= e <= self.n - 1 for e in elems):
            raise ValueError("elements of %r not inside {1,...,%d}" % (elems, self.n - 1))

    def __str__(self):
        return "{%s}/n=%d" % (",".join(str(e) for e in self.elements), self.n)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def bitmask(self):
        """Bit i-1 set iff i is in the subset."""
        mask = 0
        for e in self.elements:
            mask |= 1 << (e - 1)
        return mask


def comp_of_set(subset):
    """The composition (s1, s2-s1, ..., n-sk) of the subset's ambient n."""
    s = subset.elements
    n = subset.n
    if not s:
        return Composition((n,)) if n else Composition(())
    parts = [s[0]]
    for i in range(1, len(s)):
        parts.append(s[i] - s[i - 1])
    parts.append(n - s[-1])
    return Composition(tuple(parts))


def set_of_comp(comp):
    """The partial sums of the composition, excluding the total."""
    elems = []
    total = 0
    for p in comp.parts[:-1]:
        total += p
        elems.append(total)
    return IndexSubset(tuple(elems), comp.n)


def enumerate_partitions(n):
    """All partitions of n in reverse-lexicographic order, e.g. (3),(2,1),(1,1,1)."""
    out = []

    def rec(remaining, bound, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(bound, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n if n else 1, [])
    return out


def enumerate_subsets(n):
    """All subsets of {1,...,n-1} ordered by bitmask value."""
    out = []
    for mask in range(1 << max(n - 1, 0)):
        elems = tuple(i + 1 for i in range(n - 1) if mask >> i & 1)
        out.append(IndexSubset(elems, n))
    return out
