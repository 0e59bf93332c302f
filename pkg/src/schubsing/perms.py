"""Permutations in one-line notation, rank tables, and the Bruhat order.

Everything downstream (pattern scans, tangent counts, slice models) is built
on the combinatorics in this module.  Conventions, fixed once and for all:

* positions and values are 1-indexed: a permutation of size n maps
  {1, ..., n} to itself, and ``w(i)`` is the value at position i;
* the rank table of w is the (n+1) x (n+1) array
  ``r_w(p, q) = #{i <= p : w(i) <= q}`` with a zeroth row and column of
  zeros, so inclusion-exclusion on 2 x 2 corners is uniform;
* ``v <= w`` in Bruhat order if and only if ``r_v(p, q) >= r_w(p, q)``
  for all p, q (smaller permutations have pointwise larger tables; the
  identity is the minimum).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "RankTable",
    "Region",
    "all_transpositions",
    "bruhat_leq",
    "compose",
    "format_permutation",
    "identity",
    "inverse",
    "length",
    "longest_element",
    "make_permutation",
    "parse_permutation",
    "permutation_from_rank_table",
    "rank_excess_region",
    "rank_table",
    "transposition",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation stored in one-line notation, e.g. (4, 2, 3, 1).

    >>> w = Permutation((4, 2, 3, 1))
    >>> w(1), w(4)
    (4, 1)
    >>> w.n
    4
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise ValueError("a permutation needs at least one value")
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.values!r}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Value at position i (1-indexed)."""
        return self.values[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({self.values!r})"


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate a sequence of values as a permutation of 1..n.

    >>> make_permutation([2, 1, 3])
    Permutation((2, 1, 3))
    >>> make_permutation([1, 1, 2])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 2)
    """
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation (n, n-1, ..., 1)."""
    return Permutation(tuple(range(n, 0, -1)))


def transposition(n: int, i: int, j: int) -> Permutation:
    """The transposition swapping i and j inside S_n.

    >>> transposition(4, 1, 3).values
    (3, 2, 1, 4)
    """
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    vals = list(range(1, n + 1))
    vals[i - 1], vals[j - 1] = vals[j - 1], vals[i - 1]
    return Permutation(tuple(vals))


def all_transpositions(n: int) -> list[Permutation]:
    """All n(n-1)/2 transpositions of S_n, ordered by (i, j)."""
    return [transposition(n, i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def inverse(w: Permutation) -> Permutation:
    """The inverse permutation.

    >>> inverse(Permutation((2, 3, 1))).values
    (3, 1, 2)
    """
    vals = [0] * w.n
    for i, x in enumerate(w.values, start=1):
        vals[x - 1] = i
    return Permutation(tuple(vals))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """The product u.v acting as (u.v)(i) = u(v(i)).

    >>> compose(Permutation((2, 1, 3)), Permutation((3, 1, 2))).values
    (3, 2, 1)
    """
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    return Permutation(tuple(u.values[x - 1] for x in v.values))


def length(w: Permutation) -> int:
    """Number of inversions, i.e. the dimension of the Schubert cell of w.

    >>> length(Permutation((4, 2, 3, 1)))
    5
    """
    vals = w.values
    return sum(
        1
        for i in range(w.n)
        for j in range(i + 1, w.n)
        if vals[i] > vals[j]
    )


@dataclass(frozen=True)
class RankTable:
    """The (n+1) x (n+1) table r_w(p, q) = #{i <= p : w(i) <= q}.

    Row p and column q run from 0 to n; row 0 and column 0 are zero.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        return self.rows[p][q]


def rank_table(w: Permutation) -> RankTable:
    """The rank table of w, built row by row.

    >>> rank_table(Permutation((2, 4, 1, 3)))[2, 2]
    1
    """
    n = w.n
    rows: list[tuple[int, ...]] = [(0,) * (n + 1)]
    prev = rows[0]
    for p in range(1, n + 1):
        wp = w.values[p - 1]
        row = tuple(prev[q] + (1 if wp <= q else 0) for q in range(n + 1))
        rows.append(row)
        prev = row
    return RankTable(n, tuple(rows))


def permutation_from_rank_table(t: RankTable) -> Permutation:
    """Recover the unique permutation with the given rank table.

    Inverse of :func:`rank_table`: position i takes the value q where the
    2 x 2 corner of the table at (i, q) jumps by one.
    """
    vals = []
    for p in range(1, t.n + 1):
        for q in range(1, t.n + 1):
            if t[p, q] - t[p - 1, q] - t[p, q - 1] + t[p - 1, q - 1] == 1:
                vals.append(q)
                break
        else:
            raise ValueError(f"row {p} of the table has no unit corner step")
    return make_permutation(vals)


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat order via rank-table domination: v <= w iff r_v >= r_w pointwise.

    >>> bruhat_leq(Permutation((2, 1, 4, 3)), Permutation((4, 2, 3, 1)))
    True
    >>> bruhat_leq(Permutation((4, 2, 3, 1)), Permutation((2, 1, 4, 3)))
    False
    """
    if v.n != w.n:
        raise ValueError(f"size mismatch: {v.n} vs {w.n}")
    rv = rank_table(v).rows
    rw = rank_table(w).rows
    for p in range(1, v.n):
        rvp = rv[p]
        rwp = rw[p]
        for q in range(1, v.n):
            if rvp[q] < rwp[q]:
                return False
    return True


@dataclass(frozen=True)
class Region:
    """A set of cells (p, q) in the grid [1, n] x [1, n]."""

    cells: frozenset[tuple[int, int]]

    def __contains__(self, cell: tuple[int, int]) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __bool__(self) -> bool:
        return bool(self.cells)


def rank_excess_region(v: Permutation, w: Permutation) -> Region:
    """Cells where the rank table of v strictly exceeds the one of w.

    For v <= w this is the region that carries all the local geometry of the
    pair: it is empty exactly when v = w, and every slice coordinate found by
    :func:`schubsing.slices.free_coordinates` has its test rectangle inside it.
    """
    if v.n != w.n:
        raise ValueError(f"size mismatch: {v.n} vs {w.n}")
    rv = rank_table(v).rows
    rw = rank_table(w).rows
    cells = frozenset(
        (p, q)
        for p in range(1, v.n)
        for q in range(1, v.n)
        if rv[p][q] > rw[p][q]
    )
    return Region(cells)


def parse_permutation(text: str) -> Permutation:
    """Parse "4,2,3,1" (any size) or compact "4231" (single digits, n <= 9).

    >>> parse_permutation("4,2,3,1").values
    (4, 2, 3, 1)
    >>> parse_permutation("4231").values
    (4, 2, 3, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        try:
            vals = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed permutation: {text!r}") from None
    elif text.isdigit():
        vals = [int(ch) for ch in text]
    else:
        raise ValueError(f"malformed permutation: {text!r}")
    return make_permutation(vals)


def format_permutation(w: Permutation) -> str:
    """One-line notation as comma-separated values, e.g. "4,2,3,1"."""
    return ",".join(str(x) for x in w.values)


def _main() -> None:  # pragma: no cover
    import doctest

    doctest.testmod()


if __name__ == "__main__":  # pragma: no cover
    _main()
