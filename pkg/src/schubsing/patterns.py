"""Smoothness of Schubert varieties by forbidden-pattern scan.

The Schubert variety of w is singular if and only if the one-line notation
of w contains an occurrence of one of two patterns on positions
i < j < k < l:

* ``4231``:  w(l) < w(j) < w(k) < w(i)
* ``3412``:  w(k) < w(l) < w(i) < w(j)

The scan is a direct O(n^4) loop over position quadruples, fine for every
intended size (n <= 10).  This criterion is one of two independent routes to
smoothness in the package; the other is the tangent-space count in
:mod:`schubsing.tangent`, and the two are compared permutation by
permutation in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .perms import Permutation

__all__ = ["PATTERN_4231", "PATTERN_3412", "PatternOccurrence", "find_patterns", "is_smooth"]

PATTERN_4231 = "4231"
PATTERN_3412 = "3412"


@dataclass(frozen=True)
class PatternOccurrence:
    """One forbidden pattern at 1-indexed positions i < j < k < l.

    >>> PatternOccurrence(PATTERN_4231, (1, 2, 3, 4)).kind
    '4231'
    """

    kind: str
    positions: tuple[int, int, int, int]


def _scan(w: Permutation) -> Iterator[PatternOccurrence]:
    vals = w.values
    n = w.n
    for i in range(n - 3):
        a = vals[i]
        for j in range(i + 1, n - 2):
            b = vals[j]
            for k in range(j + 1, n - 1):
                c = vals[k]
                for l in range(k + 1, n):
                    d = vals[l]
                    if d < b < c < a:
                        yield PatternOccurrence(
                            PATTERN_4231, (i + 1, j + 1, k + 1, l + 1)
                        )
                    elif c < d < a < b:
                        yield PatternOccurrence(
                            PATTERN_3412, (i + 1, j + 1, k + 1, l + 1)
                        )


def find_patterns(w: Permutation) -> list[PatternOccurrence]:
    """All occurrences of the two singular patterns, positions in lexicographic order.

    >>> [o.kind for o in find_patterns(Permutation((4, 2, 3, 1)))]
    ['4231']
    >>> find_patterns(Permutation((1, 2, 3, 4)))
    []
    """
    return list(_scan(w))


def is_smooth(w: Permutation) -> bool:
    """True iff the Schubert variety of w is smooth (no forbidden pattern).

    >>> is_smooth(Permutation((3, 4, 1, 2)))
    False
    >>> is_smooth(Permutation((4, 3, 2, 1)))
    True
    """
    return next(_scan(w), None) is None
