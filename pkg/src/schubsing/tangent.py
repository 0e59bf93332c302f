"""Tangent-space dimensions of Schubert varieties at torus-fixed points.

For v <= w, the Zariski tangent space of the Schubert variety X_w at the
fixed point of v has dimension

    m(w, v) = #{ transpositions t : v.t <= w }

with t acting by multiplication on the right (swap two positions of v's
one-line notation).  The excess m(w, v) - length(w) is nonnegative, zero
exactly at smooth points, and this count is the ground truth the rest of the
package is verified against: no pattern data and no slice geometry enters
here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Permutation, all_transpositions, bruhat_leq, compose, length
from .symgroup import symmetric_group

__all__ = [
    "TangentReport",
    "singular_components",
    "singular_points",
    "tangent_dimension",
]


@dataclass(frozen=True)
class TangentReport:
    """Tangent dimension ``dim`` = m(w, v) and ``excess`` = m(w, v) - length(w)."""

    v: Permutation
    w: Permutation
    dim: int
    excess: int


def tangent_dimension(v: Permutation, w: Permutation) -> TangentReport:
    """Count transpositions t with v.t <= w; requires v <= w.

    >>> from .perms import make_permutation
    >>> tangent_dimension(make_permutation([2, 1, 4, 3]), make_permutation([4, 2, 3, 1])).dim
    6
    """
    if not bruhat_leq(v, w):
        raise ValueError(
            f"{v.values} is not Bruhat-below {w.values}; "
            "tangent dimensions are defined only on the lower interval"
        )
    count = sum(1 for t in all_transpositions(v.n) if bruhat_leq(compose(v, t), w))
    return TangentReport(v, w, count, count - length(w))


def singular_points(w: Permutation) -> set[Permutation]:
    """Fixed points v <= w where the tangent dimension exceeds length(w)."""
    group = symmetric_group(w.n)
    wi = group.index_of(w.values)
    cands = group.interval(wi)
    counts = group.tangent_counts(wi, cands)
    lw = length(w)
    return {
        group.perm(vi) for vi, count in zip(cands, counts) if count > lw
    }


def singular_components(w: Permutation) -> set[Permutation]:
    """Bruhat-maximal singular points: one per component of the singular locus.

    The result is an antichain; it is empty exactly when X_w is smooth.
    """
    group = symmetric_group(w.n)
    wi = group.index_of(w.values)
    cands = group.interval(wi)
    counts = group.tangent_counts(wi, cands)
    lw = length(w)
    singular = [vi for vi, count in zip(cands, counts) if count > lw]
    # Scan by decreasing length; a point is maximal iff it is not below any
    # already-kept maximal point.
    singular.sort(key=lambda vi: (-group.lengths[vi], group.perms[vi]))
    kept: list[int] = []
    kept_masks: list[bytes] = []
    for vi in singular:
        if any(mask[vi] for mask in kept_masks):
            continue
        kept.append(vi)
        kept_masks.append(group.lower_mask(vi))
    return {group.perm(vi) for vi in kept}
