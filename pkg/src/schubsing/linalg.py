"""Exact rational linear algebra and multilinear polynomial scraps.

Everything the slice geometry needs and nothing more: matrix rank over the
rationals by Gaussian elimination on ``fractions.Fraction`` entries, plus a
tiny representation for the polynomials that show up as slice equations.

Those polynomials are always multilinear with integer coefficients: every
variable is one matrix entry, and a determinant uses each entry at most
once.  A polynomial is a dict mapping a sorted tuple of variable ids to its
integer coefficient; the empty tuple is the constant term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

__all__ = [
    "Poly",
    "matrix_rank",
    "poly_add",
    "poly_canonical",
    "poly_eval",
    "poly_is_homogeneous_quadratic",
    "poly_mul",
    "poly_scale",
    "poly_to_string",
    "poly_var",
    "sym_det",
]

Poly = dict[tuple[int, ...], int]


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a small dense matrix over the rationals."""
    work = [list(row) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(rank, len(work)) if work[r][col] != 0), None
        )
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        inv = Fraction(1, 1) / prow[col]
        for r in range(rank + 1, len(work)):
            factor = work[r][col] * inv
            if factor:
                row = work[r]
                for c in range(col, ncols):
                    row[c] -= factor * prow[c]
        rank += 1
        if rank == len(work):
            break
    return rank


def poly_var(i: int) -> Poly:
    return {(i,): 1}


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for mono, coeff in b.items():
        new = out.get(mono, 0) + coeff
        if new:
            out[mono] = new
        else:
            out.pop(mono, None)
    return out


def poly_scale(a: Poly, k: int) -> Poly:
    if k == 0:
        return {}
    return {mono: k * coeff for mono, coeff in a.items()}


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            merged = tuple(sorted(ma + mb))
            if len(set(merged)) != len(merged):
                raise ValueError("repeated variable; product is not multilinear")
            new = out.get(merged, 0) + ca * cb
            if new:
                out[merged] = new
            else:
                out.pop(merged, None)
    return out


def poly_eval(p: Poly, values: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for mono, coeff in p.items():
        term = Fraction(coeff)
        for i in mono:
            term *= values[i]
        total += term
    return total


def poly_is_homogeneous_quadratic(p: Poly) -> bool:
    return bool(p) and all(len(mono) == 2 for mono in p)


def poly_canonical(p: Poly) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Hashable normal form with the overall sign fixed by the leading term."""
    items = sorted(p.items())
    if items and items[0][1] < 0:
        items = [(mono, -coeff) for mono, coeff in items]
    return tuple(items)


def sym_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square matrix of multilinear polynomials.

    Cofactor expansion, always along the sparsest remaining row; the
    matrices here are small (at most 7 x 7) and mostly zero.
    """
    size = len(matrix)
    if size == 0:
        return {(): 1}

    def expand(rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
        if not rows:
            return {(): 1}
        best = min(
            rows, key=lambda r: sum(1 for c in cols if matrix[r][c])
        )
        rest_rows = tuple(r for r in rows if r != best)
        sign = 1 if rows.index(best) % 2 == 0 else -1
        total: Poly = {}
        for pos, c in enumerate(cols):
            entry = matrix[best][c]
            if not entry:
                continue
            rest_cols = cols[:pos] + cols[pos + 1 :]
            term = poly_mul(entry, expand(rest_rows, rest_cols))
            total = poly_add(total, poly_scale(term, sign if pos % 2 == 0 else -sign))
        return total

    index = tuple(range(size))
    return expand(index, index)


def poly_to_string(p: Poly, names: Mapping[int, str]) -> str:
    """Render as a sum of monomials, deterministically ordered."""
    if not p:
        return "0"
    parts: list[str] = []
    for mono, coeff in sorted(p.items()):
        body = "*".join(names[i] for i in mono) if mono else "1"
        mag = abs(coeff)
        term = body if mag == 1 and mono else f"{mag}*{body}" if mono else str(mag)
        if not parts:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
    return " ".join(parts)
