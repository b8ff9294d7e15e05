"""Exact sparse linear algebra over Q.

Rows are dicts {column index: coefficient}.  Rows are scaled to integers
with their content divided out, and elimination uses integer cross
multiplication, so no fractions appear until the final back substitution.
Pivot columns are chosen sparsest-first with lowest-index tie-breaks, so
the computation (and the returned solution) is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import BudgetExceededError


def _integerize(row: dict[int, Fraction], rhs: Fraction):
    denom = rhs.denominator
    for v in row.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    irow = {c: int(v * denom) for c, v in row.items()}
    irhs = int(rhs * denom)
    content = abs(irhs)
    for v in irow.values():
        content = gcd(content, abs(v))
    if content > 1:
        irow = {c: v // content for c, v in irow.items()}
        irhs //= content
    return irow, irhs


def _combine(target, trhs, pivot, prhs, col):
    """target*a - t*pivot with a = pivot[col], t = target[col]; content
    normalized.  Afterwards target[col] = 0."""
    a = pivot[col]
    t = target[col]
    out = {}
    for c, v in target.items():
        out[c] = v * a
    for c, v in pivot.items():
        s = out.get(c, 0) - t * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    orhs = trhs * a - t * prhs
    content = abs(orhs)
    for v in out.values():
        content = gcd(content, abs(v))
        if content == 1:
            break
    if content > 1:
        out = {c: v // content for c, v in out.items()}
        orhs //= content
    return out, orhs


def solve_sparse(
    rows: list[dict[int, Fraction]],
    rhs: list[Fraction],
    ncols: int,
    max_entries: int | None = None,
) -> list[Fraction] | None:
    """One exact solution of A x = b (free variables set to 0), or None
    when the system is infeasible.

    Infeasibility is definitive: the elimination runs to completion and
    exhibits an inconsistent row.
    """
    if max_entries is not None and len(rows) * ncols > max_entries:
        raise BudgetExceededError(
            f"budget exhausted: linear system {len(rows)}x{ncols} exceeds "
            f"{max_entries} entries (raise max_matrix_entries / --budget-matrix)"
        )
    work = []
    for row, b in zip(rows, rhs):
        irow, ib = _integerize(dict(row), b)
        work.append((irow, ib))

    pivots: list[tuple[int, int]] = []  # (column, row index)
    assigned = set()
    while True:
        counts: dict[int, int] = {}
        for ri, (row, _) in enumerate(work):
            if ri in assigned:
                continue
            for c in row:
                counts[c] = counts.get(c, 0) + 1
        if not counts:
            break
        col = min(counts, key=lambda c: (counts[c], c))
        candidates = [
            ri
            for ri, (row, _) in enumerate(work)
            if ri not in assigned and col in row
        ]
        prow = min(candidates, key=lambda ri: (len(work[ri][0]), ri))
        pivots.append((col, prow))
        assigned.add(prow)
        pr, pb = work[prow]
        for ri in range(len(work)):
            if ri == prow:
                continue
            row, b = work[ri]
            if col in row:
                work[ri] = _combine(row, b, pr, pb, col)

    for ri, (row, b) in enumerate(work):
        if ri not in assigned and not row and b != 0:
            return None
        if ri not in assigned and row:
            raise AssertionError("elimination left an unassigned nonzero row")

    solution = [Fraction(0)] * ncols
    for col, ri in pivots:
        row, b = work[ri]
        solution[col] = Fraction(b, row[col])
    return solution


def rank_dense(rows: list[list[Fraction]]) -> int:
    """Plain dense row-echelon rank; an independent cross-check path."""
    mat = [list(r) for r in rows]
    rank = 0
    col = 0
    ncols = len(mat[0]) if mat else 0
    while rank < len(mat) and col < ncols:
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                f = mat[i][col] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank
