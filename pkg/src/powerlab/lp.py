"""A small dense simplex solver over exact rationals.

Only what the package needs: ``min c.x`` subject to ``A_ub x <= b_ub``,
``A_eq x == b_eq``, ``x >= 0`` except for variables listed as free.
Two-phase method with Bland's rule, so it terminates on degenerate
problems (and the nucleolus LPs are very degenerate).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple[Fraction, ...]] = None
    objective: Optional[Fraction] = None

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL


def _pivot(rows: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    prow = rows[r]
    p = prow[c]
    if p != 1:
        for k, val in enumerate(prow):
            if val:
                prow[k] = val / p
    for other in rows + [obj]:
        if other is prow:
            continue
        f = other[c]
        if f:
            for k, val in enumerate(prow):
                if val:
                    other[k] -= f * val


def _run(rows, obj, basis, allowed) -> bool:
    """Iterate until optimal (True) or unbounded (False)."""
    while True:
        enter = -1
        for j in allowed:
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return True
        leave = -1
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave < 0:
            return False
        _pivot(rows, obj, leave, enter)
        basis[leave] = enter


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    free: Sequence[int] = (),
) -> LPResult:
    """Minimize ``c.x`` exactly. Entries may be ints or Fractions."""
    nvar = len(c)
    free = sorted(set(free))
    # column layout: one column per variable, then a negative twin per free variable
    twin = {k: nvar + t for t, k in enumerate(free)}
    ncore = nvar + len(free)
    nslack = len(A_ub)

    def expand(row):
        out = [Fraction(v) for v in row]
        if len(out) != nvar:
            raise ValueError(f"constraint row has {len(out)} entries, expected {nvar}")
        out.extend(-out[k] for k in free)
        return out

    raw: list[tuple[list[Fraction], Fraction, int]] = []
    for t, (row, b) in enumerate(zip(A_ub, b_ub, strict=True)):
        raw.append((expand(row), Fraction(b), t))
    for row, b in zip(A_eq, b_eq, strict=True):
        raw.append((expand(row), Fraction(b), -1))

    m = len(raw)
    nart = m
    width = ncore + nslack + nart
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    zero = Fraction(0)
    for i, (core, b, slack) in enumerate(raw):
        row = core + [zero] * (nslack + nart) + [b]
        if slack >= 0:
            row[ncore + slack] = Fraction(1)
        if b < 0:
            row = [-v for v in row]
        if slack >= 0 and row[ncore + slack] == 1:
            basis.append(ncore + slack)
        else:
            row[ncore + nslack + i] = Fraction(1)
            basis.append(ncore + nslack + i)
        rows.append(row)

    art_start = ncore + nslack
    # phase one: minimise the sum of artificials in the basis
    obj = [zero] * (width + 1)
    for i, bv in enumerate(basis):
        if bv >= art_start:
            obj[bv] = Fraction(1)
    for i, bv in enumerate(basis):
        if obj[bv]:
            f = obj[bv]
            obj = [o - f * r for o, r in zip(obj, rows[i])]
    if any(bv >= art_start for bv in basis):
        _run(rows, obj, basis, range(width))
        if -obj[-1] > 0:
            return LPResult(INFEASIBLE)
        # drive zero-valued artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(rows):
            if basis[i] >= art_start:
                for j in range(art_start):
                    if rows[i][j]:
                        _pivot(rows, obj, i, j)
                        basis[i] = j
                        break
                else:
                    del rows[i]
                    del basis[i]
                    continue
            i += 1

    cost = [Fraction(v) for v in c] + [-Fraction(c[k]) for k in free]
    obj = cost + [zero] * (width - ncore + 1)
    for i, bv in enumerate(basis):
        f = obj[bv]
        if f:
            obj = [o - f * r for o, r in zip(obj, rows[i])]
    if not _run(rows, obj, basis, range(art_start)):
        return LPResult(UNBOUNDED)

    values = [zero] * width
    for i, bv in enumerate(basis):
        values[bv] = rows[i][-1]
    x = [values[k] for k in range(nvar)]
    for k in free:
        x[k] -= values[twin[k]]
    objective = sum((Fraction(ck) * xk for ck, xk in zip(c, x)), zero)
    return LPResult(OPTIMAL, tuple(x), objective)
