"""Exact sparse linear algebra over the rationals.

Incremental row echelon with optional combination tracking.  Rows are
dicts keyed by arbitrary orderable column labels (we use monomial
exponent tuples), values are Fractions.  This is all the linear algebra
the per-degree cochain computations need: span membership, solving, and
kernels.
"""

from __future__ import annotations

from fractions import Fraction


class SparseEchelon:
    """Accumulates a row space; each stored row is normalized on its pivot.

    With track=True every stored row carries the combination of inserted
    rows (by tag) that produced it, so `solve` can return certificates.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.pivots = {}  # pivot column -> (row dict, combination dict)

    def _reduce(self, row, combo):
        row = dict(row)
        while row:
            col = min(row)
            hit = self.pivots.get(col)
            if hit is None:
                return row, combo
            prow, pcombo = hit
            factor = row[col]  # pivot entries are normalized to 1
            for c, v in prow.items():
                s = row.get(c, 0) - factor * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
            if combo is not None:
                for t, v in pcombo.items():
                    s = combo.get(t, 0) - factor * v
                    if s:
                        combo[t] = s
                    else:
                        combo.pop(t, None)
        return row, combo

    def add_row(self, row: dict, tag=None):
        """Insert a row; returns None if independent, else the dependency.

        The dependency is the tracked combination expressing the inserted
        row in terms of earlier tags (requires track=True for a useful
        value).
        """
        combo = {tag: Fraction(1)} if self.track else None
        row, combo = self._reduce(row, combo)
        if not row:
            return combo if combo is not None else {}
        col = min(row)
        inv = Fraction(1) / row[col]
        row = {c: v * inv for c, v in row.items()}
        if combo is not None:
            combo = {t: v * inv for t, v in combo.items()}
        self.pivots[col] = (row, combo)
        return None

    def residual(self, row: dict) -> dict:
        out, _ = self._reduce(row, None)
        return out

    def contains(self, row: dict) -> bool:
        return not self.residual(row)

    def solve(self, target: dict):
        """Combination {tag: coeff} with sum(coeff * row_tag) = target, or None."""
        if not self.track:
            raise ValueError("solve requires track=True")
        row, combo = self._reduce(dict(target), {})
        if row:
            return None
        return {t: -v for t, v in combo.items()}

    @property
    def rank(self) -> int:
        return len(self.pivots)


def kernel_of_map(vectors):
    """Kernel basis of the linear map e_tag -> vector[tag].

    `vectors` is an iterable of (tag, row dict).  Returns a list of
    {tag: coeff} dicts spanning the kernel, in insertion order of the
    dependent tags.
    """
    ech = SparseEchelon(track=True)
    kernel = []
    for tag, row in vectors:
        if not row:
            kernel.append({tag: Fraction(1)})
            continue
        dep = ech.add_row(dict(row), tag=tag)
        if dep is not None:
            kernel.append(dep)
    return kernel


def solve_linear_unique(rows, rhs):
    """Solve a rational linear system expected to have a unique solution.

    rows: list of dicts {var: number}; rhs: list of numbers.  Returns
    {var: Fraction} when the solution is unique, the string
    "underdetermined" when the homogeneous kernel is nontrivial, or None
    when inconsistent.  Used for valuation analysis of monomial equation
    systems.

    Column labels are wrapped so the right-hand side sorts after every
    variable; entries of a stored echelon row always sit at columns >= its
    pivot, so descending back-substitution is valid.
    """
    RHS = (1, "rhs")
    variables = sorted({v for r in rows for v in r})
    ech = SparseEchelon()
    for i, row in enumerate(rows):
        # homogeneous convention: (coeffs | -rhs) dotted with (x, 1) vanishes
        vec = {(0, v): Fraction(c) for v, c in row.items() if c}
        if rhs[i]:
            vec[RHS] = Fraction(-rhs[i])
        if vec:
            ech.add_row(vec)
    if RHS in ech.pivots:
        return None  # a combination of equations reads 0 = 1
    solution = {}
    for col in sorted(ech.pivots, reverse=True):
        row, _ = ech.pivots[col]
        acc = -row.get(RHS, Fraction(0))
        for c, v in row.items():
            if c == col or c == RHS:
                continue
            if c not in solution:
                return "underdetermined"
            acc -= v * solution[c]
        solution[col] = acc
    if len(solution) != len(variables):
        return "underdetermined"
    return {v: solution[(0, v)] for v in variables}
