"""Integer certificates behind the degree bookkeeping.

Two families of generator-degree schemes are covered:

* the rigid family, indexed by an even integer k > 4;
* the graph-indexed family, indexed by an integer n >= 1, whose rigid
  part coincides with the first family at k = 6n + 4.

The checks certify, for concrete parameter ranges, the divisibility and
diophantine facts that force the shape of every self-map: certain degree
differences are divisible by neither |x1| nor |x2|, and certain degrees
are not non-negative integer combinations of |x1| and |x2|.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


def xgcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


@dataclass(frozen=True)
class DegreeScheme:
    """Generator degrees of one model, as closed-form integers."""

    family: str  # "mk" | "mng"
    parameter: int
    x1: int
    x2: int
    y1: int
    y2: int
    y3: int
    z: int
    xv: int | None = None  # graph family only
    zv: int | None = None

    @staticmethod
    def mk(k: int) -> "DegreeScheme":
        if k % 2 or k <= 4:
            raise ValueError(f"k must be an even integer > 4, got {k}")
        return DegreeScheme(
            family="mk",
            parameter=k,
            x1=5 * k - 2,
            x2=6 * k - 2,
            y1=21 * k - 9,
            y2=22 * k - 9,
            y3=23 * k - 9,
            z=15 * k * k - 11 * k + 1,
        )

    @staticmethod
    def mng(n: int) -> "DegreeScheme":
        if n < 1:
            raise ValueError(f"n must be an integer >= 1, got {n}")
        return DegreeScheme(
            family="mng",
            parameter=n,
            x1=30 * n + 18,
            x2=36 * n + 22,
            y1=126 * n + 75,
            y2=132 * n + 79,
            y3=138 * n + 83,
            z=540 * n * n + 654 * n + 197,
            xv=180 * n * n + 218 * n + 66,
            zv=540 * n * n + 654 * n + 197,
        )

    def rigid_degrees(self) -> tuple:
        return (self.x1, self.x2, self.y1, self.y2, self.y3, self.z)

    def tampered(self, **changes) -> "DegreeScheme":
        """Copy with fields overridden; for negative-control tests."""
        return replace(self, **changes)


@dataclass(frozen=True)
class CheckRow:
    name: str
    value: int
    ok: bool


@dataclass(frozen=True)
class CheckReport:
    parameter: int
    ok: bool
    rows: tuple

    def to_dict(self):
        return {
            "parameter": self.parameter,
            "ok": self.ok,
            "checks": [
                {"name": r.name, "value": r.value, "verdict": r.ok} for r in self.rows
            ],
        }


def _indivisibility_rows(scheme: DegreeScheme, values) -> CheckReport:
    rows = []
    for name, value in values:
        ok = value % scheme.x1 != 0 and value % scheme.x2 != 0
        rows.append(CheckRow(name, value, ok))
    return CheckReport(scheme.parameter, all(r.ok for r in rows), tuple(rows))


def table1_values(scheme: DegreeScheme):
    """The six integers of the first divisibility table."""
    out = []
    for i, y in (("1", scheme.y1), ("2", scheme.y2), ("3", scheme.y3)):
        out.append((f"z-y{i}", scheme.z - y))
        out.append((f"z-y{i}-x1-x2", scheme.z - y - scheme.x1 - scheme.x2))
    return out


def table1_check(k: int) -> CheckReport:
    """Neither |x1| nor |x2| divides any of the six table-1 integers."""
    scheme = DegreeScheme.mk(k)
    return _indivisibility_rows(scheme, table1_values(scheme))


def table2_values(scheme: DegreeScheme):
    """The eighteen integers of the graph-family divisibility table."""
    if scheme.xv is None:
        raise ValueError("table 2 needs the graph-family scheme")
    out = []
    for i, y in (("1", scheme.y1), ("2", scheme.y2), ("3", scheme.y3)):
        r = scheme.z - y
        out.append((f"r{i}", r))
        out.append((f"r{i}-x1-x2", r - scheme.x1 - scheme.x2))
        out.append((f"r{i}-xv", r - scheme.xv))
        out.append((f"r{i}-xv-x1-x2", r - scheme.xv - scheme.x1 - scheme.x2))
        out.append((f"r{i}-2xv", r - 2 * scheme.xv))
        out.append((f"r{i}-2xv-x1-x2", r - 2 * scheme.xv - scheme.x1 - scheme.x2))
    return out


def table2_check(n: int) -> CheckReport:
    scheme = DegreeScheme.mng(n)
    return table2_check_scheme(scheme)


def table2_check_scheme(scheme: DegreeScheme) -> CheckReport:
    return _indivisibility_rows(scheme, table2_values(scheme))


@dataclass(frozen=True)
class DiophSolution:
    """General solution of alpha*a + beta*b = m over the integers.

    Solutions are (alpha0 + t*step_alpha, beta0 - t*step_beta) for t in Z,
    with alpha0 normalized into [0, step_alpha).
    """

    a: int
    b: int
    m: int
    alpha0: int
    beta0: int
    step_alpha: int  # b // g
    step_beta: int  # a // g

    def at(self, t: int):
        return (self.alpha0 + t * self.step_alpha, self.beta0 - t * self.step_beta)

    def solutions_with(self, min_alpha: int, min_beta: int):
        """All solutions with alpha >= min_alpha and beta >= min_beta."""
        lo = -((self.alpha0 - min_alpha) // self.step_alpha)
        hi = (self.beta0 - min_beta) // self.step_beta
        return [self.at(t) for t in range(lo, hi + 1)]


def dioph_solve(a: int, b: int, m: int):
    """General solution of alpha*a + beta*b = m, or None if gcd(a,b) ∤ m."""
    if a <= 0 or b <= 0:
        raise ValueError("coefficients must be positive")
    g, s, _t = xgcd(a, b)
    if m % g:
        return None
    step_alpha, step_beta = b // g, a // g
    alpha = s * (m // g)
    t = alpha // step_alpha  # floor -> normalized alpha in [0, step_alpha)
    alpha -= t * step_alpha
    beta = (m - alpha * a) // b
    sol = DiophSolution(a, b, m, alpha, beta, step_alpha, step_beta)
    assert sol.alpha0 * a + sol.beta0 * b == m
    return sol


def has_combination(a: int, b: int, m: int, *, min_alpha=0, min_beta=0) -> bool:
    sol = dioph_solve(a, b, m)
    return bool(sol and sol.solutions_with(min_alpha, min_beta))


def dioph_no_solution_check(n: int) -> CheckReport:
    """No positive pair reaches |xv|; no non-negative pair reaches the
    three z-derived degrees (z minus the degree of y1y2y3, xv·y1y2y3,
    xv²·y1y2y3)."""
    s = DegreeScheme.mng(n)
    yyy = s.y1 + s.y2 + s.y3
    rows = []
    cases = [
        ("xv", s.xv, 1),
        ("z-y1y2y3", s.z - yyy, 0),
        ("z-xv*y1y2y3", s.z - s.xv - yyy, 0),
        ("z-xv^2*y1y2y3", s.z - 2 * s.xv - yyy, 0),
    ]
    for name, m, lo in cases:
        ok = not has_combination(s.x1, s.x2, m, min_alpha=lo, min_beta=lo)
        rows.append(CheckRow(name, m, ok))
    return CheckReport(n, all(r.ok for r in rows), tuple(rows))


def gcd_identity_check(n: int) -> bool:
    """-6|x1| + 5|x2| = 2 for the graph family."""
    s = DegreeScheme.mng(n)
    return -6 * s.x1 + 5 * s.x2 == 2


def isolation_check(scheme: DegreeScheme) -> bool:
    """Strict chain |x1| < |x2| < |y1| < |y2| < |y3| < |x1 y1| < |x2 y3| < |z|.

    This is what lets the endomorphism solver pin each rigid generator's
    image to a scalar multiple of itself.
    """
    s = scheme
    chain = (s.x1, s.x2, s.y1, s.y2, s.y3, s.x1 + s.y1, s.x2 + s.y3, s.z)
    return all(a < b for a, b in zip(chain, chain[1:]))


def sweep(check, parameters) -> list:
    return [check(p) for p in parameters]
