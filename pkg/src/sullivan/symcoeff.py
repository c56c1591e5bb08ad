"""Sparse multivariate polynomials over Q in named scalar unknowns.

These serve as the coefficient ring when a generic endomorphism is pushed
through the graded algebra: coefficients of the ansatz are unknowns, and
comparing d(f(g)) with f(d(g)) produces polynomial equations in them.
Only ring operations and substitution are needed; no division.
"""

from __future__ import annotations

from fractions import Fraction

# a term signature is a tuple of (name, exponent) pairs sorted by name
_ONE = ()


def _mul_sig(s1, s2):
    if not s1:
        return s2
    if not s2:
        return s1
    merged = dict(s1)
    for name, e in s2:
        merged[name] = merged.get(name, 0) + e
    return tuple(sorted(merged.items()))


class SymPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean=True):
        if terms is None:
            terms = {}
        if _clean:
            terms = {s: c for s, c in terms.items() if c}
        self.terms = terms

    # -- constructors --------------------------------------------------------

    @staticmethod
    def const(value) -> "SymPoly":
        value = Fraction(value)
        return SymPoly({_ONE: value} if value else {}, _clean=False)

    @staticmethod
    def var(name: str) -> "SymPoly":
        return SymPoly({((name, 1),): Fraction(1)}, _clean=False)

    @staticmethod
    def coerce(value) -> "SymPoly":
        if isinstance(value, SymPoly):
            return value
        return SymPoly.const(value)

    # -- ring ops ------------------------------------------------------------

    def __add__(self, other):
        other = SymPoly.coerce(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            v = terms.get(s)
            v = c if v is None else v + c
            if v:
                terms[s] = v
            elif s in terms:
                del terms[s]
        return SymPoly(terms, _clean=False)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({s: -c for s, c in self.terms.items()}, _clean=False)

    def __sub__(self, other):
        return self + (-SymPoly.coerce(other))

    def __rsub__(self, other):
        return SymPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            other = Fraction(other)
            if not other:
                return SymPoly()
            return SymPoly({s: c * other for s, c in self.terms.items()}, _clean=False)
        acc = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                s = _mul_sig(s1, s2)
                c = c1 * c2
                v = acc.get(s)
                v = c if v is None else v + c
                if v:
                    acc[s] = v
                elif s in acc:
                    del acc[s]
        return SymPoly(acc, _clean=False)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = SymPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == SymPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure queries ----------------------------------------------------

    def variables(self):
        out = set()
        for s in self.terms:
            for name, _ in s:
                out.add(name)
        return out

    @property
    def is_constant(self):
        return all(s == _ONE for s in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(_ONE, Fraction(0))

    def monomials(self):
        """List of (coefficient, {var: exp}) pairs."""
        return [(c, dict(s)) for s, c in self.terms.items()]

    def linear_coefficient(self, name):
        """(c, rest) with self = c*name + rest when `name` appears only
        linearly and c is a nonzero rational; otherwise None."""
        coeff = Fraction(0)
        rest = {}
        for s, c in self.terms.items():
            d = dict(s)
            e = d.pop(name, 0)
            if e == 0:
                rest[s] = c
            elif e == 1 and not d:
                coeff += c
            else:
                return None
        if not coeff:
            return None
        return coeff, SymPoly(rest, _clean=False)

    def substitute(self, mapping: dict) -> "SymPoly":
        """Replace unknowns by Fractions or SymPolys."""
        acc = SymPoly()
        for s, c in self.terms.items():
            term = SymPoly.const(c)
            for name, e in s:
                val = mapping.get(name)
                if val is None:
                    term = term * SymPoly({((name, e),): Fraction(1)}, _clean=False)
                else:
                    term = term * (SymPoly.coerce(val) ** e)
            acc = acc + term
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        chunks = []
        for s in sorted(self.terms):
            c = self.terms[s]
            body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in s)
            if not body:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(body)
            elif c == -1:
                chunks.append(f"-{body}")
            else:
                chunks.append(f"{c}*{body}")
        return " + ".join(chunks).replace("+ -", "- ")


def sym(name: str) -> SymPoly:
    return SymPoly.var(name)
