"""Free graded-commutative algebras over Q with a differential.

Monomials are dense exponent tuples over an ordered generator list; a
polynomial is a dict mapping monomial to a nonzero exact coefficient.
Coefficients are `fractions.Fraction` by default, but any commutative-ring
value supporting +, -, * and truthiness works; the endomorphism solver
reuses this arithmetic with polynomial coefficients in scalar unknowns.

Sign conventions: generators are kept in one canonical order (sorted by
(degree, name)); reordering signs are absorbed into coefficients by
counting odd-odd transpositions, and the square of any odd generator is
zero.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class UniverseError(ValueError):
    """Operands live over different generator sets."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self):
        if not self.name or not isinstance(self.name, str):
            raise ValueError("generator name must be a nonempty string")
        if self.degree < 2:
            raise ValueError(
                f"generator {self.name}: degree must be >= 2 (simply connected), got {self.degree}"
            )

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


class Polynomial:
    """Canonical sum of (coefficient, monomial) terms over a fixed CDGA."""

    __slots__ = ("cdga", "terms")

    def __init__(self, cdga, terms, _clean=True):
        self.cdga = cdga
        if _clean:
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms

    # -- ring structure ----------------------------------------------------

    def _check_universe(self, other):
        if self.cdga is not other.cdga:
            raise UniverseError("polynomials over different CDGAs")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_universe(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return Polynomial(self.cdga, terms, _clean=False)

    def __neg__(self):
        return Polynomial(self.cdga, {m: -c for m, c in self.terms.items()}, _clean=False)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            # scalar from the coefficient ring
            if other:
                return Polynomial(
                    self.cdga, {m: c * other for m, c in self.terms.items()}
                )
            return self.cdga.zero()
        self._check_universe(other)
        cdga = self.cdga
        mul_mono = cdga._mul_mono
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = mul_mono(m1, m2)
                if hit is None:
                    continue
                sign, m = hit
                c = c1 * c2
                if sign < 0:
                    c = -c
                s = acc.get(m)
                s = c if s is None else s + c
                if s:
                    acc[m] = s
                elif m in acc:
                    del acc[m]
        return Polynomial(cdga, acc, _clean=False)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.cdga.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.cdga is other.cdga and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((id(self.cdga), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- degree bookkeeping ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomial_degrees(self):
        deg = self.cdga.monomial_degree
        return {deg(m) for m in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.monomial_degrees()) <= 1

    def homogeneous_degree(self):
        """Total degree if all terms share one, None for the zero polynomial."""
        degs = self.monomial_degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def map_coefficients(self, fn):
        return Polynomial(self.cdga, {m: fn(c) for m, c in self.terms.items()})

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = [g.name for g in self.cdga.generators]
        chunks = []
        for m in sorted(self.terms):
            c = self.terms[m]
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(m)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            if isinstance(c, Fraction) and c == 1 and factors:
                chunks.append(body)
            elif isinstance(c, Fraction) and c == -1 and factors:
                chunks.append(f"-{body}")
            else:
                chunks.append(f"({c})*{body}" if factors else f"({c})")
        out = " + ".join(chunks)
        return out.replace("+ -", "- ")


class CDGA:
    """Free graded-commutative algebra on named generators with a differential.

    `differential` is a callable taking the constructed algebra and
    returning a dict {generator name: image polynomial}; omitted names get
    zero.  Every image must be homogeneous of degree |g|+1 and d must
    square to zero (checked unless `check=False`).
    """

    def __init__(self, generators, differential=None, *, check=True, minimal=False):
        gens = [g if isinstance(g, Generator) else Generator(*g) for g in generators]
        gens.sort(key=lambda g: (g.degree, g.name))
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.generators = tuple(gens)
        self.index = {g.name: i for i, g in enumerate(gens)}
        self.degrees = tuple(g.degree for g in gens)
        self.odd = tuple(g.is_odd for g in gens)
        self._n = len(gens)
        self._zero_mono = (0,) * self._n
        self._basis_cache = {}
        self._dmono_cache = {}
        # byte-mask DP: reachable total degrees from each generator suffix
        self._reach_bound = -1
        self._suffix_reach = None

        self.diff = {}
        if differential is not None:
            images = differential(self)
            for name, p in images.items():
                if name not in self.index:
                    raise ValueError(f"differential given for unknown generator {name}")
                if not isinstance(p, Polynomial) or p.cdga is not self:
                    raise UniverseError(f"differential image of {name} not over this CDGA")
                if p:
                    self.diff[self.index[name]] = p
        if check:
            self.validate(minimal=minimal)

    # -- element constructors ----------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self, {}, _clean=False)

    def one(self) -> Polynomial:
        return Polynomial(self, {self._zero_mono: Fraction(1)}, _clean=False)

    def gen(self, name: str) -> Polynomial:
        mono = [0] * self._n
        mono[self.index[name]] = 1
        return Polynomial(self, {tuple(mono): Fraction(1)}, _clean=False)

    def monomial(self, exponents: dict, coeff=Fraction(1)) -> Polynomial:
        """Monomial from {name: exponent}; rejects odd exponents > 1."""
        mono = [0] * self._n
        for name, e in exponents.items():
            i = self.index[name]
            if e < 0:
                raise ValueError("negative exponent")
            if self.odd[i] and e > 1:
                raise ValueError(f"odd generator {name} squared is zero")
            mono[i] = e
        return Polynomial(self, {tuple(mono): coeff})

    # -- monomial arithmetic -------------------------------------------------

    def monomial_degree(self, mono) -> int:
        degs = self.degrees
        return sum(e * degs[i] for i, e in enumerate(mono) if e)

    def _mul_mono(self, m1, m2):
        """(sign, product) for canonical monomials, or None when it vanishes."""
        odd = self.odd
        o1 = [i for i, e in enumerate(m1) if e and odd[i]]
        if o1:
            o2 = []
            for j, e in enumerate(m2):
                if e and odd[j]:
                    if m1[j]:
                        return None  # odd square
                    o2.append(j)
            inv = 0
            for j in o2:
                inv += len(o1) - bisect_right(o1, j)
            sign = -1 if inv & 1 else 1
        else:
            if any(e and odd[j] and m1[j] for j, e in enumerate(m2)):
                return None
            sign = 1
        return sign, tuple(a + b for a, b in zip(m1, m2))

    # -- differential --------------------------------------------------------

    def _d_monomial(self, mono) -> Polynomial:
        degs = self.degrees
        acc = self.zero()
        prefix_deg = 0
        for i, e in enumerate(mono):
            if e:
                dg = self.diff.get(i)
                if dg is not None:
                    # mono = A·g_i^e·B;  d hits g_i with sign (-1)^{|A|}
                    left = list(mono[:i]) + [e - 1] + [0] * (self._n - i - 1)
                    right = [0] * (i + 1) + list(mono[i + 1:])
                    piece = (
                        Polynomial(self, {tuple(left): Fraction(e)})
                        * dg
                        * Polynomial(self, {tuple(right): Fraction(1)})
                    )
                    acc = acc + piece if prefix_deg % 2 == 0 else acc - piece
                prefix_deg += e * degs[i]
        return acc

    def d(self, p: Polynomial) -> Polynomial:
        """Degree +1 derivation extending the generator table (graded Leibniz)."""
        if p.cdga is not self:
            raise UniverseError("polynomial not over this CDGA")
        acc = self.zero()
        for mono, coeff in p.terms.items():
            dm = self._dmono_cache.get(mono)
            if dm is None:
                dm = self._d_monomial(mono)
                self._dmono_cache[mono] = dm
            if dm:
                acc = acc + dm * coeff
        return acc

    def d_of_generator(self, name: str) -> Polynomial:
        return self.diff.get(self.index[name], self.zero())

    # -- structural checks -----------------------------------------------------

    def validate(self, *, minimal=False):
        for i, p in self.diff.items():
            g = self.generators[i]
            deg = p.homogeneous_degree()
            if deg is not None and deg != g.degree + 1:
                raise ValueError(
                    f"d({g.name}) has degree {deg}, expected {g.degree + 1}"
                )
            if minimal and any(sum(m) < 2 for m in p.terms):
                raise ValueError(f"d({g.name}) has a linear part; algebra not minimal")
        bad = self.d_squared_failures()
        if bad:
            name, img = bad[0]
            raise ValueError(f"d*d != 0 on generator {name}: d(d({name})) = {img}")

    def d_squared_failures(self):
        out = []
        for i, p in self.diff.items():
            dd = self.d(p)
            if dd:
                out.append((self.generators[i].name, dd))
        return out

    # -- degree-d monomial basis -------------------------------------------

    def _ensure_reachable(self, target: int):
        """Bitmask DP: bit t of _suffix_reach[i] says degree t is a sum of
        generator degrees using generators i..n-1 (odd ones at most once)."""
        if target <= self._reach_bound:
            return
        bound = max(target, 2 * max(self._reach_bound, 0), 1024)
        limit = (1 << (bound + 1)) - 1
        masks = [0] * (self._n + 1)
        masks[self._n] = 1
        for i in range(self._n - 1, -1, -1):
            m = masks[i + 1]
            d = self.degrees[i]
            if self.odd[i]:
                m |= (m << d) & limit
            else:
                prev = 0
                while prev != m:
                    prev = m
                    m |= (m << d) & limit
            masks[i] = m
        self._reach_bound = bound
        self._suffix_reach = masks

    def basis_of_degree(self, target: int):
        """All monomials of total degree `target`, sorted by exponent tuple.

        Bounded enumeration: even exponents capped by target/degree, odd by 1;
        a reachability bitmask prunes every dead subtree, so the walk only
        visits extendable prefixes.  Complete by construction.
        """
        if target < 0:
            return []
        cached = self._basis_cache.get(target)
        if cached is not None:
            return cached
        self._ensure_reachable(target)
        reach = self._suffix_reach
        n = self._n
        degs = self.degrees
        odd = self.odd
        out = []
        mono = [0] * n

        def walk(i, rem):
            if rem == 0:
                out.append(tuple(mono))
                return
            for j in range(i, n):
                dj = degs[j]
                if dj > rem:
                    continue
                cap = 1 if odd[j] else rem // dj
                nxt = rem
                for e in range(1, cap + 1):
                    nxt -= dj
                    if reach[j + 1] >> nxt & 1:
                        mono[j] = e
                        walk(j + 1, nxt)
                mono[j] = 0

        if reach[0] >> target & 1:
            walk(0, target)
        out.sort()
        self._basis_cache[target] = out
        return out

    def hilbert_count(self, target: int) -> int:
        """Coefficient of t^target in the Hilbert series of the free algebra.

        Independent of basis_of_degree: straight DP over generators.
        """
        counts = [0] * (target + 1)
        counts[0] = 1
        for i in range(self._n):
            d = self.degrees[i]
            if self.odd[i]:
                for t in range(target, d - 1, -1):
                    counts[t] += counts[t - d]
            else:
                for t in range(d, target + 1):
                    counts[t] += counts[t - d]
        return counts[target]

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"CDGA({gens})"


# -- convenience wrappers matching the operation-level API --------------------


def multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def apply_differential(algebra: CDGA, p: Polynomial) -> Polynomial:
    return algebra.d(p)


def check_d_squared(algebra: CDGA) -> bool:
    return not algebra.d_squared_failures()


def basis_of_degree(algebra: CDGA, degree: int):
    return algebra.basis_of_degree(degree)


def coboundary_preimage(algebra: CDGA, c: Polynomial):
    """Some m with d(m) = c, or None when c is not a coboundary.

    Exact sparse linear solve in the two relevant degrees.  No canonicity:
    any preimage may be returned.
    """
    from .linalg import SparseEchelon

    if c.cdga is not algebra:
        raise UniverseError("cocycle not over this CDGA")
    if c.is_zero:
        return algebra.zero()
    deg = c.homogeneous_degree()
    ech = SparseEchelon(track=True)
    lower = algebra.basis_of_degree(deg - 1)
    for mono in lower:
        img = algebra.d(Polynomial(algebra, {mono: Fraction(1)}))
        if img:
            ech.add_row(dict(img.terms), tag=mono)
    combo = ech.solve(dict(c.terms))
    if combo is None:
        return None
    return Polynomial(algebra, dict(combo))


# -- serialization -------------------------------------------------------------


def polynomial_to_list(p: Polynomial):
    names = [g.name for g in p.cdga.generators]
    out = []
    for mono in sorted(p.terms):
        coeff = p.terms[mono]
        if not isinstance(coeff, Fraction):
            raise TypeError("only rational-coefficient polynomials serialize")
        out.append(
            {
                "coeff": str(coeff),
                "monomial": {names[i]: e for i, e in enumerate(mono) if e},
            }
        )
    return out


def polynomial_from_list(algebra: CDGA, data) -> Polynomial:
    acc = algebra.zero()
    for term in data:
        acc = acc + algebra.monomial(term["monomial"], Fraction(term["coeff"]))
    return acc


def cdga_to_dict(algebra: CDGA) -> dict:
    return {
        "generators": [
            {"name": g.name, "degree": g.degree} for g in algebra.generators
        ],
        "differential": {
            algebra.generators[i].name: polynomial_to_list(p)
            for i, p in sorted(algebra.diff.items())
        },
    }


def cdga_from_dict(data: dict, *, check=True) -> CDGA:
    gens = [Generator(g["name"], g["degree"]) for g in data["generators"]]

    def differential(alg):
        return {
            name: polynomial_from_list(alg, terms)
            for name, terms in data.get("differential", {}).items()
        }

    return CDGA(gens, differential, check=check)


def cdga_to_json(algebra: CDGA, **kw) -> str:
    return json.dumps(cdga_to_dict(algebra), **kw)


def cdga_from_json(text: str, *, check=True) -> CDGA:
    return cdga_from_dict(json.loads(text), check=check)
