"""Builders and analyzers for the two model families and their extensions.

The rigid family mk(k) lives on six generators; the graph family mng(n, G)
tensors the rigid part at k = 6n+4 with one even and one odd generator per
vertex, the vertex differentials encoding the edge neighborhoods.  On top
of these sit the associated pure algebra, formal-dimension and ellipticity
certificates, the constructive cocycle-to-coboundary factorization, and
the one-generator extension used for the chirality certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arithmetic import DegreeScheme, isolation_check
from .core import (
    CDGA,
    Polynomial,
    cdga_to_dict,
    coboundary_preimage,
    polynomial_from_list,
    polynomial_to_list,
)
from .graphs import SimpleGraph
from .linalg import SparseEchelon


class ModelError(ValueError):
    pass


class CocycleError(ModelError):
    """Input expected to be a cocycle is not, or has the wrong shape."""


class InadmissibleDegreeError(ModelError):
    pass


def vertex_x(v) -> str:
    return f"x_{v}"


def vertex_z(v) -> str:
    return f"z_{v}"


@dataclass(frozen=True)
class ModelMk:
    k: int
    scheme: DegreeScheme
    algebra: CDGA

    @property
    def label(self) -> str:
        return f"mk(k={self.k})"

    @property
    def connectivity(self) -> int:
        return self.scheme.x1 - 1

    def lemma_degrees(self) -> tuple:
        return (self.scheme.z,)


@dataclass(frozen=True)
class ModelMnG:
    n: int
    graph: SimpleGraph
    scheme: DegreeScheme
    algebra: CDGA

    @property
    def label(self) -> str:
        return f"mng(n={self.n}, |V|={len(self.graph.vertices)})"

    @property
    def connectivity(self) -> int:
        return self.scheme.x1 - 1

    def lemma_degrees(self) -> tuple:
        s = self.scheme
        return (s.z, s.z - s.xv, s.z - 2 * s.xv)


def _rigid_images(A: CDGA, k: int) -> dict:
    x1, x2 = A.gen("x1"), A.gen("x2")
    y1, y2, y3 = A.gen("y1"), A.gen("y2"), A.gen("y3")
    return {
        "y1": x1 ** 3 * x2,
        "y2": x1 ** 2 * x2 ** 2,
        "y3": x1 * x2 ** 3,
        "z": x1 ** (3 * k - 12) * (x1 ** 2 * y2 * y3 - x1 * x2 * y1 * y3 + x2 ** 2 * y1 * y2)
        + x1 ** ((6 * k - 2) // 2)
        + x2 ** ((5 * k - 2) // 2),
    }


def build_mk(k: int) -> ModelMk:
    """The rigid six-generator model at even k > 4."""
    s = DegreeScheme.mk(k)
    gens = [
        ("x1", s.x1), ("x2", s.x2),
        ("y1", s.y1), ("y2", s.y2), ("y3", s.y3),
        ("z", s.z),
    ]
    A = CDGA(gens, lambda alg: _rigid_images(alg, k), minimal=True)
    assert min(A.degrees) == s.x1  # (5k-3)-connected
    assert isolation_check(s)
    return ModelMk(k, s, A)


def build_mng(n: int, graph: SimpleGraph) -> ModelMnG:
    """The graph-indexed model: rigid part at k = 6n+4 plus one even and
    one odd generator per vertex, with dz_v = x_v^3 + sum over edges."""
    s = DegreeScheme.mng(n)
    graph.require_model_shape()
    k = 6 * n + 4
    gens = [
        ("x1", s.x1), ("x2", s.x2),
        ("y1", s.y1), ("y2", s.y2), ("y3", s.y3),
        ("z", s.z),
    ]
    for v in graph.vertices:
        gens.append((vertex_x(v), s.xv))
        gens.append((vertex_z(v), s.zv))

    def images(A: CDGA) -> dict:
        out = _rigid_images(A, k)
        x2 = A.gen("x2")
        for v in graph.vertices:
            xv = A.gen(vertex_x(v))
            dzv = xv ** 3
            for w in graph.neighbors(v):
                dzv = dzv + xv * A.gen(vertex_x(w)) * x2 ** (5 * n + 3)
            out[vertex_z(v)] = dzv
        return out

    A = CDGA(gens, images, minimal=True)
    assert min(A.degrees) == s.x1  # (30n+17)-connected
    return ModelMnG(n, graph, s, A)


# -- the associated pure algebra ------------------------------------------------


def pure_model(model: ModelMnG) -> CDGA:
    """Same generators; even generators become closed and odd generators
    keep only the part of their image lying in the even subalgebra."""
    A = model.algebra
    odd = A.odd

    def project_even(p: Polynomial) -> Polynomial:
        kept = {
            m: c
            for m, c in p.terms.items()
            if not any(e and odd[i] for i, e in enumerate(m))
        }
        return Polynomial(A, kept, _clean=False)

    images = {}
    for i, p in A.diff.items():
        g = A.generators[i]
        if g.is_odd:
            images[g.name] = project_even(p)

    def rebuilt(B: CDGA) -> dict:
        out = {}
        for name, p in images.items():
            q = B.zero()
            for m, c in p.terms.items():
                q = q + Polynomial(B, {m: c})  # same generator order by construction
            out[name] = q
        return out

    return CDGA([(g.name, g.degree) for g in A.generators], rebuilt)


def is_pure(A: CDGA) -> bool:
    odd = A.odd
    for i, p in A.diff.items():
        if not A.generators[i].is_odd:
            return False
        if any(e and odd[j] for m in p.terms for j, e in enumerate(m)):
            return False
    return True


# -- formal dimension -----------------------------------------------------------


def formal_dimension(A: CDGA) -> int:
    """Sum of odd generator degrees minus sum of (even degree - 1)."""
    total = 0
    for g in A.generators:
        total += g.degree if g.is_odd else -(g.degree - 1)
    return total


def mk_formal_dimension_formula(k: int) -> int:
    return 15 * k * k + 44 * k - 20


def mng_formal_dimension_formula(n: int, num_vertices: int) -> int:
    return (540 * n * n + 984 * n + 396) + num_vertices * (
        360 * n * n + 436 * n + 132
    )


def tilde_dimension_formula(n: int, num_vertices: int) -> int:
    """Closed form for the extended model's dimension at parameter n with
    k = num_vertices vertices: (1080+720k)n^2 + (1968+872k)n + 264k + 791."""
    k = num_vertices
    return (1080 + 720 * k) * n * n + (1968 + 872 * k) * n + 264 * k + 791


# -- ellipticity certificates ----------------------------------------------------


def _even_polynomial_ring(A: CDGA) -> CDGA:
    return CDGA([(g.name, g.degree) for g in A.generators if not g.is_odd])


def _transport(p: Polynomial, target: CDGA) -> Polynomial:
    """Move a polynomial to an algebra whose generators are a sublist."""
    src = p.cdga
    pos = []
    for g in src.generators:
        pos.append(target.index.get(g.name))
    acc = {}
    for m, c in p.terms.items():
        out = [0] * len(target.generators)
        for i, e in enumerate(m):
            if e:
                if pos[i] is None:
                    raise ModelError(f"generator {src.generators[i].name} not in target ring")
                out[pos[i]] = e
        acc[tuple(out)] = c
    return Polynomial(target, acc)


def ideal_contains(ring: CDGA, ideal_gens, target: Polynomial) -> bool:
    """Homogeneous ideal membership at the target's degree, by an exact
    linear solve over the monomial multipliers of each generator."""
    deg = target.homogeneous_degree()
    if deg is None:
        return True
    ech = SparseEchelon()
    for g in ideal_gens:
        gdeg = g.homogeneous_degree()
        if gdeg is None or gdeg > deg:
            continue
        for mono in ring.basis_of_degree(deg - gdeg):
            prod = Polynomial(ring, {mono: Fraction(1)}) * g
            if prod:
                ech.add_row(dict(prod.terms))
    return ech.contains(dict(target.terms))


@dataclass
class EllipticityReport:
    ok: bool
    identity_checks: dict = field(default_factory=dict)
    nilpotency: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_dict(self):
        return {
            "ok": self.ok,
            "identities": self.identity_checks,
            "nilpotency": self.nilpotency,
            "failures": self.failures,
        }


def ellipticity_certificates(
    model: ModelMnG, *, exponent_bound: int = 12, hard_bound: int = 24
) -> EllipticityReport:
    """Certify that the associated pure algebra has finite-dimensional
    cohomology: two explicit coboundary identities kill the top powers of
    x1 and x2, and every vertex variable has a power inside the ideal
    spanned by the images of the odd generators."""
    n = model.n
    P = pure_model(model)
    report = EllipticityReport(ok=True)

    x1, x2, z = P.gen("x1"), P.gen("x2"), P.gen("z")
    y1, y3 = P.gen("y1"), P.gen("y3")
    first = P.d(z * x1 - x2 ** (15 * n + 6) * y3) == x1 ** (18 * n + 12)
    second = P.d(z * x2 - x1 ** (18 * n + 8) * y1) == x2 ** (15 * n + 10)
    report.identity_checks["x1_power_is_coboundary"] = first
    report.identity_checks["x2_power_is_coboundary"] = second
    if not first:
        report.failures.append("identity d(z*x1 - x2^(15n+6)*y3) = x1^(18n+12) fails")
    if not second:
        report.failures.append("identity d(z*x2 - x1^(18n+8)*y1) = x2^(15n+10) fails")

    ring = _even_polynomial_ring(P)
    ideal = [
        _transport(p, ring)
        for i, p in sorted(P.diff.items())
        if P.generators[i].is_odd
    ]

    def member(name, power_poly):
        ok = ideal_contains(ring, ideal, power_poly)
        if not ok:
            report.failures.append(f"{name} not in the pure differential ideal")
        return ok

    report.nilpotency["x1"] = {
        "exponent": 18 * n + 12,
        "ok": member("x1^(18n+12)", ring.gen("x1") ** (18 * n + 12)),
    }
    report.nilpotency["x2"] = {
        "exponent": 15 * n + 10,
        "ok": member("x2^(15n+10)", ring.gen("x2") ** (15 * n + 10)),
    }
    for v in model.graph.vertices:
        xv = ring.gen(vertex_x(v))
        found = None
        for N in range(2, hard_bound + 1):
            if ideal_contains(ring, ideal, xv ** N):
                found = N
                break
        entry = {"exponent": found, "ok": found is not None,
                 "escalated": bool(found and found > exponent_bound)}
        report.nilpotency[vertex_x(v)] = entry
        if found is None:
            report.failures.append(
                f"no power of {vertex_x(v)} up to {hard_bound} lies in the ideal"
            )
    report.ok = not report.failures
    return report


# -- constructive cocycle -> coboundary ------------------------------------------


def _split_y_times_even(model, c: Polynomial):
    """Decompose c = y1*A1 + y2*A2 + y3*A3 with Ai in Q[x1, x2]; raises
    CocycleError when c has any other shape."""
    A = model.algebra
    iy = [A.index["y1"], A.index["y2"], A.index["y3"]]
    ix = [A.index["x1"], A.index["x2"]]
    parts = [A.zero(), A.zero(), A.zero()]
    for m, coeff in c.terms.items():
        ys = [j for j in iy if m[j]]
        rest_ok = all(e == 0 or i in ix or i in iy for i, e in enumerate(m))
        if len(ys) != 1 or not rest_ok:
            raise CocycleError(
                "input must be a combination of y_i times a polynomial in x1, x2"
            )
        stripped = list(m)
        stripped[ys[0]] = 0
        tail = [0] * len(m)
        tail[ix[0]], tail[ix[1]] = m[ix[0]], m[ix[1]]
        if tuple(stripped) != tuple(tail):
            raise CocycleError("coefficient of y_i involves generators other than x1, x2")
        which = iy.index(ys[0])
        parts[which] = parts[which] + Polynomial(A, {tuple(stripped): coeff})
    return parts


def _divide_x_monomials(p: Polynomial, px1: int, px2: int):
    """Divide an x1/x2-polynomial by x1^px1 * x2^px2, or None if impossible."""
    A = p.cdga
    i1, i2 = A.index["x1"], A.index["x2"]
    acc = {}
    for m, c in p.terms.items():
        if m[i1] < px1 or m[i2] < px2:
            return None
        out = list(m)
        out[i1] -= px1
        out[i2] -= px2
        acc[tuple(out)] = c
    return Polynomial(A, acc)


def cocycle_to_coboundary(model, c: Polynomial, *, enforce_lemma_degree=False):
    """Explicit w with d(w) = c for a cocycle c = sum y_i A_i.

    Implements the factorization from the degree lemmas: each A_i is
    (x1 x2)^2 times some C_i, the cocycle condition forces
    x1^2 C1 + x1 x2 C2 + x2^2 C3 = 0, from which C1 = x2*K1, C3 = x1*K3
    and w = K1 x2 y2 y1 + K3 x1 y2 y3.  With enforce_lemma_degree the
    degree of c must be one of the lemma's target degrees (|z|, and for
    the graph family also |z|-|xv| and |z|-2|xv|); outside those degrees
    the factorization is attempted and an InadmissibleDegreeError is
    raised when it does not exist.
    """
    A = model.algebra
    if c.cdga is not A:
        raise ModelError("cocycle not over the model's algebra")
    if c.is_zero:
        return A.zero()
    deg = c.homogeneous_degree()
    if enforce_lemma_degree and deg not in model.lemma_degrees():
        raise InadmissibleDegreeError(
            f"degree {deg} is not one of the admissible degrees {model.lemma_degrees()}"
        )
    if A.d(c):
        raise CocycleError("input is not a cocycle")
    parts = _split_y_times_even(model, c)
    cs = []
    for i, p in enumerate(parts):
        q = _divide_x_monomials(p, 2, 2)
        if q is None:
            raise InadmissibleDegreeError(
                f"A_{i + 1} is not divisible by (x1*x2)^2; degree {deg} inadmissible"
            )
        cs.append(q)
    c1, c2, c3 = cs
    x1, x2 = A.gen("x1"), A.gen("x2")
    # cocycle condition, divided by (x1 x2)^3
    if x1 ** 2 * c1 + x1 * x2 * c2 + x2 ** 2 * c3 != A.zero():
        raise CocycleError("cocycle condition fails after factorization")
    k1 = _divide_x_monomials(c1, 0, 1)
    k3 = _divide_x_monomials(c3, 1, 0)
    # forced by the displayed identity: pure x1-powers in C1 would survive it
    assert k1 is not None and k3 is not None
    y1, y2, y3 = A.gen("y1"), A.gen("y2"), A.gen("y3")
    w = k1 * x2 * y2 * y1 + k3 * x1 * y2 * y3
    if A.d(w) != c:
        raise ModelError("constructed preimage failed verification")
    return w


# -- one-generator extension (doubled dimension, odd top) -------------------------


@dataclass(frozen=True)
class TildeModel:
    base: CDGA
    algebra: CDGA
    fundamental: Polynomial
    top_generator: str

    @property
    def formal_dim(self) -> int:
        return formal_dimension(self.algebra)


def tilde(A: CDGA, x: Polynomial, dim2m: int) -> TildeModel:
    """Extend A by one odd generator t with d(t) = x, where x represents
    the fundamental class in degree 2m = formal_dimension(A).  The result
    has formal dimension 4m - 1."""
    if x.cdga is not A:
        raise ModelError("representative not over the base algebra")
    if x.is_zero or A.d(x):
        raise CocycleError("fundamental representative must be a nonzero cocycle")
    deg = x.homogeneous_degree()
    if deg != dim2m:
        raise ModelError(f"representative degree {deg} != stated dimension {dim2m}")
    if dim2m % 2:
        raise ModelError("top dimension must be even")
    if dim2m != formal_dimension(A):
        raise ModelError(
            f"stated dimension {dim2m} != formal dimension {formal_dimension(A)}"
        )
    name = "ztop"
    while name in A.index:
        name += "_"
    gens = [(g.name, g.degree) for g in A.generators] + [(name, dim2m - 1)]

    def images(B: CDGA) -> dict:
        out = {}
        for i, p in A.diff.items():
            src = A.generators[i].name
            out[src] = _embed(p, B)
        out[name] = _embed(x, B)
        return out

    ext = CDGA(gens, images)
    result = TildeModel(A, ext, x, name)
    assert result.formal_dim == 2 * dim2m - 1
    return result


def _embed(p: Polynomial, target: CDGA) -> Polynomial:
    """Re-express p in an algebra that extends p's generator list."""
    src = p.cdga
    pos = [target.index[g.name] for g in src.generators]
    acc = {}
    for m, c in p.terms.items():
        out = [0] * len(target.generators)
        for i, e in enumerate(m):
            if e:
                out[pos[i]] = e
        acc[tuple(out)] = c
    return Polynomial(target, acc)


def monomial_cocycle_representative(model: ModelMnG) -> Polynomial:
    """A closed monomial of top degree, symmetric in the vertex variables,
    usable as a user-supplied fundamental-class representative.

    Top-degree cohomology is out of desk-scale reach, so representatives
    are supplied rather than computed; this helper picks a deterministic
    symmetric candidate (a pure product of closed even generators).
    """
    A = model.algebra
    s = model.scheme
    target = formal_dimension(A)
    nv = len(model.graph.vertices)
    for nv_used in (nv, 0):  # all vertex variables (symmetric) or none
        rem = target - nv_used * s.xv
        if rem < 0:
            continue
        for b in range(rem // s.x2 + 1):
            if (rem - b * s.x2) % s.x1:
                continue
            a = (rem - b * s.x2) // s.x1
            exps = {"x1": a, "x2": b}
            if nv_used:
                for v in model.graph.vertices:
                    exps[vertex_x(v)] = 1
            p = A.monomial({k: e for k, e in exps.items() if e})
            assert A.d(p).is_zero and p.homogeneous_degree() == target
            return p
    raise ModelError("no symmetric monomial representative in top degree")


# -- serialization ----------------------------------------------------------------


def model_to_dict(model) -> dict:
    if isinstance(model, ModelMk):
        return {"family": "mk", "k": model.k, "algebra": cdga_to_dict(model.algebra)}
    if isinstance(model, ModelMnG):
        return {
            "family": "mng",
            "n": model.n,
            "graph": model.graph.to_dict(),
            "algebra": cdga_to_dict(model.algebra),
        }
    raise ModelError(f"cannot serialize {type(model).__name__}")


def model_from_dict(data: dict):
    family = data.get("family")
    if family == "mk":
        model = build_mk(int(data["k"]))
    elif family == "mng":
        model = build_mng(int(data["n"]), SimpleGraph.from_dict(data["graph"]))
    else:
        raise ModelError(f"unknown model family {family!r}")
    if "algebra" in data and cdga_to_dict(model.algebra) != data["algebra"]:
        raise ModelError("stored algebra does not match its parameters (corrupt file)")
    return model
