from fractions import Fraction

import pytest

from sullivan.core import CDGA, check_d_squared, coboundary_preimage
from sullivan.graphs import complete_graph, path_graph
from sullivan.models import (
    CocycleError,
    InadmissibleDegreeError,
    ModelError,
    build_mk,
    build_mng,
    cocycle_to_coboundary,
    ellipticity_certificates,
    formal_dimension,
    is_pure,
    mk_formal_dimension_formula,
    mng_formal_dimension_formula,
    model_from_dict,
    model_to_dict,
    monomial_cocycle_representative,
    pure_model,
    tilde,
    tilde_dimension_formula,
    vertex_x,
    vertex_z,
)


def test_build_mk_degrees(m6):
    assert m6.algebra.degrees == (28, 34, 117, 123, 129, 475)
    dz = m6.algebra.d_of_generator("z")
    # x1^6 prefix on the quadratic part, then x1^17 and x2^14
    assert dz.coefficient((17, 0, 0, 0, 0, 0)) == 1
    assert dz.coefficient((0, 14, 0, 0, 0, 0)) == 1
    assert dz.coefficient((8, 0, 0, 1, 1, 0)) == 1
    assert dz.coefficient((7, 1, 1, 0, 1, 0)) == -1
    assert dz.coefficient((6, 2, 1, 1, 0, 0)) == 1
    assert len(dz.terms) == 5


def test_build_mk_k8():
    m = build_mk(8)
    assert m.scheme.z == 15 * 64 - 88 + 1 == 873
    assert check_d_squared(m.algebra)


@pytest.mark.parametrize("k", [5, 4])
def test_build_mk_rejects(k):
    with pytest.raises(ValueError):
        build_mk(k)


def test_build_mng_degrees(mng_p3):
    degs = sorted(set(mng_p3.algebra.degrees))
    assert degs == [48, 58, 201, 211, 221, 464, 1391]
    assert mng_p3.connectivity == 47  # (30n+17) at n = 1


def test_build_mng_neighborhood_encoding(mng_p3):
    A = mng_p3.algebra
    # path v1 - v2 - v3: endpoints have one edge term, the center two
    for v, count in (("v1", 1), ("v2", 2), ("v3", 1)):
        dzv = A.d_of_generator(vertex_z(v))
        assert len(dzv.terms) == 1 + count  # cube plus one term per neighbor


def test_build_mng_rigid_part_is_mk10(mng_p3):
    m10 = build_mk(10)
    rigid = [g for g in mng_p3.algebra.generators if "_" not in g.name]
    assert tuple(g.degree for g in rigid) == m10.algebra.degrees
    for name in ("y1", "y2", "y3", "z"):
        a = mng_p3.algebra.d_of_generator(name)
        b = m10.algebra.d_of_generator(name)
        assert {m_[:6]: c for m_, c in a.terms.items()} == dict(b.terms.items())


def test_build_mng_rejects_bad_graphs():
    from sullivan.graphs import GraphError, SimpleGraph

    with pytest.raises(ValueError):
        build_mng(0, path_graph(3))
    with pytest.raises(GraphError):
        build_mng(1, SimpleGraph(["a"], []))
    with pytest.raises(GraphError):
        build_mng(1, SimpleGraph(["a", "b", "c"], [("a", "b")]))


def test_pure_model_table(mng_p3):
    P = pure_model(mng_p3)
    assert is_pure(P)
    assert check_d_squared(P)
    x1, x2 = P.gen("x1"), P.gen("x2")
    assert P.d_of_generator("z") == x1 ** 29 + x2 ** 24  # x1^(18n+11) + x2^(15n+9)
    assert P.d_of_generator(vertex_x("v1")).is_zero
    for v in mng_p3.graph.vertices:
        # dz_v is already pure and carries over unchanged (term-for-term)
        assert dict(P.d_of_generator(vertex_z(v)).terms) == dict(
            mng_p3.algebra.d_of_generator(vertex_z(v)).terms
        )
    assert P.d_of_generator("y1") == x1 ** 3 * x2


def test_formal_dimension_values(m6, mng_p3, mng_k3):
    # hand evaluation: (117+123+129+475) - (27+33) = 784
    assert formal_dimension(m6.algebra) == 784 == mk_formal_dimension_formula(6)
    assert formal_dimension(mng_p3.algebra) == 4704
    assert mng_formal_dimension_formula(1, 3) == 4704
    assert formal_dimension(mng_k3.algebra) == 4704
    assert formal_dimension(CDGA([])) == 0


def test_formal_dimension_closed_forms():
    # the full (n <= 10) x (|V| <= 8) grid runs in the acceptance suite
    for k in range(6, 61, 2):
        assert formal_dimension(build_mk(k).algebra) == mk_formal_dimension_formula(k)
    for n in (1, 2, 3):
        for nv in (2, 5, 8):
            m = build_mng(n, path_graph(nv))
            assert formal_dimension(m.algebra) == mng_formal_dimension_formula(n, nv)


def test_ellipticity_certificates(mng_p3, mng_k3):
    for model in (mng_p3, mng_k3):
        rep = ellipticity_certificates(model)
        assert rep.ok, rep.failures
        assert rep.identity_checks["x1_power_is_coboundary"]
        assert rep.identity_checks["x2_power_is_coboundary"]
        for v in model.graph.vertices:
            entry = rep.nilpotency[vertex_x(v)]
            assert entry["ok"] and entry["exponent"] <= 12


def test_ellipticity_failure_on_broken_model(mng_p3):
    # delete the pure terms of dz: x1 stops being nilpotent in the quotient
    A = mng_p3.algebra
    gens = [(g.name, g.degree) for g in A.generators]

    def images(alg):
        out = {}
        for i, p in A.diff.items():
            name = A.generators[i].name
            q = alg.zero()
            for mono, c in p.terms.items():
                if name == "z" and sum(1 for e in mono if e) == 1:
                    continue  # drop the pure power terms
                from sullivan.core import Polynomial

                q = q + Polynomial(alg, {mono: c})
            out[name] = q
        return out

    broken = CDGA(gens, images)
    import dataclasses

    model = dataclasses.replace(mng_p3, algebra=broken)
    rep = ellipticity_certificates(model)
    assert not rep.ok
    assert not rep.nilpotency["x1"]["ok"]


def test_cocycle_to_coboundary_zero(m6):
    assert cocycle_to_coboundary(m6, m6.algebra.zero()) == m6.algebra.zero()


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (2, 4), (5, 3)])
def test_cocycle_to_coboundary_roundtrip(m6, p, q):
    A = m6.algebra
    x1, x2, y1, y2 = A.gen("x1"), A.gen("x2"), A.gen("y1"), A.gen("y2")
    c = A.d(x1 ** p * x2 ** q * y1 * y2)
    w = cocycle_to_coboundary(m6, c)
    assert A.d(w) == c
    # agreement with the generic linear-solve oracle
    via_solver = coboundary_preimage(A, c)
    assert via_solver is not None and A.d(via_solver) == c


def test_cocycle_to_coboundary_explicit_construction(m6):
    # K1 = 1, K3 = 0: c = y1 x1^2 x2^3 - y2 x1^3 x2^2 = d(x2 y2 y1)
    A = m6.algebra
    x1, x2, y1, y2 = A.gen("x1"), A.gen("x2"), A.gen("y1"), A.gen("y2")
    c = y1 * x1 ** 2 * x2 ** 3 - y2 * x1 ** 3 * x2 ** 2
    w = cocycle_to_coboundary(m6, c)
    assert A.d(w) == c
    assert w == -(x2 * y1 * y2)  # x2 y2 y1 in canonical order


def test_cocycle_to_coboundary_errors(m6, mng_p3):
    A = m6.algebra
    y1 = A.gen("y1")
    with pytest.raises(CocycleError):
        cocycle_to_coboundary(m6, y1 * A.gen("x1") ** 2 * A.gen("x2") ** 2)  # not closed
    with pytest.raises(CocycleError):
        cocycle_to_coboundary(m6, A.gen("x1") ** 2)  # wrong shape
    c = A.d(A.gen("x1") ** 2 * A.gen("x2") ** 2 * y1 * A.gen("y2"))
    with pytest.raises(InadmissibleDegreeError):
        cocycle_to_coboundary(m6, c, enforce_lemma_degree=True)
    # admissible degrees of the graph family include |z|-|xv| and |z|-2|xv|
    assert mng_p3.lemma_degrees() == (1391, 927, 463)


def test_lemma_degree_slots_are_empty(m6, mng_p3):
    # verified by enumeration: at the lemma's target degrees there are no
    # y_i * Q(x1,x2) monomials at all, for either family at desk scale
    A = m6.algebra
    iy = [A.index[n] for n in ("y1", "y2", "y3")]
    for mono in A.basis_of_degree(m6.scheme.z):
        assert sum(mono[i] for i in iy) != 1 or mono[A.index["z"]] == 0
    B = mng_p3.algebra
    for target in mng_p3.lemma_degrees():
        for mono in B.basis_of_degree(target):
            names = {B.generators[i].name for i, e in enumerate(mono) if e}
            assert not (names & {"y1", "y2", "y3"} and names <= {"x1", "x2", "y1", "y2", "y3"})


def test_tilde_dimensions(mng_p3):
    A = mng_p3.algebra
    x = monomial_cocycle_representative(mng_p3)
    assert A.d(x).is_zero and x.homogeneous_degree() == 4704
    t = tilde(A, x, 4704)
    assert t.formal_dim == 2 * 4704 - 1 == 9407
    assert t.formal_dim == tilde_dimension_formula(1, 3)
    assert t.formal_dim % 4 == 3
    assert check_d_squared(t.algebra)
    tg = t.algebra.generators[t.algebra.index[t.top_generator]]
    assert tg.degree == 4703 and tg.is_odd


def test_tilde_dimension_formula_two_vertices():
    m = build_mng(1, path_graph(2))
    x = monomial_cocycle_representative(m)
    t = tilde(m.algebra, x, formal_dimension(m.algebra))
    assert t.formal_dim == tilde_dimension_formula(1, 2) == 7551
    assert t.formal_dim % 4 != 0


def test_tilde_errors(m6):
    A = m6.algebra
    with pytest.raises(CocycleError):
        tilde(A, A.gen("y1"), 117)  # y1 is not closed
    x = A.gen("x1")
    with pytest.raises(ModelError):
        tilde(A, x, 28)  # wrong top dimension
    top = formal_dimension(A)
    with pytest.raises(ModelError):
        tilde(A, x, top)  # degree mismatch with the representative


def test_model_serialization_roundtrip(m6, mng_p3):
    for model in (m6, mng_p3):
        data = model_to_dict(model)
        back = model_from_dict(data)
        assert model_to_dict(back) == data
    bad = model_to_dict(m6)
    bad["k"] = 8  # algebra no longer matches the parameters
    with pytest.raises(ModelError):
        model_from_dict(bad)
