from fractions import Fraction

import pytest

from sullivan.core import CDGA
from sullivan.graphs import Permutation, automorphisms, find_group_isomorphism
from sullivan.endo import (
    AnsatzError,
    EndoClass,
    IDENTITY_CLASS,
    SolveError,
    ZERO_CLASS,
    degree_of,
    distinct_homotopy_classes,
    induced_map,
    rigid_scalar_solutions,
    rigid_scalar_solutions_oracle,
    solve_graph,
    solve_rigid,
    solve_scalar_system,
    tilde_monoid,
)
from sullivan.models import (
    build_mng,
    formal_dimension,
    monomial_cocycle_representative,
    tilde,
)
from sullivan.symcoeff import sym


@pytest.fixture(scope="module")
def p3_report(mng_p3):
    return solve_graph(mng_p3)


@pytest.fixture(scope="module")
def k3_report(mng_k3):
    return solve_graph(mng_k3)


# -- the deduction engine -----------------------------------------------------


def test_engine_simple_systems():
    x, y = sym("x"), sym("y")
    assert sorted(s.values["x"] for s in solve_scalar_system([x ** 2 - 1])) == [
        Fraction(-1),
        Fraction(1),
    ]
    assert solve_scalar_system([x ** 2 - 2]) == []
    assert solve_scalar_system([x ** 2 + 1]) == []
    sols = solve_scalar_system([x * y - 1, x - y])
    assert sorted(s.values["x"] for s in sols) == [Fraction(-1), Fraction(1)]
    sols = solve_scalar_system([x * y, x ** 2 - 1])
    assert all(s.values["y"] == 0 for s in sols) and len(sols) == 2
    with pytest.raises(SolveError):
        # a declared-nonzero scalar that the system never pins is an error
        solve_scalar_system([x * y], nonzero={"x"})


def test_engine_witness_freedom():
    # u is never constrained: it survives as a free direction
    x, u = sym("x"), sym("u")
    sols = solve_scalar_system([x - 1])
    assert sols[0].values == {"x": Fraction(1)}
    sols = solve_scalar_system([x - 1, (x - 1) * u])
    assert sols[0].free == ("u",)


def test_engine_dependent_chain():
    # u1 = u2 with both unconstrained: one stays free, one becomes dependent
    u1, u2, x = sym("u1"), sym("u2"), sym("x")
    sols = solve_scalar_system([u1 - u2, x - 1])
    (sol,) = sols
    assert sol.values["x"] == 1
    assert set(sol.free) | set(sol.dependent) == {"u1", "u2"}


# -- rigid family ---------------------------------------------------------------


def test_solve_rigid_m6(m6):
    rep = solve_rigid(m6)
    assert [e.describe() for e in rep.elements] == ["zero", "identity"]
    assert rep.invertibles == (1,)
    assert rep.degrees == (Fraction(0), Fraction(1))
    assert rep.composition == ((0, 0), (0, 1))


def test_solve_rigid_m8(m8):
    rep = solve_rigid(m8)
    assert [e.describe() for e in rep.elements] == ["zero", "identity"]


def test_rigid_scalar_system_k6():
    # a1^6 = a2^5 and a1^17 = a1^16 a2 force a1 = a2 in {0, 1}
    assert rigid_scalar_solutions(6) == [
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(1)),
    ]


@pytest.mark.parametrize("k", range(6, 61, 2))
def test_rigid_scalar_solver_vs_oracle(k):
    assert rigid_scalar_solutions(k) == rigid_scalar_solutions_oracle(k)


def test_solve_rigid_aborts_on_degree_collision(m6):
    # a second generator in an ansatz degree must abort the analysis
    A = m6.algebra
    gens = [(g.name, g.degree) for g in A.generators] + [("w", 28)]

    def images(alg):
        return {
            name: _copy_into(alg, A.d_of_generator(name))
            for name in ("y1", "y2", "y3", "z")
        }

    import dataclasses

    clashing = dataclasses.replace(m6, algebra=CDGA(gens, images))
    with pytest.raises(AnsatzError):
        solve_rigid(clashing)


def _copy_into(target, p):
    from sullivan.core import Polynomial

    src = p.cdga
    out = target.zero()
    for mono, c in p.terms.items():
        exps = {
            src.generators[i].name: e for i, e in enumerate(mono) if e
        }
        out = out + target.monomial(exps, c)
    return out


# -- graph family -----------------------------------------------------------------


def test_solve_graph_p3(mng_p3, p3_report):
    rep = p3_report
    assert rep.invertible_count == 2
    assert len(rep.elements) == 3  # zero + two automorphism classes
    auts = automorphisms(mng_p3.graph)
    assert rep.aut_order == auts.order == 2
    assert rep.aut_isomorphism is not None


def test_solve_graph_k3(mng_k3, k3_report):
    rep = k3_report
    assert rep.invertible_count == 6
    from sullivan.graphs import GroupTable

    assert find_group_isomorphism(
        GroupTable.symmetric(3), rep.invertible_group_table()
    )


def test_solve_graph_asymmetric(mng_asym6):
    rep = solve_graph(mng_asym6)
    assert rep.invertible_count == 1  # homotopically rigid up to the zero class
    assert [e.describe() for e in rep.elements] == ["zero", "identity(aut)"]


def test_monoid_laws(p3_report, k3_report):
    for rep in (p3_report, k3_report):
        n = len(rep.elements)
        zero = rep.index_of(ZERO_CLASS)
        iden = next(i for i, e in enumerate(rep.elements) if e.is_identity)
        for i in range(n):
            assert rep.compose(zero, i) == zero == rep.compose(i, zero)
            assert rep.compose(iden, i) == i == rep.compose(i, iden)
            for j in range(n):
                for k in range(n):
                    assert rep.compose(rep.compose(i, j), k) == rep.compose(
                        i, rep.compose(j, k)
                    )
        invertibles = set(rep.invertibles)
        for i in invertibles:
            assert any(rep.compose(i, j) == iden for j in invertibles)


def test_invertibles_match_automorphism_group(mng_p3, p3_report):
    auts = automorphisms(mng_p3.graph)
    iso = p3_report.aut_isomorphism
    # explicit bijection preserving composition
    assert sorted(int(i) for i in iso) == list(p3_report.invertibles)
    table = p3_report.invertible_group_table()
    assert find_group_isomorphism(table, auts.as_group_table()) is not None


def test_induced_maps(mng_p3, p3_report):
    A = mng_p3.algebra
    zero_images = induced_map(mng_p3, ZERO_CLASS)
    assert all(p.is_zero for p in zero_images.values())
    swap = next(
        e for e in p3_report.elements if e.kind == "graph_aut" and not e.is_identity
    )
    images = induced_map(mng_p3, swap)
    assert images["x_v1"] == A.gen("x_v3")
    assert images["z_v1"] == A.gen("z_v3")
    assert images["x_v2"] == A.gen("x_v2")
    for name in ("x1", "x2", "y1", "y2", "y3", "z"):
        assert images[name] == A.gen(name)


def test_induced_map_identity(m6):
    images = induced_map(m6, IDENTITY_CLASS)
    assert all(images[g.name] == m6.algebra.gen(g.name) for g in m6.algebra.generators)


def test_degree_dichotomy(p3_report):
    for e, d in zip(p3_report.elements, p3_report.degrees):
        assert d == (0 if e.kind == "zero" else 1)
        assert degree_of(e, on_tilde=True) in (0, 1)


def test_distinct_homotopy_classes(p3_report):
    elements = p3_report.elements
    assert distinct_homotopy_classes(elements[0], elements[1])
    # same permutation means the same class regardless of witnesses
    swap = next(e for e in elements if e.kind == "graph_aut" and not e.is_identity)
    again = EndoClass("graph_aut", Permutation(dict(swap.sigma.mapping)))
    assert not distinct_homotopy_classes(swap, again)


def test_tilde_monoid_strong_chirality(mng_p3, p3_report):
    x = monomial_cocycle_representative(mng_p3)
    tm = tilde(mng_p3.algebra, x, formal_dimension(mng_p3.algebra))
    rep = tilde_monoid(tm, mng_p3, p3_report)
    assert all(d in (0, 1) for d in rep.degrees)
    assert rep.invertible_count == p3_report.invertible_count
    assert tm.formal_dim % 4 != 0


def test_report_json(p3_report):
    import json

    data = p3_report.to_dict()
    assert json.loads(json.dumps(data)) == data
    assert data["invertible_count"] == 2
