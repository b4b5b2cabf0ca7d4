from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ihg.model import build
from ihg.solver import (
    InfoForm,
    NonPositiveParams,
    NotWellDefined,
    Params,
    adjacency_matrix,
    diagnostics,
    evaluate,
    is_configured,
    leaf_vector,
    solve_symbolic,
    solve_values,
)
from ihg.testkit import GenSpec, generate

F = Fraction


def form(nu, eps) -> InfoForm:
    return InfoForm(F(nu), F(eps))


class TestInfoForm:
    def test_str_general(self):
        assert str(form(F(3, 2), 2)) == "3/2*nu + 2*eps"

    def test_str_unit_coefficients(self):
        assert str(form(1, 1)) == "nu + eps"
        assert str(form(1, 0)) == "nu"
        assert str(form(0, 1)) == "eps"

    def test_str_zero_and_negative(self):
        assert str(form(0, 0)) == "0"
        assert str(form(0, 2)) == "2*eps"
        assert str(form(1, -1)) == "nu - eps"
        assert str(form(0, -4)) == "-4*eps"

    def test_arithmetic(self):
        total = form(1, 2) + form(F(1, 2), -1)
        assert total == form(F(3, 2), 1)
        assert form(1, 2).scaled(F(1, 2)) == form(F(1, 2), 1)

    def test_evaluate(self):
        params = Params(F(1, 2), F(1))
        assert form(F(3, 2), 2).evaluate(params) == F(11, 4)


class TestParams:
    def test_accepts_positive(self):
        Params(F(1, 10), F(3))

    @pytest.mark.parametrize("nu,eps", [(0, 1), (1, 0), (-1, 1), (1, -1)])
    def test_rejects_non_positive(self, nu, eps):
        with pytest.raises(NonPositiveParams):
            Params(F(nu), F(eps))


class TestAdjacency:
    def test_small_dag_matrix(self, small_dag):
        a = adjacency_matrix(small_dag)
        assert a.ids == ("p1", "p2", "p3", "p4")
        assert a.rows == (
            (F(0), F(0), F(1, 2), F(0)),
            (F(0), F(0), F(1, 2), F(1)),
            (F(0), F(0), F(0), F(1)),
            (F(0), F(0), F(0), F(0)),
        )
        assert a.entry("p2", "p4") == 1

    def test_parallel_contributions_accumulate(self):
        h = build(["a", "b", "c"], [(("a",), ("c",)), (("a", "b"), ("c",))])
        a = adjacency_matrix(h)
        assert a.entry("a", "c") == F(3, 2)

    def test_multi_head_gives_full_share_per_member(self):
        h = build(["a", "b", "c"], [(("a",), ("b", "c"))])
        a = adjacency_matrix(h)
        assert a.entry("a", "b") == 1
        assert a.entry("a", "c") == 1

    def test_leaf_vector(self, small_dag):
        assert leaf_vector(small_dag) == (0, 0, 0, 1)


class TestSolve:
    def test_small_dag_forms(self, small_dag):
        assert solve_symbolic(small_dag) == (
            form(F(1, 2), 1),
            form(F(3, 2), 2),
            form(1, 1),
            form(1, 0),
        )

    def test_chain(self):
        h = build(["a", "b", "c"], [(("a",), ("b",)), (("b",), ("c",))])
        assert solve_symbolic(h) == (form(1, 2), form(1, 1), form(1, 0))

    def test_edgeless(self):
        h = build(["a", "b"])
        assert solve_symbolic(h) == (form(1, 0), form(1, 0))

    def test_empty_graph(self):
        assert solve_symbolic(build([])) == ()

    def test_solvable_cycle_solution_is_pure_eps(self, solvable_cycle):
        assert solve_symbolic(solvable_cycle) == (form(0, 2), form(0, 3), form(0, 2))

    def test_not_well_defined_raises(self, singular_cycle):
        with pytest.raises(NotWellDefined):
            solve_symbolic(singular_cycle)

    def test_solve_values(self, small_dag):
        values = solve_values(small_dag, Params(F(1, 2), F(1)))
        assert values == (F(5, 4), F(11, 4), F(3, 2), F(1, 2))
        assert evaluate(solve_symbolic(small_dag), Params(F(1, 2), F(1))) == values

    def test_negative_coefficients_reported_verbatim(self):
        h = build(
            ["a", "b", "c"],
            [(("a",), ("b", "c")), (("b",), ("a",)), (("c",), ("a",))],
        )
        assert solve_symbolic(h) == (form(0, -4), form(0, -3), form(0, -3))


class TestDiagnostics:
    def test_small_dag(self, small_dag):
        d = diagnostics(small_dag)
        assert d.well_defined
        assert d.det_i_minus_a == 1
        assert d.necessary_values == (F(0), F(0), F(0), F(0))
        assert d.necessary_passes
        assert d.sufficient_condition
        assert d.configured_universally is True

    def test_singular_cycle_not_sufficient(self, singular_cycle):
        d = diagnostics(singular_cycle)
        assert not d.well_defined
        assert d.det_i_minus_a == 0
        assert d.necessary_values == (F(5, 6), F(1, 2), F(1, 3), F(0))
        assert d.necessary_passes
        assert not d.sufficient_condition
        assert d.configured_universally is None

    def test_solvable_cycle_not_necessary(self, solvable_cycle):
        d = diagnostics(solvable_cycle)
        assert d.well_defined
        assert d.det_i_minus_a == F(1, 2)
        assert d.necessary_values == (F(1, 2), F(1, 2), F(0))
        assert not d.sufficient_condition
        assert d.configured_universally is True

    def test_negative_witness_not_configured(self):
        h = build(
            ["a", "b", "c"],
            [(("a",), ("b", "c")), (("b",), ("a",)), (("c",), ("a",))],
        )
        d = diagnostics(h)
        assert d.well_defined
        assert d.configured_universally is False
        assert not is_configured(h, Params(F(1), F(1)))

    def test_is_configured(self, small_dag, singular_cycle):
        assert is_configured(small_dag, Params(F(1), F(1)))
        # not well defined: answers False rather than raising
        assert not is_configured(singular_cycle, Params(F(1), F(1)))


def residual(h, forms):
    """Substitute forms back into the defining equations."""
    a = adjacency_matrix(h)
    leaf = leaf_vector(h)
    out = []
    for i in range(h.order):
        expected = InfoForm(F(leaf[i]), F(0))
        for j in range(h.order):
            if a.rows[i][j]:
                expected = expected + (forms[j] + InfoForm(F(0), F(1))).scaled(a.rows[i][j])
        out.append(InfoForm(forms[i].nu_coeff - expected.nu_coeff,
                            forms[i].eps_coeff - expected.eps_coeff))
    return out


def test_fixture_solutions_have_zero_residual(small_dag, solvable_cycle, analysis, optimization):
    for h in (small_dag, solvable_cycle, analysis, optimization):
        forms = solve_symbolic(h)
        assert all(r == InfoForm(F(0), F(0)) for r in residual(h, forms))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 7), st.booleans())
def test_permuting_propositions_permutes_forms(seed, nodes, acyclic):
    h = generate(GenSpec(nodes=nodes, max_edges=nodes + 2, acyclic=acyclic, seed=seed))
    try:
        base = dict(zip(h.ids, solve_symbolic(h)))
    except NotWellDefined:
        base = None
    rotated_ids = h.ids[1:] + h.ids[:1]
    relabeled = build(
        [h.proposition(pid) for pid in rotated_ids],
        [(e.tail, e.head) for e in h.edges],
    )
    if base is None:
        with pytest.raises(NotWellDefined):
            solve_symbolic(relabeled)
        return
    rotated = dict(zip(relabeled.ids, solve_symbolic(relabeled)))
    assert rotated == base


def _cofactor_det(m):
    if not m:
        return F(1)
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * _cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 6))
def test_well_defined_iff_one_not_eigenvalue(seed, nodes):
    """det(I - A) agrees with an independent cofactor expansion, so the
    well-defined verdict matches "1 is not an eigenvalue of A" exactly."""
    h = generate(GenSpec(nodes=nodes, max_edges=2 * nodes, seed=seed))
    a = adjacency_matrix(h)
    system = [
        [(F(1) if i == j else F(0)) - a.rows[i][j] for j in range(h.order)]
        for i in range(h.order)
    ]
    expected = _cofactor_det(system)
    d = diagnostics(h)
    assert d.det_i_minus_a == expected
    assert d.well_defined == (expected != 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 10))
def test_solutions_satisfy_defining_equations(seed, nodes):
    h = generate(GenSpec(nodes=nodes, max_edges=2 * nodes, seed=seed))
    try:
        forms = solve_symbolic(h)
    except NotWellDefined:
        return
    assert all(r == InfoForm(F(0), F(0)) for r in residual(h, forms))
