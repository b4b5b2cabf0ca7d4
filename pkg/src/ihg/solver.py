"""Information content of propositions: exact symbolic solving and checks.

Every proposition gets an information form ``a*nu + b*eps`` with exact
rational coefficients.  ``nu`` is the information granted to leaves (axioms:
propositions that imply nothing) and ``eps`` the increment paid per use of a
proposition in a derivation.  A proposition in the tail of an edge receives,
for each head member u, ``(I(u) + eps) / |tail|``:

    I(v) = nu                                if v is a leaf
    I(v) = sum_j A[v][j] * (I(j) + eps)      otherwise

where ``A[v][u]`` accumulates ``1/|tail(e)|`` over every edge e with v in its
tail and u in its head.  Leaves have an all-zero row, so both cases combine
into the single linear system ``(Id - A) I = eps*A*1 + nu*l`` with ``l`` the
leaf indicator vector.  The system is solved exactly over the rationals; it
has a unique solution iff det(Id - A) != 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve_with_det
from .model import ImplicationHypergraph, is_acyclic, leaves
from .rationals import Rational, render_decimal


class NotWellDefined(Exception):
    """det(Id - A) == 0: the information system has no unique solution."""


class NonPositiveParams(ValueError):
    """Parameters nu and eps must both be positive."""


def _coeff(value: Rational, symbol: str) -> str:
    if value == 1:
        return symbol
    return f"{value}*{symbol}"


@dataclass(frozen=True)
class InfoForm:
    """Exact information content as a linear form ``nu_coeff*nu + eps_coeff*eps``."""

    nu_coeff: Rational
    eps_coeff: Rational

    def __add__(self, other: "InfoForm") -> "InfoForm":
        if not isinstance(other, InfoForm):
            return NotImplemented
        return InfoForm(self.nu_coeff + other.nu_coeff, self.eps_coeff + other.eps_coeff)

    def scaled(self, factor: Rational) -> "InfoForm":
        return InfoForm(self.nu_coeff * factor, self.eps_coeff * factor)

    def evaluate(self, params: "Params") -> Rational:
        return self.nu_coeff * params.nu + self.eps_coeff * params.eps

    def __str__(self) -> str:
        terms = []
        if self.nu_coeff:
            terms.append(_coeff(self.nu_coeff, "nu"))
        if self.eps_coeff:
            prefix = ""
            if terms:
                prefix = " + " if self.eps_coeff > 0 else " - "
            value = self.eps_coeff if not terms else abs(self.eps_coeff)
            terms.append(prefix + _coeff(value, "eps"))
        return "".join(terms) or "0"


ZERO_FORM = InfoForm(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class Params:
    """Positive evaluation parameters for information forms."""

    nu: Rational
    eps: Rational

    def __post_init__(self) -> None:
        if self.nu <= 0 or self.eps <= 0:
            raise NonPositiveParams(f"nu and eps must be positive, got nu={self.nu}, eps={self.eps}")


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Square rational matrix indexed by the hypergraph's proposition order."""

    ids: tuple[str, ...]
    rows: tuple[tuple[Rational, ...], ...]

    def entry(self, row_id: str, col_id: str) -> Rational:
        return self.rows[self.ids.index(row_id)][self.ids.index(col_id)]


@dataclass(frozen=True)
class Diagnostics:
    well_defined: bool
    det_i_minus_a: Rational
    necessary_values: tuple[Rational, ...]
    necessary_passes: bool
    sufficient_condition: bool
    # None when the system is not well defined (there are no forms to inspect).
    configured_universally: bool | None


def adjacency_matrix(h: ImplicationHypergraph) -> AdjacencyMatrix:
    """A[i][j] = sum of 1/|tail(e)| over edges e with p_i in tail, p_j in head."""
    n = h.order
    rows = [[Fraction(0)] * n for _ in range(n)]
    for e in h.edges:
        share = Fraction(1, len(e.tail))
        for t in e.tail:
            i = h.index(t)
            for u in e.head:
                rows[i][h.index(u)] += share
    return AdjacencyMatrix(h.ids, tuple(tuple(row) for row in rows))


def leaf_vector(h: ImplicationHypergraph) -> tuple[int, ...]:
    leaf_ids = leaves(h)
    return tuple(1 if pid in leaf_ids else 0 for pid in h.ids)


def solve_symbolic(h: ImplicationHypergraph) -> tuple[InfoForm, ...]:
    """Solve the information system exactly; forms follow proposition order.

    Raises NotWellDefined when det(Id - A) is zero.
    """
    forms, _ = _solve_with_diag_det(h)
    if forms is None:
        raise NotWellDefined("det(Id - A) = 0: information contents are not uniquely determined")
    return forms


def _solve_with_diag_det(
    h: ImplicationHypergraph,
) -> tuple[tuple[InfoForm, ...] | None, Rational]:
    a = adjacency_matrix(h)
    n = h.order
    system = [
        [(Fraction(1) if i == j else Fraction(0)) - a.rows[i][j] for j in range(n)]
        for i in range(n)
    ]
    leaf_col = [Fraction(v) for v in leaf_vector(h)]
    row_sum_col = [sum(a.rows[i], Fraction(0)) for i in range(n)]
    det, solutions = solve_with_det(system, [leaf_col, row_sum_col])
    if solutions is None:
        return None, det
    nu_col, eps_col = solutions
    return tuple(InfoForm(nu_col[i], eps_col[i]) for i in range(n)), det


def evaluate(forms: tuple[InfoForm, ...], params: Params) -> tuple[Rational, ...]:
    return tuple(form.evaluate(params) for form in forms)


def solve_values(h: ImplicationHypergraph, params: Params) -> tuple[Rational, ...]:
    return evaluate(solve_symbolic(h), params)


def diagnostics(h: ImplicationHypergraph) -> Diagnostics:
    """Solvability report: determinant, necessary/sufficient conditions, signs.

    The per-vertex necessary values are the diagonal of A^2; every one must
    stay below 1 for the system to be well defined.  Acyclicity of the
    dependency digraph is sufficient (it makes A nilpotent).  The universal
    configuration check asks whether every form has non-negative coefficients
    not both zero, so that the content is positive for all positive params.
    """
    a = adjacency_matrix(h)
    n = h.order
    necessary = tuple(
        sum((a.rows[i][j] * a.rows[j][i] for j in range(n)), Fraction(0)) for i in range(n)
    )
    forms, det = _solve_with_diag_det(h)
    configured: bool | None
    if forms is None:
        configured = None
    else:
        configured = all(
            f.nu_coeff >= 0 and f.eps_coeff >= 0 and (f.nu_coeff, f.eps_coeff) != (0, 0)
            for f in forms
        )
    return Diagnostics(
        well_defined=forms is not None,
        det_i_minus_a=det,
        necessary_values=necessary,
        necessary_passes=all(v < 1 for v in necessary),
        sufficient_condition=is_acyclic(h),
        configured_universally=configured,
    )


def is_configured(h: ImplicationHypergraph, params: Params) -> bool:
    """True iff the system solves uniquely and every content is positive."""
    forms, _ = _solve_with_diag_det(h)
    if forms is None:
        return False
    return all(f.evaluate(params) > 0 for f in forms)


def render_value(value: Rational, precision: int = 2, exact: bool = False) -> str:
    return str(value) if exact else render_decimal(value, precision)
