"""Windowed centroid computations on small loop algebras."""

from fractions import Fraction

import pytest

from csalg.algebras import make_n2
from csalg.centroid import centroid_basis, is_scalar_action
from csalg.core import apply_partial
from csalg.errors import DomainError
from csalg.laurent import LaurentElt, delta_t
from csalg.loops import eigenspaces
from csalg.morphisms import identity_morphism, n2_omega

N2 = make_n2()
FIELD = N2.field

UNTWISTED = eigenspaces(N2, identity_morphism(N2), 1)
OMEGA_LOOP = eigenspaces(N2, n2_omega(N2), 2)


def mono(q):
    return LaurentElt(FIELD, {Fraction(q): FIELD.one()})


def by_exponent(solutions):
    """Map exponent -> solution for a basis of monic monomial actions."""
    out = {}
    for sol in solutions:
        r = is_scalar_action(sol)
        assert r is not None
        ((q, c),) = r.terms.items()
        assert c == FIELD.one()
        out[q] = sol
    return out


def test_untwisted_solutions_are_the_unit_monomials():
    sols = centroid_basis(UNTWISTED, 3, 1)
    assert len(sols) == 3
    assert sorted(by_exponent(sols)) == [-1, 0, 1]


def test_omega_loop_solutions_are_the_unit_monomials():
    sols = centroid_basis(OMEGA_LOOP, 3, 1)
    assert len(sols) == 3
    assert sorted(by_exponent(sols)) == [-1, 0, 1]


def test_identity_solution_fixes_the_interior():
    sol = by_exponent(centroid_basis(UNTWISTED, 3, 1))[0]
    for x in (N2.elt("L"), N2.elt("G+", q=-1), N2.elt("J", dpow=1)):
        assert sol.apply(x) == x


def test_shift_solution_multiplies_by_t():
    sol = by_exponent(centroid_basis(UNTWISTED, 3, 1))[1]
    assert sol.apply(N2.elt("L")) == N2.elt("L", q=1)
    # the same shift acts on derivation-decorated interior elements
    assert sol.apply(N2.elt("L", dpow=1)) == N2.elt("L", dpow=1, q=1)


def test_shift_solution_respects_the_twisted_lattice():
    sol = by_exponent(centroid_basis(OMEGA_LOOP, 3, 1))[1]
    half = Fraction(1, 2)
    assert sol.apply(N2.elt("J", q=half)) == N2.elt("J", q=half + 1)


def test_derivation_commutator_is_multiplication_by_delta():
    sols = by_exponent(centroid_basis(UNTWISTED, 3, 1))
    probes = [N2.elt("L"), N2.elt("J"), N2.elt("G+", q=-1)]
    for q in (-1, 1):
        chi = sols[q]
        jump = delta_t(mono(q))
        for x in probes:
            got = (apply_partial(N2, chi.apply(x))
                   - chi.apply(apply_partial(N2, x)))
            assert got == x.mul_laurent(jump)


def test_scalar_action_rejects_a_corrupted_matrix():
    sol = by_exponent(centroid_basis(UNTWISTED, 3, 1))[0]
    entries = dict(sol.entries)
    key = next(k for k in entries if k[0][1] == 0 and abs(k[0][2]) <= 1)
    entries[key] = -entries[key]
    assert is_scalar_action(sol.replace_entries(entries)) is None


def test_window_must_cover_the_product_closure():
    with pytest.raises(DomainError):
        centroid_basis(UNTWISTED, 2, 1)


def test_interior_must_sit_inside_the_window():
    with pytest.raises(DomainError):
        centroid_basis(UNTWISTED, 3, 3)
    with pytest.raises(DomainError):
        centroid_basis(UNTWISTED, 1, 2)


def test_apply_rejects_elements_off_the_window():
    sol = by_exponent(centroid_basis(UNTWISTED, 3, 1))[0]
    with pytest.raises(DomainError):
        sol.apply(N2.elt("L", q=10))
