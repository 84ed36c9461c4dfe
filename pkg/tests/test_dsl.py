"""Parsing and printing of .csa / .csm sources."""

import random
from fractions import Fraction
from importlib import resources

import pytest

from csalg.algebras import make_n2, make_n4
from csalg.core import (AlgebraDef, ConfElt, EVEN, Generator, LambdaPoly,
                        ODD, complete_table_cs4)
from csalg.cyclotomic import CycloField
from csalg.errors import CsalgError, ParseError, TableInconsistencyError
from csalg.dsl import (SourceFile, format_algebra, format_element,
                       format_morphism, parse_algebra, parse_element,
                       parse_morphism)
from csalg.laurent import LaurentElt
from csalg.morphisms import n2_omega, n2_theta

N2 = make_n2()


def data_text(name):
    return resources.files("csalg").joinpath("data/" + name).read_text()


N2_SOURCE = data_text("n2.csa")


def test_shipped_n2_equals_builtin():
    assert parse_algebra(N2_SOURCE) == N2


def test_shipped_n4_equals_builtin():
    assert parse_algebra(data_text("n4.csa")) == make_n4()


def test_builtin_print_parse_round_trip():
    for A in (N2, make_n4()):
        assert parse_algebra(format_algebra(A)) == A


def test_factored_bracket_form():
    text = N2_SOURCE.replace("bracket L L = D L + x*(2*L)",
                             "bracket L L = (D + 2*x) L")
    assert parse_algebra(text) == N2


def test_flat_lambda_term_form():
    text = N2_SOURCE.replace("bracket L J = D J + x*(J)",
                             "bracket L J = D J + x J")
    assert parse_algebra(text) == N2


def test_unknown_generator_points_at_the_token():
    text = "algebra X\ngenerator L parity=even\nbracket L Q = L\n"
    with pytest.raises(ParseError) as err:
        parse_algebra(text)
    assert err.value.line == 3
    assert err.value.col == 11
    assert "Q" in str(err.value)


def test_parity_mismatch_is_rejected():
    text = N2_SOURCE.replace("bracket J G+ = G+", "bracket J G+ = J")
    with pytest.raises(ParseError, match="parity"):
        parse_algebra(text)


def test_t_tails_are_rejected_in_tables():
    text = N2_SOURCE.replace("bracket J G+ = G+", "bracket J G+ = G+ t^{1}")
    with pytest.raises(ParseError, match="bracket tables"):
        parse_algebra(text)


def test_inconsistent_orientations_are_rejected():
    text = N2_SOURCE + "bracket G+ J = G+\n"
    with pytest.raises(TableInconsistencyError):
        parse_algebra(text)


def test_duplicate_bracket_is_rejected():
    text = N2_SOURCE + "bracket J G+ = G+\n"
    with pytest.raises(ParseError, match="duplicate"):
        parse_algebra(text)


# -- element expressions -----------------------------------------------------


def test_element_expressions():
    zeta = N2.field.zeta(3)
    half = Fraction(1, 2)
    cases = [
        ("G+", N2.elt("G+")),
        ("-J", -N2.elt("J")),
        ("D^(2) L t^{-1}", N2.elt("L", dpow=2, q=-1)),
        ("2*zeta^3*G+ t^{1/2}", N2.elt("G+", q=half).scale(zeta + zeta)),
        ("L + 1/2*D J", N2.elt("L") + N2.elt("J", dpow=1, coeff=half)),
        ("0", N2.zero_elt()),
    ]
    for text, want in cases:
        assert parse_element(N2, text) == want, text


def test_element_print_parse_round_trip():
    x = (N2.elt("L", q=2) + N2.elt("J", dpow=3, q=-1, coeff=Fraction(-2, 3))
         + N2.elt("G-", coeff=N2.field.zeta(5)))
    assert parse_element(N2, format_element(N2, x)) == x


def test_element_rejects_lambda_powers():
    with pytest.raises(ParseError, match="bracket tables"):
        parse_element(N2, "x L")


def test_element_rejects_two_generators():
    with pytest.raises(ParseError, match="two generators"):
        parse_element(N2, "L J")


def test_element_rejects_bare_decorations():
    with pytest.raises(ParseError, match="without a generator"):
        parse_element(N2, "D")


def test_element_rejects_trailing_garbage():
    with pytest.raises(ParseError):
        parse_element(N2, "L )")


# -- morphism files ----------------------------------------------------------


def test_shipped_omega_morphism():
    name, f = parse_morphism(data_text("omega.csm"), N2)
    assert name == "omega"
    assert f == n2_omega(N2)


def test_theta_morphism_with_tails():
    text = ("morphism tw on N2 level 1\n"
            "image L = L + J t^{-1}\n"
            "image J = J\n"
            "image G+ = G+ t^{1}\n"
            "image G- = G- t^{-1}\n")
    _, f = parse_morphism(text, N2)
    t = LaurentElt(N2.field, {Fraction(1): N2.field.one()})
    assert f == n2_theta(t, N2)


def test_morphism_print_parse_round_trip():
    t_half = LaurentElt(N2.field, {Fraction(1, 2): N2.field.one()})
    f = n2_theta(t_half, N2)
    name, back = parse_morphism(format_morphism("half", f), N2)
    assert name == "half"
    assert back == f
    assert back.level == f.level


def test_morphism_for_another_algebra_is_rejected():
    text = "morphism f on N9 level 1\nimage L = L\n"
    with pytest.raises(ParseError, match="N9"):
        parse_morphism(text, N2)


def test_morphism_with_missing_images_is_rejected():
    text = "morphism f on N2 level 1\nimage L = L\n"
    with pytest.raises(ParseError, match="missing images"):
        parse_morphism(text, N2)


def test_morphism_with_wrong_parity_image_is_rejected():
    text = ("morphism f on N2 level 1\nimage L = G+\nimage J = J\n"
            "image G+ = G+\nimage G- = G-\n")
    with pytest.raises(ParseError, match="parity"):
        parse_morphism(text, N2)


def test_source_file_dispatch(tmp_path):
    path = tmp_path / "n2.csa"
    path.write_text(N2_SOURCE)
    src = SourceFile.read(path)
    assert src.algebra() == N2
    assert src.algebra() is src.algebra()


# -- randomized round trips ----------------------------------------------


NAME_POOL = ["A", "B", "C+", "C-", "E", "F2", "H", "Kb", "M", "P+"]


def random_algebra(rng, tag):
    conductor = rng.choice([8, 12, 24])
    field = CycloField.get(conductor)
    count = rng.randint(1, 4)
    names = rng.sample(NAME_POOL, count)
    gens = []
    for name in names:
        weight = None
        if rng.random() < 0.5:
            weight = Fraction(rng.randint(0, 6), rng.choice([1, 1, 2]))
        gens.append(Generator(name, rng.choice([EVEN, ODD]), weight))

    def random_scalar():
        c = field.rational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        if rng.random() < 0.4:
            c = c * field.zeta(rng.randrange(conductor))
        return c

    table = {}
    for i in range(count):
        for j in range(i + 1, count):
            if rng.random() < 0.3:
                continue
            want = (gens[i].parity + gens[j].parity) % 2
            allowed = [g for g in range(count) if gens[g].parity == want]
            if not allowed:
                continue
            coeffs = {}
            for n in range(rng.randint(1, 3)):
                terms = {}
                for _ in range(rng.randint(1, 2)):
                    key = (rng.choice(allowed), rng.randint(0, 2),
                           Fraction(0))
                    c = random_scalar()
                    got = terms.get(key)
                    terms[key] = c if got is None else got + c
                elt = ConfElt(field, terms)
                if not elt.is_zero():
                    coeffs[n] = elt
            if coeffs:
                table[(i, j)] = LambdaPoly(field, coeffs)
    return complete_table_cs4(
        AlgebraDef("R%d" % tag, field, gens, table))


def test_random_algebra_round_trips():
    rng = random.Random(1518)
    for tag in range(100):
        A = random_algebra(rng, tag)
        text = format_algebra(A)
        assert parse_algebra(text) == A, "round trip %d failed" % tag
