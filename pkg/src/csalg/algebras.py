"""Factories for the concrete algebras the engine ships with.

Current conformal superalgebras are built from Lie structure constants;
the two small superconformal algebras come with their standard bracket
tables, Pauli matrices stored exactly over Q(zeta_N) with i = zeta_4.
"""

from __future__ import annotations

from fractions import Fraction

from .core import EVEN, ODD, AlgebraDef, ConfElt, Generator, LambdaPoly, complete_table_cs4
from .cyclotomic import DEFAULT_CONDUCTOR, CycloField
from .errors import ConductorError, CsalgError


class StructureConstants:
    """Structure constants of a finite-dimensional Lie superalgebra.

    ``c`` maps an index pair (i, j) to {k: scalar} with
    [v_i, v_j] = sum_k c[i][j][k] v_k.  Super-antisymmetry and the
    super Jacobi identity are verified at construction.
    """

    def __init__(self, names, parities, c, conductor=DEFAULT_CONDUCTOR):
        self.names = list(names)
        self.parities = list(parities)
        self.field = CycloField.get(conductor)
        self.dim = len(self.names)
        full = {}
        for (i, j), row in c.items():
            full[(i, j)] = {k: self._scalar(v) for k, v in row.items()
                            if not self._scalar(v).is_zero()}
        self.c = full
        self._validate()

    def _scalar(self, v):
        from .cyclotomic import CycloScalar
        if isinstance(v, CycloScalar):
            return v
        return self.field.rational(v)

    def bracket(self, i, j):
        return self.c.get((i, j), {})

    def _sign(self, i, j):
        return -1 if self.parities[i] and self.parities[j] else 1

    def _validate(self):
        zero = self.field.zero()
        dim = self.dim
        for i in range(dim):
            for j in range(dim):
                left = self.bracket(i, j)
                right = self.bracket(j, i)
                for k in range(dim):
                    a = left.get(k, zero)
                    b = right.get(k, zero)
                    if not (a + b * self._sign(i, j)).is_zero():
                        raise CsalgError(
                            "structure constants are not super-antisymmetric "
                            "at (%s, %s)" % (self.names[i], self.names[j]))
        # super Jacobi: [a,[b,c]] = [[a,b],c] + p(a,b) [b,[a,c]]
        def add(vec, scale, acc):
            for k, v in vec.items():
                acc[k] = acc.get(k, zero) + v * scale

        for a in range(dim):
            for b in range(dim):
                for c in range(dim):
                    lhs = {}
                    for m, v in self.bracket(b, c).items():
                        add(self.bracket(a, m), v, lhs)
                    rhs = {}
                    for m, v in self.bracket(a, b).items():
                        add(self.bracket(m, c), v, rhs)
                    sign = self._sign(a, b)
                    for m, v in self.bracket(a, c).items():
                        add(self.bracket(b, m), v * sign, rhs)
                    for k in set(lhs) | set(rhs):
                        if not (lhs.get(k, zero) - rhs.get(k, zero)).is_zero():
                            raise CsalgError(
                                "structure constants fail the Jacobi identity "
                                "at (%s, %s, %s)" % (self.names[a],
                                                     self.names[b],
                                                     self.names[c]))


def make_current(sc, name=None):
    """The current conformal superalgebra of a Lie superalgebra.

    Brackets are constant in lambda: [v_i lambda v_j] = [v_i, v_j].
    """
    field = sc.field
    gens = [Generator(n, p) for n, p in zip(sc.names, sc.parities)]
    table = {}
    for i in range(sc.dim):
        for j in range(sc.dim):
            row = sc.bracket(i, j)
            elt = ConfElt(field, {(k, 0, Fraction(0)): v for k, v in row.items()})
            table[(i, j)] = LambdaPoly(field, {0: elt})
    return AlgebraDef(name or "Curr", field, gens, table)


def sl2_constants(conductor=DEFAULT_CONDUCTOR):
    """sl2 in the basis e, h, f: [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    return StructureConstants(
        ["e", "h", "f"], [EVEN, EVEN, EVEN],
        {
            (0, 1): {0: -2},
            (1, 0): {0: 2},
            (1, 2): {2: -2},
            (2, 1): {2: 2},
            (0, 2): {1: 1},
            (2, 0): {1: -1},
        },
        conductor=conductor)


def gl2_constants(conductor=DEFAULT_CONDUCTOR):
    """gl2 = sl2 plus a central element z."""
    base = {
        (0, 1): {0: -2},
        (1, 0): {0: 2},
        (1, 2): {2: -2},
        (2, 1): {2: 2},
        (0, 2): {1: 1},
        (2, 0): {1: -1},
    }
    return StructureConstants(
        ["e", "h", "f", "z"], [EVEN] * 4, base, conductor=conductor)


def _poly(field, pairs):
    """Build a LambdaPoly from {n: {(gen, dpow): coeff}} descriptions."""
    coeffs = {}
    for n, terms in pairs.items():
        elt = {}
        for (g, j), c in terms.items():
            elt[(g, j, Fraction(0))] = c if not isinstance(c, (int, Fraction)) \
                else field.rational(c)
        coeffs[n] = ConfElt(field, elt)
    return LambdaPoly(field, coeffs)


def make_n2(conductor=DEFAULT_CONDUCTOR):
    """The N=2 superconformal algebra on generators L, J, G+, G-."""
    field = CycloField.get(conductor)
    gens = [
        Generator("L", EVEN, 2),
        Generator("J", EVEN, 1),
        Generator("G+", ODD, Fraction(3, 2)),
        Generator("G-", ODD, Fraction(3, 2)),
    ]
    L, J, GP, GM = 0, 1, 2, 3
    half = Fraction(1, 2)
    table = {
        (L, L): _poly(field, {0: {(L, 1): 1}, 1: {(L, 0): 2}}),
        (L, J): _poly(field, {0: {(J, 1): 1}, 1: {(J, 0): 1}}),
        (L, GP): _poly(field, {0: {(GP, 1): 1}, 1: {(GP, 0): Fraction(3, 2)}}),
        (L, GM): _poly(field, {0: {(GM, 1): 1}, 1: {(GM, 0): Fraction(3, 2)}}),
        (J, J): _poly(field, {}),
        (J, GP): _poly(field, {0: {(GP, 0): 1}}),
        (J, GM): _poly(field, {0: {(GM, 0): -1}}),
        (GP, GP): _poly(field, {}),
        (GM, GM): _poly(field, {}),
        (GP, GM): _poly(field, {0: {(L, 0): 1, (J, 1): half}, 1: {(J, 0): 1}}),
    }
    partial = AlgebraDef("N2", field, gens, table)
    return complete_table_cs4(partial)


def _pauli(field):
    """The three Pauli matrices over Q(zeta_N), i = zeta_4."""
    i = field.root_of_unity(4)
    one = field.one()
    zero = field.zero()
    return [
        [[zero, one], [one, zero]],
        [[zero, -i], [i, zero]],
        [[one, zero], [zero, -one]],
    ]


def make_n4(conductor=DEFAULT_CONDUCTOR):
    """The N=4 superconformal algebra.

    Even part: L and the currents J1, J2, J3 with J^s = sigma^s / 2;
    odd part: two doublets G1, G2 and Gb1, Gb2.
    """
    if conductor % 4:
        raise ConductorError(
            "the N=4 table needs i = zeta_4; conductor %d is not divisible by 4"
            % conductor)
    field = CycloField.get(conductor)
    gens = [
        Generator("L", EVEN, 2),
        Generator("J1", EVEN, 1),
        Generator("J2", EVEN, 1),
        Generator("J3", EVEN, 1),
        Generator("G1", ODD, Fraction(3, 2)),
        Generator("G2", ODD, Fraction(3, 2)),
        Generator("Gb1", ODD, Fraction(3, 2)),
        Generator("Gb2", ODD, Fraction(3, 2)),
    ]
    L = 0
    J = [1, 2, 3]
    G = [4, 5]
    GB = [6, 7]
    sigma = _pauli(field)
    i_unit = field.root_of_unity(4)
    half = Fraction(1, 2)
    table = {}
    # L row: every generator is primary, weights 2, 1, 3/2
    table[(L, L)] = _poly(field, {0: {(L, 1): 1}, 1: {(L, 0): 2}})
    for s in range(3):
        table[(L, J[s])] = _poly(field, {0: {(J[s], 1): 1}, 1: {(J[s], 0): 1}})
    for a in range(2):
        table[(L, G[a])] = _poly(field, {0: {(G[a], 1): 1},
                                         1: {(G[a], 0): Fraction(3, 2)}})
        table[(L, GB[a])] = _poly(field, {0: {(GB[a], 1): 1},
                                          1: {(GB[a], 0): Fraction(3, 2)}})
    # current part: [J^m lambda J^n] = (1/4)[sigma^m, sigma^n] read back
    # into the J coordinates; concretely i * epsilon_{mnp} J^p
    eps = {(0, 1): (2, 1), (1, 2): (0, 1), (2, 0): (1, 1),
           (1, 0): (2, -1), (2, 1): (0, -1), (0, 2): (1, -1)}
    for m in range(3):
        for n in range(3):
            if m == n:
                table[(J[m], J[n])] = _poly(field, {})
            else:
                p, sgn = eps[(m, n)]
                table[(J[m], J[n])] = _poly(
                    field, {0: {(J[p], 0): i_unit * sgn}})
    # [J^s lambda G^a] = -(1/2) sum_b sigma^s_{ab} G^b
    # [J^s lambda Gb^a] = +(1/2) sum_b sigma^s_{ba} Gb^b
    for s in range(3):
        for a in range(2):
            row = {}
            for b in range(2):
                c = sigma[s][a][b] * Fraction(-1, 2)
                if not c.is_zero():
                    row[(G[b], 0)] = c
            table[(J[s], G[a])] = _poly(field, {0: row})
            row = {}
            for b in range(2):
                c = sigma[s][b][a] * half
                if not c.is_zero():
                    row[(GB[b], 0)] = c
            table[(J[s], GB[a])] = _poly(field, {0: row})
    # odd-odd part
    for a in range(2):
        for b in range(2):
            table[(G[a], G[b])] = _poly(field, {})
            table[(GB[a], GB[b])] = _poly(field, {})
            n0 = {}
            n1 = {}
            if a == b:
                n0[(L, 0)] = field.rational(2)
            for s in range(3):
                c = sigma[s][a][b]
                if not c.is_zero():
                    n0[(J[s], 1)] = c * -2
                    n1[(J[s], 0)] = c * -4
            table[(G[a], GB[b])] = _poly(field, {0: n0, 1: n1})
    partial = AlgebraDef("N4", field, gens, table)
    return complete_table_cs4(partial)
