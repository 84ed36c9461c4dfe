"""Morphisms of conformal superalgebras given on generators.

A conformal morphism of A (x) S_m over S_m commutes with the full
derivation and is therefore pinned down by the images of the elements
v (x) 1: the module is free over divided powers of the derivation on
the basis v (x) t^q.  This file carries that unique extension, the
pairwise bracket checker, group operations (compose, invert, order),
and the explicit automorphism families of the N=2 and N=4 algebras.
"""

from fractions import Fraction
from math import lcm

from .algebras import _pauli, make_n2, make_n4
from .core import ConfElt, apply_partial_power, lambda_bracket, to_hat_basis
from .cyclotomic import DEFAULT_CONDUCTOR, CycloField, CycloScalar
from .errors import CsalgError, DomainError
from .laurent import LaurentElt, delta_t
from .linalg import det, mat_inverse_laurent, mat_mul


class GenMorphism:
    """A morphism recorded by its generator images.

    ``images`` maps each generator (by name or index) to the image of
    v (x) 1.  The declared level is the ring S_m the morphism acts
    over and must be a multiple of every level occurring in an image.
    Equality deliberately ignores the level: the same map seen inside
    a finer ring is still the same map, so for example the square of
    theta_{t^{1/2}} (declared over S_2) equals theta_t (over S_1).
    """

    def __init__(self, algebra, level, images):
        self.algebra = algebra
        imgs = {}
        for ref, elt in images.items():
            i = algebra.gen_index(ref)
            if i in imgs:
                raise DomainError("duplicate image for generator %r" % ref)
            imgs[i] = elt
        missing = [g.name for i, g in enumerate(algebra.generators)
                   if i not in imgs]
        if missing:
            raise DomainError(
                "missing images for generators %s" % ", ".join(missing))
        needed = 1
        for i, elt in imgs.items():
            if not elt.is_zero():
                if algebra.homogeneous_parity(elt) != algebra.parity(i):
                    raise DomainError(
                        "image of %s does not have its parity"
                        % algebra.generators[i].name)
            needed = lcm(needed, elt.level)
        if level % needed:
            raise DomainError(
                "images need level %d, which does not divide the declared %d"
                % (needed, level))
        self.level = level
        self.images = imgs

    def image(self, ref):
        return self.images[self.algebra.gen_index(ref)]

    def is_decorated(self):
        """True when some image has derivation-decorated terms."""
        return any(elt.max_dpow() > 0 for elt in self.images.values())

    def matrix(self):
        """Representing matrix over S_m; column i holds the image of v_i.

        Only defined when every image lies in V (x) S.
        """
        if self.is_decorated():
            raise DomainError(
                "images leave V (x) S; no representing matrix over S_m")
        A = self.algebra
        n = A.ngens()
        cells = [[{} for _ in range(n)] for _ in range(n)]
        for i, elt in self.images.items():
            for (g, _, q), c in elt.terms.items():
                cells[g][i][q] = c
        return [[LaurentElt(A.field, cell) for cell in row] for row in cells]

    def __eq__(self, other):
        if not isinstance(other, GenMorphism):
            return NotImplemented
        return self.algebra == other.algebra and self.images == other.images

    __hash__ = None

    def __repr__(self):
        return "GenMorphism(%s, level %d)" % (self.algebra.name, self.level)


def identity_morphism(A, level=1):
    """The identity of A (x) S_m as a GenMorphism."""
    return GenMorphism(A, level, {i: A.elt(i) for i in range(A.ngens())})


def extend_apply(phi, x):
    """Apply the unique conformal extension of phi to an element.

    The element is rewritten on the basis of full-derivation divided
    powers of v (x) t^q; each basis vector maps to the same divided
    power of t^q times the recorded image of v (x) 1.
    """
    A = phi.algebra
    if x.field is not A.field:
        raise DomainError(
            "element and morphism live over different scalar fields")
    out = A.zero_elt()
    for (g, l, q), c in to_hat_basis(A, x).items():
        moved = phi.images[g].shift_t(q)
        out = out + apply_partial_power(A, moved, l).scale(c)
    return out


class HomReport:
    """Outcome of a pairwise homomorphism check."""

    def __init__(self):
        self.failures = []
        self.invertible = None
        self.determinant = None

    @property
    def homomorphism(self):
        return not self.failures

    @property
    def ok(self):
        return self.homomorphism and self.invertible is not False

    def lines(self):
        out = ["homomorphism: %s"
               % ("pass" if self.homomorphism else "FAIL")]
        for pair in self.failures:
            out.append("  bracket mismatch on (%s, %s)" % pair)
        if self.invertible is None:
            out.append("invertibility: not tested "
                       "(derivation-decorated images)")
        else:
            out.append("invertible: %s (matrix determinant %s)"
                       % ("yes" if self.invertible else "NO",
                          self.determinant))
        return out

    def __str__(self):
        return "\n".join(self.lines())


def check_hom(A, phi):
    """Verify the bracket condition on every ordered generator pair.

    When the images stay inside V (x) S the representing matrix is
    tested for a unit determinant, which decides invertibility; for
    derivation-decorated images that part of the report stays None.
    """
    if phi.algebra != A:
        raise DomainError("morphism is not over the given algebra")
    report = HomReport()
    for i in range(A.ngens()):
        for j in range(A.ngens()):
            lhs = A.table[(i, j)].map_coeffs(lambda e: extend_apply(phi, e))
            rhs = lambda_bracket(A, phi.images[i], phi.images[j])
            if lhs != rhs:
                report.failures.append(
                    (A.generators[i].name, A.generators[j].name))
    if not phi.is_decorated():
        d = det(phi.matrix(), _one(A.field))
        report.determinant = d
        report.invertible = d.is_unit()
    return report


# -- group operations --------------------------------------------------------


def compose(f, g):
    """The morphism applying g first, then f."""
    if f.algebra != g.algebra:
        raise DomainError("cannot compose morphisms over different algebras")
    images = {i: extend_apply(f, elt) for i, elt in g.images.items()}
    return GenMorphism(f.algebra, lcm(f.level, g.level), images)


def invert(phi):
    """Inverse of a morphism whose images lie in V (x) S.

    The representing matrix is inverted exactly over S_m; a non-unit
    determinant or a derivation-decorated image is rejected.
    """
    A = phi.algebra
    inv = mat_inverse_laurent(phi.matrix(), _one(A.field))
    images = {}
    for i in range(A.ngens()):
        terms = {}
        for g in range(A.ngens()):
            for q, c in inv[g][i].terms.items():
                terms[(g, 0, q)] = c
        images[i] = ConfElt(A.field, terms)
    return GenMorphism(A, phi.level, images)


def order_of(phi, bound):
    """Smallest n in 1..bound with phi^n the identity, else None."""
    ident = identity_morphism(phi.algebra)
    power = phi
    for n in range(1, bound + 1):
        if power == ident:
            return n
        power = compose(phi, power)
    return None


# -- the N=2 family ----------------------------------------------------------


def n2_theta(s, algebra=None):
    """The N=2 automorphism theta_s for a unit s = alpha t^q.

    Images: L to L + q J (x) t^{-1}, J fixed, G+ to G+ (x) s and
    G- to G- (x) s^{-1}.  The declared level is the level of s.
    """
    if not isinstance(s, LaurentElt):
        raise DomainError("theta_s takes a Laurent element")
    if not s.is_unit():
        raise DomainError("theta_s needs a unit monomial, got %s" % s)
    A = algebra if algebra is not None else make_n2(s.field.conductor)
    if A.field is not s.field:
        raise DomainError("s lives over a different scalar field")
    ((q, alpha),) = s.terms.items()
    images = {
        "L": A.elt("L") + A.elt("J", q=-1, coeff=q),
        "J": A.elt("J"),
        "G+": A.elt("G+", q=q, coeff=alpha),
        "G-": A.elt("G-", q=-q, coeff=alpha.inverse()),
    }
    return GenMorphism(A, s.level, images)


def n2_omega(algebra=None):
    """The N=2 involution: J changes sign and G+ swaps with G-."""
    A = algebra if algebra is not None else make_n2()
    images = {
        "L": A.elt("L"),
        "J": -A.elt("J"),
        "G+": A.elt("G-"),
        "G-": A.elt("G+"),
    }
    return GenMorphism(A, 1, images)


# -- the N=4 family ----------------------------------------------------------


class SL2MatrixOverS:
    """A 2x2 matrix over S_m with determinant exactly one."""

    def __init__(self, field, entries, level=None):
        rows = [[_laurent(field, entries[r][c]) for c in range(2)]
                for r in range(2)]
        d = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        if not d.is_one():
            raise DomainError("matrix determinant is %s, not 1" % d)
        self.field = field
        self.entries = rows
        self.determinant = d
        needed = lcm(*(e.level for row in rows for e in row))
        if level is None:
            level = needed
        elif level % needed:
            raise DomainError(
                "entries need level %d, which does not divide the declared %d"
                % (needed, level))
        self.level = level

    @classmethod
    def identity(cls, conductor=None, field=None):
        if field is None:
            field = CycloField.get(
                DEFAULT_CONDUCTOR if conductor is None else conductor)
        return cls(field, [[1, 0], [0, 1]])

    def inverse(self):
        a, b = self.entries[0]
        c, d = self.entries[1]
        return SL2MatrixOverS(self.field, [[d, -b], [-c, a]],
                              level=self.level)

    def __mul__(self, other):
        if not isinstance(other, SL2MatrixOverS):
            return NotImplemented
        return SL2MatrixOverS(self.field,
                              mat_mul(self.entries, other.entries))

    def __eq__(self, other):
        if not isinstance(other, SL2MatrixOverS):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return "SL2MatrixOverS([[%s, %s], [%s, %s]])" % (
            self.entries[0][0], self.entries[0][1],
            self.entries[1][0], self.entries[1][1])


def _laurent(field, value):
    if isinstance(value, LaurentElt):
        if value.field is not field:
            raise DomainError("matrix entry over a different scalar field")
        return value
    return LaurentElt(field, {Fraction(0): value})


def _one(field):
    return LaurentElt(field, {Fraction(0): field.one()})


def _traceless_current(A, m):
    """Read a traceless 2x2 matrix over S into the span of the J^s.

    With J^s = sigma^s / 2 the coordinates of m = sum c_s J^s are
    c_1 = m_{12} + m_{21}, c_2 = i (m_{12} - m_{21}), c_3 = 2 m_{11}.
    """
    trace = m[0][0] + m[1][1]
    if not trace.is_zero():
        raise CsalgError("internal: expected a traceless matrix")
    i_unit = A.field.root_of_unity(4)
    coords = [
        m[0][1] + m[1][0],
        (m[0][1] - m[1][0]) * i_unit,
        m[0][0] * 2,
    ]
    out = A.zero_elt()
    for s, r in enumerate(coords):
        g = A.gen_index("J%d" % (s + 1))
        out = out + ConfElt(A.field, {(g, 0, q): c for q, c in r.terms.items()})
    return out


def _gen_times(A, name, r):
    """The element  generator (x) r  for a Laurent multiplier r."""
    g = A.gen_index(name)
    return ConfElt(A.field, {(g, 0, q): c for q, c in r.terms.items()})


def n4_auto(Y, X, algebra=None):
    """The N=4 automorphism attached to a pair (Y, X).

    Y is a determinant-one 2x2 matrix over S_m and X = [[c, d], [e, f]]
    a determinant-one scalar matrix.  Images: L picks up the
    logarithmic derivative Y' Y^{-1} read into the J span; each J^s is
    conjugated by Y; the G doublet transforms by the inverse transpose
    of Y and the Gbar doublet by Y itself, while the off-diagonal
    entries of X mix the two doublets through the symplectic rotation
    [[0, 1], [-1, 0]].  The cross-term signs are pinned by requiring
    the pair map to be a group homomorphism (for compose, which applies
    the right factor first) whose kernel is generated by (-I, -I); with
    them, determinant one of X is exactly the bracket-preservation
    condition on the odd part.
    """
    if isinstance(Y, SL2MatrixOverS):
        A = algebra if algebra is not None else make_n4(Y.field.conductor)
    else:
        A = algebra if algebra is not None else make_n4()
        Y = SL2MatrixOverS(A.field, Y)
    field = A.field
    if Y.field is not field:
        raise DomainError("Y lives over a different scalar field")
    x = [[_scalar(field, X[r][c]) for c in range(2)] for r in range(2)]
    if x[0][0] * x[1][1] - x[0][1] * x[1][0] != field.one():
        raise DomainError("X must have determinant 1")
    (c, d), (e, f) = x

    ye = Y.entries
    yinv = Y.inverse().entries
    yinv_t = [[yinv[0][0], yinv[1][0]], [yinv[0][1], yinv[1][1]]]
    one = _one(field)
    zero = LaurentElt(field, {})
    rot = [[zero, one], [-one, zero]]

    images = {}
    yprime = [[delta_t(entry) for entry in row] for row in ye]
    images["L"] = A.elt("L") + _traceless_current(A, mat_mul(yprime, yinv))
    half = Fraction(1, 2)
    sigma = _pauli(field)
    for s in range(3):
        jmat = [[_laurent(field, sigma[s][r][k] * half) for k in range(2)]
                for r in range(2)]
        images["J%d" % (s + 1)] = _traceless_current(
            A, mat_mul(mat_mul(ye, jmat), yinv))

    y_rot = mat_mul(ye, rot)
    yinv_t_rot = mat_mul(yinv_t, rot)
    gnames = ("G1", "G2")
    gbnames = ("Gb1", "Gb2")
    for a in range(2):
        img = A.zero_elt()
        for b in range(2):
            img = img + _gen_times(A, gnames[b], yinv_t[b][a] * c)
            img = img + _gen_times(A, gbnames[b], y_rot[b][a] * e)
        images[gnames[a]] = img
        img = A.zero_elt()
        for b in range(2):
            img = img + _gen_times(A, gnames[b], yinv_t_rot[b][a] * (-d))
            img = img + _gen_times(A, gbnames[b], ye[b][a] * f)
        images[gbnames[a]] = img
    return GenMorphism(A, Y.level, images)


def _scalar(field, value):
    if isinstance(value, CycloScalar):
        if value.field is not field:
            raise DomainError("matrix entry over a different scalar field")
        return value
    return field.rational(value)
