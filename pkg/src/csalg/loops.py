"""Twisted loop algebras and their algebras of modes.

A finite-order automorphism sigma of a conformal superalgebra A splits the
generator space V into eigenspaces A_i for the m-th roots of unity, and the
twisted loop algebra collects the pieces A_i (x) t^{i/m} inside A (x) S_m.
Quotienting the loop algebra by the image of (D + d/dt) leaves an ordinary
(non-conformal) superalgebra spanned by modes v_mu with mu in (1/m)Z; its
bracket expands through the lambda-bracket coefficients,

    [a_mu, b_nu] = sum_j  C(mu, j) (a_(j) b)_{mu + nu - j},

with C the generalized binomial.  The module provides the eigenspace
splitting, membership and split-form checks for the loop algebra, and exact
mode arithmetic including the spectrum of the Virasoro mode L_1 acting on a
window of modes, whose fractional parts separate the twists.
"""

import math
from fractions import Fraction

from .core import EVEN, ODD, find_virasoro, lambda_bracket, to_hat_basis
from .cyclotomic import CycloScalar
from .errors import CsalgError, DomainError
from .laurent import binom_frac
from .linalg import null_space, rank, solve

__all__ = [
    "AlgElt",
    "LoopAlgebra",
    "SplitReport",
    "alg_bracket",
    "alg_reduce",
    "eigenspaces",
    "l0_spectrum",
    "loop_membership",
    "split_check",
]


def _plain_vector(A, x):
    """Coordinates of a bare V (x) 1 element on the generator basis."""
    vec = [A.field.zero()] * A.ngens()
    for (g, j, q), c in x.terms.items():
        if j or q:
            raise DomainError(
                "expected an element of the generator span, got a term "
                "with D-power %d and exponent %s" % (j, q))
        vec[g] = vec[g] + c
    return vec


class LoopAlgebra:
    """Eigenspace data of a twisted loop algebra L(A, sigma).

    ``eigenbasis[i]`` spans the xi_m^i eigenspace of the twist inside the
    generator span; the piece at exponent q of the loop algebra is the
    eigenspace for residue m*q mod m.  The class stores only V-level data:
    the twist commutes with D, so the D-closure is implied.
    """

    def __init__(self, base, order, eigenbasis):
        if order < 1:
            raise DomainError("twist order must be positive")
        if len(eigenbasis) != order:
            raise DomainError(
                "expected %d eigenspace lists, got %d"
                % (order, len(eigenbasis)))
        self.base = base
        self.order = order
        self.eigenbasis = [list(piece) for piece in eigenbasis]
        self._piece_vectors = []
        for piece in self.eigenbasis:
            vecs = []
            for x in piece:
                if x.is_zero():
                    raise DomainError("zero vector in an eigenbasis")
                vecs.append(_plain_vector(base, x))
            self._piece_vectors.append(vecs)

    @property
    def level(self):
        return self.order

    def __repr__(self):
        dims = [len(piece) for piece in self.eigenbasis]
        return "LoopAlgebra(%s, order=%d, dims=%s)" % (
            self.base.name, self.order, dims)

    def piece_contains(self, i, vec):
        """Whether a coordinate vector lies in the residue-i eigenspace."""
        basis = self._piece_vectors[i % self.order]
        if not basis:
            return all(c.is_zero() for c in vec)
        n = self.base.ngens()
        rows = [[b[r] for b in basis] for r in range(n)]
        return solve(rows, vec, len(basis), self.base.field.zero()) is not None

    def residue_of(self, mu):
        """The eigenvalue residue carried by the exponent mu, or None."""
        scaled = Fraction(mu) * self.order
        if scaled.denominator != 1:
            return None
        return int(scaled) % self.order

    def mode(self, ref, mu, coeff=1):
        """The single mode  coeff * v_mu  as an AlgElt."""
        g = self.base.gen_index(ref)
        return AlgElt(self, {(g, Fraction(mu)): coeff})


def eigenspaces(A, sigma, m):
    """Split the generator span of A under an order-m twist.

    The twist must be given at level 1 with images inside V (x) 1; twists
    that genuinely need positive S_m-level (a loop-dependent gauge) are
    rejected, since the eigenspace picture lives over the base ring.
    """
    if sigma.algebra != A:
        raise DomainError("morphism is defined on a different algebra")
    if sigma.level != 1:
        raise DomainError(
            "twist must be given at level 1, got level %d" % sigma.level)
    field = A.field
    n = A.ngens()
    cols = []
    for i in range(n):
        cols.append(_plain_vector(A, sigma.images[i]))
    matrix = [[cols[c][r] for c in range(n)] for r in range(n)]

    power = [[field.one() if r == c else field.zero() for c in range(n)]
             for r in range(n)]
    for _ in range(m):
        power = [[sum((power[r][k] * matrix[k][c] for k in range(n)),
                      field.zero())
                  for c in range(n)] for r in range(n)]
    for r in range(n):
        for c in range(n):
            want = field.one() if r == c else field.zero()
            if power[r][c] != want:
                raise DomainError(
                    "automorphism does not have order dividing %d" % m)

    xi = field.root_of_unity(m)
    eigenbasis = []
    total = 0
    for i in range(m):
        shift = xi ** i
        rows = [[matrix[r][c] - (shift if r == c else field.zero())
                 for c in range(n)] for r in range(n)]
        basis = null_space(rows, n, field.one(), field.zero())
        piece = []
        for vec in basis:
            x = A.zero_elt()
            for g, c in enumerate(vec):
                if not c.is_zero():
                    x = x + A.elt(g, coeff=c)
            piece.append(x)
        total += len(piece)
        eigenbasis.append(piece)
    if total != n:
        raise DomainError(
            "twist is not diagonalizable over the m-th roots of unity")
    return LoopAlgebra(A, m, eigenbasis)


def loop_membership(L, x):
    """Whether x in A (x) S lies in the twisted loop algebra.

    Works on the hat basis: each component Dhat^{(l)} (v (x) t^q) must have
    its V-part inside the eigenspace for residue m*q mod m.  Exponents off
    the (1/m)Z lattice fail immediately.
    """
    A = L.base
    if x.field is not A.field:
        raise DomainError("element uses a different scalar field")
    grouped = {}
    for (g, l, q), c in to_hat_basis(A, x).items():
        vec = grouped.setdefault((l, q), [A.field.zero()] * A.ngens())
        vec[g] = vec[g] + c
    for (l, q), vec in grouped.items():
        i = L.residue_of(q)
        if i is None:
            return False
        if not L.piece_contains(i, vec):
            return False
    return True


class SplitReport:
    """Outcome of the split-form check on a window of exponents."""

    def __init__(self, window, injective, missed):
        self.window = window
        self.injective = injective
        self.missed = list(missed)

    @property
    def surjective(self):
        return not self.missed

    @property
    def bijective(self):
        return self.injective and self.surjective

    def lines(self):
        out = ["multiplication map on window %s:" % self.window]
        out.append("  injective: %s" % ("yes" if self.injective else "NO"))
        if self.missed:
            out.append("  surjective: NO, missed:")
            for name, q in self.missed:
                out.append("    %s (x) t^{%s}" % (name, q))
        else:
            out.append("  surjective: yes")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def split_check(L, window):
    """Check that base change to S_m flattens the loop algebra.

    The multiplication map sends each generator a (x) t^{i/m} (x) t^{l/m}
    of L (x)_R S_m to a (x) t^{(i+l)/m}; on a window of target exponents it
    is onto iff the eigenspaces jointly span V, and one-to-one iff their
    concatenated bases are independent.  Both are decided by exact rank.
    """
    W = Fraction(window)
    if W <= 0:
        raise DomainError("window must be positive")
    A = L.base
    field = A.field
    n = A.ngens()
    columns = [vec for piece in L._piece_vectors for vec in piece]
    rows = [[col[r] for col in columns] for r in range(n)]
    injective = rank(rows, field.zero()) == len(columns)

    missing_gens = []
    for g in range(n):
        rhs = [field.one() if r == g else field.zero() for r in range(n)]
        if columns:
            hit = solve(rows, rhs, len(columns), field.zero()) is not None
        else:
            hit = False
        if not hit:
            missing_gens.append(g)

    missed = []
    j = -math.floor(W * L.order)
    top = math.floor(W * L.order)
    while j <= top:
        for g in missing_gens:
            missed.append((A.generators[g].name, Fraction(j, L.order)))
        j += 1
    return SplitReport(W, injective, missed)


class AlgElt:
    """A finite sum of modes  c * v_mu  in the algebra of a twisted loop.

    Terms are stored on the generator basis in reduced form (no D powers);
    construction checks that the vector sitting at each exponent lies in
    the eigenspace its coset prescribes, so ill-formed modes fail early.
    """

    __slots__ = ("loop", "terms")

    def __init__(self, loop, terms, validate=True):
        field = loop.base.field
        clean = {}
        for (g, mu), c in terms.items():
            g = loop.base.gen_index(g)
            mu = Fraction(mu)
            if not isinstance(c, CycloScalar):
                c = field.rational(c)
            prev = clean.get((g, mu))
            c = c if prev is None else prev + c
            if c.is_zero():
                clean.pop((g, mu), None)
            else:
                clean[(g, mu)] = c
        self.loop = loop
        self.terms = clean
        if validate:
            self._check_cosets()

    def _check_cosets(self):
        A = self.loop.base
        grouped = {}
        for (g, mu), c in self.terms.items():
            vec = grouped.setdefault(mu, [A.field.zero()] * A.ngens())
            vec[g] = vec[g] + c
        for mu, vec in grouped.items():
            i = self.loop.residue_of(mu)
            if i is None:
                raise DomainError(
                    "mode %s is outside the exponent lattice (1/%d)Z"
                    % (mu, self.loop.order))
            if not self.loop.piece_contains(i, vec):
                raise DomainError(
                    "vector at mode %s misses its eigenspace (residue %d)"
                    % (mu, i))

    def is_zero(self):
        return not self.terms

    def _merge(self, other, flip):
        if not isinstance(other, AlgElt):
            return NotImplemented
        if other.loop is not self.loop:
            raise DomainError("modes belong to different loop algebras")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, self.loop.base.field.zero())
            s = s - c if flip else s + c
            if s.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = s
        return AlgElt(self.loop, terms, validate=False)

    def __add__(self, other):
        return self._merge(other, False)

    def __sub__(self, other):
        return self._merge(other, True)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        field = self.loop.base.field
        if not isinstance(c, CycloScalar):
            c = field.rational(c)
        if c.is_zero():
            return AlgElt(self.loop, {}, validate=False)
        return AlgElt(self.loop,
                      {k: v * c for k, v in self.terms.items()},
                      validate=False)

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, AlgElt):
            return NotImplemented
        return self.loop is other.loop and self.terms == other.terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        A = self.loop.base
        parts = []
        for (g, mu) in sorted(self.terms, key=lambda k: (k[0], k[1])):
            coeff = self.terms[(g, mu)]
            body = "%s[%s]" % (A.generators[g].name, mu)
            for e, c in sorted(coeff.coeffs.items()):
                cs = str(CycloScalar(coeff.field, {e: c}))
                if cs == "1":
                    parts.append(body)
                elif cs == "-1":
                    parts.append("-" + body)
                else:
                    parts.append("%s*%s" % (cs, body))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return "AlgElt(%s)" % self


def alg_reduce(L, raw):
    """Normalize decorated modes: (D^{(j)} v)_mu = (-1)^j C(mu,j) v_{mu-j}.

    ``raw`` maps (generator, D-power, mode) to a scalar.  The relation is
    the one forced by killing the image of (D + d/dt); iterating it strips
    every D decoration.
    """
    field = L.base.field
    terms = {}
    for (g, j, mu), c in raw.items():
        g = L.base.gen_index(g)
        mu = Fraction(mu)
        if not isinstance(c, CycloScalar):
            c = field.rational(c)
        w = binom_frac(mu, j)
        if j % 2:
            w = -w
        if w == 0:
            continue
        c = c * w
        key = (g, mu - j)
        s = terms.get(key, field.zero()) + c
        if s.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = s
    return AlgElt(L, terms)


def alg_bracket(L, x, y):
    """The mode bracket, expanded through the lambda-bracket coefficients.

    [a_mu, b_nu] = sum_j C(mu,j) (a_(j) b)_{mu+nu-j}; the sum is finite
    because the bracket of two generators is polynomial in lambda.
    """
    if x.loop is not L or y.loop is not L:
        raise DomainError("modes belong to a different loop algebra")
    A = L.base
    raw = {}
    for (g1, mu), c1 in x.terms.items():
        for (g2, nu), c2 in y.terms.items():
            poly = lambda_bracket(A, A.elt(g1), A.elt(g2))
            c12 = c1 * c2
            for j, elt in poly.coeffs.items():
                w = binom_frac(mu, j)
                if w == 0:
                    continue
                for (g, d, q), c in elt.terms.items():
                    key = (g, d, mu + nu - j + q)
                    s = raw.get(key, A.field.zero()) + c12 * c * w
                    if s.is_zero():
                        raw.pop(key, None)
                    else:
                        raw[key] = s
    return alg_reduce(L, raw)


class L0Spectrum:
    """Exact eigenvalues of the Virasoro mode L_1 on a mode window."""

    def __init__(self, eigenvalues):
        self.eigenvalues = frozenset(eigenvalues)
        self.fractional_parts = frozenset(
            v - math.floor(v) for v in self.eigenvalues)

    def __repr__(self):
        return "L0Spectrum(%s)" % sorted(self.eigenvalues)


def l0_spectrum(L, parity, window):
    """Spectrum of x -> [L_1, x] on one parity's modes within a window.

    Each eigenbasis vector of weight h contributes eigenvalues h - 1 - mu
    over its coset of modes; only the fractional parts survive widening the
    window, so they are the invariant worth comparing between twists.
    """
    if parity in ("even", EVEN):
        parity = EVEN
    elif parity in ("odd", ODD):
        parity = ODD
    else:
        raise DomainError("parity must be even or odd")
    W = Fraction(window)
    vira = find_virasoro(L.base)
    if vira is None:
        raise DomainError("algebra has no Virasoro generator")
    evec = [L.base.field.zero()] * L.base.ngens()
    evec[vira] = L.base.field.one()
    if not L.piece_contains(0, evec):
        raise DomainError("twist does not fix the Virasoro generator")

    lmode = L.mode(vira, 1)
    values = set()
    for i, piece in enumerate(L.eigenbasis):
        for a in piece:
            if L.base.homogeneous_parity(a) != parity:
                continue
            start = Fraction(i, L.order)
            k = math.ceil(-W - start)
            while start + k <= W:
                mu = start + k
                k += 1
                if mu < -W:
                    continue
                am = AlgElt(L, {(g, mu): c
                                for (g, _, _), c in a.terms.items()},
                            validate=False)
                image = alg_bracket(L, lmode, am)
                if image.is_zero():
                    values.add(Fraction(0))
                    continue
                (k0, c0) = next(iter(am.terms.items()))
                got = image.terms.get(k0)
                if got is None or image != am.scale(got / c0):
                    raise CsalgError(
                        "L_1 action is not diagonal on the mode basis")
                val = (got / c0).as_rational()
                if val is None:
                    raise CsalgError("non-rational Virasoro eigenvalue")
                values.add(val)
    return L0Spectrum(values)
