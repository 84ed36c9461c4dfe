"""Windowed centroid computation for twisted loop algebras.

The centroid of an algebra is the space of linear maps commuting with every
n-product.  For a twisted loop algebra the expected answer is multiplication
by a base-ring element r in k[t, t^{-1}], and this module checks that
statement at desk scale: it assembles the exact linear system
chi(a_(n) b) = a_(n) chi(b) over a window of exponents, solves it, and
re-bases the solution space so genuine multiplication operators appear as
monic monomials.

Window semantics: constraint pairs a, b are drawn from the undecorated
interior (exponents up to the interior radius), so every product lands
inside the window and no truncation enters a row; the unknown columns are
the interior together with the product closure, the codomain is padded past
the domain range by the table's lambda-degree so that multiplication by a
small power of t stays representable, equations are imposed on all ambient
components, and matrix entries never touched by a constraint are pinned to
zero.  Solutions preserve parity and the exponent cosets, which is what a
graded endomorphism of the loop algebra must do.
"""

import math
from fractions import Fraction

from .core import apply_partial_power, lambda_bracket, to_hat_basis
from .errors import DomainError
from .laurent import LaurentElt
from .linalg import adjugate, det

__all__ = ["CentroidSolution", "centroid_basis", "is_scalar_action"]


def _add_to(acc, key, val):
    s = acc.get(key)
    s = val if s is None else s + val
    if s.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = s


class _Frame:
    """Shared geometry of one windowed centroid computation."""

    def __init__(self, loop, window, interior):
        self.loop = loop
        A = loop.base
        self.algebra = A
        self.field = A.field
        self.window = Fraction(window)
        self.interior = Fraction(interior)
        if not 0 < self.interior < self.window:
            raise DomainError("interior radius must sit inside the window")

        self.alphas = []
        for res, piece in enumerate(loop.eigenbasis):
            for k, elt in enumerate(piece):
                parity = A.homogeneous_parity(elt)
                if parity is None:
                    raise DomainError("eigenbasis vector of mixed parity")
                self.alphas.append((res, elt, loop._piece_vectors[res][k],
                                    parity))
        n = A.ngens()
        if len(self.alphas) != n:
            raise DomainError("eigenbasis does not span the generators")
        cols = [a[2] for a in self.alphas]
        ematrix = [[cols[c][r] for c in range(len(cols))] for r in range(n)]
        d = det(ematrix, self.field.one())
        if d.is_zero():
            raise DomainError("eigenbasis does not span the generators")
        dinv = d.inverse()
        adj = adjugate(ematrix, self.field.one())
        self._einv = [[e * dinv for e in row] for row in adj]

        self.maxl = A.table_degrees()[0]
        self._hat_cache = {}
        self._decomp_cache = {}

    # -- basis bookkeeping -------------------------------------------------

    def hat_elt(self, key):
        """The element Dhat^{(l)} (v_alpha (x) t^q) for key (alpha, l, q)."""
        got = self._hat_cache.get(key)
        if got is None:
            ai, l, q = key
            got = apply_partial_power(
                self.algebra, self.alphas[ai][1].shift_t(q), l)
            self._hat_cache[key] = got
        return got

    def decompose(self, x):
        """Coordinates of x on the keys (alpha, l, q), via the hat basis."""
        A = self.algebra
        zero = self.field.zero()
        grouped = {}
        for (g, l, q), c in to_hat_basis(A, x).items():
            vec = grouped.setdefault((l, q), [zero] * A.ngens())
            vec[g] = vec[g] + c
        out = {}
        for (l, q), vec in grouped.items():
            for ai in range(len(self.alphas)):
                coord = zero
                for r in range(A.ngens()):
                    coord = coord + self._einv[ai][r] * vec[r]
                if not coord.is_zero():
                    out[(ai, l, q)] = coord
        return out

    def exponents(self, res, bound):
        """Exponents of the residue coset with absolute value <= bound."""
        start = Fraction(res, self.loop.order)
        out = []
        k = math.ceil(-bound - start)
        while start + k <= bound:
            q = start + k
            k += 1
            if q >= -bound:
                out.append(q)
        return out

    def parity_of(self, key):
        return self.alphas[key[0]][3]

    def residue_of(self, key):
        return self.alphas[key[0]][0]


class CentroidSolution:
    """One solution of the windowed system: a matrix over the loop basis.

    Entries map (domain key, codomain key) to a scalar, with keys of the
    form (eigenvector index, hat degree, exponent).  The endomorphism is
    parity preserving and respects exponent cosets.
    """

    def __init__(self, frame, entries):
        self._frame = frame
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}

    @property
    def loop(self):
        return self._frame.loop

    @property
    def window(self):
        return self._frame.window

    @property
    def interior(self):
        return self._frame.interior

    def image(self, dkey):
        """The image of a domain basis element, as codomain coordinates."""
        out = {}
        for (d, c), v in self.entries.items():
            if d == dkey:
                out[c] = v
        return out

    def apply(self, x):
        """Apply the endomorphism to an element inside the domain window."""
        frame = self._frame
        coords = frame.decompose(x)
        acc = frame.algebra.zero_elt()
        for dkey, w in coords.items():
            if dkey[1] > 1 or abs(dkey[2]) > frame.window:
                raise DomainError("element leaves the computed window")
            for ckey, v in self.image(dkey).items():
                acc = acc + frame.hat_elt(ckey).scale(v * w)
        return acc

    def replace_entries(self, entries):
        """A sibling solution object with different matrix entries."""
        return CentroidSolution(self._frame, entries)

    def __repr__(self):
        return "CentroidSolution(%d entries on window %s)" % (
            len(self.entries), self._frame.window)


def _echelon_insert(pivots, row):
    """Insert a sparse row into an echelon set; pivot on the least column."""
    while row:
        lead = min(row)
        piv = pivots.get(lead)
        if piv is None:
            inv = row[lead].inverse()
            pivots[lead] = {u: c * inv for u, c in row.items()}
            return lead
        coef = row.pop(lead)
        for u, c in piv.items():
            if u == lead:
                continue
            _add_to(row, u, -(coef * c))
    return None


def _back_substitute(pivots):
    for u in sorted(pivots, reverse=True):
        row = pivots[u]
        for k in sorted(k for k in row if k != u and k in pivots):
            coef = row.pop(k, None)
            if coef is None:
                continue
            for u2, c2 in pivots[k].items():
                if u2 == k:
                    continue
                _add_to(row, u2, -(coef * c2))


def _null_basis(pivots, touched):
    free = sorted(u for u in touched if u not in pivots)
    basis = []
    for f in free:
        vec = {f: None}
        for u, row in pivots.items():
            c = row.get(f)
            if c is not None:
                vec[u] = -c
        basis.append((f, vec))
    return basis


def _reduce_against(pivots, vec):
    vec = dict(vec)
    while vec:
        lead = min(vec)
        piv = pivots.get(lead)
        if piv is None:
            return vec, lead
        coef = vec.pop(lead)
        for u, c in piv.items():
            if u == lead:
                continue
            _add_to(vec, u, -(coef * c))
    return vec, None


def centroid_basis(L, window, interior):
    """Exact basis of the windowed centroid system of a loop algebra.

    Returns solutions ordered so that every one acting as multiplication by
    a monic monomial t^j comes first (j increasing), followed by whatever
    directions remain, reduced against them.
    """
    frame = _Frame(L, window, interior)
    A = frame.algebra
    field = frame.field
    one = field.one()

    interior0 = []
    for ai, (res, _, _, _) in enumerate(frame.alphas):
        for q in frame.exponents(res, frame.interior):
            interior0.append((ai, 0, q))
    if not interior0:
        raise DomainError("interior window contains no basis elements")
    interior_all = sorted(
        ((ai, l, q) for (ai, _, q) in interior0 for l in (0, 1)),
        key=lambda k: (k[0], k[2], k[1]))

    # product closure: every component of a_(n) b must stay in the window
    pair_brackets = {}
    domain = set(interior_all)
    for a in interior0:
        xa = frame.hat_elt(a)
        for b in interior0:
            poly = lambda_bracket(A, xa, frame.hat_elt(b))
            comps = {n: frame.decompose(elt)
                     for n, elt in poly.coeffs.items() if not elt.is_zero()}
            pair_brackets[(a, b)] = comps
            for coords in comps.values():
                for key in coords:
                    if key[1] > 1:
                        raise DomainError(
                            "table depth exceeds the windowed solver")
                    if abs(key[2]) > frame.window:
                        raise DomainError(
                            "window too small for the product closure")
                    domain.add(key)
    domain = sorted(domain, key=lambda k: (k[0], k[2], k[1]))
    dlo = min(k[2] for k in domain) - frame.maxl
    dhi = max(k[2] for k in domain) + frame.maxl

    codomain = []
    for bi, (res, _, _, _) in enumerate(frame.alphas):
        start = Fraction(res, L.order)
        k = math.ceil(dlo - start)
        while start + k <= dhi:
            q = start + k
            k += 1
            if q < dlo:
                continue
            for l in (0, 1):
                codomain.append((bi, l, q))
    codomain.sort(key=lambda k: (k[0], k[2], k[1]))

    # legal matrix positions: same parity, exponent difference an integer
    cod_of = {}
    for dkey in domain:
        sig = (frame.parity_of(dkey), frame.residue_of(dkey))
        if sig not in cod_of:
            cod_of[sig] = [c for c in codomain
                           if frame.parity_of(c) == sig[0]
                           and (c[2] * L.order - sig[1]) % L.order == 0]
    unknowns = {}
    for dkey in domain:
        sig = (frame.parity_of(dkey), frame.residue_of(dkey))
        for ckey in cod_of[sig]:
            unknowns[(dkey, ckey)] = len(unknowns)

    # assemble the strict rows, n running one past the table degree so the
    # vanishing products constrain the unknowns too
    rhs_cache = {}
    pivots = {}
    touched = set()
    for a in interior0:
        xa = frame.hat_elt(a)
        for b in interior0:
            bsig = (frame.parity_of(b), frame.residue_of(b))
            bcods = cod_of[bsig]
            comps_by_n = pair_brackets[(a, b)]
            for n in range(frame.maxl + 2):
                eq = {}
                for dkey, w in comps_by_n.get(n, {}).items():
                    dsig = (frame.parity_of(dkey), frame.residue_of(dkey))
                    for ckey in cod_of[dsig]:
                        uid = unknowns[(dkey, ckey)]
                        _add_to(eq.setdefault(ckey, {}), uid, w)
                for ckey in bcods:
                    uid = unknowns[(b, ckey)]
                    got = rhs_cache.get((a, ckey))
                    if got is None:
                        poly = lambda_bracket(A, xa, frame.hat_elt(ckey))
                        got = {m: frame.decompose(elt)
                               for m, elt in poly.coeffs.items()
                               if not elt.is_zero()}
                        rhs_cache[(a, ckey)] = got
                    for ekey, v in got.get(n, {}).items():
                        _add_to(eq.setdefault(ekey, {}), uid, -v)
                for row in eq.values():
                    if row:
                        touched.update(row)
                        _echelon_insert(pivots, row)

    _back_substitute(pivots)
    raw = []
    for f, vec in _null_basis(pivots, touched):
        vec = {u: (one if c is None else c) for u, c in vec.items()}
        raw.append((f, vec))

    # span-membership echelon over the raw solutions
    span = {}
    for _, vec in raw:
        _echelon_insert(span, dict(vec))

    solutions = []
    chosen = {}
    jlimit = int(math.floor(frame.window)) + frame.maxl
    for j in range(-jlimit, jlimit + 1):
        r = LaurentElt(field, {Fraction(j): one})
        entries = {}
        ok = True
        for dkey in domain:
            img = frame.decompose(frame.hat_elt(dkey).mul_laurent(r))
            for ckey, v in img.items():
                uid = unknowns.get((dkey, ckey))
                if uid is None or uid not in touched:
                    ok = False
                    break
                entries[uid] = v
            if not ok:
                break
        if not ok:
            continue
        residue, _ = _reduce_against(span, entries)
        if residue:
            continue
        vec = dict(entries)
        _echelon_insert(chosen, dict(vec))
        mat = {}
        for (pos, uid) in unknowns.items():
            if uid in vec:
                mat[pos] = vec[uid]
        solutions.append(CentroidSolution(frame, mat))

    for f, vec in raw:
        residue, lead = _reduce_against(chosen, vec)
        if not residue:
            continue
        inv = residue[lead].inverse()
        residue = {u: c * inv for u, c in residue.items()}
        _echelon_insert(chosen, dict(residue))
        mat = {}
        for (pos, uid) in unknowns.items():
            if uid in residue:
                mat[pos] = residue[uid]
        solutions.append(CentroidSolution(frame, mat))
    return solutions


def is_scalar_action(chi):
    """The Laurent element r with chi = multiplication by r, if there is one.

    The test reads a candidate r off the first undecorated interior column
    and then checks the whole interior against exact multiplication; any
    stray component, wrong eigenvector, or mismatch returns None.
    """
    frame = chi._frame
    field = frame.field
    interior0 = []
    for ai, (res, _, _, _) in enumerate(frame.alphas):
        for q in frame.exponents(res, frame.interior):
            interior0.append((ai, 0, q))
    interior0.sort(key=lambda k: (k[0], k[2]))

    d0 = interior0[0]
    terms = {}
    for ckey, v in chi.image(d0).items():
        if ckey[0] != d0[0] or ckey[1] != 0:
            return None
        terms[ckey[2] - d0[2]] = v
    r = LaurentElt(field, terms)
    if r.is_zero() and chi.entries:
        return None

    for dkey in interior0:
        for l in (0, 1):
            key = (dkey[0], l, dkey[2])
            want = frame.decompose(frame.hat_elt(key).mul_laurent(r))
            if want != chi.image(key):
                return None
    return r
