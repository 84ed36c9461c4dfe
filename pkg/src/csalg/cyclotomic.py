"""Exact arithmetic in the cyclotomic field Q(zeta_N).

A scalar is a sparse sum  sum_e c_e * zeta_N^e  with Fraction
coefficients, kept fully reduced modulo the N-th cyclotomic polynomial
(so 0 <= e < phi(N)).  The conductor N is fixed per engine instance;
every root of unity in play is a power of one primitive N-th root, so
compatibility  xi_{l*m}^l = xi_m  holds by construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ConductorError, DomainError

#: Conductor used when none is given.  Covers orders 1,2,3,4,6,8,12,24.
DEFAULT_CONDUCTOR = 24


def _proper_divisors(n):
    return [d for d in range(1, n) if n % d == 0]


def _poly_div_exact(num, den):
    """Divide integer coefficient lists (little-endian), denominator monic.

    The remainder is asserted to vanish; used only for cyclotomic
    polynomials where divisibility is guaranteed.
    """
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        out[i - dn] = c
        if c:
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    assert all(c == 0 for c in num), "non-exact cyclotomic division"
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients (little-endian) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in _proper_divisors(n):
        poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return poly


class CycloField:
    """The field Q(zeta_N) with a precomputed power-reduction table.

    Instances are interned per conductor: ``CycloField.get(24)`` always
    returns the same object.
    """

    _instances = {}

    def __init__(self, conductor):
        if conductor < 1:
            raise ConductorError("conductor must be positive, got %r" % conductor)
        self.conductor = conductor
        poly = cyclotomic_poly(conductor)
        self.degree = len(poly) - 1
        # zeta^degree = -(lower part of the minimal polynomial)
        base = {e: Fraction(-poly[e]) for e in range(self.degree) if poly[e]}
        rewrite = {self.degree: base}
        for e in range(self.degree + 1, conductor):
            prev = rewrite[e - 1]
            cur = {}
            for i, c in prev.items():
                if i + 1 < self.degree:
                    cur[i + 1] = cur.get(i + 1, Fraction(0)) + c
                else:
                    for bi, bc in base.items():
                        cur[bi] = cur.get(bi, Fraction(0)) + c * bc
            rewrite[e] = {i: c for i, c in cur.items() if c}
        self._rewrite = rewrite
        self._zero = CycloScalar(self, {})
        self._one = CycloScalar(self, {0: Fraction(1)})

    @classmethod
    def get(cls, conductor):
        field = cls._instances.get(conductor)
        if field is None:
            field = cls._instances[conductor] = cls(conductor)
        return field

    def __repr__(self):
        return "CycloField(%d)" % self.conductor

    def reduce_terms(self, terms):
        """Reduce a raw {exponent: Fraction} map modulo the minimal polynomial."""
        out = {}
        for e, c in terms.items():
            if not c:
                continue
            e %= self.conductor
            if e < self.degree:
                out[e] = out.get(e, Fraction(0)) + c
            else:
                for i, w in self._rewrite[e].items():
                    out[i] = out.get(i, Fraction(0)) + c * w
        return {e: c for e, c in out.items() if c}

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def rational(self, value):
        value = Fraction(value)
        if not value:
            return self._zero
        return CycloScalar(self, {0: value})

    def zeta(self, k=1):
        """The scalar zeta_N^k."""
        return CycloScalar(self, self.reduce_terms({k: Fraction(1)}))

    def element(self, terms):
        """Build a scalar from a raw {exponent: rational} map."""
        return CycloScalar(
            self, self.reduce_terms({e: Fraction(c) for e, c in terms.items()}))

    def root_of_unity(self, m):
        """The compatible primitive m-th root xi_m = zeta_N^{N/m}."""
        if m < 1 or self.conductor % m:
            raise ConductorError(
                "order %d does not divide the conductor %d" % (m, self.conductor))
        return self.zeta(self.conductor // m)


def root_of_unity(m, conductor=DEFAULT_CONDUCTOR):
    """Module-level convenience wrapper around :meth:`CycloField.root_of_unity`."""
    return CycloField.get(conductor).root_of_unity(m)


def _solve_rational(matrix, rhs):
    """Solve a square Fraction system by Gaussian elimination.

    Returns the solution vector, or None when the matrix is singular.
    """
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


class CycloScalar:
    """An element of Q(zeta_N), immutable after construction."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    # -- coercion -----------------------------------------------------

    def _pair(self, other):
        """Coerce (self, other) into a common field; returns (a, b) or None."""
        if isinstance(other, CycloScalar):
            if other.field is self.field:
                return self, other
            na, nb = self.field.conductor, other.field.conductor
            if na % nb == 0:
                return self, other._embed(self.field)
            if nb % na == 0:
                return self._embed(other.field), other
            raise ConductorError(
                "incompatible conductors %d and %d" % (na, nb))
        if isinstance(other, (int, Fraction)):
            return self, self.field.rational(other)
        return None

    def _embed(self, field):
        scale = field.conductor // self.field.conductor
        return field.element({e * scale: c for e, c in self.coeffs.items()})

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def as_rational(self):
        """The value as a Fraction if it is rational, else None."""
        if not self.coeffs:
            return Fraction(0)
        if set(self.coeffs) == {0}:
            return self.coeffs[0]
        return None

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CycloScalar(a.field, out)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.field, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return self.field.zero()
            return CycloScalar(self.field,
                               {e: c * f for e, c in self.coeffs.items()})
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        raw = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                raw[e] = raw.get(e, Fraction(0)) + c1 * c2
        return CycloScalar(a.field, a.field.reduce_terms(raw))

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise DomainError("division by zero in Q(zeta_%d)" % self.field.conductor)
        r = self.as_rational()
        if r is not None:
            return self.field.rational(1 / r)
        phi = self.field.degree
        # columns: self * zeta^j expressed on the power basis
        cols = [(self * self.field.zeta(j)).coeffs for j in range(phi)]
        matrix = [[cols[j].get(i, Fraction(0)) for j in range(phi)]
                  for i in range(phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        sol = _solve_rational(matrix, rhs)
        assert sol is not None, "nonzero field element must be invertible"
        return CycloScalar(self.field,
                           {j: c for j, c in enumerate(sol) if c})

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    __hash__ = None  # mutable-dict backing; not meant to be a dict key

    # -- printing -----------------------------------------------------

    def _term_strings(self):
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            else:
                z = "zeta^%d" % e if e != 1 else "zeta"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append("-" + z)
                else:
                    parts.append("%s*%s" % (c, z))
        return parts

    def __str__(self):
        parts = self._term_strings()
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return "<CycloScalar %s (N=%d)>" % (self, self.field.conductor)
