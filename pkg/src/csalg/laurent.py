"""The differential Laurent rings S_m = k[t^{1/m}, t^{-1/m}].

Elements are sparse maps from rational exponents to cyclotomic scalars.
The derivation is d/dt, and the cyclic Galois group of S_m over
S_1 = k[t, t^{-1}] acts by  t^{1/m} -> xi_m * t^{1/m}.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import DEFAULT_CONDUCTOR, CycloField, CycloScalar
from .errors import DomainError


def binom_frac(q, j):
    """Generalized binomial C(q, j) = q(q-1)...(q-j+1)/j! for rational q."""
    q = Fraction(q)
    out = Fraction(1)
    for i in range(j):
        out = out * (q - i) / (i + 1)
    return out


def _as_scalar(field, value):
    if isinstance(value, CycloScalar):
        if value.field is not field:
            if field.conductor % value.field.conductor:
                raise DomainError(
                    "scalar from Q(zeta_%d) does not embed in Q(zeta_%d)"
                    % (value.field.conductor, field.conductor))
            return value._embed(field)
        return value
    return field.rational(value)


class LaurentElt:
    """An element of S_m over Q(zeta_N).

    ``terms`` maps exponents (Fractions with denominator dividing the
    level) to nonzero scalars.  The level records which ring S_m the
    element is considered to live in; it may be coarser than the
    exponents strictly require, which matters for the Galois action.
    """

    __slots__ = ("field", "level", "terms")

    def __init__(self, field, terms, level=None):
        clean = {}
        for q, c in terms.items():
            q = Fraction(q)
            c = _as_scalar(field, c)
            if not c.is_zero():
                if q in clean:
                    c = clean[q] + c
                    if c.is_zero():
                        del clean[q]
                        continue
                clean[q] = c
        self.field = field
        self.terms = clean
        needed = lcm(1, *(q.denominator for q in clean)) if clean else 1
        if level is None:
            level = needed
        elif level % needed:
            raise DomainError(
                "exponent denominators do not divide the declared level %d" % level)
        self.level = level

    # -- constructors ---------------------------------------------------

    @classmethod
    def monomial(cls, coeff, q, conductor=DEFAULT_CONDUCTOR, level=None):
        field = CycloField.get(conductor)
        return cls(field, {Fraction(q): coeff}, level=level)

    @classmethod
    def one(cls, conductor=DEFAULT_CONDUCTOR):
        return cls.monomial(1, 0, conductor)

    @classmethod
    def zero(cls, conductor=DEFAULT_CONDUCTOR):
        return cls(CycloField.get(conductor), {})

    # -- queries --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_unit(self):
        """Units of S_m are the nonzero monomials."""
        return len(self.terms) == 1

    def is_one(self):
        return (len(self.terms) == 1
                and self.terms.get(Fraction(0)) == self.field.one())

    def constant_coefficient(self):
        return self.terms.get(Fraction(0), self.field.zero())

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentElt):
            return other
        return LaurentElt(self.field, {Fraction(0): other})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for q, c in other.terms.items():
            s = out.get(q, self.field.zero()) + c
            if s.is_zero():
                out.pop(q, None)
            else:
                out[q] = s
        return LaurentElt(self.field, out, level=lcm(self.level, other.level))

    __radd__ = __add__

    def __neg__(self):
        return LaurentElt(self.field, {q: -c for q, c in self.terms.items()},
                          level=self.level)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return LaurentElt(self.field,
                              {q: c * other for q, c in self.terms.items()},
                              level=self.level)
        other = self._coerce(other)
        out = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = q1 + q2
                prev = out.get(q)
                out[q] = c1 * c2 if prev is None else prev + c1 * c2
        return LaurentElt(self.field, out, level=lcm(self.level, other.level))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = LaurentElt(self.field, {Fraction(0): 1}, level=self.level)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if not self.is_unit():
            raise DomainError("only monomials are invertible in S_m: %s" % self)
        ((q, c),) = self.terms.items()
        return LaurentElt(self.field, {-q: c.inverse()}, level=self.level)

    def __eq__(self, other):
        if isinstance(other, LaurentElt):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self == self._coerce(other)
        return NotImplemented

    __hash__ = None

    # -- the differential and Galois structure ----------------------------

    def delta(self):
        """Apply the derivation d/dt."""
        out = {}
        for q, c in self.terms.items():
            if q:
                out[q - 1] = c * q
        return LaurentElt(self.field, out, level=self.level)

    def delta_power(self, j):
        """Divided power delta^{(j)} = (d/dt)^j / j!; acts by C(q,j) t^{q-j}."""
        out = {}
        for q, c in self.terms.items():
            w = binom_frac(q, j)
            if w:
                out[q - j] = c * w
        return LaurentElt(self.field, out, level=self.level)

    def galois(self, g):
        """Apply the g-th power of the level's Galois generator.

        The generator sends t^{p/m} to xi_m^p t^{p/m} where m is the
        level; integer-exponent terms are fixed.
        """
        m = self.level
        field = self.field
        if field.conductor % m:
            raise DomainError(
                "level %d does not divide the conductor %d" % (m, field.conductor))
        step = field.conductor // m
        out = {}
        for q, c in self.terms.items():
            p = int(q * m)
            out[q] = c * field.zeta(step * p * g)
        return LaurentElt(field, out, level=m)

    def subs_t_inverse(self):
        """The substitution t -> t^{-1} (an order-two ring automorphism)."""
        return LaurentElt(self.field,
                          {-q: c for q, c in self.terms.items()},
                          level=self.level)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for q in sorted(self.terms):
            c = self.terms[q]
            cs = str(c)
            needs_parens = (" + " in cs) or (" - " in cs)
            if q == 0:
                parts.append("(%s)" % cs if needs_parens else cs)
                continue
            mono = "t^{%s}" % q
            if needs_parens:
                parts.append("(%s)*%s" % (cs, mono))
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (cs, mono))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return "<LaurentElt %s (level %d)>" % (self, self.level)


def delta_t(x):
    """The derivation d/dt of S_m, as a free function."""
    return x.delta()


def galois_act(g, x):
    """Act by the g-th power of the Galois generator of S_m over S_1."""
    return x.galois(g)
