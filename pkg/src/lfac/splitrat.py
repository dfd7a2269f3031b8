"""Factored rational functions of q^{-s} and the fractional ideals they generate.

The ring variable X stands for q^{-s}.  Everything this package ever divides
or classifies lives in the multiplicative family

    unit * X^xpower * prod_i (1 - beta_i X)^{e_i}

with exact scalar unit and bases, so products, quotients, the substitution
s -> s + t and gcd-type ideal operations never leave factored form.  An
L-factor is the special case unit 1, xpower 0, all exponents <= 0 (then the
value is 1/P(X) with P(0) = 1).

Ideal semantics: X is a unit of C[q^s, q^{-s}], so a fractional ideal only
sees the exponents at each base.  The sum of the principal ideals (f_1),
..., (f_k) is generated by the factor-wise minimum, with an input lacking a
base contributing exponent 0 there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ScalarDomainError
from .scalar import Scalar, half_integer

__all__ = ["SplitRational", "IdealGen", "ring_mul", "shift", "ideal_generator",
           "vanishing_order"]


def _as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar.from_rational(x)


class SplitRational:
    """A unit times a monomial in X times split linear factors.

    >>> a = Scalar.symbol("a")
    >>> f = SplitRational.from_poles([a, a * Scalar.v_power(-1)])
    >>> str(f)
    '1/((1 - a*X)(1 - a*v^-1*X))'
    >>> str(f * f.inverse())
    '1'
    """

    __slots__ = ("unit", "xpower", "factors")

    def __init__(self, unit=1, xpower: int = 0, factors=()):
        unit = _as_scalar(unit)
        if unit.is_zero:
            raise ScalarDomainError("unit of a split rational must be nonzero")
        merged: dict[Scalar, int] = {}
        for beta, e in factors:
            beta = _as_scalar(beta)
            e = int(e)
            if e == 0 or beta.is_zero:  # (1 - 0*X) is the empty factor
                continue
            merged[beta] = merged.get(beta, 0) + e
        self.unit = unit
        self.xpower = int(xpower)
        self.factors = tuple(sorted(
            ((b, e) for b, e in merged.items() if e != 0),
            key=lambda p: p[0].sort_key()))

    # ---------------------------------------------------------------- build

    @classmethod
    def one(cls) -> "SplitRational":
        return cls()

    @classmethod
    def from_poles(cls, betas) -> "SplitRational":
        """The L-factor with simple poles at the given bases: prod 1/(1 - b X)."""
        return cls(factors=[(b, -1) for b in betas])

    # ---------------------------------------------------------------- ring ops

    def __mul__(self, other):
        if not isinstance(other, SplitRational):
            return NotImplemented
        return SplitRational(self.unit * other.unit,
                             self.xpower + other.xpower,
                             self.factors + other.factors)

    def inverse(self) -> "SplitRational":
        return SplitRational(self.unit.inverse(), -self.xpower,
                             [(b, -e) for b, e in self.factors])

    def __truediv__(self, other):
        if not isinstance(other, SplitRational):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        n = int(n)
        return SplitRational(self.unit ** n, self.xpower * n,
                             [(b, e * n) for b, e in self.factors])

    def shift(self, t) -> "SplitRational":
        """The substitution s -> s + t for a half-integer t, i.e. X -> v^{-2t} X."""
        t = half_integer(t)
        w = Scalar.v_power(int(-2 * t))
        return SplitRational(self.unit * w ** self.xpower, self.xpower,
                             [(b * w, e) for b, e in self.factors])

    # ---------------------------------------------------------------- queries

    @property
    def is_one(self) -> bool:
        return self.unit.is_one and self.xpower == 0 and not self.factors

    @property
    def is_lfactor(self) -> bool:
        return (self.unit.is_one and self.xpower == 0
                and all(e <= 0 for _, e in self.factors))

    @property
    def contains_units(self) -> bool:
        """Whether the fractional ideal (self) contains the unit ideal."""
        return all(e <= 0 for _, e in self.factors)

    def vanishing_order(self, beta) -> int:
        """Order of vanishing at the point q^{s0} = beta (negative for a pole)."""
        beta = _as_scalar(beta)
        for b, e in self.factors:
            if b == beta:
                return e
        return 0

    def pole_roots(self) -> tuple[Scalar, ...]:
        return tuple(b for b, e in self.factors if e < 0)

    def zero_roots(self) -> tuple[Scalar, ...]:
        return tuple(b for b, e in self.factors if e > 0)

    def substitute(self, values: dict) -> "SplitRational":
        return SplitRational(self.unit.substitute(values), self.xpower,
                             [(b.substitute(values), e) for b, e in self.factors])

    # ---------------------------------------------------------------- identity

    def sort_key(self):
        return (self.unit.sort_key(), self.xpower,
                tuple((b.sort_key(), e) for b, e in self.factors))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = SplitRational(unit=other)
        if not isinstance(other, SplitRational):
            return NotImplemented
        return (self.unit, self.xpower, self.factors) == \
               (other.unit, other.xpower, other.factors)

    def __hash__(self):
        # units hash like their scalar so the coercing equality stays sane
        if not self.factors and not self.xpower:
            return hash(self.unit)
        return hash((self.unit, self.xpower, self.factors))

    # ---------------------------------------------------------------- text

    @staticmethod
    def _beta_text(beta: Scalar) -> str:
        s = str(beta)
        if s.startswith("-") or " " in s:
            return "(%s)" % s
        return s

    @staticmethod
    def _factor_text(beta: Scalar, e: int) -> str:
        base = "(1 - %s*X)" % SplitRational._beta_text(beta)
        return base if e == 1 else "%s^%d" % (base, e)

    def __str__(self):
        top, bot = [], []
        if not self.unit.is_one:
            u = str(self.unit)
            top.append("(%s)" % u if (" " in u or u.startswith("-")) else u)
        if self.xpower:
            xp = "X" if abs(self.xpower) == 1 else "X^%d" % abs(self.xpower)
            (top if self.xpower > 0 else bot).append(xp)
        for b, e in self.factors:
            (top if e > 0 else bot).append(self._factor_text(b, abs(e)))

        def group(pieces):
            # explicit '*' between leading unit/X pieces, juxtaposed factors
            out = ""
            for p in pieces:
                if not out:
                    out = p
                elif p.startswith("("):
                    out += p
                else:
                    out += "*" + p
            return out

        num = group(top) or "1"
        if not bot:
            return num
        if len(bot) == 1:
            den = bot[0]
            if not den.startswith("("):
                den = "(%s)" % den  # X^2 and the like
        else:
            den = "(%s)" % group(bot)
        return "%s/%s" % (num, den)

    def __repr__(self):
        return "SplitRational(%s)" % self


@dataclass(frozen=True)
class IdealGen:
    """Canonical generator of a sum of principal fractional ideals."""
    generator: SplitRational
    is_lfactor: bool
    contains_units: bool


def ring_mul(f: SplitRational, g: SplitRational) -> SplitRational:
    return f * g


def shift(f: SplitRational, t) -> SplitRational:
    return f.shift(t)


def vanishing_order(f: SplitRational, beta) -> int:
    return f.vanishing_order(beta)


def ideal_generator(fs) -> IdealGen:
    """Generator of the fractional ideal sum of the (f_i), unit-normalized.

    The generator of (f_1) + ... + (f_k) carries, at each base beta, the
    minimum exponent over all inputs, an input without that base counting 0.
    Every input divides out, so the result is invariant under permutation
    and duplication of the list.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("ideal_generator needs at least one element")
    bases: dict[Scalar, None] = {}
    for f in fs:
        for b, _ in f.factors:
            bases.setdefault(b)
    gen = SplitRational(factors=[
        (b, min(f.vanishing_order(b) for f in fs)) for b in bases])
    return IdealGen(gen, gen.is_lfactor, gen.contains_units)
