"""Characters of the Weil group, split into ramification data and Satake value.

A character is a pair: an element of the free abelian group on formal
ramified tags, and an exact scalar recording the value at a uniformizer.
Unramified means the tag part is empty; |.|^t is unramified with value
v^{-2t} (recall |uniformizer| = 1/q and v*v = q).  The free-group model has
no torsion, so quadratic ramified characters are out of scope; the
unramified quadratic character is available as value -1.
"""

from __future__ import annotations

from .errors import HalfIntegerError
from .scalar import Scalar, _check_name, half_integer

__all__ = ["Character"]


def _norm_tag(tag) -> tuple:
    if isinstance(tag, dict):
        items = tag.items()
    else:
        items = tag
    acc: dict[str, int] = {}
    for name, e in items:
        _check_name(name)
        acc[name] = acc.get(name, 0) + int(e)
    return tuple(sorted((n, e) for n, e in acc.items() if e))


class Character:
    """Immutable character value.

    >>> chi = Character.unramified(Scalar.symbol("a")) * Character.absval("1/2")
    >>> str(chi)
    'unr(a*v^-1)'
    >>> chi.is_unramified, (chi * chi.inverse()).is_trivial
    (True, True)
    """

    __slots__ = ("tag", "satake")

    def __init__(self, tag, satake: Scalar):
        if not isinstance(satake, Scalar):
            satake = Scalar.from_rational(satake)
        if satake.is_zero:
            raise ValueError("character value at the uniformizer must be nonzero")
        self.tag = _norm_tag(tag)
        self.satake = satake

    @classmethod
    def trivial(cls) -> "Character":
        return _TRIVIAL

    @classmethod
    def unramified(cls, satake) -> "Character":
        return cls((), satake)

    @classmethod
    def ramified(cls, name: str, satake=1) -> "Character":
        """A formal ramified character with a bookkeeping uniformizer value."""
        return cls(((name, 1),), satake)

    @classmethod
    def absval(cls, t) -> "Character":
        """|.|^t for half-integer t."""
        t = half_integer(t)
        num = -2 * t
        if num.denominator != 1:
            raise HalfIntegerError("impossible")  # -2t is integral by construction
        return cls((), Scalar.v_power(int(num)))

    # ---------------------------------------------------------------- algebra

    def __mul__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return Character(self.tag + other.tag, self.satake * other.satake)

    def __pow__(self, n):
        n = int(n)
        return Character([(name, e * n) for name, e in self.tag], self.satake ** n)

    def inverse(self) -> "Character":
        return self ** -1

    # ---------------------------------------------------------------- queries

    @property
    def is_unramified(self) -> bool:
        return not self.tag

    @property
    def is_trivial(self) -> bool:
        return not self.tag and self.satake.is_one

    def substitute(self, values: dict) -> "Character":
        return Character(self.tag, self.satake.substitute(values))

    def sort_key(self):
        return (self.tag, self.satake.sort_key())

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.tag == other.tag and self.satake == other.satake

    def __hash__(self):
        return hash((self.tag, self.satake))

    # ---------------------------------------------------------------- text

    def __str__(self):
        if self.is_unramified:
            return "unr(%s)" % self.satake
        tag = "*".join(n if e == 1 else "%s^%d" % (n, e) for n, e in self.tag)
        if self.satake.is_one:
            return "ram(%s)" % tag
        return "ram(%s, %s)" % (tag, self.satake)

    def __repr__(self):
        return "Character(%s)" % self


_TRIVIAL = Character((), Scalar.one)
