"""Weil-Deligne representations as multisets of blocks part (x) sp(n).

sp(n) is the (n+1)-dimensional indecomposable with Frobenius acting by
diag(v^-n, v^{-n+2}, ..., v^n) up to twist; sp(0) is trivial and sp(1) is
the usual special representation.  A part is either a character or a formal
irreducible of dimension >= 2.

Irreducible parts are handled in generic position: two of them are equal
exactly when every piece of declared data (dimension, label, dual marker,
accumulated twist, base determinant, declared self-duality twist) agrees.
The dual of a 2-dimensional part is resolved concretely through
rho^vee = rho (x) det(rho)^{-1}; a higher-dimensional part with no declared
self-duality keeps a formal dual marker instead.

L-factors only ever see unramified character blocks: a block unr(alpha) (x)
sp(n) contributes 1/(1 - alpha v^{-n} X), everything else contributes 1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .chars import Character
from .errors import UnsupportedTensor
from .scalar import Scalar
from .splitrat import SplitRational

__all__ = ["CharPart", "IrredPart", "Block", "WDRep", "sp", "sp_tensor",
           "tensor", "tensor_lfactor", "tensor_summands", "lfactor",
           "summand_query", "similitude_check", "dual", "twist"]

_TRIV = Character.trivial()


@dataclass(frozen=True)
class CharPart:
    char: Character

    @property
    def dim(self) -> int:
        return 1

    def det(self) -> Character:
        return self.char

    def sort_key(self):
        return (0, self.char.sort_key())

    def substitute(self, values):
        return CharPart(self.char.substitute(values))


@dataclass(frozen=True)
class IrredPart:
    """A formal irreducible Weil representation of dimension >= 2.

    base_det is the determinant character of the plain labelled irreducible;
    twist accumulates character twists applied afterwards; starred marks the
    formal dual when no resolution is declared.  selfdual_twist, when given,
    declares base^vee = base (x) selfdual_twist and keeps duals star-free.
    """

    dim: int
    label: str
    starred: bool = False
    twist: Character = _TRIV
    base_det: Character = _TRIV
    selfdual_twist: Character | None = None

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("irreducible parts have dimension >= 2")

    def det(self) -> Character:
        d = self.base_det.inverse() if self.starred else self.base_det
        return d * self.twist ** self.dim

    def twisted(self, chi: Character) -> "IrredPart":
        return replace(self, twist=self.twist * chi)

    def sort_key(self):
        sd = self.selfdual_twist
        return (1, self.dim, self.label, self.starred, self.twist.sort_key(),
                self.base_det.sort_key(), sd.sort_key() if sd else ())

    def substitute(self, values):
        sd = self.selfdual_twist
        return IrredPart(self.dim, self.label, self.starred,
                         self.twist.substitute(values),
                         self.base_det.substitute(values),
                         sd.substitute(values) if sd else None)


WeilPart = CharPart | IrredPart


def part_dual(p: WeilPart) -> WeilPart:
    if isinstance(p, CharPart):
        return CharPart(p.char.inverse())
    if p.dim == 2 and not p.starred:
        # rho^vee = rho (x) det(rho)^{-1}, valid for any 2-dimensional rep
        return replace(p, twist=p.base_det.inverse() * p.twist.inverse())
    if p.selfdual_twist is not None and not p.starred:
        return replace(p, twist=p.selfdual_twist * p.twist.inverse())
    return replace(p, starred=not p.starred, twist=p.twist.inverse())


def part_twist(p: WeilPart, chi: Character) -> WeilPart:
    if isinstance(p, CharPart):
        return CharPart(p.char * chi)
    return p.twisted(chi)


def _unramified_twist_equal(p: IrredPart, q: IrredPart) -> bool:
    return (p.dim == q.dim and p.label == q.label and p.starred == q.starred
            and p.base_det == q.base_det
            and p.selfdual_twist == q.selfdual_twist
            and p.twist.tag == q.twist.tag)


def twin_pair(p: IrredPart, q: IrredPart) -> bool:
    """Whether q is an unramified twist of p^vee (the undetermined tensor case)."""
    return _unramified_twist_equal(part_dual(p), q)


@dataclass(frozen=True)
class Block:
    part: WeilPart
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("sp index must be >= 0")

    @property
    def dim(self) -> int:
        return self.part.dim * (self.n + 1)

    def lfactor(self) -> SplitRational:
        p = self.part
        if isinstance(p, CharPart) and p.char.is_unramified:
            return SplitRational.from_poles([p.char.satake * Scalar.v_power(-self.n)])
        return SplitRational.one()

    def sort_key(self):
        return (self.part.sort_key(), self.n)


class WDRep:
    """A finite multiset of blocks, kept sorted for canonical identity."""

    __slots__ = ("blocks",)

    def __init__(self, blocks=()):
        self.blocks = tuple(sorted(blocks, key=Block.sort_key))

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    @property
    def character_parted(self) -> bool:
        return all(isinstance(b.part, CharPart) for b in self.blocks)

    def __add__(self, other):
        if not isinstance(other, WDRep):
            return NotImplemented
        return WDRep(self.blocks + other.blocks)

    def substitute(self, values) -> "WDRep":
        return WDRep(Block(b.part.substitute(values), b.n) for b in self.blocks)

    def sort_key(self):
        return tuple(b.sort_key() for b in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, WDRep):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "WDRep[%s]" % ", ".join(
            "%r x sp(%d)" % (b.part, b.n) for b in self.blocks)


def sp(n: int) -> WDRep:
    """The single block trivial (x) sp(n) as a representation."""
    return WDRep([Block(CharPart(_TRIV), int(n))])


def char_rep(chi: Character, n: int = 0) -> WDRep:
    return WDRep([Block(CharPart(chi), n)])


def dual(w: WDRep) -> WDRep:
    return WDRep(Block(part_dual(b.part), b.n) for b in w.blocks)


def twist(w: WDRep, chi: Character) -> WDRep:
    return WDRep(Block(part_twist(b.part, chi), b.n) for b in w.blocks)


def sp_tensor(m: int, n: int) -> tuple[int, ...]:
    """Clebsch-Gordan range for sp(m) (x) sp(n): |m-n|, |m-n|+2, ..., m+n.

    >>> sp_tensor(3, 1)
    (2, 4)
    >>> sp_tensor(0, 1)
    (1,)
    """
    m, n = int(m), int(n)
    if m < 0 or n < 0:
        raise ValueError("sp indices must be >= 0")
    return tuple(range(abs(m - n), m + n + 1, 2))


def _part_product(p: WeilPart, q: WeilPart) -> WeilPart:
    if isinstance(p, CharPart) and isinstance(q, CharPart):
        return CharPart(p.char * q.char)
    if isinstance(p, CharPart):
        return q.twisted(p.char)
    if isinstance(q, CharPart):
        return p.twisted(q.char)
    raise UnsupportedTensor(
        "tensor of two irreducible parts (%s, %s) has no declared block "
        "decomposition" % (p.label, q.label))


def tensor(w1: WDRep, w2: WDRep) -> WDRep:
    """Blockwise tensor product; rejects irreducible x irreducible pairs."""
    out = []
    for b1 in w1.blocks:
        for b2 in w2.blocks:
            part = _part_product(b1.part, b2.part)
            for k in sp_tensor(b1.n, b2.n):
                out.append(Block(part, k))
    return WDRep(out)


def tensor_lfactor(w1: WDRep, w2: WDRep) -> SplitRational:
    """L-factor of w1 (x) w2, defined whenever no block pair is a twin pair.

    An irreducible-times-irreducible pair that is provably not dual up to an
    unramified twist contains no unramified line, so it contributes 1 even
    though its block decomposition is unknown; a twin pair raises.
    """
    out = SplitRational.one()
    for b1 in w1.blocks:
        for b2 in w2.blocks:
            p, q = b1.part, b2.part
            if isinstance(p, IrredPart) and isinstance(q, IrredPart):
                if twin_pair(p, q):
                    raise UnsupportedTensor(
                        "unramified-twist-of-dual pair (%s, %s): L-factor not "
                        "determined by declared data" % (p.label, q.label))
                continue
            part = _part_product(p, q)
            for k in sp_tensor(b1.n, b2.n):
                out = out * Block(part, k).lfactor()
    return out


def tensor_summands(w1: WDRep, w2: WDRep, n: int) -> tuple[Scalar, ...]:
    """Satake values (with multiplicity) of the unramified character blocks
    unr(alpha) (x) sp(n) inside w1 (x) w2, tolerating non-twin irreducible
    pairs (they contribute none)."""
    found = []
    for b1 in w1.blocks:
        for b2 in w2.blocks:
            p, q = b1.part, b2.part
            if isinstance(p, IrredPart) and isinstance(q, IrredPart):
                if twin_pair(p, q):
                    raise UnsupportedTensor(
                        "unramified-twist-of-dual pair (%s, %s): summands not "
                        "determined by declared data" % (p.label, q.label))
                continue
            part = _part_product(p, q)
            if isinstance(part, CharPart) and part.char.is_unramified \
                    and n in sp_tensor(b1.n, b2.n):
                found.append(part.char.satake)
    return tuple(sorted(found, key=Scalar.sort_key))


def lfactor(w: WDRep) -> SplitRational:
    out = SplitRational.one()
    for b in w.blocks:
        out = out * b.lfactor()
    return out


_QUERY_N = {"line": 0, "steinberg": 1}


def summand_query(w: WDRep, kind: str) -> tuple[Scalar, ...]:
    """Multiset of Satake values of unramified character blocks with n = 0
    ('line') or n = 1 ('steinberg')."""
    n = _QUERY_N[kind]
    return tuple(sorted(
        (b.part.char.satake for b in w.blocks
         if b.n == n and isinstance(b.part, CharPart)
         and b.part.char.is_unramified),
        key=Scalar.sort_key))


def similitude_check(w: WDRep, chi: Character) -> bool:
    """Whether w^vee (x) chi equals w as a block multiset."""
    return twist(dual(w), chi) == w
