"""Positive elements in greedy normal form, reduced left fractions, gcd and lcm.

Right-sided operations are the left-sided ones computed in the mirror table:
an element ``g`` of the monoid corresponds to the reversed product in the
opposite monoid, whose left normal form is the reversed right normal form of
``g``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Literal, Sequence

from .table import GarsideError, GarsideTable
from .words import SignedWord, Word

Side = Literal["L", "R"]


class PositiveElement:
    """An element of the monoid stored as its left greedy normal form."""

    __slots__ = ("table", "nf")

    def __init__(self, table: GarsideTable, nf: Sequence[int]):
        self.table = table
        self.nf = tuple(nf)

    def __eq__(self, other):
        if not isinstance(other, PositiveElement):
            return NotImplemented
        return self.table is other.table and self.nf == other.nf

    def __hash__(self):
        return hash(self.nf)

    def __len__(self) -> int:
        """Canonical length: number of normal-form factors."""
        return len(self.nf)

    def __mul__(self, other: PositiveElement) -> PositiveElement:
        return multiply(self, other)

    def __repr__(self):
        return f"PositiveElement({self.render()})"

    @property
    def is_identity(self) -> bool:
        return not self.nf

    def word(self) -> Word:
        return tuple(letter for s in self.nf for letter in self.table.words[s])

    def render(self) -> str:
        if not self.nf:
            return "1"
        return " | ".join(self.table.render(s) for s in self.nf)


class GroupElement:
    """A reduced left fraction ``denom^-1 * numer`` with ``denom ∧_L numer = 1``."""

    __slots__ = ("denom", "numer")

    def __init__(self, denom: PositiveElement, numer: PositiveElement):
        _same_table(denom, numer)
        self.denom = denom
        self.numer = numer

    @property
    def table(self) -> GarsideTable:
        return self.numer.table

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.denom == other.denom and self.numer == other.numer

    def __hash__(self):
        return hash((self.denom.nf, self.numer.nf))

    def __mul__(self, other: GroupElement) -> GroupElement:
        return fraction_multiply(self, other)

    def inverse(self) -> GroupElement:
        return fraction_invert(self)

    def __repr__(self):
        return f"GroupElement({self.render()})"

    @property
    def is_identity(self) -> bool:
        return self.denom.is_identity and self.numer.is_identity

    def render(self) -> str:
        if self.denom.is_identity:
            return self.numer.render()
        return f"({self.denom.render()})^-1 ({self.numer.render()})"


def _same_table(*elements) -> GarsideTable:
    table = elements[0].table
    for e in elements[1:]:
        if e.table is not table:
            raise GarsideError("elements belong to different tables")
    return table


# -- normal forms ------------------------------------------------------------------


def _prepend(table: GarsideTable, s: int, nf: list[int]) -> list[int]:
    """Left normal form of ``s * nf`` for a simple ``s`` and a normal sequence ``nf``."""
    if s == table.identity:
        return nf
    out = []
    carry = s
    for i, x in enumerate(nf):
        head, carry = table.head_tail(carry, x)
        out.append(head)
        if carry == table.identity:
            out.extend(nf[i + 1:])
            return out
    out.append(carry)
    return out


def normalize(table: GarsideTable, seq: Iterable[int]) -> PositiveElement:
    """Normal form of the product of an arbitrary sequence of simples."""
    nf: list[int] = []
    for s in reversed(list(seq)):
        nf = _prepend(table, s, nf)
    return PositiveElement(table, nf)


def normal_form_fixpoint(table: GarsideTable, seq: Iterable[int]) -> PositiveElement:
    """Repeated right-to-left ``head_tail`` passes until nothing changes."""
    cur = list(seq)
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 2, -1, -1):
            pair = table.head_tail(cur[i], cur[i + 1])
            if pair != (cur[i], cur[i + 1]):
                cur[i], cur[i + 1] = pair
                changed = True
    while cur and cur[-1] == table.identity:
        cur.pop()
    return PositiveElement(table, cur)


def normal_form(table: GarsideTable, word: Iterable[str]) -> PositiveElement:
    return normalize(table, [table.letter(c) for c in word])


def identity(table: GarsideTable) -> PositiveElement:
    return PositiveElement(table, ())


def simple_element(table: GarsideTable, s: int) -> PositiveElement:
    return PositiveElement(table, () if s == table.identity else (s,))


def delta_power(table: GarsideTable, n: int) -> PositiveElement:
    return PositiveElement(table, (table.delta,) * n)


def multiply(g: PositiveElement, h: PositiveElement) -> PositiveElement:
    table = _same_table(g, h)
    nf = list(h.nf)
    for s in reversed(g.nf):
        nf = _prepend(table, s, nf)
    return PositiveElement(table, nf)


# -- mirror transport --------------------------------------------------------------


def to_mirror(g: PositiveElement) -> PositiveElement:
    m = g.table.mirror()
    return normalize(m, g.nf[::-1])


def from_mirror(g: PositiveElement) -> PositiveElement:
    return normalize(g.table.mirror(), g.nf[::-1])


# -- quotients and divisibility -----------------------------------------------------


def _div_simple(g: PositiveElement, s: int) -> PositiveElement | None:
    table = g.table
    if s == table.identity:
        return g
    if not g.nf or not table.left_divides(s, g.nf[0]):
        return None
    head = table.left_quot[s][g.nf[0]]
    return PositiveElement(table, _prepend(table, head, list(g.nf[1:])))


def left_quotient(x: PositiveElement, y: PositiveElement) -> PositiveElement | None:
    """The element ``x \\ y`` with ``x * (x \\ y) = y``, or ``None`` if ``x`` does not left-divide ``y``."""
    _same_table(x, y)
    cur: PositiveElement | None = y
    for s in x.nf:
        cur = _div_simple(cur, s)
        if cur is None:
            return None
    return cur


def right_quotient(y: PositiveElement, x: PositiveElement) -> PositiveElement | None:
    """The element ``y / x`` with ``(y / x) * x = y``, or ``None``."""
    q = left_quotient(to_mirror(x), to_mirror(y))
    return None if q is None else from_mirror(q)


def left_gcd(g: PositiveElement, h: PositiveElement) -> PositiveElement:
    table = _same_table(g, h)
    heads: list[int] = []
    while g.nf and h.nf:
        d = table.left_meet(g.nf[0], h.nf[0])
        if d == table.identity:
            break
        heads.append(d)
        g = _div_simple(g, d)
        h = _div_simple(h, d)
    return normalize(table, heads)


def right_gcd(g: PositiveElement, h: PositiveElement) -> PositiveElement:
    return from_mirror(left_gcd(to_mirror(g), to_mirror(h)))


def left_lcm(g: PositiveElement, h: PositiveElement) -> PositiveElement:
    """Least common right-multiple, via the order-reversing complement in ``Δ^N``."""
    table = _same_table(g, h)
    if g.is_identity:
        return h
    if h.is_identity:
        return g
    top = delta_power(table, max(len(g), len(h)))
    a = left_quotient(g, top)
    b = left_quotient(h, top)
    return right_quotient(top, right_gcd(a, b))


def right_lcm(g: PositiveElement, h: PositiveElement) -> PositiveElement:
    return from_mirror(left_lcm(to_mirror(g), to_mirror(h)))


def left_lcm_bfs(g: PositiveElement, h: PositiveElement) -> PositiveElement:
    """Least common right-multiple by breadth-first search over right multiples of ``g``.

    The search is confined to left divisors of ``Δ^N`` with ``N`` the larger
    canonical length, which contain the lcm.  Kept as a second route.
    """
    table = _same_table(g, h)
    # the left divisors of Δ^N are the elements of canonical length at most N
    bound = max(len(g), len(h))
    seen = {g}
    level = [g]
    while level:
        # homogeneity: a common multiple of least length is the lcm itself
        common = [x for x in level if left_quotient(h, x) is not None]
        if common:
            if len(common) != 1:
                raise GarsideError("several common multiples of least length")
            return common[0]
        nxt = []
        for x in level:
            for a in table.atoms:
                y = multiply(x, simple_element(table, a))
                if len(y) <= bound and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        level = nxt
    raise GarsideError("no common multiple found below the Delta power")


def right_lcm_bfs(g: PositiveElement, h: PositiveElement) -> PositiveElement:
    return from_mirror(left_lcm_bfs(to_mirror(g), to_mirror(h)))


def lcm(g: PositiveElement, h: PositiveElement, side: Side = "L") -> PositiveElement:
    return left_lcm(g, h) if side == "L" else right_lcm(g, h)


def gcd(g: PositiveElement, h: PositiveElement, side: Side = "L") -> PositiveElement:
    return left_gcd(g, h) if side == "L" else right_gcd(g, h)


def divides(g: PositiveElement, h: PositiveElement, side: Side = "L") -> bool:
    return gcd(g, h, side) == g


def divisors(h: PositiveElement, side: Side = "L") -> set[PositiveElement]:
    """All divisors of ``h`` on the given side, grown atom by atom."""
    if side == "R":
        return {from_mirror(d) for d in divisors(to_mirror(h), "L")}
    table = h.table
    found = {identity(table)}
    queue = deque(found)
    while queue:
        d = queue.popleft()
        rest = left_quotient(d, h)
        for a in table.atoms:
            if _div_simple(rest, a) is not None:
                e = multiply(d, simple_element(table, a))
                if e not in found:
                    found.add(e)
                    queue.append(e)
    return found


def is_balanced(h: PositiveElement) -> bool:
    return divisors(h, "L") == divisors(h, "R")


def support(h: PositiveElement) -> set[int]:
    """Atoms dividing a balanced element."""
    if not is_balanced(h):
        raise GarsideError(f"{h.render()} is not balanced", (h,))
    if h.is_identity:
        return set()
    table = h.table
    return {a for a in table.atoms if table.left_divides(a, h.nf[0])}


# -- fractions ---------------------------------------------------------------------


def fraction(denom: PositiveElement, numer: PositiveElement) -> GroupElement:
    """Reduce ``denom^-1 * numer`` by cancelling the left gcd."""
    d = left_gcd(denom, numer)
    if not d.is_identity:
        denom = left_quotient(d, denom)
        numer = left_quotient(d, numer)
    return GroupElement(denom, numer)


def positive_fraction(g: PositiveElement) -> GroupElement:
    return GroupElement(identity(g.table), g)


def fraction_multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """``(a^-1 b)(c^-1 d) = (b'a)^-1 (c'd)`` where ``b'b = c'c`` is the right lcm of ``b, c``."""
    _same_table(g.numer, h.numer)
    b, c = g.numer, h.denom
    if c.is_identity:
        return fraction(g.denom, multiply(b, h.numer))
    if b.is_identity:
        return fraction(multiply(c, g.denom), h.numer)
    m = right_lcm(b, c)
    b1 = right_quotient(m, b)
    c1 = right_quotient(m, c)
    return fraction(multiply(b1, g.denom), multiply(c1, h.numer))


def fraction_invert(g: GroupElement) -> GroupElement:
    return GroupElement(g.numer, g.denom)


def fraction_equal(g: GroupElement, h: GroupElement) -> bool:
    return g == h


def to_fraction(table: GarsideTable, word: SignedWord) -> GroupElement:
    one = identity(table)
    result = GroupElement(one, one)
    for letter, sign in word:
        atom = simple_element(table, table.letter(letter))
        step = GroupElement(one, atom) if sign > 0 else GroupElement(atom, one)
        result = fraction_multiply(result, step)
    return result


def decompose_delta_power(g: GroupElement) -> tuple[PositiveElement, int]:
    """``(g1, n)`` with ``g = g1 Δ^-n`` and ``n`` minimal."""
    table = g.table
    one = identity(table)
    for n in range(len(g.denom) + 1):
        p = fraction_multiply(g, GroupElement(one, delta_power(table, n)))
        if p.denom.is_identity:
            return p.numer, n
    raise GarsideError("Delta power decomposition did not terminate")  # pragma: no cover


__all__ = [
    "PositiveElement", "GroupElement", "normalize", "normal_form", "normal_form_fixpoint",
    "identity", "simple_element", "delta_power", "multiply", "left_quotient",
    "right_quotient", "left_gcd", "right_gcd", "left_lcm", "right_lcm", "left_lcm_bfs",
    "right_lcm_bfs",
    "gcd", "lcm", "divides", "divisors", "is_balanced", "support", "fraction",
    "positive_fraction", "fraction_multiply", "fraction_invert", "fraction_equal",
    "to_fraction", "decompose_delta_power", "to_mirror", "from_mirror",
]
