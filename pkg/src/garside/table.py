"""Finite Garside tables: simples, divisibility lattices, quotients and complements.

A table is built from a partial multiplication on a finite set of simples
(``product[i][j]`` is the simple ``i*j`` or ``-1`` when the product is not a
simple).  Everything else is derived and checked here: both divisibility
orders, the four meet/join tables, quotients, complements and conjugation by
the Garside element.  Divisor and multiple sets are stored as ``int`` bitsets.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .words import Word, render


class GarsideError(ValueError):
    """A structural property required of a Garside system fails; ``witness`` names it."""

    def __init__(self, message: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(message)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GarsideTable:
    """The complete computational model of a finite Garside monoid.

    Simples are indexed ``0..n-1``; ``identity`` is 0 for tables produced by
    the builder.  ``words[i]`` is the canonical word of simple ``i`` and
    ``letters`` maps generator names to atom ids (used to read words).
    """

    presentation = None

    def __init__(self, words: Sequence[Word], product: Sequence[Sequence[int]],
                 identity: int, delta: int, letters: dict[str, int] | None = None,
                 name: str = "", warnings: Iterable[str] = ()):
        n = len(words)
        self.words: tuple[Word, ...] = tuple(tuple(w) for w in words)
        self.product: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in product)
        self.identity = identity
        self.delta = delta
        self.name = name
        self.warnings = list(warnings)
        if len(self.product) != n or any(len(row) != n for row in self.product):
            raise GarsideError("product table has the wrong shape")
        self._check_identity()
        self._derive_divisibility()
        self._check_cancellative()
        self._check_delta()
        self.left_meet_table = self._meets(self.left_down)
        self.left_join_table = self._joins(self.left_up, "left")
        self.right_meet_table = self._meets(self.right_down)
        self.right_join_table = self._joins(self.right_up, "right")
        self.atoms = tuple(
            i for i in range(n)
            if i != identity and self.left_down[i] == (1 << identity) | (1 << i)
        )
        self.left_complement = tuple(self.left_quot[s][delta] for s in range(n))
        self.right_complement = tuple(self.right_quot[delta][s] for s in range(n))
        self.delta_conj = tuple(self.left_complement[self.left_complement[s]] for s in range(n))
        self.lengths = tuple(len(w) for w in self.words)
        if letters is None:
            letters = {}
            for a in self.atoms:
                if len(self.words[a]) == 1:
                    letters[self.words[a][0]] = a
        self.letters = dict(letters)
        self._index = {w: i for i, w in enumerate(self.words)}
        self._mirror: GarsideTable | None = None

    # -- construction checks -------------------------------------------------

    def _check_identity(self) -> None:
        e = self.identity
        for j in range(len(self.words)):
            if self.product[e][j] != j or self.product[j][e] != j:
                raise GarsideError(f"simple {self.render(j)} is not fixed by the identity", (e, j))

    def _derive_divisibility(self) -> None:
        n = len(self.words)
        left_down = [0] * n
        right_down = [0] * n
        left_up = [0] * n
        right_up = [0] * n
        left_quot = [[-1] * n for _ in range(n)]
        right_quot = [[-1] * n for _ in range(n)]
        for i, row in enumerate(self.product):
            for j, k in enumerate(row):
                if k < 0:
                    continue
                left_down[k] |= 1 << i
                right_down[k] |= 1 << j
                left_up[i] |= 1 << k
                right_up[j] |= 1 << k
                if left_quot[i][k] not in (-1, j):
                    raise GarsideError(
                        f"left cancellation fails: {self.render(i)} times two simples "
                        f"gives {self.render(k)}", (left_quot[i][k], j))
                if right_quot[k][j] not in (-1, i):
                    raise GarsideError(
                        f"right cancellation fails: two simples times {self.render(j)} "
                        f"give {self.render(k)}", (right_quot[k][j], i))
                left_quot[i][k] = j
                right_quot[k][j] = i
        self.left_down = tuple(left_down)
        self.right_down = tuple(right_down)
        self.left_up = tuple(left_up)
        self.right_up = tuple(right_up)
        self.left_quot = tuple(tuple(r) for r in left_quot)
        self.right_quot = tuple(tuple(r) for r in right_quot)

    def _check_cancellative(self) -> None:
        # antisymmetry of both orders: two distinct simples never divide each other
        for k in range(len(self.words)):
            for i in _bits(self.left_down[k]):
                if i != k and self.left_down[i] >> k & 1:
                    raise GarsideError("left divisibility is not antisymmetric", (i, k))

    def _check_delta(self) -> None:
        full = (1 << len(self.words)) - 1
        d = self.delta
        if self.left_down[d] != full:
            missing = next(i for i in range(len(self.words)) if not self.left_down[d] >> i & 1)
            raise GarsideError(f"{self.render(missing)} does not left-divide the Garside element",
                               (missing, d))
        if self.right_down[d] != full:
            missing = next(i for i in range(len(self.words)) if not self.right_down[d] >> i & 1)
            raise GarsideError(f"{self.render(missing)} does not right-divide the Garside element",
                               (missing, d))

    def _meets(self, down: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        n = len(self.words)
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            table[a][a] = a
            for b in range(a + 1, n):
                common = down[a] & down[b]
                m = common.bit_length() - 1
                if down[m] != common:
                    cands = [c for c in _bits(common) if down[c] == common]
                    if len(cands) != 1:
                        raise GarsideError(
                            f"{self.render(a)} and {self.render(b)} have no unique meet", (a, b))
                    m = cands[0]
                table[a][b] = table[b][a] = m
        return tuple(tuple(r) for r in table)

    def _joins(self, up: Sequence[int], side: str) -> tuple[tuple[int, ...], ...]:
        n = len(self.words)
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            table[a][a] = a
            for b in range(a + 1, n):
                common = up[a] & up[b]
                m = (common & -common).bit_length() - 1
                if m < 0 or up[m] != common:
                    cands = [c for c in _bits(common) if up[c] == common]
                    if len(cands) != 1:
                        raise GarsideError(
                            f"{self.render(a)} and {self.render(b)} have no unique {side} join",
                            (a, b))
                    m = cands[0]
                table[a][b] = table[b][a] = m
        return tuple(tuple(r) for r in table)

    # -- basic access ----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.words)

    def __repr__(self) -> str:
        label = self.name or "GarsideTable"
        return f"<{label}: {len(self)} simples, delta={self.render(self.delta)}>"

    def render(self, s: int) -> str:
        return render(self.words[s])

    def simple(self, word: Sequence[str]) -> int:
        """Id of the simple whose canonical word is ``word`` (not a general word lookup)."""
        return self._index[tuple(word)]

    def letter(self, name: str) -> int:
        try:
            return self.letters[name]
        except KeyError:
            raise GarsideError(f"letter {name!r} is not an atom of this table") from None

    # -- lattice operations ----------------------------------------------------

    def left_meet(self, s: int, t: int) -> int:
        return self.left_meet_table[s][t]

    def left_join(self, s: int, t: int) -> int:
        return self.left_join_table[s][t]

    def right_meet(self, s: int, t: int) -> int:
        return self.right_meet_table[s][t]

    def right_join(self, s: int, t: int) -> int:
        return self.right_join_table[s][t]

    def left_divides(self, s: int, t: int) -> bool:
        return bool(self.left_down[t] >> s & 1)

    def right_divides(self, s: int, t: int) -> bool:
        return bool(self.right_down[t] >> s & 1)

    def left_divisors(self, t: int) -> list[int]:
        return list(_bits(self.left_down[t]))

    def right_divisors(self, t: int) -> list[int]:
        return list(_bits(self.right_down[t]))

    def mul(self, s: int, t: int) -> int:
        """Product of two simples, or -1 when it is not a simple."""
        return self.product[s][t]

    def is_balanced_simple(self, s: int) -> bool:
        return self.left_down[s] == self.right_down[s]

    def simple_support(self, s: int) -> list[int]:
        return [a for a in self.atoms if self.left_down[s] >> a & 1]

    def delta_conjugate(self, s: int) -> int:
        """The simple ``t`` with ``s * Delta = Delta * t``."""
        return self.delta_conj[s]

    def head_tail(self, s: int, t: int) -> tuple[int, int]:
        """Left-normal pair ``(h, r)`` with ``h*r = s*t`` and ``h`` the left head of ``s*t``."""
        m = self.left_meet_table[t][self.left_complement[s]]
        return self.product[s][m], self.left_quot[m][t]

    def right_head_tail(self, s: int, t: int) -> tuple[int, int]:
        """Right-normal pair ``(r, h)`` with ``r*h = s*t`` and ``h`` the right head of ``s*t``."""
        m = self.right_meet_table[s][self.right_complement[t]]
        return self.right_quot[s][m], self.product[m][t]

    def is_normal(self, seq: Sequence[int]) -> bool:
        if any(s == self.identity for s in seq):
            return False
        return all(self.head_tail(a, b)[0] == a for a, b in zip(seq, seq[1:]))

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs of left divisibility; a cover is a right multiplication by an atom."""
        edges = []
        for u in range(len(self)):
            for a in self.atoms:
                w = self.product[u][a]
                if w >= 0:
                    edges.append((u, w))
        return sorted(edges)

    # -- mirror ----------------------------------------------------------------

    def mirror(self) -> GarsideTable:
        """The opposite monoid: same ids, reversed words, transposed product."""
        if self._mirror is None:
            n = len(self)
            transposed = [[self.product[j][i] for j in range(n)] for i in range(n)]
            m = GarsideTable([w[::-1] for w in self.words], transposed, self.identity,
                             self.delta, dict(self.letters), name=f"mirror({self.name})")
            m._mirror = self
            self._mirror = m
        return self._mirror

    # -- serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "simples": [list(w) for w in self.words],
            "atoms": list(self.atoms),
            "identity": self.identity,
            "delta": self.delta,
            "letters": dict(self.letters),
            "leftMeet": [list(r) for r in self.left_meet_table],
            "leftJoin": [list(r) for r in self.left_join_table],
            "rightMeet": [list(r) for r in self.right_meet_table],
            "rightJoin": [list(r) for r in self.right_join_table],
            "deltaConj": list(self.delta_conj),
            "product": [list(r) for r in self.product],
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, data: dict) -> GarsideTable:
        try:
            table = cls(
                [tuple(w) for w in data["simples"]],
                data["product"],
                data.get("identity", 0),
                data["delta"],
                data.get("letters"),
                name=data.get("name", ""),
                warnings=data.get("warnings", ()),
            )
        except (KeyError, TypeError) as exc:
            raise GarsideError(f"malformed table dump: {exc}") from None
        derived = table.to_dict()
        for key in ("atoms", "leftMeet", "leftJoin", "rightMeet", "rightJoin", "deltaConj"):
            if key in data and data[key] != derived[key]:
                raise GarsideError(f"table dump field {key!r} disagrees with the product table")
        return table

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> GarsideTable:
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
