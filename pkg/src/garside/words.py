"""Words over a generator alphabet, monoid presentations and bounded congruence closure.

A positive word is a tuple of generator names; a signed word is a tuple of
``(name, sign)`` pairs with ``sign`` in ``{+1, -1}``.  On the command line words
are written with letters joined by ``.`` and a leading ``~`` marking an inverse
letter, e.g. ``~z.x.z``.

Internally the congruence machinery encodes a word as a ``str`` with one code
point per letter so that substring search and replacement run in C.  Code
points are assigned in declaration order, hence comparing encoded strings is
the lexicographic order on words induced by the generator order.
"""

from __future__ import annotations

import itertools
import json
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

Word = tuple[str, ...]
SignedWord = tuple[tuple[str, int], ...]

_NAME = re.compile(r"^[A-Za-z0-9_]+$")
_CODE_BASE = 0x100


class PresentationError(ValueError):
    """Raised for malformed presentations, words or unsupported inputs."""


class UnknownGenerator(PresentationError):
    def __init__(self, name: str, text: str | None = None):
        self.name = name
        where = f" in {text!r}" if text is not None else ""
        super().__init__(f"unknown generator {name!r}{where}")


@dataclass(frozen=True)
class Presentation:
    """A monoid presentation ``<generators | relations>`` with an optional Garside word."""

    generators: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...] = ()
    delta: Word | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(
            self, "relations", tuple((tuple(u), tuple(v)) for u, v in self.relations)
        )
        if self.delta is not None:
            object.__setattr__(self, "delta", tuple(self.delta))
        seen = set()
        for g in self.generators:
            if not isinstance(g, str) or not _NAME.match(g):
                raise PresentationError(f"invalid generator name {g!r}")
            if g in seen:
                raise PresentationError(f"duplicate generator {g!r}")
            seen.add(g)
        for u, v in self.relations:
            if not u or not v:
                raise PresentationError(f"relation {render(u)} = {render(v)} has an empty side")
            self.check_word(u)
            self.check_word(v)
        if self.delta is not None:
            self.check_word(self.delta)

    def check_word(self, word: Iterable[str]) -> None:
        known = set(self.generators)
        for letter in word:
            if letter not in known:
                raise UnknownGenerator(letter)

    @property
    def is_homogeneous(self) -> bool:
        return all(len(u) == len(v) for u, v in self.relations)

    def require_homogeneous(self) -> None:
        for u, v in self.relations:
            if len(u) != len(v):
                raise PresentationError(
                    f"non-homogeneous relation {render(u)} = {render(v)}"
                )

    def encode(self, word: Iterable[str]) -> str:
        index = {g: i for i, g in enumerate(self.generators)}
        try:
            return "".join(chr(_CODE_BASE + index[g]) for g in word)
        except KeyError as exc:
            raise UnknownGenerator(exc.args[0]) from None

    def decode(self, code: str) -> Word:
        return tuple(self.generators[ord(c) - _CODE_BASE] for c in code)

    def encoded_rules(self) -> list[tuple[str, str]]:
        """Both orientations of every relation, encoded."""
        rules = []
        for u, v in self.relations:
            a, b = self.encode(u), self.encode(v)
            if a != b:
                rules.append((a, b))
                rules.append((b, a))
        return rules

    def to_dict(self) -> dict:
        data = {
            "generators": list(self.generators),
            "relations": [[list(u), list(v)] for u, v in self.relations],
        }
        if self.delta is not None:
            data["delta"] = list(self.delta)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> Presentation:
        try:
            gens = data["generators"]
            rels = data.get("relations", [])
            pairs = []
            for rel in rels:
                if len(rel) != 2:
                    raise PresentationError(f"relation {rel!r} must have two sides")
                pairs.append((tuple(rel[0]), tuple(rel[1])))
            delta = data.get("delta")
        except (KeyError, TypeError) as exc:
            raise PresentationError(f"malformed presentation document: {exc}") from None
        return cls(tuple(gens), tuple(pairs), tuple(delta) if delta is not None else None)


def load_presentation(path: str | Path) -> Presentation:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise PresentationError(f"cannot read presentation {path}: {exc}") from None
    return Presentation.from_dict(data)


def render(word: Sequence[str]) -> str:
    """CLI rendering of a positive word; the empty word renders as ``1``."""
    return ".".join(word) if word else "1"


def render_signed(word: SignedWord) -> str:
    if not word:
        return "1"
    return ".".join(("~" if sign < 0 else "") + letter for letter, sign in word)


def parse_word(text: str, generators: Presentation | Sequence[str]) -> SignedWord:
    """Parse CLI word syntax into a signed word.

    ``""`` and ``"1"`` denote the empty word unless ``1`` is itself a generator.
    """
    gens = generators.generators if isinstance(generators, Presentation) else tuple(generators)
    known = set(gens)
    text = text.strip()
    if text == "" or (text == "1" and "1" not in known):
        return ()
    entries = []
    for token in text.split("."):
        sign = 1
        name = token
        if name.startswith("~"):
            sign, name = -1, name[1:]
        if not _NAME.match(name):
            raise PresentationError(f"malformed token {token!r} in {text!r}")
        if name not in known:
            raise UnknownGenerator(name, text)
        entries.append((name, sign))
    return tuple(entries)


def parse_positive(text: str, generators: Presentation | Sequence[str]) -> Word:
    signed = parse_word(text, generators)
    for letter, sign in signed:
        if sign < 0:
            raise PresentationError(f"expected a positive word, got {text!r}")
    return tuple(letter for letter, _ in signed)


def reverse_presentation(pres: Presentation) -> Presentation:
    return Presentation(
        pres.generators,
        tuple((u[::-1], v[::-1]) for u, v in pres.relations),
        pres.delta[::-1] if pres.delta is not None else None,
    )


def rewrites(code: str, rules: Sequence[tuple[str, str]]) -> Iterator[str]:
    """All words obtained from ``code`` by one application of one rule."""
    for lhs, rhs in rules:
        k = len(lhs)
        i = code.find(lhs)
        while i >= 0:
            yield code[:i] + rhs + code[i + k:]
            i = code.find(lhs, i + 1)


def congruence_class(pres: Presentation, word: Sequence[str], limit: int | None = None) -> set[Word]:
    """All words equal to ``word`` in a homogeneous presentation (BFS over rewrites)."""
    pres.require_homogeneous()
    codes = closure_codes(pres.encode(word), pres.encoded_rules(), limit)
    return {pres.decode(c) for c in codes}


def closure_codes(start: str, rules: Sequence[tuple[str, str]], limit: int | None = None) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in rewrites(w, rules):
            if nxt not in seen:
                seen.add(nxt)
                if limit is not None and len(seen) > limit:
                    raise PresentationError(f"congruence class exceeds {limit} words")
                queue.append(nxt)
    return seen


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def add(self, x: str) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: str) -> str:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the lexicographically least word as root
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def partition_codes(codes: Iterable[str], rules: Sequence[tuple[str, str]]) -> dict[str, str]:
    """Map each code to the least code of its class; the set must be rewrite-closed."""
    uf = _UnionFind()
    codes = list(codes)
    for c in codes:
        uf.add(c)
    for c in codes:
        for nxt in rewrites(c, rules):
            if nxt not in uf.parent:
                raise PresentationError("word set is not closed under the relations")
            uf.union(c, nxt)
    return {c: uf.find(c) for c in codes}


@dataclass
class CongruenceIndex:
    """The relation-generated congruence on all words of length at most ``max_len``."""

    presentation: Presentation
    max_len: int
    _rep: dict[str, str] = field(repr=False, default_factory=dict)
    _members: dict[str, list[str]] = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self._members)

    def _code(self, word: Sequence[str]) -> str:
        if len(word) > self.max_len:
            raise PresentationError(
                f"word {render(word)} is longer than the index bound {self.max_len}"
            )
        return self.presentation.encode(word)

    def representative(self, word: Sequence[str]) -> Word:
        return self.presentation.decode(self._rep[self._code(word)])

    def class_of(self, word: Sequence[str]) -> set[Word]:
        rep = self._rep[self._code(word)]
        return {self.presentation.decode(c) for c in self._members[rep]}

    def classes(self, length: int | None = None) -> Iterator[list[Word]]:
        decode = self.presentation.decode
        for rep, members in self._members.items():
            if length is None or len(rep) == length:
                yield [decode(c) for c in members]

    def equal(self, w1: Sequence[str], w2: Sequence[str]) -> bool:
        return self._rep[self._code(w1)] == self._rep[self._code(w2)]

    def cancellation_witness(self) -> tuple[Word, Word] | None:
        """A pair of distinct classes ``u != v`` with ``a u = a v`` or ``u a = v a``, if any."""
        rep = self._rep
        for members in self._members.values():
            if len(members[0]) < 2:
                continue
            prefix_seen: dict[str, str] = {}
            suffix_seen: dict[str, str] = {}
            for w in members:
                for key, rest, seen in ((w[0], w[1:], prefix_seen), (w[-1], w[:-1], suffix_seen)):
                    r = rep[rest]
                    old = seen.setdefault(key, r)
                    if old != r:
                        decode = self.presentation.decode
                        return decode(old), decode(r)
        return None


def word_count(alphabet: int, max_len: int) -> int:
    return sum(alphabet ** k for k in range(max_len + 1))


def equivalence_classes(pres: Presentation, max_len: int) -> CongruenceIndex:
    """Exhaustive congruence closure on all words of length at most ``max_len``."""
    if max_len < 0:
        raise PresentationError("max_len must be non-negative")
    pres.require_homogeneous()
    rules = pres.encoded_rules()
    alphabet = [chr(_CODE_BASE + i) for i in range(len(pres.generators))]
    rep: dict[str, str] = {}
    members: dict[str, list[str]] = {}
    for length in range(max_len + 1):
        # homogeneous rules preserve length, so each stratum closes on its own
        layer = ["".join(t) for t in itertools.product(alphabet, repeat=length)]
        part = partition_codes(layer, rules)
        for code in layer:
            r = part[code]
            rep[code] = r
            members.setdefault(r, []).append(code)
    return CongruenceIndex(pres, max_len, rep, members)


def words_equal(pres: Presentation, w1: Sequence[str], w2: Sequence[str],
                index: CongruenceIndex | None = None) -> bool:
    if index is None:
        index = equivalence_classes(pres, max(len(w1), len(w2)))
    elif index.presentation != pres:
        raise PresentationError("index was built for a different presentation")
    return index.equal(w1, w2)
