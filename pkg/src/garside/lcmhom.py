"""LCM-homomorphisms between Artin-Tits systems of spherical type.

Least common multiples in an Artin-Tits monoid are found by word reversing:
``s^-1 t`` is rewritten to ``f(s,t) f(t,s)^-1`` where ``s f(s,t) = t f(t,s)``
is the braid relation, until the signed word has the shape ``P N^-1``.  Artin
presentations are complete for reversing, so ``u^-1 v -> P N^-1`` gives the
least common right-multiple ``uP = vN`` whenever it exists; when it does not,
reversing runs forever and the length bound stops it.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .build import build_table
from .elements import (
    PositiveElement, left_gcd, left_lcm, normal_form, right_gcd, right_lcm, simple_element,
)
from .table import GarsideTable
from .words import Presentation, PresentationError, SignedWord, Word, render

INF = None  # an infinite Coxeter entry


@dataclass(frozen=True)
class CoxeterMatrix:
    generators: tuple[str, ...]
    entries: Mapping[frozenset, int | None] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator in Coxeter matrix")
        clean = {}
        for key, m in dict(self.entries).items():
            pair = frozenset(key)
            if len(pair) != 2 or not pair <= set(self.generators):
                raise PresentationError(f"bad Coxeter entry {sorted(key)!r}")
            if m is not INF and (not isinstance(m, int) or m < 2):
                raise PresentationError(f"Coxeter entry for {sorted(pair)} must be >= 2 or inf")
            if m != 2:  # 2 is the default, dropped so equal matrices compare equal
                clean[pair] = m
        object.__setattr__(self, "entries", clean)

    def m(self, s: str, t: str) -> int | None:
        if s == t:
            return 1
        return self.entries.get(frozenset((s, t)), 2)

    @property
    def is_finite(self) -> bool:
        return all(self.m(s, t) is not INF for s, t in itertools.combinations(self.generators, 2))

    def restrict(self, subset: Iterable[str]) -> CoxeterMatrix:
        sub = tuple(g for g in self.generators if g in set(subset))
        return CoxeterMatrix(sub, {k: v for k, v in self.entries.items() if k <= set(sub)})

    @classmethod
    def from_dict(cls, data: dict) -> CoxeterMatrix:
        try:
            gens = data["generators"]
            entries = {}
            for s, t, m in data.get("entries", []):
                entries[frozenset((s, t))] = INF if m in ("inf", "∞", None) else int(m)
        except (KeyError, TypeError, ValueError) as exc:
            raise PresentationError(f"malformed Coxeter matrix: {exc}") from None
        return cls(tuple(gens), entries)

    def to_dict(self) -> dict:
        entries = []
        for s, t in itertools.combinations(self.generators, 2):
            m = self.m(s, t)
            entries.append([s, t, "inf" if m is INF else m])
        return {"generators": list(self.generators), "entries": entries}


def braid_matrix(n: int) -> CoxeterMatrix:
    gens = tuple(f"s{i}" for i in range(1, n))
    return CoxeterMatrix(gens, {frozenset((f"s{i}", f"s{i+1}")): 3 for i in range(1, n - 1)})


def _alternating(s, t, m: int) -> list:
    return [s if k % 2 == 0 else t for k in range(m)]


def artin_presentation(M: CoxeterMatrix) -> Presentation:
    rels = []
    for s, t in itertools.combinations(M.generators, 2):
        m = M.m(s, t)
        if m is INF:
            raise PresentationError(f"infinite entry m({s},{t}) cannot be used to build a table")
        rels.append((tuple(_alternating(s, t, m)), tuple(_alternating(t, s, m))))
    return Presentation(M.generators, tuple(rels))


def reverse(M: CoxeterMatrix, u: Sequence[str], v: Sequence[str],
            bound: int) -> tuple[Word, Word] | None:
    """``(P, N)`` with ``u^-1 v = P N^-1``, or ``None`` if the length bound is hit."""
    word = [(c, -1) for c in reversed(u)] + [(c, 1) for c in v]
    limit = 2 * bound + len(u) + len(v)
    i = 0
    while True:
        while i < len(word) - 1 and not (word[i][1] < 0 < word[i + 1][1]):
            i += 1
        if i >= len(word) - 1:
            break
        s, t = word[i][0], word[i + 1][0]
        if s == t:
            repl = []
        else:
            m = M.m(s, t)
            if m is INF:
                return None
            repl = [(c, 1) for c in _alternating(t, s, m - 1)]
            repl += [(c, -1) for c in reversed(_alternating(s, t, m - 1))]
        word[i:i + 2] = repl
        if len(word) > limit:
            return None
        i = max(i - 1, 0)
    pos = tuple(c for c, sign in word if sign > 0)
    neg = tuple(c for c, sign in reversed(word) if sign < 0)
    return pos, neg


def word_lcm(M: CoxeterMatrix, u: Sequence[str], v: Sequence[str], bound: int) -> Word | None:
    r = reverse(M, u, v, bound)
    if r is None or len(u) + len(r[0]) > bound:
        return None
    return tuple(u) + r[0]


def artin_equal(M: CoxeterMatrix, u: Sequence[str], v: Sequence[str], bound: int) -> bool | None:
    """Equality in the Artin-Tits monoid; ``None`` when undecided within the bound."""
    r = reverse(M, u, v, bound)
    if r is None:
        return None
    return r == ((), ())


def spherical_lcm(M: CoxeterMatrix, X: Iterable[str], bound: int | None = None) -> Word | None:
    """Word for the lcm of ``X`` in the Artin-Tits monoid, or ``None`` if not found within ``bound``."""
    X = [g for g in M.generators if g in set(X)]
    if not X:
        raise PresentationError("spherical_lcm needs a non-empty subset")
    if bound is None:
        bound = default_bound(M)
    w: Word | None = (X[0],)
    for g in X[1:]:
        w = word_lcm(M, w, (g,), bound)
        if w is None:
            return None
    return w


def default_bound(M: CoxeterMatrix) -> int:
    return 2 * len(M.generators) ** 2


def table_for(M: CoxeterMatrix, bound: int | None = None, name: str = "") -> GarsideTable:
    top = spherical_lcm(M, M.generators, bound)
    if top is None:
        raise PresentationError("matrix is not spherical up to the bound")
    return build_table(artin_presentation(M), top, name=name)


@dataclass
class AxiomResult:
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "witness": list(self.witness) if self.witness is not None else None,
                "detail": self.detail or None}


@dataclass
class HomVerdict:
    source: CoxeterMatrix
    target: CoxeterMatrix
    p: dict[str, tuple[str, ...]]
    l0: AxiomResult
    l1: AxiomResult
    l2: AxiomResult
    images: dict[str, Word]
    l3: str = "skipped"

    @property
    def overall(self) -> bool:
        return self.l0.passed and self.l1.passed and self.l2.passed

    def to_dict(self) -> dict:
        return {
            "L0": self.l0.to_dict(), "L1": self.l1.to_dict(), "L2": self.l2.to_dict(),
            "L3": self.l3, "overall": self.overall,
            "images": {s: list(w) for s, w in self.images.items()},
        }


def check_lcm_hom(MA: CoxeterMatrix, MB: CoxeterMatrix, p: Mapping[str, Iterable[str]],
                  bound: int | None = None) -> HomVerdict:
    if not MA.is_finite:
        raise PresentationError("source matrices with infinite entries are not supported")
    if bound is None:
        bound = default_bound(MB)
    pmap = {s: tuple(g for g in MB.generators if g in set(p.get(s, ()))) for s in MA.generators}
    for s, image in p.items():
        if s not in MA.generators:
            raise PresentationError(f"map names unknown source generator {s!r}")
        unknown = set(image) - set(MB.generators)
        if unknown:
            raise PresentationError(f"p({s}) names unknown target generators {sorted(unknown)}")
        if not image:
            raise PresentationError(f"p({s}) is empty")
    missing = [s for s in MA.generators if not pmap[s]]
    if missing:
        raise PresentationError(f"p is undefined on {missing}")

    l0 = AxiomResult(True)
    for s, t in itertools.combinations(MA.generators, 2):
        common = set(pmap[s]) & set(pmap[t])
        if common:
            l0 = AxiomResult(False, (s, t), f"p({s}) and p({t}) share {sorted(common)}")
            break

    images: dict[str, Word] = {}
    l1 = AxiomResult(True)
    for s in MA.generators:
        w = spherical_lcm(MB, pmap[s], bound)
        if w is None:
            l1 = AxiomResult(False, (s,), f"p({s}) is not spherical up to bound {bound}")
            break
        images[s] = w

    l2 = AxiomResult(True)
    if l1.passed:
        for s, t in itertools.combinations(MA.generators, 2):
            m = MA.m(s, t)
            ds, dt = images[s], images[t]
            first = [c for w in _alternating(ds, dt, m) for c in w]
            second = [c for w in _alternating(dt, ds, m) for c in w]
            big = bound * max(m, 2)
            join = word_lcm(MB, ds, dt, big)
            if join is None:
                l2 = AxiomResult(False, (s, t), "lcm of the images not found within the bound")
                break
            for label, w in (("alternating products differ", second), ("lcm differs", join)):
                ok = artin_equal(MB, first, w, big)
                if not ok:
                    l2 = AxiomResult(False, (s, t), label if ok is False else "undecided at bound")
                    break
            if not l2.passed:
                break
    else:
        l2 = AxiomResult(False, None, "not evaluated: L1 failed")
    return HomVerdict(MA, MB, pmap, l0, l1, l2, images)


def apply_hom(verdict: HomVerdict, word: SignedWord) -> SignedWord:
    if not verdict.overall:
        raise PresentationError("cannot apply a map that is not an LCM-homomorphism")
    out: list[tuple[str, int]] = []
    for letter, sign in word:
        try:
            image = verdict.images[letter]
        except KeyError:
            raise PresentationError(f"unknown source generator {letter!r}") from None
        if sign > 0:
            out.extend((c, 1) for c in image)
        else:
            out.extend((c, -1) for c in reversed(image))
    return tuple(out)


def image_element(verdict: HomVerdict, tableB: GarsideTable, g: PositiveElement) -> PositiveElement:
    word = apply_hom(verdict, tuple((c, 1) for c in g.word()))
    return normal_form(tableB, [c for c, _ in word])


@dataclass
class HomPropertyReport:
    elements: int = 0
    pairs: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def positive_words(gens: Sequence[str], max_len: int) -> Iterable[Word]:
    for k in range(max_len + 1):
        yield from itertools.product(gens, repeat=k)


def verify_hom_properties(verdict: HomVerdict, tableA: GarsideTable, tableB: GarsideTable,
                          max_len: int = 4, words: Iterable[Sequence[str]] | None = None,
                          max_failures: int = 20) -> HomPropertyReport:
    """Falsification tests for normal-form, gcd and lcm preservation and injectivity."""
    report = HomPropertyReport()
    if words is None:
        words = positive_words(verdict.source.generators, max_len)
    elements = list(dict.fromkeys(normal_form(tableA, w) for w in words))
    phi = {g: image_element(verdict, tableB, g) for g in elements}
    report.elements = len(elements)

    def fail(msg):
        if len(report.failures) < max_failures:
            report.failures.append(msg)

    images_of_simples = {}
    for s in range(len(tableA)):
        images_of_simples[s] = image_element(verdict, tableB, simple_element(tableA, s))
    for g in elements:
        expected = []
        for s in g.nf:
            img = images_of_simples[s]
            if len(img.nf) != 1:
                fail(f"image of simple {tableA.render(s)} is not a simple: {img.render()}")
            expected.extend(img.nf)
        if tuple(expected) != phi[g].nf:
            fail(f"normal form of φ({g.render()}) is {phi[g].render()}")
    seen = {}
    for g, img in phi.items():
        if img in seen and seen[img] != g:
            fail(f"φ identifies {g.render()} and {seen[img].render()}")
        seen[img] = g
    for g, h in itertools.product(elements, repeat=2):
        report.pairs += 1
        for label, op in (("left lcm", left_lcm), ("left gcd", left_gcd),
                          ("right lcm", right_lcm), ("right gcd", right_gcd)):
            lhs = image_element(verdict, tableB, op(g, h))
            rhs = op(phi[g], phi[h])
            if lhs != rhs:
                fail(f"{label} of {g.render()} and {h.render()} not preserved")
    return report


def load_map(path: str | Path) -> tuple[CoxeterMatrix, CoxeterMatrix, dict[str, list[str]]]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        MA = CoxeterMatrix.from_dict(data["sourceMatrix"])
        MB = CoxeterMatrix.from_dict(data["targetMatrix"])
        p = {s: list(v) for s, v in data["p"].items()}
    except (OSError, json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise PresentationError(f"cannot read map file {path}: {exc}") from None
    return MA, MB, p


def render_images(verdict: HomVerdict) -> dict[str, str]:
    return {s: render(w) for s, w in verdict.images.items()}
