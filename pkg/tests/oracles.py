"""Brute-force oracles that avoid the greedy machinery under test.

Word-level oracles work on the presentation alone (congruence closure).
Element-level oracles enumerate the finite universe of elements of bounded
canonical length and read divisibility off its full multiplication table.
"""

from __future__ import annotations

import itertools

from garside import elements as el
from garside.words import Presentation, congruence_class, equivalence_classes


def prefix_classes(pres: Presentation, word) -> set[tuple]:
    """Left divisors of ``word`` as least representatives, by congruence closure."""
    index = equivalence_classes(pres, len(word))
    out = set()
    for w in congruence_class(pres, word):
        for k in range(len(w) + 1):
            out.add(index.representative(w[:k]))
    return out


def suffix_classes(pres: Presentation, word) -> set[tuple]:
    index = equivalence_classes(pres, len(word))
    out = set()
    for w in congruence_class(pres, word):
        for k in range(len(w) + 1):
            out.add(index.representative(w[k:]))
    return out


class Universe:
    """Elements of canonical length at most ``k`` with their mutual products."""

    def __init__(self, table, k: int = 2):
        self.table = table
        seqs = itertools.product(range(len(table)), repeat=k)
        self.elements = sorted({el.normalize(table, s) for s in seqs}, key=lambda g: (len(g.word()), g.nf))
        members = set(self.elements)
        self.left_divisors = {g: set() for g in self.elements}
        self.right_divisors = {g: set() for g in self.elements}
        self.left_multiples = {g: set() for g in self.elements}
        self.right_multiples = {g: set() for g in self.elements}
        for u in self.elements:
            for v in self.elements:
                w = el.multiply(u, v)
                if w in members:
                    self.left_divisors[w].add(u)
                    self.right_divisors[w].add(v)
                    self.left_multiples[u].add(w)
                    self.right_multiples[v].add(w)

    def gcd(self, g, h, side="L"):
        down = self.left_divisors if side == "L" else self.right_divisors
        common = down[g] & down[h]
        best = [c for c in common if common <= down[c]]
        assert len(best) == 1, "divisor set has no greatest element"
        return best[0]

    def lcm(self, g, h, side="L"):
        up = self.left_multiples if side == "L" else self.right_multiples
        common = up[g] & up[h]
        best = [c for c in common if common <= up[c]]
        assert len(best) == 1, "multiple set has no least element"
        return best[0]


def signed_words(generators, max_len: int):
    letters = [(g, e) for g in generators for e in (1, -1)]
    for k in range(max_len + 1):
        yield from itertools.product(letters, repeat=k)


class WordProblemOracle:
    """Equality of signed words, reduced to the positive word problem.

    Each inverse letter is written ``∂(a) Δ⁻¹`` with ``a ∂(a) = Δ``; the
    ``Δ⁻¹`` factors are pushed left through conjugation by Δ, read off the
    congruence classes, so a signed word becomes ``Δ^{-k} P`` with ``P``
    positive.  Positive words are compared by congruence closure.
    """

    def __init__(self, pres: Presentation, max_len: int):
        self.pres = pres
        delta = pres.delta
        self.delta = delta
        cls = congruence_class(pres, delta)
        self.complement = {}
        for a in pres.generators:
            tails = sorted(w[1:] for w in cls if w[0] == a)
            assert tails, f"{a} does not divide the Garside word"
            self.complement[a] = tails[0]
        self.index = equivalence_classes(pres, max_len)
        lookup = self.index.representative
        self.conj = {}
        for a in pres.generators:
            # Δ a = b Δ, so Δ a Δ⁻¹ = b; read off classes of length |Δ|+1
            target = lookup(delta + (a,))
            hit = [b for b in pres.generators if lookup((b,) + delta) == target]
            assert len(hit) == 1
            self.conj[a] = hit[0]

    def _conjugate(self, word):
        return tuple(self.conj[a] for a in word)

    def split(self, signed) -> tuple[int, tuple]:
        """Return ``(k, P)`` with ``signed = Δ^{-k} P``."""
        k, pos = 0, ()
        for a, e in signed:
            piece = (a,) if e > 0 else self.complement[a]
            # Δ^{-k} P · piece · Δ⁻¹ = Δ^{-k-1} (Δ P piece Δ⁻¹)
            pos = pos + piece
            if e < 0:
                pos = self._conjugate(pos)
                k += 1
        return k, pos

    def equal(self, w1, w2) -> bool:
        k1, p1 = self.split(w1)
        k2, p2 = self.split(w2)
        big = max(k1, k2)
        lhs = self.delta * (big - k1) + p1
        rhs = self.delta * (big - k2) + p2
        if len(lhs) != len(rhs):
            return False
        return self.index.equal(lhs, rhs)
