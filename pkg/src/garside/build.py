"""Garside tables from homogeneous presentations.

Every word representing a simple is a prefix of a word representing the
Garside element, and relation rewrites stay inside that prefix set.  So the
simples are found by closing the class of the Garside word under the
relations, collecting prefixes and partitioning them.  Balance is the equality
of the prefix and suffix word sets.
"""

from __future__ import annotations

import logging
from typing import Sequence

from .table import GarsideError, GarsideTable
from .words import (
    Presentation,
    PresentationError,
    closure_codes,
    equivalence_classes,
    partition_codes,
    render,
    word_count,
)

log = logging.getLogger(__name__)

# words examined by the exhaustive cancellativity spot-check
CANCELLATIVITY_BUDGET = 60_000


def build_table(pres: Presentation, delta_word: Sequence[str] | None = None, *,
                name: str = "", class_limit: int | None = 5_000_000,
                cancellativity_budget: int = CANCELLATIVITY_BUDGET) -> GarsideTable:
    if delta_word is None:
        delta_word = pres.delta
    if not delta_word:
        raise PresentationError("a non-empty Garside word is required")
    pres.require_homogeneous()
    pres.check_word(delta_word)
    rules = pres.encoded_rules()
    top = closure_codes(pres.encode(delta_word), rules, class_limit)

    prefixes = {w[:k] for w in top for k in range(len(w) + 1)}
    suffixes = {w[k:] for w in top for k in range(len(w) + 1)}
    if prefixes != suffixes:
        odd = min(prefixes ^ suffixes, key=lambda c: (len(c), c))
        side = "left" if odd in prefixes else "right"
        raise GarsideError(
            f"{render(delta_word)} is not balanced: {render(pres.decode(odd))} is a "
            f"{side} divisor only", (pres.decode(odd),))

    for i, g in enumerate(pres.generators):
        if pres.encode((g,)) not in prefixes:
            raise GarsideError(f"generator {g} does not divide {render(delta_word)}", ((g,),))

    classes = partition_codes(prefixes, rules)
    reps = sorted(set(classes.values()), key=lambda c: (len(c), c))
    ids = {rep: i for i, rep in enumerate(reps)}
    n = len(reps)
    dlen = len(delta_word)
    product = [[-1] * n for _ in range(n)]
    for i, a in enumerate(reps):
        row = product[i]
        for j, b in enumerate(reps):
            if len(a) + len(b) <= dlen:
                rep = classes.get(a + b)
                if rep is not None:
                    row[j] = ids[rep]

    warnings = _cancellativity_spot_check(pres, dlen + 2, cancellativity_budget)
    words = [pres.decode(r) for r in reps]
    letters = {g: ids[classes[pres.encode((g,))]] for g in pres.generators}
    table = GarsideTable(words, product, ids[""], ids[classes[pres.encode(delta_word)]],
                         letters, name=name, warnings=warnings)
    table.presentation = pres
    return table


def _cancellativity_spot_check(pres: Presentation, wanted: int, budget: int) -> list[str]:
    k = len(pres.generators)
    bound = wanted
    while bound > 0 and word_count(k, bound) > budget:
        bound -= 1
    index = equivalence_classes(pres, bound)
    witness = index.cancellation_witness()
    if witness is not None:
        u, v = witness
        raise GarsideError(
            f"cancellativity fails: {render(u)} and {render(v)} become equal after "
            f"multiplying by a letter", (u, v))
    if bound < wanted:
        msg = f"cancellativity checked only up to length {bound} (wanted {wanted})"
        log.warning(msg)
        return [msg]
    return []
