"""Ready-made Garside systems: classical and dual braid monoids, the ⟨x,y,z⟩ example, free abelian."""

from __future__ import annotations

from .build import build_table
from .table import GarsideTable
from .words import Presentation, PresentationError

CLASSICAL_GUARD = 6
DUAL_GUARD = 7


def _guard(kind: str, n: int, limit: int, force: bool) -> None:
    if n < 2:
        raise PresentationError(f"{kind} braid systems need n >= 2, got {n}")
    if n > limit and not force:
        raise PresentationError(f"{kind}:{n} exceeds the size guard n <= {limit}; use force")


def classical_presentation(n: int) -> Presentation:
    gens = tuple(f"s{i}" for i in range(1, n))
    rels = []
    for i in range(1, n):
        for j in range(i + 1, n):
            si, sj = f"s{i}", f"s{j}"
            if j - i == 1:
                rels.append(((si, sj, si), (sj, si, sj)))
            else:
                rels.append(((si, sj), (sj, si)))
    # half twist: Δ_k = Δ_{k-1} · s_{k-1} ⋯ s_1
    delta: list[str] = []
    for k in range(2, n + 1):
        delta.extend(f"s{i}" for i in range(k - 1, 0, -1))
    return Presentation(gens, tuple(rels), tuple(delta))


def braid_classical(n: int, force: bool = False) -> GarsideTable:
    _guard("classical", n, CLASSICAL_GUARD, force)
    return build_table(classical_presentation(n), name=f"braid:{n}")


def dual_generator(t: int, s: int, n: int) -> str:
    if t <= s:
        t, s = s, t
    return f"a{t}{s}" if n <= 9 else f"a{t}_{s}"


def dual_presentation(n: int) -> Presentation:
    pairs = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    a = {ts: dual_generator(*ts, n) for ts in pairs}
    rels = []
    for t in range(1, n + 1):
        for s in range(1, t):
            for r in range(1, s):
                ts, sr, tr = a[t, s], a[s, r], a[t, r]
                rels.append(((ts, sr), (sr, tr)))
                rels.append(((sr, tr), (tr, ts)))
    for i, (t, s) in enumerate(pairs):
        for r, q in pairs[i + 1:]:
            # non-interleaved index pairs commute
            if (t - r) * (t - q) * (s - r) * (s - q) > 0:
                rels.append(((a[t, s], a[r, q]), (a[r, q], a[t, s])))
    delta = tuple(a[k, k - 1] for k in range(n, 1, -1))
    return Presentation(tuple(a[p] for p in pairs), tuple(rels), delta)


def braid_dual(n: int, force: bool = False) -> GarsideTable:
    _guard("dual", n, DUAL_GUARD, force)
    return build_table(dual_presentation(n), name=f"dual:{n}")


def xyz_presentation() -> Presentation:
    return Presentation(
        ("x", "y", "z"),
        ((("x", "x"), ("y", "y")), (("x", "z"), ("z", "x")), (("y", "z"), ("z", "y"))),
        ("x", "x", "z"),
    )


def example_xyz() -> GarsideTable:
    return build_table(xyz_presentation(), name="xyz")


def abelian_presentation(n: int) -> Presentation:
    if n < 1:
        raise PresentationError(f"free abelian systems need n >= 1, got {n}")
    gens = tuple(f"e{i}" for i in range(1, n + 1))
    rels = tuple(((a, b), (b, a)) for i, a in enumerate(gens) for b in gens[i + 1:])
    return Presentation(gens, rels, gens)


def free_abelian(n: int) -> GarsideTable:
    return build_table(abelian_presentation(n), name=f"abelian:{n}")


def from_selector(selector: str, force: bool = False) -> GarsideTable:
    """Build a system from a CLI selector such as ``braid:4``, ``dual:4``, ``xyz``, ``abelian:3``."""
    kind, _, arg = selector.partition(":")
    if kind == "xyz":
        if arg:
            raise PresentationError(f"selector {selector!r} takes no parameter")
        return example_xyz()
    builders = {"braid": braid_classical, "dual": braid_dual}
    try:
        n = int(arg)
    except ValueError:
        raise PresentationError(f"bad builtin selector {selector!r}") from None
    if kind in builders:
        return builders[kind](n, force=force)
    if kind == "abelian":
        return free_abelian(n)
    raise PresentationError(f"unknown builtin {kind!r}")
