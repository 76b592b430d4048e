"""Garside, atomic Garside and standard parabolic subgroups of a finite Garside group.

A candidate subgroup is described by its set of minimals, a subset of the
simples containing the identity.  Classification follows the recognition
criterion: the set must be a sublattice for both divisibility orders, and the
left and right heads of every product of two members must be members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .elements import GroupElement
from .table import GarsideError, GarsideTable

EXHAUSTIVE_BUDGET = 16


class MinimalSet(frozenset):
    """A set of simple ids of one table; always contains the identity."""

    table: GarsideTable

    def __new__(cls, table: GarsideTable, members: Iterable[int]):
        self = super().__new__(cls, set(members) | {table.identity})
        self.table = table
        return self

    def sorted(self) -> list[int]:
        return sorted(self)

    def render(self) -> list[str]:
        return [self.table.render(s) for s in sorted(self)]

    def __repr__(self):
        return "MinimalSet({" + ", ".join(self.render()) + "})"


@dataclass
class SubgroupReport:
    minimal_set: MinimalSet
    is_sublattice: bool = False
    is_garside: bool = False
    garside_element: int | None = None
    sub_atoms: frozenset[int] = frozenset()
    is_atomic: bool = False
    is_parabolic: bool = False
    failure_witness: tuple[int, int] | None = None
    failure_reason: str = ""
    delta: int | None = None            # the balanced simple of a parabolic query
    parabolic_witness: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def table(self) -> GarsideTable:
        return self.minimal_set.table

    def check_chain(self) -> None:
        if self.is_parabolic and not self.is_atomic:
            raise AssertionError("parabolic report that is not atomic")
        if self.is_atomic and not self.is_garside:
            raise AssertionError("atomic report that is not Garside")
        if self.is_garside and not self.is_sublattice:
            raise AssertionError("Garside report that is not a sublattice")
        if self.is_garside != (self.garside_element is not None):
            raise AssertionError("Garside element present iff Garside")

    def to_dict(self) -> dict:
        t = self.table
        name = t.render
        return {
            "members": self.minimal_set.render(),
            "isSublattice": self.is_sublattice,
            "isGarside": self.is_garside,
            "isAtomic": self.is_atomic,
            "isParabolic": self.is_parabolic,
            "garsideElement": None if self.garside_element is None else name(self.garside_element),
            "subAtoms": [name(a) for a in sorted(self.sub_atoms)],
            "failureWitness": None if self.failure_witness is None
            else [name(s) for s in self.failure_witness],
            "failureReason": self.failure_reason or None,
            "delta": None if self.delta is None else name(self.delta),
            "parabolicWitness": None if self.parabolic_witness is None
            else name(self.parabolic_witness),
            "notes": list(self.notes),
        }


def _lattice_ops(table: GarsideTable):
    return (
        ("left meet", table.left_meet_table),
        ("left join", table.left_join_table),
        ("right meet", table.right_meet_table),
        ("right join", table.right_join_table),
    )


def sublattice_witness(X: MinimalSet) -> tuple[tuple[int, int], str] | None:
    members = X.sorted()
    for a, b in itertools.combinations(members, 2):
        for label, op in _lattice_ops(X.table):
            if op[a][b] not in X:
                return (a, b), f"{label} {X.table.render(op[a][b])} is not in the set"
    return None


def is_sublattice(X: MinimalSet) -> bool:
    return sublattice_witness(X) is None


def minimal_closure(table: GarsideTable, gens: Iterable[int]) -> MinimalSet:
    """Least superset of ``gens ∪ {1}`` closed under products that stay simple."""
    members = set(gens) | {table.identity}
    if not members:
        raise GarsideError("closure of an empty set")
    frontier = list(members)
    while frontier:
        new = []
        for a in frontier:
            for b in list(members):
                for p in (table.product[a][b], table.product[b][a]):
                    if p >= 0 and p not in members:
                        members.add(p)
                        new.append(p)
        frontier = new
    return MinimalSet(table, members)


def _fold(op, items: Iterable[int], start: int) -> int:
    acc = start
    for s in items:
        acc = op[acc][s]
    return acc


def _atoms_of(X: MinimalSet) -> frozenset[int]:
    table = X.table
    e = table.identity
    proper = [s for s in X if s != e]
    factored = {table.product[u][v] for u in proper for v in proper}
    return frozenset(s for s in proper if s not in factored)


def is_garside_minimals(X: MinimalSet) -> SubgroupReport:
    """Fill a report through ``is_garside`` (and atomicity when Garside)."""
    table = X.table
    report = SubgroupReport(X)
    bad = sublattice_witness(X)
    if bad is not None:
        report.failure_witness, report.failure_reason = bad
        return report
    report.is_sublattice = True
    members = X.sorted()
    for a in members:
        for b in members:
            left = table.head_tail(a, b)[0]
            if left not in X:
                report.failure_witness = (a, b)
                report.failure_reason = f"left head {table.render(left)} of the product is not in the set"
                return report
            right = table.right_head_tail(a, b)[1]
            if right not in X:
                report.failure_witness = (a, b)
                report.failure_reason = f"right head {table.render(right)} of the product is not in the set"
                return report
    top = _fold(table.left_join_table, members, table.identity)
    if _fold(table.right_join_table, members, table.identity) != top:
        raise GarsideError("left and right upper bounds of a Garside minimal set differ")
    # X must be the divisor set of its top inside the generated monoid
    for a in members:
        for label, rest in (("left", table.left_quot[a][top]), ("right", table.right_quot[top][a])):
            if rest not in X:
                report.failure_witness = (a, top)
                report.failure_reason = (f"{label} complement {table.render(rest)} of "
                                         f"{table.render(a)} in {table.render(top)} is not in the set")
                return report
    report.is_garside = True
    report.garside_element = top
    report.sub_atoms = _atoms_of(X)
    report.is_atomic = report.sub_atoms <= set(table.atoms)
    return report


def _require_garside(X: MinimalSet) -> SubgroupReport:
    report = is_garside_minimals(X)
    if not report.is_garside:
        raise GarsideError(f"{X!r} is not the minimal set of a Garside subgroup",
                           report.failure_witness or ())
    return report


def subgroup_atoms(X: MinimalSet) -> frozenset[int]:
    return _require_garside(X).sub_atoms


def is_atomic(X: MinimalSet) -> bool:
    return _require_garside(X).is_atomic


def generated_minimals(table: GarsideTable, atoms: Iterable[int]) -> MinimalSet:
    """Simples expressible as products of the given atoms (every prefix of a simple is simple)."""
    atoms = list(atoms)
    found = {table.identity}
    frontier = [table.identity]
    while frontier:
        new = []
        for s in frontier:
            for a in atoms:
                p = table.product[s][a]
                if p >= 0 and p not in found:
                    found.add(p)
                    new.append(p)
        frontier = new
    return MinimalSet(table, found)


def is_standard_parabolic(table: GarsideTable, delta: int) -> SubgroupReport:
    if not table.is_balanced_simple(delta):
        gens = table.simple_support(delta)
        report = is_garside_minimals(minimal_closure(table, gens))
        report.delta = delta
        report.notes.append(f"{table.render(delta)} is not balanced")
        report.check_chain()
        return report
    supp = table.simple_support(delta)
    reachable = generated_minimals(table, supp)
    divs = set(table.left_divisors(delta))
    report = is_garside_minimals(reachable)
    report.delta = delta
    if set(reachable) == divs:
        report.is_parabolic = True
        if not report.is_atomic:
            raise GarsideError(f"parabolic candidate {table.render(delta)} fails the Garside criterion")
    else:
        extra = sorted(set(reachable) - divs)
        report.parabolic_witness = extra[0]
        report.notes.append(
            f"{table.render(extra[0])} ∈ D(Δ)∩G⁺_δ ∖ D(δ) for δ = {table.render(delta)}")
    report.check_chain()
    return report


def classify(X: MinimalSet) -> SubgroupReport:
    """Full report for a minimal set; parabolic when it is ``D(δ)`` of a parabolic ``δ``."""
    report = is_garside_minimals(X)
    if report.is_garside and report.is_atomic:
        top = report.garside_element
        par = is_standard_parabolic(X.table, top)
        if par.is_parabolic and set(par.minimal_set) == set(X):
            report.is_parabolic = True
            report.delta = top
    report.check_chain()
    return report


def intersect(X: MinimalSet, Y: MinimalSet) -> SubgroupReport:
    if X.table is not Y.table:
        raise GarsideError("minimal sets belong to different tables")
    _require_garside(X)
    _require_garside(Y)
    report = classify(MinimalSet(X.table, X & Y))
    if not report.is_garside:
        raise GarsideError("intersection of Garside minimal sets failed the criterion",
                           report.failure_witness or ())
    return report


def meet_balanced(table: GarsideTable, delta: int, tau: int) -> int:
    for s in (delta, tau):
        if not table.is_balanced_simple(s):
            raise GarsideError(f"{table.render(s)} is not balanced", (s,))
    left = table.left_meet(delta, tau)
    right = table.right_meet(delta, tau)
    if left != right or not table.is_balanced_simple(left):
        raise GarsideError("meets of balanced simples disagree", (left, right))
    return left


def membership(g: GroupElement, X: MinimalSet) -> bool:
    if g.table is not X.table:
        raise GarsideError("element and minimal set belong to different tables")
    _require_garside(X)
    return all(s in X for s in g.denom.nf + g.numer.nf)


def sub_table(X: MinimalSet) -> GarsideTable:
    """Standalone table of the Garside submonoid with minimals ``X``."""
    table = X.table
    report = _require_garside(X)
    members = X.sorted()
    new_id = {s: i for i, s in enumerate(members)}
    product = [[new_id.get(table.product[a][b], -1) if table.product[a][b] >= 0 else -1
                for b in members] for a in members]
    letters = {name: new_id[a] for name, a in table.letters.items() if a in report.sub_atoms}
    sub = GarsideTable([table.words[s] for s in members], product, new_id[table.identity],
                       new_id[report.garside_element], letters,
                       name=f"sub({table.name})", warnings=table.warnings)
    sub.ambient_ids = tuple(members)
    return sub


def enumerate_balanced(table: GarsideTable) -> list[int]:
    return [s for s in range(len(table)) if table.is_balanced_simple(s)]


def _report_key(r: SubgroupReport):
    return (len(r.minimal_set), r.minimal_set.sorted())


def enumerate_parabolics(table: GarsideTable) -> list[SubgroupReport]:
    out = {}
    for d in enumerate_balanced(table):
        r = is_standard_parabolic(table, d)
        if r.is_parabolic:
            out.setdefault(frozenset(r.minimal_set), r)
    return sorted(out.values(), key=_report_key)


@dataclass
class GarsideEnumeration:
    reports: list[SubgroupReport]
    partial: bool

    def __iter__(self) -> Iterator[SubgroupReport]:
        return iter(self.reports)

    def __len__(self) -> int:
        return len(self.reports)


def _candidate_sets(table: GarsideTable, budget: int) -> tuple[Iterator[frozenset[int]], bool]:
    e = table.identity
    others = [s for s in range(len(table)) if s != e]
    if len(table) <= budget:
        def every():
            for k in range(len(others) + 1):
                for combo in itertools.combinations(others, k):
                    yield frozenset(combo) | {e}
        return every(), False

    def some():
        for k in range(len(table.atoms) + 1):
            for combo in itertools.combinations(table.atoms, k):
                yield frozenset(minimal_closure(table, combo))
        for d in enumerate_balanced(table):
            yield frozenset(table.left_divisors(d))
    return some(), True


def enumerate_garside(table: GarsideTable, budget: int = EXHAUSTIVE_BUDGET) -> GarsideEnumeration:
    """Garside minimal sets; exhaustive when ``|D(Δ)| <= budget``, otherwise partial."""
    candidates, partial = _candidate_sets(table, budget)
    out: dict[frozenset[int], SubgroupReport] = {}
    for members in candidates:
        if members in out:
            continue
        X = MinimalSet(table, members)
        if not _closed_under_products(X):
            continue
        r = classify(X)
        if r.is_garside:
            out[members] = r
    return GarsideEnumeration(sorted(out.values(), key=_report_key), partial)


def _closed_under_products(X: MinimalSet) -> bool:
    # cheap necessary condition of the head criterion
    table = X.table
    for a in X:
        row = table.product[a]
        for b in X:
            p = row[b]
            if p >= 0 and p not in X:
                return False
    return True
