import pytest

from garside import elements as el
from garside import subgroups as sg
from garside.table import GarsideError


def ids(table, *words):
    return [table.simple(tuple(w.split("."))) if w != "1" else table.identity for w in words]


def members(report_or_set):
    X = getattr(report_or_set, "minimal_set", report_or_set)
    return set(X.render())


def test_sublattice_examples(xyz):
    assert sg.is_sublattice(sg.MinimalSet(xyz, ids(xyz, "x", "z", "x.z")))
    bad = sg.MinimalSet(xyz, ids(xyz, "x", "y"))
    witness = sg.sublattice_witness(bad)
    assert witness is not None and "x.x" in witness[1]
    assert sg.is_sublattice(sg.MinimalSet(xyz, range(len(xyz))))


def test_closure_examples(xyz):
    assert members(sg.minimal_closure(xyz, ids(xyz, "x", "z"))) == {"1", "x", "z", "x.x", "x.z", "x.x.z"}
    assert members(sg.minimal_closure(xyz, ids(xyz, "y", "z"))) == {"1", "y", "z", "x.x", "y.z", "x.x.z"}
    assert members(sg.minimal_closure(xyz, [xyz.delta])) == {"1", "x.x.z"}


def test_garside_criterion_examples(xyz):
    r = sg.is_garside_minimals(sg.MinimalSet(xyz, ids(xyz, "x", "z", "x.z")))
    assert not r.is_garside
    assert [xyz.render(s) for s in r.failure_witness] == ["x", "x"]
    r = sg.is_garside_minimals(sg.minimal_closure(xyz, ids(xyz, "x", "z")))
    assert r.is_garside and xyz.render(r.garside_element) == "x.x.z"
    r = sg.is_garside_minimals(sg.MinimalSet(xyz, range(len(xyz))))
    assert r.is_garside and r.garside_element == xyz.delta


def test_atoms_and_atomicity(xyz):
    X = sg.minimal_closure(xyz, ids(xyz, "x", "z"))
    assert {xyz.render(a) for a in sg.subgroup_atoms(X)} == {"x", "z"}
    assert sg.is_atomic(X)
    Y = sg.MinimalSet(xyz, ids(xyz, "z", "x.x", "x.x.z"))
    assert {xyz.render(a) for a in sg.subgroup_atoms(Y)} == {"z", "x.x"}
    assert not sg.is_atomic(Y)
    top = sg.MinimalSet(xyz, [xyz.delta])
    assert {xyz.render(a) for a in sg.subgroup_atoms(top)} == {"x.x.z"}
    assert sg.is_atomic(sg.MinimalSet(xyz, range(len(xyz))))
    with pytest.raises(GarsideError):
        sg.subgroup_atoms(sg.MinimalSet(xyz, ids(xyz, "x", "z", "x.z")))


@pytest.mark.parametrize("delta, expected", [("z", True), ("x.x", True), ("x.z", False),
                                             ("1", True), ("x.x.z", True), ("y.z", False)])
def test_parabolic_examples(xyz, delta, expected):
    (d,) = ids(xyz, delta)
    r = sg.is_standard_parabolic(xyz, d)
    assert r.is_parabolic is expected
    if not expected:
        assert xyz.render(r.parabolic_witness) == "x.x"


def test_parabolic_on_unbalanced(braid3):
    (d,) = ids(braid3, "s1.s2")
    r = sg.is_standard_parabolic(braid3, d)
    assert not r.is_parabolic and any("not balanced" in n for n in r.notes)


def test_intersection(xyz):
    X = sg.minimal_closure(xyz, ids(xyz, "x", "z"))
    Y = sg.minimal_closure(xyz, ids(xyz, "y", "z"))
    r = sg.intersect(X, Y)
    assert members(r) == {"1", "z", "x.x", "x.x.z"}
    assert r.is_garside and not r.is_atomic
    assert members(sg.intersect(X, X)) == members(X)
    full = sg.MinimalSet(xyz, range(len(xyz)))
    assert members(sg.intersect(X, full)) == members(X)
    with pytest.raises(GarsideError):
        sg.intersect(X, sg.MinimalSet(xyz, ids(xyz, "x", "z", "x.z")))


def test_meet_balanced(xyz):
    xx, xz = ids(xyz, "x.x", "x.z")
    assert xyz.render(sg.meet_balanced(xyz, xx, xz)) == "x"
    assert sg.meet_balanced(xyz, xz, xz) == xz
    assert sg.meet_balanced(xyz, xz, xyz.delta) == xz


def test_membership(xyz):
    from garside.words import parse_word
    f = lambda text: el.to_fraction(xyz, parse_word(text, xyz.presentation))
    Y = sg.minimal_closure(xyz, ids(xyz, "y", "z"))
    Gz = sg.MinimalSet(xyz, ids(xyz, "z"))
    assert sg.membership(f("x.x"), Y)
    assert not sg.membership(f("x"), Gz)
    assert sg.membership(f("1"), Gz)
    assert sg.membership(f("~z.y.y"), Y)


def test_sub_table(xyz):
    sub = sg.sub_table(sg.minimal_closure(xyz, ids(xyz, "x", "z")))
    assert sub.render(sub.delta) == "x.x.z"
    assert {sub.render(a) for a in sub.atoms} == {"x", "z"}
    full = sg.sub_table(sg.MinimalSet(xyz, range(len(xyz))))
    assert full.words == xyz.words and full.product == xyz.product
    gz = sg.sub_table(sg.MinimalSet(xyz, ids(xyz, "z")))
    assert len(gz) == 2 and gz.render(gz.delta) == "z"


def test_enumerate_parabolics_xyz(xyz):
    deltas = {xyz.render(r.garside_element) for r in sg.enumerate_parabolics(xyz)}
    assert deltas == {"1", "x.x", "z", "x.x.z"}
    assert xyz.delta in sg.enumerate_balanced(xyz)


def test_enumerate_garside_xyz(xyz):
    result = sg.enumerate_garside(xyz)
    assert not result.partial
    sets = [set(r.minimal_set.render()) for r in result]
    assert {"1", "z", "x.x", "x.x.z"} in sets
    assert {"1", "x", "z", "x.z"} not in sets
    for r in result:
        r.check_chain()
    assert len(result) == 11


def test_enumerate_garside_partial(braid4):
    result = sg.enumerate_garside(braid4, budget=16)
    assert result.partial
    assert all(r.is_garside for r in result)


def test_dual4_examples(dual4):
    a31, a21, a42 = ids(dual4, "a31", "a21", "a42")
    delta = dual4.left_join(a31, a21)
    r = sg.is_standard_parabolic(dual4, delta)
    assert r.is_parabolic
    assert set(r.minimal_set) >= {a31, a21}
    from garside.words import parse_word
    # a32 lies in the subgroup generated by a31 and a21
    a32 = el.to_fraction(dual4, parse_word("a32", dual4.presentation))
    conj = el.to_fraction(dual4, parse_word("a21.a31.~a21", dual4.presentation))
    assert a32 == conj
    bad = sg.is_garside_minimals(sg.minimal_closure(dual4, [a31, a42]))
    assert not bad.is_garside
    assert set(bad.failure_witness) == {a31, a42}
    lcm = el.left_lcm(el.simple_element(dual4, a31), el.simple_element(dual4, a42))
    assert all(s not in bad.minimal_set for s in lcm.nf)


def test_dual3_classical_pair(dual3):
    a21, a32 = ids(dual3, "a21", "a32")
    (delta,) = el.normal_form(dual3, ("a32", "a21")).nf
    assert delta == dual3.delta
    assert sg.is_standard_parabolic(dual3, delta).is_parabolic


def test_report_json_shape(xyz):
    r = sg.classify(sg.minimal_closure(xyz, ids(xyz, "x", "z")))
    d = r.to_dict()
    assert d["members"] == ["1", "x", "z", "x.x", "x.z", "x.x.z"]
    assert d["isGarside"] and d["isAtomic"] and not d["isParabolic"]
    assert d["garsideElement"] == "x.x.z"


def test_complement_condition(xyz):
    # sublattice and head-closed, but z does not divide x.x.z inside the set
    X = sg.MinimalSet(xyz, ids(xyz, "z", "x.x.z"))
    assert sg.is_sublattice(X)
    r = sg.is_garside_minimals(X)
    assert not r.is_garside and "complement x.x" in r.failure_reason


@pytest.mark.parametrize("fixture, count", [("xyz", 11), ("braid3", 5), ("dual3", 6),
                                            ("abelian3", 15), ("dual4", 22)])
def test_enumeration_counts(fixture, count, request):
    result = sg.enumerate_garside(request.getfixturevalue(fixture))
    assert not result.partial and len(result) == count
