import pytest

from fincat.errors import DuplicateLabel, MismatchedArrowEquivalence, UnknownEndpoint
from fincat.quiver import Arrow, UnionFind, build_quiver, extend_quiver, resolved_objects, reverse_quiver


def test_build_and_lookup():
    q = build_quiver(["X", "Y"], [("f", "X", "Y")])
    assert q.arrow("f") == Arrow("f", "X", "Y")
    assert q.has_arrow("f") and not q.has_arrow("g")
    assert q.object_classes == ("X", "Y")


@pytest.mark.parametrize(
    "objects, arrows, error",
    [
        (["X", "X"], [], DuplicateLabel),
        (["X"], [("f", "X", "X"), ("f", "X", "X")], DuplicateLabel),
        (["X"], [("f", "X", "Y")], UnknownEndpoint),
        ([""], [], DuplicateLabel),
    ],
)
def test_validation(objects, arrows, error):
    with pytest.raises(error):
        build_quiver(objects, arrows)


def test_object_equivalence_resolves_to_least_label():
    q = build_quiver(["Y", "X", "Z"], [("f", "X", "Y")], object_eqs=[("Y", "X")])
    assert q.resolve("Y") == "X"
    assert q.resolved_arrow("f") == Arrow("f", "X", "X")
    assert q.object_classes == ("X", "Z")
    assert resolved_objects(q) == [["X", "Y"], ["Z"]]


def test_object_equivalence_is_transitive():
    q = build_quiver(["A", "B", "C"], object_eqs=[("A", "B"), ("B", "C")])
    assert {q.resolve(x) for x in "ABC"} == {"A"}


def test_arrow_equivalence_needs_parallel_arrows():
    build_quiver(["X", "Y"], [("f", "X", "Y"), ("g", "X", "Y")], arrow_eqs=[("f", "g")])
    with pytest.raises(MismatchedArrowEquivalence):
        build_quiver(["X", "Y"], [("f", "X", "Y"), ("g", "Y", "X")], arrow_eqs=[("f", "g")])
    # parallel only after the object equivalence
    build_quiver(["X", "Y"], [("f", "X", "Y"), ("g", "Y", "X")], [("X", "Y")], [("f", "g")])


def test_unknown_arrow_in_equivalence():
    with pytest.raises(UnknownEndpoint):
        build_quiver(["X"], [("f", "X", "X")], arrow_eqs=[("f", "h")])


def test_reverse_and_extend():
    q = build_quiver(["X", "Y"], [("f", "X", "Y")])
    assert reverse_quiver(q).arrow("f") == Arrow("f", "Y", "X")
    assert reverse_quiver(reverse_quiver(q)) == q
    q2 = extend_quiver(q, ["Z"], [("g", "Y", "Z")])
    assert q2.object_classes == ("X", "Y", "Z")
    with pytest.raises(DuplicateLabel):
        extend_quiver(q, arrows=[("f", "X", "Y")])


def test_union_find_roots():
    uf = UnionFind(["c", "b", "a"])
    uf.union("c", "b")
    uf.union("b", "a")
    assert uf.find("c") == "a"
    assert uf.classes() == {"a": ["a", "b", "c"]}
