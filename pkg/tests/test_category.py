import pytest
from conftest import load_category

from fincat.category import dual, free_category, make_category, opposite, with_relations
from fincat.congruence import PathWord, SaturationConfig
from fincat.errors import NotComposable, PossiblyInfinite, UnknownMorphism, UnknownObject
from fincat.quiver import build_quiver


@pytest.fixture
def path():
    return free_category(build_quiver(["X", "Y", "Z"], [("f", "X", "Y"), ("g", "Y", "Z")]))


def test_word_references(path):
    gf = path.morphism(["g", "f"])
    assert path.morphism(gf) is gf
    assert path.morphism(gf.canonical) == gf
    assert path.morphism("f").canonical.arrows == ("f",)
    assert path.morphism({"id_at": "Y"}) == path.identity("Y")
    with pytest.raises(UnknownMorphism):
        path.morphism("k")
    with pytest.raises(UnknownObject):
        path.identity("Q")
    with pytest.raises(NotComposable):
        path.morphism(["f", "g"])


def test_summary_and_format(path):
    assert path.summary() == "3 objects, 6 morphisms"
    assert path.format(path.morphism(["g", "f"])) == "g∘f"
    assert path.format((path.word("f"), path.word("f"))) == "f = f"


def test_custom_symbols():
    q = build_quiver(["X", "Y", "Z"], [("f", "X", "Y"), ("g", "Y", "Z")])
    c = make_category(q, composition_symbol=" . ", identity_prefix="1_")
    assert c.format(c.morphism(["g", "f"])) == "g . f"
    assert c.format(c.identity("X")) == "1_X"


def test_with_relations_and_object_eqs(path):
    c = with_relations(path, [(["g", "f"], ["g", "f"])])
    assert len(c.morphisms) == 6
    with pytest.raises(PossiblyInfinite):
        with_relations(path, object_eqs=[("X", "Y")], cfg=SaturationConfig(max_word_length=5))


def test_truncated_summary():
    c = load_category("fig9-left")
    assert not c.complete
    assert c.summary().endswith("(truncated at word length 6)")


def test_dual_reverses(path):
    d = dual(path)
    assert d.morphism(["f", "g"]).dom == "Z"
    assert opposite(d, path.morphism(["g", "f"])) == d.morphism(["f", "g"])
    assert dual(d).table.partition() == path.table.partition()


def test_dual_of_relations():
    c = load_category("fig4-commutative")
    d = dual(c)
    assert d.find(["f", "i"]) == d.find(["g", "h"])


def test_identity_word_endpoints():
    c = load_category("fig1")
    assert c.word({"id_at": "X"}) == PathWord.identity("X")
