import random

import pytest
from oracles import naive_partition, random_presentation

from fincat.congruence import (
    PathWord,
    SaturationConfig,
    compose,
    enumerate_and_saturate,
    hom_set,
    word_equal,
    word_from_arrows,
)
from fincat.errors import MismatchedRelation, NotComposable, PossiblyInfinite, UnknownMorphism, WordOutOfRange
from fincat.quiver import build_quiver


def W(q, *arrows):
    return word_from_arrows(q, arrows)


@pytest.fixture
def square():
    return build_quiver(["X", "Y", "Z", "W"], [("f", "X", "Y"), ("g", "X", "Z"), ("h", "Z", "W"), ("i", "Y", "W")])


def test_words_compose_right_to_left():
    q = build_quiver(["X", "Y", "Z"], [("f", "X", "Y"), ("g", "Y", "Z")])
    gf = W(q, "g", "f")
    assert (gf.dom, gf.cod) == ("X", "Z")
    assert W(q, "g").after(W(q, "f")) == gf
    assert gf.format() == "g∘f"
    assert PathWord.identity("X").format() == "id_X"
    with pytest.raises(NotComposable):
        W(q, "f", "g")
    with pytest.raises(UnknownMorphism):
        W(q, "k")


def test_free_square_counts(square):
    t = enumerate_and_saturate(square)
    assert t.complete and len(t.classes) == 10
    assert len(hom_set(t, "X", "W")) == 2


def test_relation_collapses_square(square):
    t = enumerate_and_saturate(square, [(W(square, "i", "f"), W(square, "h", "g"))])
    assert len(t.classes) == 9
    assert word_equal(t, W(square, "i", "f"), W(square, "h", "g"))
    assert len(hom_set(t, "X", "W")) == 1


def test_canonical_is_shortest_then_lexicographic(square):
    t = enumerate_and_saturate(square, [(W(square, "i", "f"), W(square, "h", "g"))])
    cls = t.class_of(W(square, "i", "f"))
    assert cls.canonical == W(square, "h", "g")
    assert cls.members == tuple(sorted(cls.members, key=lambda w: w.sort_key()))


def test_loop_without_relation_is_possibly_infinite():
    q = build_quiver(["X"], [("e", "X", "X")])
    with pytest.raises(PossiblyInfinite) as info:
        enumerate_and_saturate(q)
    assert info.value.max_word_length == 12


def test_loop_with_involution_closes():
    q = build_quiver(["X"], [("e", "X", "X")])
    t = enumerate_and_saturate(q, [(W(q, "e", "e"), PathWord.identity("X"))])
    assert t.complete and len(t.classes) == 2
    assert compose(t, t.class_of(W(q, "e")), t.class_of(W(q, "e"))) == t.identity("X")
    # words longer than the table still reduce
    assert t.class_of(W(q, *"eeeee")) == t.class_of(W(q, "e"))


def test_idempotent_loop():
    q = build_quiver(["X"], [("e", "X", "X")])
    t = enumerate_and_saturate(q, [(W(q, "e", "e"), W(q, "e"))])
    assert len(t.classes) == 2


def test_truncated_mode():
    q = build_quiver(["X"], [("e", "X", "X")])
    t = enumerate_and_saturate(q, (), SaturationConfig(max_word_length=5, truncate_at=3), truncate=True)
    assert not t.complete and t.bound == 3 and len(t.classes) == 4
    e3 = t.class_of(W(q, "e", "e", "e"))
    assert t.compose(e3, t.class_of(W(q, "e"))) is None
    with pytest.raises(WordOutOfRange):
        t.class_of(W(q, *"eeee"))
    assert t.find_class(W(q, *"eeee")) is None


def test_mismatched_relation(square):
    with pytest.raises(MismatchedRelation):
        enumerate_and_saturate(square, [(W(square, "f"), W(square, "g"))])


def test_arrow_equivalence_merges():
    q = build_quiver(["X", "Y", "Z"], [("f1", "X", "Y"), ("f2", "X", "Y"), ("g", "Y", "Z")], arrow_eqs=[("f1", "f2")])
    t = enumerate_and_saturate(q)
    assert len(t.classes) == 6
    assert word_equal(t, W(q, "g", "f1"), W(q, "g", "f2"))


def test_object_equivalence_creates_loop():
    q = build_quiver(["X", "Y"], [("f", "X", "Y")], object_eqs=[("X", "Y")])
    with pytest.raises(PossiblyInfinite):
        enumerate_and_saturate(q, cfg=SaturationConfig(max_word_length=6))


def test_class_cap():
    q = build_quiver(["X", "Y", "Z", "W"], [("f", "X", "Y"), ("g", "Y", "Z"), ("h", "Z", "W")])
    with pytest.raises(PossiblyInfinite):
        enumerate_and_saturate(q, cfg=SaturationConfig(max_classes=5))


def test_env_override(monkeypatch):
    monkeypatch.setenv("FINCAT_MAX_WORD_LENGTH", "4")
    assert SaturationConfig.from_env().max_word_length == 4
    assert SaturationConfig.from_env(max_word_length=7).max_word_length == 7


def test_dump_format(square):
    t = enumerate_and_saturate(square, [(W(square, "i", "f"), W(square, "h", "g"))])
    assert "X -> W : h∘g = {h∘g, i∘f}" in t.dump().splitlines()


def test_idempotent_resaturation(square):
    rels = [(W(square, "i", "f"), W(square, "h", "g"))]
    t = enumerate_and_saturate(square, rels)
    implied = [(m, c.canonical) for c in t.classes for m in c.members if m != c.canonical]
    assert enumerate_and_saturate(square, rels + implied).partition() == t.partition()


def test_matches_oracle_on_random_instances():
    rng = random.Random(7)
    cfg = SaturationConfig(max_word_length=6, truncate_at=3)
    for _ in range(60):
        q, rels = random_presentation(rng)
        t = enumerate_and_saturate(q, rels, cfg, truncate=True)
        if t.complete:
            oracle = naive_partition(q, rels, cfg.max_word_length)
            images = [{t.class_of(w) for w in cls} for cls in oracle]
            assert all(len(i) == 1 for i in images)
            assert len({next(iter(i)) for i in images}) == len(oracle)
        else:
            assert naive_partition(q, rels, t.bound) == t.partition()
