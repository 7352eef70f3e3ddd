import itertools

import pytest
from conftest import load_category
from oracles import smallest_by_oracle

from fincat import analysis as an
from fincat.category import free_category, with_relations
from fincat.errors import NotGroupoidalizable
from fincat.forcing import (
    Target,
    commutativity_candidates,
    force_commute,
    force_groupoid,
    groupoid_candidates,
)
from fincat.quiver import build_quiver


def test_square():
    c = load_category("fig4-free")
    fs = force_commute(c)
    assert fs.format(c) == ["i∘f = h∘g"] and fs.minimal_verified
    assert fs.target is Target.COMMUTATIVITY
    assert an.commutes(with_relations(c, fs.equations))


def test_already_commutative():
    assert len(force_commute(load_category("fig4-commutative"))) == 0


def test_oblong_size_two_and_outer_rectangle():
    c = load_category("fig5-left")
    fs = force_commute(c)
    assert len(fs) == 2
    forced = with_relations(c, fs.equations)
    assert len(forced.hom("X1", "Z2")) == 1
    assert smallest_by_oracle(c, commutativity_candidates(c), an.commutes) == 2


def test_loop_needs_identity_merge():
    q = build_quiver(["X"], [("e", "X", "X")])
    from fincat.congruence import PathWord
    from fincat.category import make_category

    c = make_category(q, [(PathWord("X", "X", ("e", "e")), PathWord.identity("X"))])
    fs = force_commute(c)
    assert fs.format(c) == ["e = id_X  [identity merge]"]


def test_greedy_fallback_reports_unverified():
    c = load_category("fig5-left")
    fs = force_commute(c, exact_limit=0)
    assert not fs.minimal_verified
    assert an.commutes(with_relations(c, fs.equations))


def test_groupoid_two_arrows():
    c = load_category("fig10-left")
    fs = force_groupoid(c)
    assert fs.format(c) == ["g∘f = id_X", "f∘g = id_Y"]
    assert an.is_groupoid(with_relations(c, fs.equations))


def test_groupoid_four_arrows():
    c = load_category("fig11-left")
    fs = force_groupoid(c)
    assert len(fs) == 4 and fs.minimal_verified
    g = with_relations(c, fs.equations)
    assert g.complete and an.is_groupoid(g) and len(g.morphisms) == 9
    cands = groupoid_candidates(c)
    # no three candidate equations suffice
    for combo in itertools.combinations(cands, 3):
        try:
            d = with_relations(c, combo)
        except Exception:
            continue
        assert not (d.complete and an.is_groupoid(d))


def test_not_groupoidalizable():
    c = free_category(build_quiver(["X", "Y"], [("f", "X", "Y")]))
    with pytest.raises(NotGroupoidalizable):
        force_groupoid(c)
