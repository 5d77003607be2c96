import random

import pytest

from zetaforest.catalog import (
    black_fork_tree,
    builtin_catalog,
    hybrid_tree,
    linear_tree,
    random_tree,
    star_tree,
    symmetric_hybrid_tree,
    unit_tree,
)
from zetaforest.errors import (
    NotATree,
    NotConnected,
    NotEssentiallyPositive,
    NotHarvestable,
    RootNotBlack,
    TerminalNotBlack,
    UnknownVertex,
)
from zetaforest.trees import (
    Tree,
    TreeCombo,
    cap_phi,
    cap_phi_hat,
    circ_h,
    circ_product,
    harvestable_form,
    is_essentially_positive,
    is_harvestable,
    w_word,
)
from zetaforest.words import HElem, right_mul_x_pow, shuffle


def z(*k):
    return HElem.from_index(k)


def relabel(t: Tree, perm: dict) -> Tree:
    return Tree.build(
        perm[t.root],
        [perm[v] for v in t.black],
        [perm[v] for v in t.white],
        [(perm[u], perm[v], k) for u, v, k in t.edges],
    )


# --- canonical keys ---------------------------------------------------------


def test_non_planar_equality():
    # the same shape drawn with children in different positions
    a = Tree.build(
        0, [0, 3, 5], [1, 2, 4],
        [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 4, 4), (4, 5, 5)],
    )
    b = Tree.build(
        0, [0, 3, 5], [1, 2, 4],
        [(0, 4, 4), (4, 5, 5), (0, 1, 1), (1, 2, 2), (2, 3, 3)],
    )
    assert a.key == b.key


def test_key_stable_under_relabeling():
    t = hybrid_tree(1, 2, 1, 2, 1)
    rng = random.Random(7)
    ids = sorted(t.vertices)
    for _ in range(20):
        shuffled = ids[:]
        rng.shuffle(shuffled)
        perm = dict(zip(ids, shuffled))
        assert relabel(t, perm).key == t.key


def test_unit_key():
    assert unit_tree().key == "b()"


def test_key_distinguishes_colors_roots_indices():
    a = linear_tree(1, 2)
    assert a.key != linear_tree(2, 1).key
    assert a.key != a.change_root(sorted(a.vertices)[2]).key
    s = star_tree(1, (1, 1))
    all_black = Tree.build(0, sorted(s.vertices), [], s.edges)
    assert s.key != all_black.key


# --- validate ----------------------------------------------------------------


def test_validate_catalog_ok():
    for t in builtin_catalog():
        t.validate()


def test_validate_white_leaf():
    t = Tree.build(0, [0], [1], [(0, 1, 1)])
    with pytest.raises(TerminalNotBlack):
        t.validate()


def test_validate_disconnected():
    # right vertex/edge count, but one component is a cycle and one is isolated
    t = Tree.build(0, [0, 1, 2, 3], [], [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    with pytest.raises(NotConnected):
        t.validate()
    short = Tree.build(0, [0, 1, 2], [], [(0, 1, 1)])
    with pytest.raises(NotATree):
        short.validate()


def test_validate_single_white_vertex():
    t = Tree.build(0, [], [0], [])
    with pytest.raises(TerminalNotBlack):
        t.validate()


# --- paths and essential positivity ------------------------------------------


def test_path_edges_linear():
    t = linear_tree(1, 1, 1)
    leaf = max(t.vertices)
    assert len(t.path_edges(t.root, leaf)) == 3
    assert t.path_edges(t.root, t.root) == ()


def test_path_edges_star():
    t = star_tree(1, (1, 1))
    leaves = sorted(v for v in t.black if v != t.root)
    path = t.path_edges(leaves[0], leaves[1])
    assert len(path) == 2
    with pytest.raises(UnknownVertex):
        t.path_edges(t.root, 99)


def test_essential_positivity():
    assert is_essentially_positive(linear_tree(1, 2, 1))
    zero_edge = Tree.build(0, [0, 1], [], [(0, 1, 0)])
    assert not is_essentially_positive(zero_edge)
    assert is_essentially_positive(hybrid_tree(1, 1, 1, 1, 0))
    assert is_essentially_positive(unit_tree())


# --- root change and glue product --------------------------------------------


def test_change_root():
    t = linear_tree(1, 2)
    assert t.change_root(t.root).key == t.key
    other_end = 2
    assert t.change_root(other_end).key == linear_tree(2, 1).key
    with pytest.raises(UnknownVertex):
        t.change_root(31)


def test_circ_worked_example():
    left = Tree.build(
        5, [0, 3, 5], [1, 2, 4],
        [(0, 1, 1), (1, 2, 2), (2, 5, 3), (3, 4, 4), (4, 5, 5)],
    )
    right = Tree.build(
        4, [0, 1, 3, 4], [2],
        [(0, 2, 11), (1, 2, 12), (2, 3, 13), (3, 4, 14)],
    )
    expected = Tree.build(
        0, [0, 1, 4, 6, 7, 9], [2, 3, 5, 8],
        [(1, 2, 1), (2, 3, 2), (3, 0, 3), (4, 5, 4), (5, 0, 5),
         (6, 8, 11), (7, 8, 12), (8, 9, 13), (9, 0, 14)],
    )
    assert circ_product(left, right).key == expected.key


def test_circ_unit_and_commutative():
    u = unit_tree()
    a = hybrid_tree(1, 2, 1, 2, 1)
    b = linear_tree(1, 1)
    assert circ_product(a, u).key == a.key
    assert circ_product(u, a).key == a.key
    assert circ_product(a, b).key == circ_product(b, a).key


def test_circ_associative_on_random_trees():
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = (random_tree(rng, 4, 2) for _ in range(3))
        assert circ_product(circ_product(a, b), c).key == circ_product(a, circ_product(b, c)).key


def test_circ_rejects_white_root():
    w_root = Tree.build(0, [1, 2, 3], [0], [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    with pytest.raises(RootNotBlack):
        circ_product(w_root, unit_tree())


# --- harvestability -----------------------------------------------------------


def test_harvestable_examples():
    assert is_harvestable(linear_tree(1, 2, 3))
    assert is_harvestable(hybrid_tree(1, 2, 1, 2, 0))
    assert is_harvestable(unit_tree())
    two_kids = Tree.build(0, [0, 1, 2], [], [(0, 1, 1), (0, 2, 1)])
    assert not is_harvestable(two_kids)
    three_kids = Tree.build(0, range(4), [], [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    assert not is_harvestable(three_kids)
    assert not is_harvestable(black_fork_tree(1, (1, 1)))
    # 0-edge onto a black child of a white vertex
    assert not is_harvestable(star_tree(1, (0, 1)))
    # 0-edge between adjacent blacks
    assert not is_harvestable(linear_tree(0, 1))


def test_harvestable_form_identity_on_plain_linear():
    t = linear_tree(1, 2)
    assert harvestable_form(t).key == t.key


def test_harvestable_form_two_black_children():
    t = Tree.build(0, [0, 1, 2], [], [(0, 1, 1), (0, 2, 2)])
    assert harvestable_form(t).key == star_tree(0, (1, 2)).key


def test_harvestable_form_contracts_hybrid_l0():
    t = hybrid_tree(1, 2, 3, 4, 0)
    got = harvestable_form(t)
    expected = Tree.build(
        0, [0, 2, 3, 4], [1],
        [(0, 1, 4), (1, 2, 1), (1, 3, 2), (1, 4, 3)],
    )
    assert got.key == expected.key


def test_harvestable_form_unit():
    assert harvestable_form(unit_tree()).key == "b()"


def test_harvestable_form_requires_essential_positivity():
    with pytest.raises(NotEssentiallyPositive):
        harvestable_form(linear_tree(0, 1))


def test_harvestable_form_output_always_harvestable():
    rng = random.Random(11)
    for _ in range(150):
        t = random_tree(rng, 7, 2)
        hf = harvestable_form(t)
        assert is_harvestable(hf), (t.key, hf.key)
        hf.validate()


def test_harvestable_form_idempotent_on_image():
    rng = random.Random(13)
    for _ in range(80):
        hf = harvestable_form(random_tree(rng, 6, 2))
        assert harvestable_form(hf).key == hf.key


def test_circ_h_examples():
    u = unit_tree()
    assert circ_h(u, u).key == "b()"
    assert circ_h(linear_tree(2), linear_tree(3)).key == star_tree(0, (2, 3)).key


def test_circ_h_three_stems():
    # gluing three stems one at a time funnels them into a single white vertex
    stems = [linear_tree(1), linear_tree(2), linear_tree(1, 1)]
    left = circ_h(circ_h(stems[0], stems[1]), stems[2])
    right = circ_h(stems[0], circ_h(stems[1], stems[2]))
    assert left.key == right.key
    expected = Tree.build(
        0, [0, 2, 3, 4, 5], [1],
        [(0, 1, 0), (1, 2, 1), (1, 3, 2), (1, 4, 1), (4, 5, 1)],
    )
    assert left.key == expected.key


# --- word extraction -----------------------------------------------------------


def test_w_word_linear():
    assert w_word(linear_tree(1, 2)) == z(1, 2)
    assert w_word(linear_tree(2, 1, 3)) == z(2, 1, 3)
    assert w_word(unit_tree()) == HElem.unit()


def test_w_word_hybrid_matches_closed_form():
    for k1, k2, k3, k4, l in [(1, 2, 1, 2, 1), (1, 1, 1, 1, 0), (2, 1, 1, 2, 3)]:
        t = hybrid_tree(k1, k2, k3, k4, l)
        expected = right_mul_x_pow(
            shuffle(right_mul_x_pow(shuffle(z(k1), z(k2)), l), z(k3)), k4
        )
        assert w_word(t) == expected


def test_w_word_star():
    assert w_word(star_tree(0, (1, 1))) == shuffle(z(1), z(1))
    assert w_word(star_tree(2, (1, 3))) == right_mul_x_pow(shuffle(z(1), z(3)), 2)


def test_w_word_rejects_non_harvestable():
    with pytest.raises(NotHarvestable):
        w_word(black_fork_tree(1, (1, 1)))


# --- tree-level symmetrization ---------------------------------------------------


def test_cap_phi_hat_unit():
    got = cap_phi_hat(unit_tree(), 2)
    assert got.coeffs[0] == TreeCombo.from_tree(unit_tree())
    assert not got.coeffs[1]


def test_cap_phi_linear_r3_figure():
    for ks in [(1, 1, 2), (2, 1, 1), (1, 2, 1), (2, 2, 2)]:
        k1, k2, k3 = ks
        t = linear_tree(k1, k2, k3)
        # the four diagrams, built from scratch
        term1 = linear_tree(k3, k2, k1)
        term2 = Tree.build(0, range(4), [], [(0, 1, k1), (0, 2, k2), (2, 3, k3)])
        term3 = Tree.build(0, range(4), [], [(0, 1, k2), (1, 2, k1), (0, 3, k3)])
        term4 = linear_tree(k1, k2, k3)
        sign = lambda e: -1 if e % 2 else 1
        expected = (
            TreeCombo.from_tree(term1, sign(k1 + k2 + k3))
            + TreeCombo.from_tree(term2, sign(k2 + k3))
            + TreeCombo.from_tree(term3, sign(k3))
            + TreeCombo.from_tree(term4, 1)
        )
        assert cap_phi(t) == expected


def test_cap_phi_hat_constant_term_is_cap_phi():
    for t in builtin_catalog():
        assert cap_phi_hat(t, 3).coeffs[0] == cap_phi(t)


def test_cap_phi_symmetric_hybrid_vanishes():
    t = symmetric_hybrid_tree(1, 2, 1)
    assert cap_phi(t) == TreeCombo.zero()


def test_cap_phi_hat_rejects_bad_input():
    with pytest.raises(NotEssentiallyPositive):
        cap_phi_hat(linear_tree(0, 1), 2)
    w_root = Tree.build(0, [1, 2, 3], [0], [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    with pytest.raises(RootNotBlack):
        cap_phi_hat(w_root, 2)


def test_essential_positivity_preserved_by_symmetrization_terms():
    from zetaforest.trees import symmetrization_terms

    for t in builtin_catalog():
        for _, _, shifted in symmetrization_terms(t, 3):
            assert is_essentially_positive(shifted)
            assert shifted.root in shifted.black


# --- combinations ---------------------------------------------------------------


def test_tree_combo_merges_isomorphic():
    a = linear_tree(1, 2)
    ids = sorted(a.vertices)
    b = relabel(a, {v: v + 10 for v in ids})
    combo = TreeCombo.from_tree(a) + TreeCombo.from_tree(b)
    assert combo == TreeCombo.from_tree(a, 2)
    assert not (combo - TreeCombo.from_tree(b, 2))


def test_tree_combo_str():
    c = TreeCombo.from_tree(unit_tree(), 2) - TreeCombo.from_tree(linear_tree(1))
    assert str(c) == "2*b() + -b(1:b())"
