import pytest

from rainbowdom import (
    DominatingCouple,
    HTooSmallError,
    NotDisjointError,
    NotDominatingCoupleError,
    couple_labeling,
    gen_cycle,
    gen_path,
    gen_star,
    is_dominating_couple,
    is_dominating_set,
    is_k_rainbow_dominating,
    is_total_dominating_set,
    lexicographic,
    min_couple_cost,
)

from conftest import brute_is_couple, brute_min_couple_cost


class TestDominatingCouple:
    def test_cost(self):
        c = DominatingCouple(frozenset({1, 2}), frozenset({5}))
        assert c.cost(2, 3) == 7
        assert c.cost(1, 1) == 3

    def test_rejects_overlap(self):
        with pytest.raises(NotDisjointError):
            DominatingCouple(frozenset({1}), frozenset({1, 2}))


class TestIsDominatingCouple:
    def test_agrees_with_oracle(self, corpus5):
        import itertools
        for g in corpus5:
            if g.n > 4:
                continue
            verts = range(g.n)
            for na in range(g.n + 1):
                for a in itertools.combinations(verts, na):
                    rest = [v for v in verts if v not in a]
                    for nb in range(len(rest) + 1):
                        for b in itertools.combinations(rest, nb):
                            assert is_dominating_couple(g, frozenset(a), frozenset(b)) \
                                == brute_is_couple(g, a, b)

    def test_degenerate_cases(self):
        g = gen_path(4)
        # (A, empty) iff A total dominating; (empty, B) iff B dominating
        assert is_dominating_couple(g, frozenset({1, 2}), frozenset())
        assert is_total_dominating_set(g, {1, 2})
        assert not is_dominating_couple(g, frozenset({1, 3}), frozenset())
        assert not is_total_dominating_set(g, {1, 3})
        assert is_dominating_couple(g, frozenset(), frozenset({1, 3}))
        assert is_dominating_set(g, {1, 3})

    def test_whole_vertex_set_as_b(self):
        g = gen_path(3)
        assert is_dominating_couple(g, frozenset(), frozenset(range(3)))

    def test_range_and_overlap_errors(self):
        g = gen_path(3)
        with pytest.raises(ValueError):
            is_dominating_couple(g, frozenset({5}), frozenset())
        with pytest.raises(NotDisjointError):
            is_dominating_couple(g, frozenset({0}), frozenset({0}))


class TestMinCoupleCost:
    def test_agrees_with_oracle(self, corpus5):
        for g in corpus5:
            for ca, cb in [(2, 3), (1, 1), (1, 2)]:
                value, couple = min_couple_cost(g, ca, cb)
                assert value == brute_min_couple_cost(g, ca, cb)
                assert is_dominating_couple(g, couple.a, couple.b)
                assert couple.cost(ca, cb) == value

    def test_frozen_optima(self):
        value, couple = min_couple_cost(gen_path(7), 2, 3)
        assert value == 7
        assert (couple.a, couple.b) == (frozenset({4, 5}), frozenset({1}))
        value, couple = min_couple_cost(gen_path(4), 2, 3)
        assert value == 4
        assert (couple.a, couple.b) == (frozenset({1, 2}), frozenset())
        value, couple = min_couple_cost(gen_path(2), 2, 3)
        assert value == 3
        assert (couple.a, couple.b) == (frozenset(), frozenset({0}))

    def test_isolated_vertices_allowed(self):
        # K_1 has no total dominating set but (empty, {0}) still works
        g = gen_path(1)
        value, couple = min_couple_cost(g, 2, 3)
        assert value == 3
        assert couple == DominatingCouple(frozenset(), frozenset({0}))

    def test_bad_costs(self):
        with pytest.raises(ValueError):
            min_couple_cost(gen_path(3), 0, 3)


class TestCoupleLabeling:
    def test_weight_and_validity(self):
        # costs (2, 3) model a second factor with 2-rainbow number 3
        from rainbowdom import gen_double_c4
        g, h = gen_path(7), gen_double_c4()
        value, couple = min_couple_cost(g, 2, 3)
        f = couple_labeling(g, h, 2, couple)
        prod, _ = lexicographic(g, h)
        assert is_k_rainbow_dominating(prod, f)
        assert f.weight == 2 * len(couple.a) + 3 * len(couple.b) == 7

    def test_pure_b_couple(self):
        g, h = gen_path(2), gen_path(4)
        f = couple_labeling(g, h, 2, DominatingCouple(frozenset(), frozenset({0})))
        prod, _ = lexicographic(g, h)
        assert is_k_rainbow_dominating(prod, f)
        assert f.weight == 3  # 2-rainbow number of P_4

    def test_pure_a_couple(self):
        g, h = gen_path(4), gen_path(5)
        f = couple_labeling(g, h, 2, DominatingCouple(frozenset({1, 2}), frozenset()))
        prod, _ = lexicographic(g, h)
        assert is_k_rainbow_dominating(prod, f)
        assert f.weight == 4

    def test_k3(self):
        g, h = gen_path(4), gen_star(4)
        value, couple = min_couple_cost(g, 3, 4)
        f = couple_labeling(g, h, 3, couple)
        prod, _ = lexicographic(g, h)
        assert is_k_rainbow_dominating(prod, f)

    def test_h_too_small(self):
        with pytest.raises(HTooSmallError):
            couple_labeling(gen_path(3), gen_path(2), 3,
                            DominatingCouple(frozenset({1}), frozenset()))

    def test_invalid_couple_rejected(self):
        g, h = gen_path(4), gen_cycle(4)
        with pytest.raises(NotDominatingCoupleError):
            couple_labeling(g, h, 2, DominatingCouple(frozenset({1}), frozenset()))

    def test_b_layer_copy_uses_every_color(self):
        # the copied labeling inside a B-layer must carry all k colors, or
        # the empty layers above non-B vertices would go unserved
        g = gen_path(2)
        h = gen_cycle(4)
        f = couple_labeling(g, h, 2, DominatingCouple(frozenset(), frozenset({0})))
        used = 0
        for m in f.masks:
            used |= m
        assert used == 3
        prod, _ = lexicographic(g, h)
        assert is_k_rainbow_dominating(prod, f)
