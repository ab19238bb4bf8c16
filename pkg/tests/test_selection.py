"""Selection strategies: exhaustive, greedy, entropy-guided, random."""

from fractions import Fraction

import pytest

import fcarel
from fcarel import (
    DegenerateEntropyError,
    FormalContext,
    SelectionSizeError,
    era_score,
    select_era,
    select_exhaustive,
    select_imrs,
    select_random,
)

from conftest import random_context


class TestExhaustive:
    def test_water4_best_pair(self, water4):
        result = select_exhaustive(water4, 2)
        assert result.chosen_names == ("b", "c")
        assert result.relevance.value == Fraction(6, 11)
        assert result.evaluations == 6  # C(4, 2)

    def test_water4_full_set(self, water4):
        result = select_exhaustive(water4, 4)
        assert set(result.chosen_names) == {"a", "b", "c", "d"}
        # only the top concept survives: r = 1 - |G| / extent mass
        assert result.relevance.value == Fraction(7, 11)

    def test_greedy_trap_pair(self, greedy_trap):
        result = select_exhaustive(greedy_trap, 2)
        assert result.chosen_names == ("a", "c")
        assert result.relevance.value == Fraction(7, 15)

    def test_guard(self, water6):
        with pytest.raises(SelectionSizeError):
            select_exhaustive(water6, 4, guard=10)

    def test_size_bounds(self, water4):
        with pytest.raises(SelectionSizeError):
            select_exhaustive(water4, 0)
        with pytest.raises(SelectionSizeError):
            select_exhaustive(water4, 5)

    @pytest.mark.parametrize("seed", range(8))
    def test_dominates_greedy(self, seed):
        ctx = random_context(6, 6, 0.45, 300 + seed)
        clarified, _ = ctx.clarify()
        for n in range(1, clarified.n_attributes + 1):
            best = select_exhaustive(clarified, n).relevance.value
            greedy = select_imrs(clarified, n).relevance.value
            assert best >= greedy


class TestImrs:
    def test_water4_single(self, water4):
        result = select_imrs(water4, 1)
        assert result.chosen_names == ("b",)
        assert result.relevance.value == Fraction(4, 11)

    def test_water4_pair_and_trace(self, water4):
        result = select_imrs(water4, 2)
        assert result.chosen_names == ("b", "c")
        assert result.relevance.value == Fraction(6, 11)
        assert result.evaluations == 2 * 4 - 1
        assert result.step_scores == (Fraction(4, 11), Fraction(6, 11))
        # the runner-up extensions at step 2
        assert fcarel.relative_relevance(
            water4, water4.attribute_indices("bd")
        ).value == Fraction(5, 11)
        assert fcarel.relative_relevance(
            water4, water4.attribute_indices("ab")
        ).value == Fraction(4, 11)

    def test_greedy_trap_falls_short(self, greedy_trap):
        greedy = select_imrs(greedy_trap, 2)
        best = select_exhaustive(greedy_trap, 2)
        assert "b" in greedy.chosen_names
        assert greedy.relevance.value < best.relevance.value

    @pytest.mark.parametrize("n_attr", [3, 5, 8])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_evaluation_count_formula(self, n_attr, n):
        ctx = random_context(8, n_attr, 0.5, 900 + n_attr)
        clarified, _ = ctx.clarify()
        m = clarified.n_attributes
        if n > m:
            return
        result = select_imrs(clarified, n)
        assert result.evaluations == n * m - n * (n - 1) // 2

    def test_ties_break_to_smallest_index(self, greedy_trap):
        # all pair extensions of {b} score 2/5; index order picks a
        result = select_imrs(greedy_trap, 2)
        assert result.chosen_names == ("b", "a")


class TestEraScore:
    def test_water4_full_column_scores_zero(self, water4):
        assert era_score(water4, [water4.attribute_index("a")], "oe") == 0.0

    def test_water4_c_object_entropy(self, water4):
        score = era_score(water4, [water4.attribute_index("c")], "oe")
        assert score == pytest.approx(4 / 27, abs=1e-12)

    def test_water4_full_set_is_one(self, water4):
        assert era_score(water4, range(4), "oe") == pytest.approx(1.0)
        assert era_score(water4, range(4), "se") == pytest.approx(1.0)

    def test_base_can_be_precomputed(self, water4):
        concepts = fcarel.enumerate_concepts(water4)
        base = (len(concepts), fcarel.object_entropy(water4))
        c = water4.attribute_index("c")
        assert era_score(water4, [c], "oe", base=base) == era_score(water4, [c], "oe")

    def test_degenerate_base_entropy(self):
        ctx = FormalContext(["g0", "g1"], ["m0"], ["x", "x"])
        with pytest.raises(DegenerateEntropyError):
            era_score(ctx, [0], "oe")

    def test_empty_attribute_set_rejected(self, water4):
        with pytest.raises(ValueError):
            era_score(water4, [], "oe")


class TestSelectEra:
    def test_water4_maximize_picks_c(self, water4):
        result = select_era(water4, 1, kind="oe", objective="max")
        assert result.chosen_names == ("c",)
        assert result.step_scores[0] == pytest.approx(4 / 27)
        assert result.relevance.value == Fraction(3, 11)

    def test_water4_minimize_picks_the_useless_column(self, water4):
        result = select_era(water4, 1, kind="oe", objective="min")
        assert result.chosen_names == ("a",)
        assert result.relevance.value == 0

    def test_full_size_is_whole_set(self, water4):
        for kind in ("se", "oe"):
            result = select_era(water4, 4, kind=kind)
            assert set(result.chosen_names) == {"a", "b", "c", "d"}
            assert result.step_scores[-1] == pytest.approx(1.0)

    def test_reports_subcontext_concepts(self, water4):
        result = select_era(water4, 1, kind="oe")
        assert result.sub_concept_count == 2  # kept column c has two concepts

    def test_degenerate_entropy_aborts(self):
        ctx = FormalContext(["g0", "g1"], ["m0", "m1"], ["xx", "xx"])
        with pytest.raises(DegenerateEntropyError):
            select_era(ctx, 1)

    def test_bad_objective(self, water4):
        with pytest.raises(ValueError):
            select_era(water4, 1, objective="up")

    def test_evaluation_count_matches_greedy_scheme(self, water6):
        result = select_era(water6, 3, kind="oe")
        m = water6.n_attributes
        assert result.evaluations == 3 * m - 3

    def test_exhaustive_search_mode(self, water4):
        result = select_era(water4, 2, kind="oe", search="exhaustive")
        # {b,c} and {c,d} tie on the raw product (7/4); lex order wins
        assert result.chosen_names == ("b", "c")
        assert result.evaluations == 6
        assert result.relevance.value == Fraction(6, 11)

    def test_exhaustive_search_guarded(self, water6):
        with pytest.raises(SelectionSizeError):
            select_era(water6, 4, search="exhaustive", guard=10)

    def test_exhaustive_never_below_greedy_on_its_own_score(self, water4):
        for kind in ("se", "oe"):
            greedy = select_era(water4, 2, kind=kind)
            full = select_era(water4, 2, kind=kind, search="exhaustive")
            assert full.step_scores[-1] >= greedy.step_scores[-1] - 1e-12

    def test_bad_search_mode(self, water4):
        with pytest.raises(ValueError):
            select_era(water4, 1, search="beam")

    def test_never_beats_imrs_on_fixtures(self, water4, water6, greedy_trap):
        for ctx in (water4, water6, greedy_trap):
            for n in range(1, ctx.n_attributes + 1):
                imrs_value = select_imrs(ctx, n).relevance.value
                for kind in ("se", "oe"):
                    assert select_era(ctx, n, kind=kind).relevance.value <= imrs_value


class TestRandomBaseline:
    def test_deterministic(self, water4):
        a = select_random(water4, 2, trials=60, seed=42)
        b = select_random(water4, 2, trials=60, seed=42)
        assert a == b

    def test_other_seed_differs(self, water4):
        a = select_random(water4, 2, trials=60, seed=42)
        b = select_random(water4, 2, trials=60, seed=43)
        assert a.per_trial != b.per_trial

    def test_mean_within_subset_value_range(self, water4):
        baseline = select_random(water4, 2, trials=60, seed=42)
        assert 1 / 11 <= baseline.mean_relevance <= 6 / 11
        values = [float(rel.value) for _, rel in baseline.per_trial]
        assert min(values) <= baseline.mean_relevance <= max(values)

    def test_full_size_has_zero_spread(self, water4):
        baseline = select_random(water4, 4, trials=10, seed=1)
        assert baseline.std_relevance == 0.0
        assert baseline.mean_relevance == pytest.approx(7 / 11)

    def test_default_trials_is_ten_per_attribute(self, water6):
        baseline = select_random(water6, 2, seed=5)
        assert baseline.trials == 10 * water6.n_attributes

    def test_stats_recomputable_from_trials(self, water6):
        import numpy as np

        baseline = select_random(water6, 3, trials=40, seed=9)
        values = np.array([float(rel.value) for _, rel in baseline.per_trial])
        assert baseline.mean_relevance == pytest.approx(values.mean())
        assert baseline.std_relevance == pytest.approx(values.std())

    def test_size_bounds(self, water4):
        with pytest.raises(SelectionSizeError):
            select_random(water4, 0)
        with pytest.raises(SelectionSizeError):
            select_random(water4, 9)


class TestClarifiedSelection:
    def test_duplicate_columns_count_once(self):
        # m0 and m1 are identical; selection sees three attribute classes
        ctx = FormalContext(
            ["g0", "g1", "g2"],
            ["m0", "m1", "m2", "m3"],
            ["xx..", "xxx.", "...x"],
        )
        with pytest.raises(SelectionSizeError):
            select_imrs(ctx, 4)
        result = select_imrs(ctx, 3)
        assert set(result.chosen_names) <= {"m0", "m2", "m3"}

    def test_chosen_indices_refer_to_original_context(self, water4):
        result = select_imrs(water4, 2)
        assert [water4.attributes[i] for i in result.chosen] == list(
            result.chosen_names
        )
