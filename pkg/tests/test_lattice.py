"""Concept enumeration against brute force, labels, survivors, ordering."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import fcarel
from fcarel import ConceptCapacityError, enumerate_concepts, make_scale

from conftest import brute_force_concepts, random_context
from test_context import contexts


def as_pairs(concept_set):
    return {(c.extent, c.intent) for c in concept_set}


class TestEnumeration:
    def test_water4_has_six_concepts(self, water4):
        assert len(enumerate_concepts(water4)) == 6

    def test_contranominal_is_boolean_lattice(self):
        assert len(enumerate_concepts(make_scale("contranominal", 3))) == 8

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_brute_force_8x8(self, seed):
        ctx = random_context(8, 8, 0.25 + 0.06 * (seed % 5), 200 + seed)
        assert as_pairs(enumerate_concepts(ctx)) == brute_force_concepts(ctx)

    @given(contexts())
    def test_matches_brute_force_property(self, ctx):
        assert as_pairs(enumerate_concepts(ctx)) == brute_force_concepts(ctx)

    def test_concepts_are_closed_pairs(self, water6):
        for c in enumerate_concepts(water6):
            assert water6.derive("objects", c.extent) == c.intent
            assert water6.derive("attributes", c.intent) == c.extent

    def test_no_duplicates(self, water6):
        concepts = enumerate_concepts(water6)
        assert len(as_pairs(concepts)) == len(concepts)

    def test_empty_context(self):
        ctx = fcarel.FormalContext([], [], [])
        concepts = enumerate_concepts(ctx)
        assert len(concepts) == 1
        assert concepts.extent_sum == 0

    def test_objects_but_no_attributes(self):
        ctx = fcarel.FormalContext(["g0", "g1"], [], [[], []])
        concepts = enumerate_concepts(ctx)
        assert len(concepts) == 1
        assert concepts.top.extent == frozenset({0, 1})

    def test_canonical_order_is_big_endian_bitstring(self, water6):
        concepts = enumerate_concepts(water6)
        keys = [
            "".join("1" if g in c.extent else "0" for g in range(water6.n_objects))
            for c in concepts
        ]
        assert keys == sorted(keys)

    def test_top_and_bottom_present(self, water4):
        concepts = enumerate_concepts(water4)
        assert concepts.top.extent == frozenset(range(4))
        assert concepts.bottom.extent == frozenset()
        assert concepts.bottom.intent == frozenset(range(4))

    def test_capacity_guard(self, water4):
        with pytest.raises(ConceptCapacityError) as err:
            enumerate_concepts(water4, cap=3)
        assert err.value.count == 3

    def test_capacity_env_override(self, water4, monkeypatch):
        monkeypatch.setenv("FCAREL_CONCEPT_CAP", "2")
        with pytest.raises(ConceptCapacityError):
            enumerate_concepts(water4)
        monkeypatch.setenv("FCAREL_CONCEPT_CAP", "100")
        assert len(enumerate_concepts(water4)) == 6


class TestLabelsAndSums:
    def test_water4_labels(self, water4):
        concepts = enumerate_concepts(water4)
        named = {water4.objects[g]: n for g, n in fcarel.extent_labels(concepts).items()}
        assert named == {"Bream": 2, "Frog": 4, "Dog": 2, "Spike-weed": 3}

    def test_nominal_scale_labels_all_two(self):
        concepts = enumerate_concepts(make_scale("nominal", 5))
        assert set(concepts.labels) == {2}

    def test_water4_extent_sum(self, water4):
        assert enumerate_concepts(water4).extent_sum == 11

    def test_water6_extent_sum(self, water6):
        assert enumerate_concepts(water6).extent_sum == 33

    @given(contexts())
    def test_label_sum_is_extent_sum(self, ctx):
        concepts = enumerate_concepts(ctx)
        assert sum(concepts.labels) == concepts.extent_sum
        assert fcarel.extent_sum(concepts) == concepts.extent_sum


class TestSurvivors:
    def test_water4_remove_b(self, water4):
        concepts = enumerate_concepts(water4)
        survivors = concepts.survivors([water4.attribute_index("b")])
        assert len(survivors) == 4
        assert survivors.extent_sum == 7

    def test_remove_nothing_keeps_all(self, water4):
        concepts = enumerate_concepts(water4)
        assert len(concepts.survivors([])) == 6

    def test_water4_remove_b_and_c(self, water4):
        concepts = enumerate_concepts(water4)
        survivors = concepts.survivors(water4.attribute_indices("bc"))
        assert survivors.extent_sum == 5
        extents = {c.extent for c in survivors}
        assert frozenset(range(4)) in extents  # top survives
        assert frozenset({water4.object_index("Spike-weed")}) in extents

    def test_functional_form_checks_ownership(self, water4, water6):
        concepts = enumerate_concepts(water4)
        assert len(fcarel.surviving_concepts(concepts, water4, [0])) == 6
        with pytest.raises(ValueError):
            fcarel.surviving_concepts(concepts, water6, [0])

    def test_top_always_survives(self, water6):
        concepts = enumerate_concepts(water6)
        full = list(range(water6.n_attributes))
        assert concepts.survivors(full).top.extent == frozenset(range(6))

    @given(contexts(max_objects=6, max_attributes=6), st.data())
    def test_antitone_in_removed_set(self, ctx, data):
        universe = list(range(ctx.n_attributes))
        small = data.draw(
            st.sets(st.sampled_from(universe)) if universe else st.just(set())
        )
        big = data.draw(
            st.sets(st.sampled_from(universe)).map(lambda s: s | small)
            if universe
            else st.just(set()),
        )
        concepts = enumerate_concepts(ctx)
        assert as_pairs(concepts.survivors(big)) <= as_pairs(concepts.survivors(small))

    @given(contexts(max_objects=6, max_attributes=6), st.data())
    def test_union_survivors_inside_intersection(self, ctx, data):
        universe = list(range(ctx.n_attributes))
        draw_set = (
            st.sets(st.sampled_from(universe)) if universe else st.just(set())
        )
        s = data.draw(draw_set)
        t = data.draw(draw_set)
        concepts = enumerate_concepts(ctx)
        assert as_pairs(concepts.survivors(s | t)) <= as_pairs(
            concepts.survivors(s)
        ) & as_pairs(concepts.survivors(t))

    def test_intersection_can_strictly_exceed_union_survivors(self):
        # a concept can survive two removals separately yet die under their
        # union: the hub's intent {s,t,u} re-derives {hub} from {t,u} and
        # from {s,u}, but u alone also covers its private witness object
        ctx = fcarel.FormalContext(
            ["hub", "only_s", "only_t", "only_u"],
            ["s", "t", "u"],
            ["xxx", "x..", ".x.", "..x"],
        )
        concepts = enumerate_concepts(ctx)
        both = as_pairs(concepts.survivors([0])) & as_pairs(concepts.survivors([1]))
        union = as_pairs(concepts.survivors([0, 1]))
        assert union < both
        hub_concept = (frozenset({0}), frozenset({0, 1, 2}))
        assert hub_concept in both - union

    @given(contexts(max_objects=6, max_attributes=6), st.data())
    def test_kept_subcontext_never_gains_concepts(self, ctx, data):
        universe = list(range(ctx.n_attributes))
        keep = data.draw(
            st.sets(st.sampled_from(universe)) if universe else st.just(set())
        )
        sub = ctx.subcontext_keep(keep)
        assert len(enumerate_concepts(sub)) <= len(enumerate_concepts(ctx))


def test_export_format(water4):
    concepts = enumerate_concepts(water4)
    lines = concepts.to_text().splitlines()
    assert len(lines) == 6
    # bottom first: empty extent, full intent
    assert lines[0] == "\t0 1 2 3"
    # top last: all objects, attribute a only
    assert lines[-1] == "0 1 2 3\t0"
    for line in lines:
        assert "\t" in line
