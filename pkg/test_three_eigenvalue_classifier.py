#!/usr/bin/env python3
"""
Test script for structural family recognition and cardinality classification
"""

import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from complementarity_spectrum import comp_spectrum
from compspec_cli import digraph_from_index
from compspec_errors import IsCycle, NotStronglyConnected, TooLarge
from digraph_core import (Digraph, from_arc_list, is_acyclic, is_cycle, is_strongly_connected,
                          permute_vertices, scc_decompose)
from digraph_families import (INFINITY_FAMILY, THETA_FAMILY, gen_complete, gen_cycle,
                              gen_infinity, gen_path, gen_theta, gen_type2, gen_type4, generate)
from digraph_strategies import (PERTURBATION_MAX_N, digraphs, family_id, family_members)
from perron_spectra import PerronCertificate
from three_eigenvalue_classifier import (AMBIGUOUS, AT_LEAST_FOUR, CYCLE, ISOLATED_VERTEX,
                                         OTHER, ThreeEigenvalueClassifier, classify_digraph,
                                         find_infinity_or_theta, has_infinity_subdigraph,
                                         has_three_ce_structural, identify_family)

MEMBERS = family_members(8)
SMALL_MEMBERS = family_members(PERTURBATION_MAX_N)


def disjoint_union(*parts: Digraph) -> Digraph:
    arcs = []
    offset = 0
    for part in parts:
        arcs.extend((u + offset, v + offset) for u, v in part.arcs)
        offset += part.n
    return from_arc_list(offset, arcs)


def assert_descriptor_reproduces(D: Digraph, descriptor) -> None:
    G = generate(descriptor.tag, descriptor.params)
    relabel = descriptor.vertex_relabeling
    assert sorted(relabel) == list(range(D.n))
    assert {(relabel[u], relabel[v]) for u, v in G.arcs} == set(D.arcs)


def test_theta_example():
    result = classify_digraph(gen_theta(0, 2, 1))
    assert result.cardinality == 3
    descriptor = result.scc_descriptors[0]
    assert (descriptor.tag, descriptor.params) == ('theta', (0, 2, 1))
    assert descriptor.family_group == 'theta'


def test_acyclic_is_one():
    result = classify_digraph(gen_path(5))
    assert result.cardinality == 1
    assert result.exact_cardinality == 1
    assert all(d.tag == ISOLATED_VERTEX for d in result.scc_descriptors)


def test_cycle_is_two():
    result = classify_digraph(gen_cycle(6))
    assert result.cardinality == 2
    descriptor = result.scc_descriptors[0]
    assert (descriptor.tag, descriptor.params) == (CYCLE, (6,))
    assert descriptor.family_group is None


def test_complete_digraph_resolved_by_oracle():
    result = classify_digraph(gen_complete(4))
    assert result.cardinality == AT_LEAST_FOUR
    assert result.exact_cardinality == 4
    assert result.scc_descriptors[0].tag == OTHER


def test_large_other_stays_unresolved_without_oracle():
    result = classify_digraph(gen_complete(21))
    assert result.cardinality == AT_LEAST_FOUR
    assert result.exact_cardinality is None


def test_oracle_on_large_digraph_raises():
    assert classify_digraph(gen_cycle(21)).cardinality == 2
    with pytest.raises(TooLarge):
        classify_digraph(gen_cycle(21), oracle=True)


def test_generated_type2_round_trips_with_identity():
    descriptor = identify_family(gen_type2(4, 3))
    assert (descriptor.tag, descriptor.params) == ('type2', (4, 3))
    assert descriptor.vertex_relabeling == tuple(range(6))


def test_tiled_type4():
    D = from_arc_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0), (3, 2)])
    descriptor = identify_family(D)
    assert descriptor.tag == 'type4'
    assert descriptor.params == (4, ((2, 1), (4, 3)))
    result = classify_digraph(D, oracle=True)
    assert result.cardinality == 3
    assert result.agreement is True


@pytest.mark.parametrize("member", MEMBERS, ids=family_id)
def test_family_members_round_trip(member):
    family, params, D = member
    descriptor = identify_family(D)
    assert descriptor.tag == family
    assert_descriptor_reproduces(D, descriptor)
    if family != 'type4':
        assert descriptor.params == params
    assert has_three_ce_structural(D)
    assert has_infinity_subdigraph(D) == (family in INFINITY_FAMILY)
    assert descriptor.family_group == ('infinity' if family in INFINITY_FAMILY else 'theta')


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_identification_is_relabeling_invariant(data):
    family, params, D = data.draw(st.sampled_from(MEMBERS))
    perm = data.draw(st.permutations(list(range(D.n))))
    P = permute_vertices(D, perm)
    descriptor = identify_family(P)
    assert descriptor.tag == family
    assert_descriptor_reproduces(P, descriptor)


def test_structural_predicate_edge_cases():
    assert not has_three_ce_structural(Digraph(1, frozenset()))
    assert not has_three_ce_structural(gen_cycle(5))
    assert not has_three_ce_structural(gen_complete(4))
    with pytest.raises(NotStronglyConnected):
        has_three_ce_structural(gen_path(3))


def test_single_vertex_descriptor():
    descriptor = identify_family(Digraph(1, frozenset()))
    assert descriptor.tag == ISOLATED_VERTEX
    assert descriptor.to_dict()['vertex_relabeling'] == [1]


def validate_witness(D: Digraph, witness) -> None:
    assert set(witness.arcs()) <= D.arcs
    if witness.kind == 'infinity':
        (hub,) = witness.hubs
        first, second = witness.paths
        for path in (first, second):
            assert path[0] == path[-1] == hub
            assert len(set(path[1:-1])) == len(path) - 2
            assert hub not in path[1:-1]
        assert not set(first[1:-1]) & set(second[1:-1])
    else:
        assert witness.kind == 'theta'
        v, w = witness.hubs
        assert v != w
        out_a, out_b, back = witness.paths
        assert (out_a[0], out_a[-1]) == (v, w)
        assert (out_b[0], out_b[-1]) == (v, w)
        assert (back[0], back[-1]) == (w, v)
        interiors = [set(p[1:-1]) for p in witness.paths]
        assert sum(len(i) for i in interiors) == len(set().union(*interiors))
        assert not set().union(*interiors) & {v, w}
        assert out_a != out_b


@pytest.mark.parametrize("member", MEMBERS, ids=family_id)
def test_find_infinity_or_theta_on_members(member):
    family, _, D = member
    witness = find_infinity_or_theta(D)
    validate_witness(D, witness)


@settings(max_examples=150, deadline=None)
@given(D=digraphs(min_n=2, max_n=7))
def test_find_infinity_or_theta_on_random_digraphs(D):
    assume(is_strongly_connected(D) and not is_cycle(D))
    validate_witness(D, find_infinity_or_theta(D))


def test_find_infinity_or_theta_rejects_cycle():
    with pytest.raises(IsCycle):
        find_infinity_or_theta(gen_cycle(4))
    with pytest.raises(NotStronglyConnected):
        find_infinity_or_theta(gen_path(4))


def test_components_with_equal_radius_give_three():
    D = disjoint_union(gen_infinity(2, 2), gen_infinity(2, 2), gen_cycle(3))
    result = classify_digraph(D, oracle=True)
    assert result.cardinality == 3
    assert result.exact_cardinality == 3
    assert result.agreement is True
    assert [entry.source for entry in result.spectrum_sketch] == \
        [ISOLATED_VERTEX, CYCLE, 'infinity', 'infinity']


def test_sketch_of_single_family_member_lists_one():
    result = classify_digraph(gen_infinity(3, 5))
    values = [entry.value for entry in result.spectrum_sketch]
    assert len(values) == result.cardinality == 3
    assert values[:2] == [0.0, 1.0]
    assert [entry.source for entry in result.spectrum_sketch] == \
        [ISOLATED_VERTEX, CYCLE, 'infinity']


def test_sketch_of_other_component_lists_one():
    result = classify_digraph(gen_complete(4))
    assert [entry.value for entry in result.spectrum_sketch][:2] == [0.0, 1.0]
    assert result.spectrum_sketch[2].source == OTHER


def test_components_with_distinct_radii_give_at_least_four():
    D = disjoint_union(gen_infinity(2, 2), gen_infinity(2, 3))
    result = classify_digraph(D, oracle=True)
    assert result.cardinality == AT_LEAST_FOUR
    assert result.exact_cardinality == 4
    assert result.agreement is True


def test_arc_between_components_keeps_verdict():
    D = disjoint_union(gen_theta(0, 1, 0), gen_infinity(2, 2))
    joined = from_arc_list(D.n, list(D.arcs) + [(0, 3)])
    result = classify_digraph(joined, oracle=True)
    assert len(result.components) == 2
    # theta(0,1,0) has radius 1.3247..., infinity(2,2) has sqrt(2)
    assert result.cardinality == AT_LEAST_FOUR
    assert result.exact_cardinality == 4
    assert result.agreement is True


def test_unresolved_radii_are_ambiguous():
    classifier = ThreeEigenvalueClassifier()
    estimates = itertools.cycle([1.5, 1.5 + 1e-6])

    def fake_radius(D, tol=None):
        rho = next(estimates)
        return PerronCertificate(rho, 1.4, 1.6, (1.0,), 1)

    classifier.radius = fake_radius
    first = (gen_infinity(2, 2), fake_radius(None))
    second = (gen_infinity(2, 2), fake_radius(None))
    assert classifier.same_radius(first, second) is None

    D = disjoint_union(gen_infinity(2, 2), gen_infinity(2, 3))
    result = classifier.classify_digraph(D, resolve=False)
    assert result.cardinality == AMBIGUOUS
    assert result.exact_cardinality is None


def test_classification_document():
    document = classify_digraph(gen_infinity(3, 5), oracle=True).to_dict()
    assert document['cardinality'] == 3
    component = document['components'][0]
    assert component['vertices'] == list(range(1, 8))
    assert component['descriptor']['tag'] == 'infinity'
    assert component['descriptor']['params'] == [3, 5]
    assert document['oracle']['cardinality'] == 3
    assert document['oracle']['agreement'] is True


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_oracle_agreement(n):
    classifier = ThreeEigenvalueClassifier()
    for index in range(1 << (n * (n - 1))):
        D = digraph_from_index(n, index)
        result = classifier.classify_digraph(D, oracle=True)
        count = len(result.oracle_spectrum)
        assert result.agreement is True, (n, D.sorted_arcs())
        assert result.exact_cardinality == count
        assert (count == 1) == is_acyclic(D)
        tags = [d.tag for d in result.scc_descriptors]
        simple = not is_acyclic(D) and all(t in (ISOLATED_VERTEX, CYCLE) for t in tags)
        assert (count == 2) == simple


def single_arc_additions(D: Digraph):
    for u in range(D.n):
        for v in range(D.n):
            if u != v and (u, v) not in D.arcs:
                yield Digraph(D.n, D.arcs | {(u, v)})


@pytest.mark.parametrize("member", SMALL_MEMBERS, ids=family_id)
def test_single_arc_perturbation(member):
    _, _, D = member
    classifier = ThreeEigenvalueClassifier()
    for perturbed in single_arc_additions(D):
        result = classifier.classify_digraph(perturbed, oracle=True)
        assert result.agreement is True, perturbed.sorted_arcs()
        descriptor = result.scc_descriptors[0]
        if descriptor.is_seven_family:
            assert len(result.oracle_spectrum) == 3
        else:
            assert len(result.oracle_spectrum) >= 4


def test_theta_family_has_no_infinity_subdigraph():
    for family, _, D in MEMBERS:
        if family in THETA_FAMILY:
            assert not has_infinity_subdigraph(D)


def test_type4_canonical_params_are_lexicographically_least():
    D = gen_type4(10, [(4, 2), (8, 5)])
    descriptor = identify_family(D)
    assert descriptor.tag == 'type4'
    rotated = permute_vertices(D, [(v + 3) % 10 for v in range(10)])
    assert identify_family(rotated).params == descriptor.params
    assert len(comp_spectrum(D)) == 3


def test_scc_descriptors_follow_component_order():
    D = disjoint_union(gen_path(2), gen_cycle(3))
    result = classify_digraph(D)
    assert result.components == scc_decompose(D).components
    assert [d.tag for d in result.scc_descriptors].count(CYCLE) == 1


if __name__ == "__main__":
    pytest.main([__file__])
