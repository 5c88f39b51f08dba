import json
import random

import pytest

from hemispaces.enumeration import enumerate_hemispaces
from hemispaces.faces import TYPE_I, TYPE_II, classify, face_catalog, representative, sample_face_point, validate_hyperplane
from hemispaces.hemispace import (
    AssemblyError,
    Hemispace,
    PartitionError,
    TypeISplit,
    all_index_sets,
    assemble,
    check_hemispace,
    complement,
    contains,
    convexity_check,
    empty_set,
    face_sampler,
    signature,
    validate_partition,
    whole_space,
)
from hemispaces.maxplus import BOTTOM, point
from hemispaces.verify import degenerate_hyperplane, degenerate_pair, nonnegative_half_line

QUAD = validate_hyperplane(2, {1, 2})
FREE = 3


def fs(*sets):
    return [frozenset(s) for s in sets]


def rest_of(H, owned):
    return all_index_sets(H) - frozenset(frozenset(s) for s in owned)


def test_free_term_side_partitions():
    way1 = validate_partition(QUAD, fs({3}), rest_of(QUAD, fs({3})))
    assert len(way1.second) == 6
    way2 = validate_partition(QUAD, fs({3}, {1, 3}), rest_of(QUAD, fs({3}, {1, 3})))
    assert frozenset({1}) in way2.second


def test_partition_errors():
    with pytest.raises(PartitionError) as e:
        validate_partition(QUAD, fs({1}, {2}), rest_of(QUAD, fs({1}, {2})))
    assert e.value.witness == (frozenset({1}), frozenset({2}))
    with pytest.raises(PartitionError):   # singletons of I split
        validate_partition(QUAD, fs({1}, {1, 3}, {3}), rest_of(QUAD, fs({1}, {1, 3}, {3})))
    with pytest.raises(PartitionError):   # overlap
        validate_partition(QUAD, fs({3}), all_index_sets(QUAD))
    with pytest.raises(PartitionError):   # not a cover
        validate_partition(QUAD, fs({3}), fs({1}))


def test_assemble_way_one_is_negative_quadrant():
    part = validate_partition(QUAD, fs({3}), rest_of(QUAD, fs({3})))
    first, second = assemble(QUAD, part)
    assert contains(first, point(-1, "-inf")) and not contains(first, point(0, -1))
    assert second.owns == part.second
    flipped = assemble(QUAD, part, side=1)
    assert flipped.first == second and flipped.second == first
    with pytest.raises(AssemblyError):
        assemble(QUAD, part, 0, TypeISplit.ALL_TO_FIRST)


def test_contains_way_two():
    part = validate_partition(QUAD, fs({3}, {1, 3}), rest_of(QUAD, fs({3}, {1, 3})))
    hm = Hemispace(part, 0)
    assert contains(hm, point(0, -1))
    assert not contains(hm, point(1, 0))


def test_degenerate_example():
    H = degenerate_hyperplane()
    first, second = degenerate_pair(nonnegative_half_line(), True)
    assert contains(first, point("-inf", "-inf", "-inf", 7))
    assert not contains(first, point("-inf", "-inf", "-inf", -1))
    assert contains(second, point("-inf", "-inf", "-inf", -1))
    assert contains(first, point(2, 1, "-inf", 0)) and contains(first, point(0, 0, 4, 0))
    assert contains(second, point(1, 1, "-inf", 0))
    with pytest.raises(AssemblyError):
        assemble(H, first.partition, 0, TypeISplit.ALL_TO_FIRST)


def test_complement_membership():
    rng = random.Random(1)
    hms = list(enumerate_hemispaces(2)) + list(degenerate_pair(nonnegative_half_line(), False))
    for hm in hms:
        c = complement(hm)
        assert complement(c) == hm
        for _ in range(50):
            p = tuple(rng.choice([BOTTOM, -2, -1, 0, 1, 2]) for _ in range(hm.hyperplane.n))
            assert contains(hm, p) != contains(c, p)


def test_whole_and_empty():
    assert complement(whole_space(QUAD)) == empty_set(QUAD)
    assert set(signature(whole_space(QUAD))) == {"1"}
    assert set(signature(empty_set(QUAD))) == {"0"}


def test_signature_example():
    hm = nonnegative_half_line()
    assert signature(hm) == "000111"
    assert signature(complement(hm)) == "111000"
    H = hm.hyperplane
    owns_free_side = Hemispace(validate_partition(H, fs({2}, {1, 2}), fs({1})), 0)
    assert signature(owns_free_side) == "111100"


def test_signatures_complementary():
    for hm in enumerate_hemispaces(2):
        a, b = signature(hm), signature(complement(hm))
        assert all(x != y for x, y in zip(a, b))


def test_json_round_trip():
    for hm in list(enumerate_hemispaces(2)):
        again = Hemispace.from_json(json.loads(hm.dumps()))
        assert again.dumps() == hm.dumps()
        assert signature(again) == signature(hm)
    for hm in degenerate_pair(nonnegative_half_line(), True):
        assert Hemispace.from_json(hm.dumps()).dumps() == hm.dumps()
    with pytest.raises(AssemblyError):
        Hemispace.from_json({"hyperplane": QUAD.to_json(), "owns": [["free"]], "typeII": 1})


def test_convexity_passes_for_n2():
    for hm in enumerate_hemispaces(2):
        rep = check_hemispace(hm, trials=200, seed=4)
        assert rep.passed, rep.to_json()


def test_convexity_catches_missing_boundary_face():
    def member(p):
        return classify(QUAD, p) in (face_catalog(QUAD)[0], face_catalog(QUAD)[1])

    x, y = representative(QUAD, face_catalog(QUAD)[0]), representative(QUAD, face_catalog(QUAD)[1])
    rep = convexity_check(member, 2, lambda rng: x if rng.random() < 0.5 else y, trials=20)
    assert not rep.passed
    ce = rep.counterexample
    assert {ce["x"], ce["y"]} <= {"1,0", "0,1"} and ce["x"] != ce["y"]
    assert ce["point"] == "1,1"


def test_convexity_check_report_is_deterministic():
    hm = next(iter(enumerate_hemispaces(2)))
    a = check_hemispace(hm, trials=50, seed=9).to_json()
    b = check_hemispace(hm, trials=50, seed=9).to_json()
    assert a == b and a["pairs"] == 50
    with pytest.raises(ValueError):
        check_hemispace(hm, trials=0)


def test_faces_lie_wholly_on_one_side():
    rng = random.Random(2)
    hms = list(enumerate_hemispaces(3))[::7] + list(degenerate_pair(TypeISplit.ALL_TO_SECOND, True))
    for hm in hms:
        H = hm.hyperplane
        for f in face_catalog(H):
            if f is TYPE_I:
                continue
            verdicts = {contains(hm, sample_face_point(H, f, rng)) for _ in range(15)}
            assert len(verdicts) == 1


@pytest.mark.parametrize("split", [TypeISplit.ALL_TO_FIRST, TypeISplit.ALL_TO_SECOND, "half-line"])
@pytest.mark.parametrize("type_ii", [True, False])
def test_degenerate_members_convex(split, type_ii):
    t1 = nonnegative_half_line() if split == "half-line" else split
    for hm in degenerate_pair(t1, type_ii):
        assert check_hemispace(hm, trials=300, seed=1).passed


def test_sampler_mixes_faces_and_grid():
    sample = face_sampler(QUAD)
    rng = random.Random(0)
    seen = {classify(QUAD, sample(rng)) for _ in range(300)}
    assert seen == set(face_catalog(QUAD))
    assert TYPE_II in face_catalog(degenerate_hyperplane())
