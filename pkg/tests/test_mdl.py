import itertools
import math
import random

import pytest

from verbpatterns import (InvalidAssignmentError, all_idiom, candidate_patterns,
                          code_lengths_for_phrase, description_length,
                          pattern_distribution, phrase_distribution)
from verbpatterns.corpus import VerbPhrase
from verbpatterns.patterns import Assignment

import helpers

# hand evaluation of the code-length formulas on the eat fixture
DINNER_L = -math.log2(2 / 3)          # pattern mass of the meal group
DINNER_R = -math.log2(8 / 24)         # P(dinner|meal)
APPLE_R = -math.log2(20 / 90)         # P(apple|food)
EAT_OPTIMUM_LL = (-(10 / 45) * math.log2(10 / 45)
             - (30 / 45) * math.log2(30 / 45)
             - (5 / 45) * math.log2(5 / 45))
EAT_OPTIMUM_LR = ((5 / 45) * -math.log2(20 / 90)
             + (5 / 45) * -math.log2(10 / 90)
             + (30 / 45) * -math.log2(8 / 24))


def test_code_lengths_for_conceptualized_phrase(eat_optimum, eat_dist, eat_taxonomy):
    l_bits, r_bits = code_lengths_for_phrase(VerbPhrase("eat", "dinner"),
                                             eat_optimum, eat_dist, eat_taxonomy)
    assert l_bits == pytest.approx(DINNER_L, abs=1e-9)
    assert l_bits == pytest.approx(0.58496, abs=1e-5)
    assert r_bits == pytest.approx(DINNER_R, abs=1e-9)
    assert r_bits == pytest.approx(1.58496, abs=1e-5)


def test_code_lengths_for_idiom_phrase(eat_optimum, eat_dist, eat_taxonomy):
    _, r_bits = code_lengths_for_phrase(VerbPhrase("eat", "humble_pie"),
                                        eat_optimum, eat_dist, eat_taxonomy)
    assert r_bits == 0.0


def test_code_lengths_second_concept_group(eat_optimum, eat_dist, eat_taxonomy):
    _, r_bits = code_lengths_for_phrase(VerbPhrase("eat", "apple"),
                                        eat_optimum, eat_dist, eat_taxonomy)
    assert r_bits == pytest.approx(APPLE_R, abs=1e-9)
    assert r_bits == pytest.approx(2.16993, abs=1e-5)


def test_all_idiom_length_is_phrase_entropy(eat_dist, eat_taxonomy):
    assignment = all_idiom("eat", eat_dist)
    length = description_length(assignment, eat_dist, eat_taxonomy, 0.25)
    entropy = -sum(p * math.log2(p) for p in eat_dist.values())
    assert length.conditional_bits == 0.0
    assert length.pattern_bits == pytest.approx(entropy, abs=1e-12)
    assert length.pattern_bits == pytest.approx(2.4903, abs=1e-4)


def test_eat_optimum_lengths(eat_optimum, eat_dist, eat_taxonomy):
    length = description_length(eat_optimum, eat_dist, eat_taxonomy, 0.25)
    assert length.pattern_bits == pytest.approx(EAT_OPTIMUM_LL, abs=1e-12)
    assert length.conditional_bits == pytest.approx(EAT_OPTIMUM_LR, abs=1e-12)
    assert length.pattern_bits == pytest.approx(1.2244, abs=1e-4)
    assert length.conditional_bits == pytest.approx(1.6499, abs=1e-4)
    assert length.total == pytest.approx(1.6369, abs=1e-4)


def test_theta_zero_total_is_pattern_bits(eat_optimum, eat_dist, eat_taxonomy):
    length = description_length(eat_optimum, eat_dist, eat_taxonomy, 0.0)
    assert length.total == length.pattern_bits


def test_zero_conditional_is_invalid(eat_optimum, eat_dist, eat_taxonomy):
    from verbpatterns import VerbPattern
    broken = eat_optimum.with_patterns({"breakfast": VerbPattern.concept("eat", "food")})
    with pytest.raises(InvalidAssignmentError):
        description_length(broken, eat_dist, eat_taxonomy, 0.25)


def test_negative_theta_rejected(eat_optimum, eat_dist, eat_taxonomy):
    with pytest.raises(ValueError):
        description_length(eat_optimum, eat_dist, eat_taxonomy, -0.1)


def test_total_identity_and_entropy_identity_on_random_assignments():
    rng = random.Random(515)
    for _ in range(120):
        corpus, taxonomy, _ = helpers.random_instance(rng)
        dist = phrase_distribution(corpus, "v")
        assignment = helpers.random_assignment(rng, corpus, taxonomy)
        theta = rng.uniform(0.0, 1.5)
        length = description_length(assignment, dist, taxonomy, theta)
        assert abs(length.total - (length.pattern_bits + theta * length.conditional_bits)) < 1e-12
        masses = pattern_distribution(assignment, dist)
        entropy = -sum(m * math.log2(m) for m in masses.values())
        assert abs(length.pattern_bits - entropy) < 1e-9


def test_all_idiom_dominates_at_theta_one():
    """With theta >= 1 no assignment beats the phrase entropy, which the
    all-idiom assignment attains; checked by enumerating every valid
    assignment of small random instances."""
    rng = random.Random(616)
    checked = 0
    for _ in range(12):
        corpus, taxonomy, _ = helpers.random_instance(rng)
        dist = phrase_distribution(corpus, "v")
        objects = sorted(dist)
        options = [candidate_patterns(VerbPhrase("v", o), taxonomy) for o in objects]
        if math.prod(len(o) for o in options) > 3000:
            continue
        entropy = -sum(p * math.log2(p) for p in dist.values())
        for combo in itertools.product(*options):
            assignment = Assignment("v", dict(zip(objects, combo)))
            total = description_length(assignment, dist, taxonomy, 1.0).total
            assert total >= entropy - 1e-9
            checked += 1
        baseline = description_length(all_idiom("v", objects), dist, taxonomy, 1.0)
        assert baseline.total == pytest.approx(entropy, abs=1e-9)
    assert checked > 100


def test_singleton_concept_patterns_never_beat_their_idiom():
    rng = random.Random(717)
    for _ in range(80):
        corpus, taxonomy, _ = helpers.random_instance(rng)
        dist = phrase_distribution(corpus, "v")
        assignment = helpers.random_assignment(rng, corpus, taxonomy)
        theta = rng.uniform(0.0, 1.5)
        before = description_length(assignment, dist, taxonomy, theta).total
        masses = pattern_distribution(assignment, dist)
        members: dict = {}
        for obj, pattern in assignment.mapping.items():
            members.setdefault(pattern, []).append(obj)
        for pattern, objs in members.items():
            if pattern.is_idiom or len(objs) != 1:
                continue
            from verbpatterns import VerbPattern
            swapped = assignment.with_patterns(
                {objs[0]: VerbPattern.idiom("v", objs[0])})
            after = description_length(swapped, dist, taxonomy, theta).total
            assert after <= before + 1e-12


def test_total_is_monotone_in_theta(eat_optimum, eat_dist, eat_taxonomy):
    totals = [description_length(eat_optimum, eat_dist, eat_taxonomy, theta).total
              for theta in (0.0, 0.1, 0.25, 0.5, 1.0, 2.0)]
    assert totals == sorted(totals)
