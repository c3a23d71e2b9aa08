"""Two-part description length of a pattern assignment.

Each phrase is charged for naming its pattern, -log2 P(a) where P(a) is the
induced pattern probability, plus the cost of the phrase given the pattern:
zero for an idiom pattern (it holds exactly one phrase) and the taxonomy
surprisal -log2 P(object|concept) for a conceptualized one. Averaged under
the phrase distribution, the first part equals the entropy of the pattern
distribution (it rewards few, broad patterns) and the second is the cross
entropy against the taxonomy conditional (it rewards patterns whose members
are typical of the concept). The weight `theta` scales the second part:

    total = pattern_bits + theta * conditional_bits

For theta >= 1 the all-idiom assignment is always optimal, so useful
operating points are strictly below 1; the shipped default is 0.25.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .corpus import VerbPhrase
from .errors import ConsistencyError, InvalidAssignmentError
from .patterns import Assignment, pattern_distribution
from .taxonomy import Taxonomy


@dataclass(frozen=True)
class DescriptionLength:
    """Bit costs of an assignment under one theta."""

    pattern_bits: float
    conditional_bits: float
    theta: float
    total: float


def code_lengths_for_phrase(phrase: VerbPhrase, assignment: Assignment,
                            dist: Mapping[str, float], taxonomy: Taxonomy) -> tuple[float, float]:
    """Bit costs (pattern, phrase-given-pattern) for one phrase."""
    pattern = assignment.mapping.get(phrase.object)
    if pattern is None:
        raise ConsistencyError(f"phrase {phrase.object!r} is not assigned")
    masses = pattern_distribution(assignment, dist)
    pattern_cost = -math.log2(masses[pattern])
    if pattern.is_idiom:
        return pattern_cost, 0.0
    conditional = taxonomy.entity_given_concept(phrase.object, pattern.label)
    if conditional <= 0.0:
        raise InvalidAssignmentError(
            f"{phrase.object!r} assigned to concept {pattern.label!r} with zero conditional")
    return pattern_cost, -math.log2(conditional)


def description_length(assignment: Assignment, dist: Mapping[str, float],
                       taxonomy: Taxonomy, theta: float) -> DescriptionLength:
    """Expected two-part code length of the assignment, in bits."""
    if theta < 0:
        raise ValueError("theta must be >= 0")
    masses = pattern_distribution(assignment, dist)
    pattern_bits = 0.0
    conditional_bits = 0.0
    for obj, pattern in assignment.mapping.items():
        p = dist[obj]
        pattern_bits -= p * math.log2(masses[pattern])
        if not pattern.is_idiom:
            conditional = taxonomy.entity_given_concept(obj, pattern.label)
            if conditional <= 0.0:
                raise InvalidAssignmentError(
                    f"{obj!r} assigned to concept {pattern.label!r} with zero conditional")
            conditional_bits -= p * math.log2(conditional)
    # float round-off can leave a tiny negative where the exact value is 0
    pattern_bits = max(pattern_bits, 0.0)
    conditional_bits = max(conditional_bits, 0.0)
    return DescriptionLength(pattern_bits, conditional_bits, theta,
                             pattern_bits + theta * conditional_bits)
