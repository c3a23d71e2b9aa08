"""Context-aware conceptualization of entities.

Ranks an entity's candidate concepts under a Naive-Bayes product over the
context entities. Without a verb the head factor is the joint probability
of the (entity, concept) pair; with a verb it is the conditional
P(entity|concept) multiplied by the learned verb prior P(concept|verb),
which encodes how often the verb's phrases land in each concept pattern.
Zeros are hard: a context entity or verb prior that never co-occurs with a
concept eliminates it. For robustness experiments every factor can be
lifted by an additive epsilon (off by default).

Phrases whose pattern is already known take a shortcut: a conceptualized
pattern answers with its concept, an idiom pattern stops conceptualization
altogether, and the caller falls back to ranking for unseen phrases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ConsistencyError
from .patterns import Assignment, VerbPattern, pattern_distribution
from .taxonomy import Taxonomy, concepts_of

KNOWN_CONCEPT = "concept"
IDIOM_STOP = "idiom-stop"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class VerbConceptPrior:
    """P(concept|verb) over conceptualized patterns, plus the idiom remainder."""

    verb: str
    concept_probs: dict[str, float]
    idiom_mass: float


@dataclass(frozen=True)
class PhraseConcept:
    """Outcome of the known-phrase shortcut."""

    status: str  # KNOWN_CONCEPT, IDIOM_STOP or UNKNOWN
    concept: str | None = None


def verb_concept_prior(result, dist: Mapping[str, float]) -> VerbConceptPrior:
    """Fold a solve result (or bare assignment) into a per-verb concept prior."""
    assignment: Assignment = getattr(result, "assignment", result)
    masses = pattern_distribution(assignment, dist)
    concept_probs: dict[str, float] = {}
    idiom_mass = 0.0
    for pattern, mass in sorted(masses.items(), key=lambda kv: kv[0].sort_key()):
        if pattern.is_idiom:
            idiom_mass += mass
        else:
            concept_probs[pattern.label] = concept_probs.get(pattern.label, 0.0) + mass
    return VerbConceptPrior(assignment.verb, concept_probs, idiom_mass)


def prior_from_patterns(verb: str,
                        weighted: Iterable[tuple[VerbPattern, float]]) -> VerbConceptPrior:
    """Build a prior from (pattern, probability) pairs, e.g. parsed JSONL."""
    concept_probs: dict[str, float] = {}
    idiom_mass = 0.0
    for pattern, probability in weighted:
        if pattern.verb != verb:
            raise ConsistencyError(
                f"pattern for verb {pattern.verb!r} mixed into prior for {verb!r}")
        if pattern.is_idiom:
            idiom_mass += probability
        else:
            concept_probs[pattern.label] = concept_probs.get(pattern.label, 0.0) + probability
    return VerbConceptPrior(verb, concept_probs, idiom_mass)


def rank_concepts(entity: str, context_entities: Iterable[str],
                  verb: str | None, taxonomy: Taxonomy,
                  priors: Mapping[str, VerbConceptPrior] | None = None,
                  epsilon: float = 0.0) -> list[tuple[str, float]]:
    """Rank the entity's concepts, renormalized to sum 1.

    Concepts scoring zero are omitted; an unknown entity or an everywhere-
    zero product yields an empty ranking, which is not an error. Ties break
    lexicographically.
    """
    if not entity:
        raise ValueError("entity must be non-empty")
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    context = list(context_entities)
    prior = (priors or {}).get(verb) if verb is not None else None
    scores: dict[str, float] = {}
    for concept in sorted(concepts_of(taxonomy, entity)):
        if verb is None:
            score = taxonomy.joint_probability(entity, concept) + epsilon
        else:
            prior_prob = prior.concept_probs.get(concept, 0.0) if prior else 0.0
            score = (taxonomy.entity_given_concept(entity, concept) + epsilon) \
                * (prior_prob + epsilon)
        for other in context:
            score *= taxonomy.entity_given_concept(other, concept) + epsilon
        if score > 0.0:
            scores[concept] = score
    if not scores:
        return []
    norm = sum(scores.values())
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(concept, score / norm) for concept, score in ranked]


def conceptualize_known_phrase(verb: str, obj: str,
                               assignments: Mapping[str, Assignment]) -> PhraseConcept:
    """Shortcut for phrases whose pattern was learned during extraction."""
    assignment = assignments.get(verb)
    if assignment is None or obj not in assignment.mapping:
        return PhraseConcept(UNKNOWN)
    pattern = assignment.mapping[obj]
    if pattern.is_idiom:
        return PhraseConcept(IDIOM_STOP)
    return PhraseConcept(KNOWN_CONCEPT, pattern.label)
