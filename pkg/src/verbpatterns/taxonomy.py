"""isA taxonomy backed by concept-entity co-occurrence counts.

The taxonomy stores aggregated counts n(entity, concept) and answers three
probability queries derived from them: entity given concept, concept given
entity, and the joint over all recorded pairs. Zeros are meaningful (they
mark invalid entity-concept combinations) and are never smoothed away.
Instances are immutable after load and safe for concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import LoadError
from .tsvio import iter_tsv, parse_positive_count, source_name


@dataclass(frozen=True)
class Taxonomy:
    """Aggregated co-occurrence counts with cached marginal sums."""

    by_concept: dict[str, dict[str, int]]
    by_entity: dict[str, dict[str, int]]
    concept_totals: dict[str, int]
    entity_totals: dict[str, int]
    grand_total: int

    @classmethod
    def from_counts(cls, counts: Mapping[tuple[str, str], int]) -> "Taxonomy":
        """Build a taxonomy from a {(concept, entity): count} mapping."""
        by_concept: dict[str, dict[str, int]] = {}
        by_entity: dict[str, dict[str, int]] = {}
        for concept, entity in sorted(counts):
            n = counts[concept, entity]
            if not concept or not entity:
                raise ValueError("concept and entity must be non-empty")
            if n <= 0:
                raise ValueError(f"count for ({concept!r}, {entity!r}) must be positive")
            by_concept.setdefault(concept, {})[entity] = n
            by_entity.setdefault(entity, {})[concept] = n
        concept_totals = {c: sum(es.values()) for c, es in by_concept.items()}
        entity_totals = {e: sum(cs.values()) for e, cs in by_entity.items()}
        return cls(by_concept, by_entity, concept_totals, entity_totals,
                   sum(concept_totals.values()))

    def count(self, entity: str, concept: str) -> int:
        return self.by_concept.get(concept, {}).get(entity, 0)

    def entity_given_concept(self, entity: str, concept: str) -> float:
        n = self.count(entity, concept)
        return n / self.concept_totals[concept] if n else 0.0

    def concept_given_entity(self, entity: str, concept: str) -> float:
        n = self.count(entity, concept)
        return n / self.entity_totals[entity] if n else 0.0

    def joint_probability(self, entity: str, concept: str) -> float:
        n = self.count(entity, concept)
        return n / self.grand_total if n else 0.0


def load_taxonomy(source) -> Taxonomy:
    """Load a taxonomy from TSV lines `concept<TAB>entity<TAB>count`.

    Duplicate (concept, entity) rows are summed. Malformed lines raise
    LoadError with the line number; an empty file yields an empty taxonomy.
    """
    name = source_name(source)
    counts: dict[tuple[str, str], int] = {}
    for line_no, (concept, entity, raw_count) in iter_tsv(source, 3):
        if not concept or not entity:
            raise LoadError(name, line_no, "concept and entity must be non-empty")
        n = parse_positive_count(name, line_no, raw_count)
        key = (concept, entity)
        counts[key] = counts.get(key, 0) + n
    return Taxonomy.from_counts(counts)


def conditional_probabilities(taxonomy: Taxonomy, entity: str, concept: str) -> tuple[float, float, float]:
    """Return (P(entity|concept), P(concept|entity), P(entity,concept)).

    All three are zero when the pair has no record; unknown names are not
    an error.
    """
    return (
        taxonomy.entity_given_concept(entity, concept),
        taxonomy.concept_given_entity(entity, concept),
        taxonomy.joint_probability(entity, concept),
    )


def concepts_of(taxonomy: Taxonomy, entity: str) -> set[str]:
    """Concepts with a positive co-occurrence count for `entity`."""
    return set(taxonomy.by_entity.get(entity, ()))
