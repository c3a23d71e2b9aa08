"""Pattern domain model.

A phrase is summarized either by its own idiom pattern or by a
conceptualized pattern naming one of the object's taxonomy concepts. An
assignment maps every retained phrase of a verb to one valid pattern and
induces a probability distribution over the patterns it uses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .corpus import VerbPhrase
from .errors import ConsistencyError, LoadError
from .taxonomy import Taxonomy, concepts_of
from .tsvio import source_name

IDIOM = "idiom"
CONCEPT = "concept"


@dataclass(frozen=True)
class VerbPattern:
    """Either an idiom pattern (label = the object) or a concept pattern."""

    verb: str
    kind: str
    label: str

    def __post_init__(self):
        if self.kind not in (IDIOM, CONCEPT):
            raise ValueError(f"kind must be {IDIOM!r} or {CONCEPT!r}, got {self.kind!r}")
        if not self.verb or not self.label:
            raise ValueError("verb and label must be non-empty")

    @classmethod
    def idiom(cls, verb: str, obj: str) -> "VerbPattern":
        return cls(verb, IDIOM, obj)

    @classmethod
    def concept(cls, verb: str, concept: str) -> "VerbPattern":
        return cls(verb, CONCEPT, concept)

    @property
    def is_idiom(self) -> bool:
        return self.kind == IDIOM

    def sort_key(self) -> tuple[str, str]:
        return (self.kind, self.label)


@dataclass(frozen=True)
class Assignment:
    """Total mapping from one verb's retained objects to patterns."""

    verb: str
    mapping: dict[str, VerbPattern]

    def pattern_of(self, obj: str) -> VerbPattern:
        return self.mapping[obj]

    def with_patterns(self, updates: Mapping[str, VerbPattern]) -> "Assignment":
        new_mapping = dict(self.mapping)
        new_mapping.update(updates)
        return Assignment(self.verb, new_mapping)

    def distinct_patterns(self) -> set[VerbPattern]:
        return set(self.mapping.values())

    def sort_key(self) -> tuple[tuple[str, str, str], ...]:
        """Canonical serialization used for deterministic tie-breaking."""
        return tuple(sorted((o, p.kind, p.label) for o, p in self.mapping.items()))


def all_idiom(verb: str, objects: Iterable[str]) -> Assignment:
    """The assignment that keeps every phrase as its own idiom."""
    return Assignment(verb, {o: VerbPattern.idiom(verb, o) for o in sorted(objects)})


def candidate_patterns(phrase: VerbPhrase, taxonomy: Taxonomy) -> list[VerbPattern]:
    """Valid patterns for a phrase: its idiom, then its object's concepts.

    Order is fixed (idiom first, concepts lexicographic) so seeded runs
    are reproducible.
    """
    out = [VerbPattern.idiom(phrase.verb, phrase.object)]
    out.extend(VerbPattern.concept(phrase.verb, c)
               for c in sorted(concepts_of(taxonomy, phrase.object)))
    return out


def pattern_distribution(assignment: Assignment, dist: Mapping[str, float]) -> dict[VerbPattern, float]:
    """Fold the phrase distribution through the assignment.

    Each pattern's probability is the summed probability of the phrases
    mapped to it; for a valid total assignment the values sum to 1.
    """
    masses: dict[VerbPattern, float] = {}
    for obj, pattern in assignment.mapping.items():
        if obj not in dist:
            raise ConsistencyError(
                f"assignment for verb {assignment.verb!r} references {obj!r},"
                " which is missing from the phrase distribution")
        masses[pattern] = masses.get(pattern, 0.0) + dist[obj]
    return masses


def validate_assignment(assignment: Assignment, taxonomy: Taxonomy,
                        dist: Mapping[str, float]) -> list[str]:
    """Collect every constraint violation; an empty list means valid."""
    violations: list[str] = []
    for obj, pattern in assignment.mapping.items():
        if pattern.verb != assignment.verb:
            violations.append(f"{obj!r}: pattern belongs to verb {pattern.verb!r}")
        if pattern.is_idiom:
            if pattern.label != obj:
                violations.append(
                    f"{obj!r}: idiom pattern names a different object {pattern.label!r}")
        elif taxonomy.count(obj, pattern.label) == 0:
            violations.append(
                f"{obj!r}: no taxonomy record under concept {pattern.label!r}")
        if obj not in dist:
            violations.append(f"{obj!r}: not a retained phrase of verb {assignment.verb!r}")
    for obj in dist:
        if obj not in assignment.mapping:
            violations.append(f"{obj!r}: retained phrase missing from the assignment")
    return violations


# --- JSONL serialization of extracted patterns ---

def pattern_record(pattern: VerbPattern, probability: float,
                   phrases: list[dict]) -> dict:
    """One output line of patterns.jsonl."""
    return {
        "verb": pattern.verb,
        "kind": pattern.kind,
        "label": pattern.label,
        "probability": probability,
        "phrases": phrases,
    }


def load_patterns_jsonl(source) -> list[dict]:
    """Read and validate pattern records from a JSONL file or stream."""
    name = source_name(source)
    records: list[dict] = []
    if hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        with open(source, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise LoadError(name, line_no, f"invalid JSON: {exc.msg}") from None
        for key in ("verb", "kind", "label", "probability", "phrases"):
            if key not in record:
                raise LoadError(name, line_no, f"missing field {key!r}")
        if record["kind"] not in (IDIOM, CONCEPT):
            raise LoadError(name, line_no, f"unknown pattern kind {record['kind']!r}")
        records.append(record)
    return records


def assignment_store(records: list[dict]) -> dict[str, Assignment]:
    """Rebuild per-verb assignments from pattern records."""
    mappings: dict[str, dict[str, VerbPattern]] = {}
    for record in records:
        pattern = VerbPattern(record["verb"], record["kind"], record["label"])
        for phrase in record["phrases"]:
            mappings.setdefault(record["verb"], {})[phrase["object"]] = pattern
    return {verb: Assignment(verb, dict(sorted(mapping.items())))
            for verb, mapping in mappings.items()}


def weighted_patterns(records: list[dict]) -> dict[str, list[tuple[VerbPattern, float]]]:
    """Per-verb (pattern, probability) pairs from pattern records."""
    out: dict[str, list[tuple[VerbPattern, float]]] = {}
    for record in records:
        pattern = VerbPattern(record["verb"], record["kind"], record["label"])
        out.setdefault(record["verb"], []).append((pattern, float(record["probability"])))
    return out
