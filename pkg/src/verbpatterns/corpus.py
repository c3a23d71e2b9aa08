"""Verb-object phrase corpus and per-verb frequency distributions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import LoadError, UnknownVerbError
from .tsvio import iter_tsv, parse_positive_count, source_name


@dataclass(frozen=True)
class VerbPhrase:
    """A verb plus its object, e.g. ("eat", "apple")."""

    verb: str
    object: str

    def __post_init__(self):
        if not self.verb or not self.object:
            raise ValueError("verb and object must be non-empty")


@dataclass(frozen=True)
class PhraseCorpus:
    """Aggregated, frequency-filtered phrase counts keyed by verb."""

    counts: dict[str, dict[str, int]]
    verb_totals: dict[str, int]

    @classmethod
    def from_counts(cls, counts: Mapping[tuple[str, str], int], min_count: int = 1) -> "PhraseCorpus":
        """Aggregate counts, drop phrases below `min_count`, drop empty verbs."""
        if min_count < 1:
            raise ValueError("min_count must be >= 1")
        kept: dict[str, dict[str, int]] = {}
        for verb, obj in sorted(counts):
            n = counts[verb, obj]
            if not verb or not obj:
                raise ValueError("verb and object must be non-empty")
            if n <= 0:
                raise ValueError(f"count for ({verb!r}, {obj!r}) must be positive")
            if n < min_count:
                continue
            kept.setdefault(verb, {})[obj] = n
        totals = {v: sum(objs.values()) for v, objs in kept.items()}
        return cls(kept, totals)

    def __contains__(self, verb: str) -> bool:
        return verb in self.counts

    def verbs(self) -> list[str]:
        return sorted(self.counts)

    def objects(self, verb: str) -> list[str]:
        if verb not in self.counts:
            raise UnknownVerbError(f"verb {verb!r} not in corpus")
        return sorted(self.counts[verb])

    def phrases(self, verb: str) -> list[VerbPhrase]:
        return [VerbPhrase(verb, obj) for obj in self.objects(verb)]

    def count(self, verb: str, obj: str) -> int:
        return self.counts.get(verb, {}).get(obj, 0)


def load_corpus(source, min_count: int = 5) -> PhraseCorpus:
    """Load TSV lines `verb<TAB>object<TAB>count` into a PhraseCorpus.

    Duplicate rows are summed before the `min_count` filter is applied, so
    two rows of 3 and 2 survive a threshold of 5. The default threshold of
    5 suppresses noise at corpus scale; desk-scale fixtures pass 1.
    """
    name = source_name(source)
    counts: dict[tuple[str, str], int] = {}
    for line_no, (verb, obj, raw_count) in iter_tsv(source, 3):
        if not verb or not obj:
            raise LoadError(name, line_no, "verb and object must be non-empty")
        n = parse_positive_count(name, line_no, raw_count)
        key = (verb, obj)
        counts[key] = counts.get(key, 0) + n
    return PhraseCorpus.from_counts(counts, min_count=min_count)


def phrase_distribution(corpus: PhraseCorpus, verb: str) -> dict[str, float]:
    """Relative frequencies of one verb's retained objects; sums to 1."""
    if verb not in corpus.counts:
        raise UnknownVerbError(f"verb {verb!r} not in corpus")
    total = corpus.verb_totals[verb]
    return {obj: n / total for obj, n in corpus.counts[verb].items()}
