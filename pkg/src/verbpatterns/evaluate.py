"""Baselines and the coverage/precision harness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .corpus import PhraseCorpus, VerbPhrase, phrase_distribution
from .errors import ConsistencyError, LoadError
from .patterns import Assignment, VerbPattern, all_idiom, CONCEPT, IDIOM
from .taxonomy import Taxonomy, concepts_of
from .tsvio import iter_tsv, source_name

IB = "ib"  # every phrase kept as its own idiom
CB = "cb"  # every phrase sent to its object's most probable concept


def assign_baseline(verb: str, corpus: PhraseCorpus, taxonomy: Taxonomy,
                    mode: str) -> Assignment:
    """Reference assignments: all-idiom (ib) or best-concept-per-object (cb).

    In cb mode ties on P(concept|object) break lexicographically and
    objects without any concept fall back to their idiom pattern.
    """
    mode = mode.lower()
    if mode not in (IB, CB):
        raise ValueError(f"mode must be {IB!r} or {CB!r}, got {mode!r}")
    dist = phrase_distribution(corpus, verb)
    objects = sorted(dist)
    if mode == IB:
        return all_idiom(verb, objects)
    mapping: dict[str, VerbPattern] = {}
    for obj in objects:
        concepts = concepts_of(taxonomy, obj)
        if not concepts:
            mapping[obj] = VerbPattern.idiom(verb, obj)
        else:
            top = min(concepts,
                      key=lambda c: (-taxonomy.concept_given_entity(obj, c), c))
            mapping[obj] = VerbPattern.concept(verb, top)
    return Assignment(verb, mapping)


@dataclass(frozen=True)
class EvaluationCounts:
    n_all: int
    n_cover: int
    n_judged: int
    n_correct: int


def evaluation_counts(test_phrases: list[VerbPhrase],
                      patterns: Mapping[str, Assignment],
                      gold: Mapping[VerbPhrase, VerbPattern | None]) -> EvaluationCounts:
    """Tally coverage and correctness counts against gold judgments.

    A phrase is covered when its verb+object pair has a learned pattern.
    Only covered phrases carrying a gold pattern count toward correctness;
    a gold value of None marks a phrase seen but left unjudged.
    """
    known = set(test_phrases)
    for phrase in gold:
        if phrase not in known:
            raise ConsistencyError(
                f"gold label for ({phrase.verb!r}, {phrase.object!r}) has no test phrase")
    n_cover = 0
    n_judged = 0
    n_correct = 0
    for phrase in test_phrases:
        assignment = patterns.get(phrase.verb)
        if assignment is None or phrase.object not in assignment.mapping:
            continue
        n_cover += 1
        judged = gold.get(phrase)
        if judged is None:
            continue
        n_judged += 1
        if assignment.mapping[phrase.object] == judged:
            n_correct += 1
    return EvaluationCounts(len(test_phrases), n_cover, n_judged, n_correct)


def coverage_precision(test_phrases: list[VerbPhrase],
                       patterns: Mapping[str, Assignment],
                       gold: Mapping[VerbPhrase, VerbPattern | None]) -> tuple[float, float | None]:
    """(coverage, precision); precision is None when nothing judged is covered."""
    counts = evaluation_counts(test_phrases, patterns, gold)
    if counts.n_all == 0:
        return 0.0, None
    coverage = counts.n_cover / counts.n_all
    precision = counts.n_correct / counts.n_judged if counts.n_judged else None
    return coverage, precision


def load_test_phrases(source) -> list[VerbPhrase]:
    """Load `verb<TAB>object` test phrases, preserving order."""
    name = source_name(source)
    phrases: list[VerbPhrase] = []
    for line_no, (verb, obj) in iter_tsv(source, 2):
        if not verb or not obj:
            raise LoadError(name, line_no, "verb and object must be non-empty")
        phrases.append(VerbPhrase(verb, obj))
    return phrases


def load_gold_labels(source) -> dict[VerbPhrase, VerbPattern | None]:
    """Load `verb<TAB>object<TAB>kind<TAB>label` gold judgments.

    `kind` is idiom, concept, or unjudged; an unjudged row records the
    phrase with no expected pattern (its label column is ignored).
    """
    name = source_name(source)
    gold: dict[VerbPhrase, VerbPattern | None] = {}
    for line_no, (verb, obj, kind, label) in iter_tsv(source, 4):
        if not verb or not obj:
            raise LoadError(name, line_no, "verb and object must be non-empty")
        phrase = VerbPhrase(verb, obj)
        if kind == "unjudged":
            gold[phrase] = None
        elif kind in (IDIOM, CONCEPT):
            if not label:
                raise LoadError(name, line_no, "label must be non-empty")
            gold[phrase] = VerbPattern(verb, kind, label)
        else:
            raise LoadError(name, line_no,
                            f"kind must be idiom, concept or unjudged, got {kind!r}")
    return gold
