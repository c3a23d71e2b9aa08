"""Shared instance builders for the test suite.

The random instances mirror the shape of real verb data: objects cluster
into groups sharing a strong concept, a group may additionally share a
vague concept whose conditionals are tiny, some objects carry a second
concept from another group, and some have no taxonomy records at all.
Every object has at most 4 candidate patterns (idiom + 3 concepts).
"""

from __future__ import annotations

import random

from verbpatterns import (Assignment, PhraseCorpus, Taxonomy,
                          candidate_patterns)
from verbpatterns.corpus import VerbPhrase

EAT_CORPUS_COUNTS = {
    ("eat", "apple"): 5,
    ("eat", "hot_dog"): 5,
    ("eat", "breakfast"): 10,
    ("eat", "lunch"): 8,
    ("eat", "dinner"): 12,
    ("eat", "humble_pie"): 5,
}

EAT_TAXONOMY_COUNTS = {
    ("food", "apple"): 20,
    ("food", "hot_dog"): 10,
    ("food", "bread"): 30,
    ("food", "meat"): 30,
    ("meal", "breakfast"): 8,
    ("meal", "lunch"): 8,
    ("meal", "dinner"): 8,
    ("activity", "breakfast"): 1,
    ("activity", "lunch"): 1,
    ("activity", "dinner"): 1,
    ("activity", "shopping"): 50,
    ("activity", "fishing"): 40,
}

PITAYA_TAXONOMY_COUNTS = dict(EAT_TAXONOMY_COUNTS)
PITAYA_TAXONOMY_COUNTS[("food", "pitaya")] = 3
PITAYA_TAXONOMY_COUNTS[("company", "pitaya")] = 9

EAT_IDIOMS = {("eat", "humble_pie")}

EAT_CORPUS_TSV = "".join(f"{v}\t{o}\t{n}\n" for (v, o), n in EAT_CORPUS_COUNTS.items())
EAT_TAXONOMY_TSV = "".join(f"{c}\t{e}\t{n}\n" for (c, e), n in EAT_TAXONOMY_COUNTS.items())
PITAYA_TAXONOMY_TSV = "".join(f"{c}\t{e}\t{n}\n" for (c, e), n in PITAYA_TAXONOMY_COUNTS.items())
EAT_IDIOMS_TSV = "eat\thumble_pie\n"


def random_instance(rng: random.Random):
    """One random (corpus, taxonomy, idiom dictionary) triple for verb "v"."""
    n_phrases = rng.randint(2, 8)
    objects = [f"obj{i}" for i in range(n_phrases)]
    shuffled = objects[:]
    rng.shuffle(shuffled)
    groups = []
    while shuffled:
        size = min(len(shuffled), rng.randint(1, 4))
        groups.append([shuffled.pop() for _ in range(size)])
    tax_counts: dict[tuple[str, str], int] = {}
    strong_concepts: list[tuple[str, list[str]]] = []
    for gi, group in enumerate(groups):
        if rng.random() < 0.25:
            continue  # taxonomy-free group: idiom is the only candidate
        concept = f"c{gi}"
        strong_concepts.append((concept, group))
        for obj in group:
            tax_counts[(concept, obj)] = rng.randint(8, 24)
        for j in range(rng.randint(2, 5)):
            tax_counts[(concept, f"f_{concept}{j}")] = rng.randint(5, 30)
        if rng.random() < 0.4:
            vague = f"v{gi}"
            for obj in group:
                tax_counts[(vague, obj)] = 1
            for j in range(rng.randint(2, 4)):
                tax_counts[(vague, f"f_{vague}{j}")] = rng.randint(30, 80)
    if len(strong_concepts) >= 2 and rng.random() < 0.25:
        concept, _ = strong_concepts[rng.randrange(len(strong_concepts))]
        outsiders = [o for c, grp in strong_concepts if c != concept for o in grp]
        if outsiders:
            tax_counts[(concept, rng.choice(outsiders))] = rng.randint(4, 20)
    corpus_counts = {("v", obj): rng.randint(1, 40) for obj in objects}
    idioms: set[tuple[str, str]] = set()
    if rng.random() < 0.3:
        idioms.add(("v", rng.choice(objects)))
    return (PhraseCorpus.from_counts(corpus_counts, min_count=1),
            Taxonomy.from_counts(tax_counts), idioms)


def random_assignment(rng: random.Random, corpus: PhraseCorpus,
                      taxonomy: Taxonomy, verb: str = "v") -> Assignment:
    """A uniformly random valid total assignment for one verb."""
    mapping = {}
    for obj in corpus.objects(verb):
        options = candidate_patterns(VerbPhrase(verb, obj), taxonomy)
        mapping[obj] = options[rng.randrange(len(options))]
    return Assignment(verb, mapping)
