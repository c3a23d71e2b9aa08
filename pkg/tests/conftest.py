import pytest

from verbpatterns import (Assignment, PhraseCorpus, Taxonomy, VerbPattern,
                          phrase_distribution)

import helpers


@pytest.fixture
def eat_corpus() -> PhraseCorpus:
    return PhraseCorpus.from_counts(helpers.EAT_CORPUS_COUNTS, min_count=1)


@pytest.fixture
def eat_taxonomy() -> Taxonomy:
    return Taxonomy.from_counts(helpers.EAT_TAXONOMY_COUNTS)


@pytest.fixture
def pitaya_taxonomy() -> Taxonomy:
    return Taxonomy.from_counts(helpers.PITAYA_TAXONOMY_COUNTS)


@pytest.fixture
def eat_idioms() -> set:
    return set(helpers.EAT_IDIOMS)


@pytest.fixture
def eat_dist(eat_corpus):
    return phrase_distribution(eat_corpus, "eat")


@pytest.fixture
def eat_optimum() -> Assignment:
    """The expected optimum: food and meal groups plus one locked idiom."""
    return Assignment("eat", {
        "apple": VerbPattern.concept("eat", "food"),
        "hot_dog": VerbPattern.concept("eat", "food"),
        "breakfast": VerbPattern.concept("eat", "meal"),
        "lunch": VerbPattern.concept("eat", "meal"),
        "dinner": VerbPattern.concept("eat", "meal"),
        "humble_pie": VerbPattern.idiom("eat", "humble_pie"),
    })


@pytest.fixture
def eat_files(tmp_path):
    """Fixture TSVs on disk: (corpus, taxonomy, idioms) paths."""
    corpus = tmp_path / "corpus.tsv"
    taxonomy = tmp_path / "taxonomy.tsv"
    idioms = tmp_path / "idioms.tsv"
    corpus.write_text(helpers.EAT_CORPUS_TSV)
    taxonomy.write_text(helpers.EAT_TAXONOMY_TSV)
    idioms.write_text(helpers.EAT_IDIOMS_TSV)
    return corpus, taxonomy, idioms
