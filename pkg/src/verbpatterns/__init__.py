"""Verb pattern mining and verb-aware conceptualization.

Groups each verb's object phrases into either concept patterns backed by an
isA taxonomy or standalone idiom patterns, by minimizing a two-part
description length with a typicality-guided annealing search. The learned
patterns feed a context-aware conceptualizer that ranks an entity's
concepts using the verb as evidence.
"""

from .conceptualize import (IDIOM_STOP, KNOWN_CONCEPT, UNKNOWN, PhraseConcept,
                            VerbConceptPrior, conceptualize_known_phrase,
                            prior_from_patterns, rank_concepts, verb_concept_prior)
from .corpus import PhraseCorpus, VerbPhrase, load_corpus, phrase_distribution
from .errors import (ConsistencyError, InstanceTooLargeError,
                     InvalidAssignmentError, LoadError, UnknownVerbError,
                     VerbPatternsError)
from .evaluate import (CB, IB, EvaluationCounts, assign_baseline,
                       coverage_precision, evaluation_counts, load_gold_labels,
                       load_test_phrases)
from .mdl import DescriptionLength, code_lengths_for_phrase, description_length
from .patterns import (CONCEPT, IDIOM, Assignment, VerbPattern, all_idiom,
                       assignment_store, candidate_patterns, load_patterns_jsonl,
                       pattern_distribution, validate_assignment,
                       weighted_patterns)
from .solver import (SolveResult, SolverConfig, TraceEntry, anneal_step,
                     brute_force_optimum, load_idiom_dictionary,
                     pattern_universe, solve, typicality)
from .taxonomy import Taxonomy, concepts_of, conditional_probabilities, load_taxonomy

__version__ = "0.1.0"

__all__ = [
    "Assignment", "CB", "CONCEPT", "ConsistencyError", "DescriptionLength",
    "EvaluationCounts", "IB", "IDIOM", "IDIOM_STOP", "InstanceTooLargeError",
    "InvalidAssignmentError", "KNOWN_CONCEPT", "LoadError", "PhraseConcept",
    "PhraseCorpus", "SolveResult", "SolverConfig", "Taxonomy", "TraceEntry",
    "UNKNOWN", "UnknownVerbError", "VerbConceptPrior", "VerbPattern",
    "VerbPatternsError", "VerbPhrase", "all_idiom", "anneal_step",
    "assign_baseline", "assignment_store", "brute_force_optimum",
    "candidate_patterns", "code_lengths_for_phrase", "concepts_of",
    "conceptualize_known_phrase", "conditional_probabilities",
    "coverage_precision", "description_length", "evaluation_counts",
    "load_corpus", "load_gold_labels", "load_idiom_dictionary",
    "load_patterns_jsonl", "load_taxonomy", "load_test_phrases",
    "pattern_distribution", "pattern_universe", "phrase_distribution",
    "prior_from_patterns", "rank_concepts", "solve", "typicality",
    "validate_assignment", "verb_concept_prior", "weighted_patterns",
]
