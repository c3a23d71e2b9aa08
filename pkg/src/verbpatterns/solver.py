"""Typicality-guided annealing search for pattern assignments.

One verb is one independent search problem: find the valid total assignment
of its retained phrases that minimizes the description length. Every chain
starts from the all-idiom assignment. An iteration draws one pattern
uniformly from the verb's universe of distinct candidates and reassigns to
it every unlocked phrase whose typicality strictly improves; the whole
batch is then accepted or reverted together. Downhill moves always pass;
an uphill move of size d passes with probability exp(-d / T) under the
falling temperature T(step) = t0 * step**(-cooling_a). A chain stops after
`beta` consecutive iterations without a state change, or at the iteration
cap. Phrases listed in the idiom dictionary stay locked to their idiom
patterns throughout.

Typicality steers proposals toward plausible concepts: an idiom pattern
scores the constant gamma, a concept pattern scores
P(object|concept) * P(concept|object), and an invalid pattern scores 0.
Because reassignment requires a strict increase, each phrase climbs its own
typicality ladder; gamma sits between junk-concept scores and
correct-concept scores so that conceptualization is reachable but not
forced.

`brute_force_optimum` enumerates every valid assignment and serves as the
reference answer on small instances.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .corpus import PhraseCorpus, VerbPhrase, phrase_distribution
from .errors import InstanceTooLargeError, LoadError
from .mdl import DescriptionLength, description_length
from .patterns import Assignment, VerbPattern, all_idiom, candidate_patterns
from .taxonomy import Taxonomy
from .tsvio import iter_tsv, source_name

ENUMERATION_GUARD = 1_000_000


@dataclass(frozen=True)
class SolverConfig:
    """Search parameters; defaults are the shipped operating point."""

    theta: float = 0.25
    gamma: float = 0.01
    t0: float = 1.0
    cooling_a: float = 0.5
    beta: int = 200
    seed: int = 0
    restarts: int = 4
    max_iterations: int | None = None
    # alternative schedule T(step) = step**cooling_a (temperature rises with
    # step count); kept only for comparison experiments
    rising_temperature: bool = False

    def __post_init__(self):
        if self.theta < 0:
            raise ValueError("theta must be >= 0")
        if self.gamma <= 0:
            raise ValueError("gamma must be > 0")
        if self.t0 <= 0:
            raise ValueError("t0 must be > 0")
        if self.cooling_a <= 0:
            raise ValueError("cooling_a must be > 0")
        if self.beta < 1:
            raise ValueError("beta must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True)
class TraceEntry:
    """One annealing iteration; `moves` lists the (object, old, new)
    reassignments an accepted step applied, empty for rejected or
    no-change steps."""

    restart: int
    step: int
    proposal: VerbPattern
    accepted: bool
    moves: tuple[tuple[str, VerbPattern, VerbPattern], ...]
    total_bits: float


@dataclass(frozen=True)
class SolveResult:
    assignment: Assignment
    length: DescriptionLength
    iterations: int
    winning_restart: int
    trace: tuple[TraceEntry, ...] | None


def _typicality(verb: str, obj: str, pattern: VerbPattern,
                taxonomy: Taxonomy, gamma: float) -> float:
    if pattern.verb != verb:
        return 0.0
    if pattern.is_idiom:
        return gamma if pattern.label == obj else 0.0
    given_concept = taxonomy.entity_given_concept(obj, pattern.label)
    if given_concept == 0.0:
        return 0.0
    return given_concept * taxonomy.concept_given_entity(obj, pattern.label)


def typicality(phrase: VerbPhrase, pattern: VerbPattern,
               taxonomy: Taxonomy, gamma: float) -> float:
    """Proposal-guidance score of `pattern` for `phrase`; 0 when invalid."""
    return _typicality(phrase.verb, phrase.object, pattern, taxonomy, gamma)


def pattern_universe(phrases: Iterable[VerbPhrase], taxonomy: Taxonomy) -> list[VerbPattern]:
    """Distinct candidate patterns over all phrases, deterministically ordered."""
    distinct: set[VerbPattern] = set()
    for phrase in phrases:
        distinct.update(candidate_patterns(phrase, taxonomy))
    return sorted(distinct, key=VerbPattern.sort_key)


def load_idiom_dictionary(source) -> set[tuple[str, str]]:
    """Load `verb<TAB>object` pairs that must stay idiomatic."""
    name = source_name(source)
    pairs: set[tuple[str, str]] = set()
    for line_no, (verb, obj) in iter_tsv(source, 2):
        if not verb or not obj:
            raise LoadError(name, line_no, "verb and object must be non-empty")
        pairs.add((verb, obj))
    return pairs


def anneal_step(state: Assignment, proposal: VerbPattern, cfg: SolverConfig,
                step: int, rng: random.Random, locked: frozenset[str] | set[str],
                dist: Mapping[str, float], taxonomy: Taxonomy,
                current_length: DescriptionLength | None = None) -> tuple[Assignment, bool]:
    """One iteration: batch-reassign toward `proposal`, then accept or revert.

    Returns (state after the step, accepted flag). A rejected step reverts
    every reassignment of the iteration and returns the input state object;
    a proposal that is valid for no phrase at all is a no-op with
    accepted=False. Passing `current_length` avoids recomputing L(state).
    """
    if step < 1:
        raise ValueError("step index starts at 1")
    verb = state.verb
    gamma = cfg.gamma
    updates: dict[str, VerbPattern] = {}
    valid_for_any = False
    for obj, current in state.mapping.items():
        t_new = _typicality(verb, obj, proposal, taxonomy, gamma)
        if t_new > 0.0:
            valid_for_any = True
        if obj in locked:
            continue
        if t_new > _typicality(verb, obj, current, taxonomy, gamma):
            updates[obj] = proposal
    if not valid_for_any:
        return state, False

    candidate = state.with_patterns(updates) if updates else state
    before = current_length if current_length is not None else \
        description_length(state, dist, taxonomy, cfg.theta)
    after = before if candidate is state else \
        description_length(candidate, dist, taxonomy, cfg.theta)
    if after.total < before.total:
        return candidate, True
    if cfg.rising_temperature:
        temperature = step ** cfg.cooling_a
    else:
        temperature = cfg.t0 * step ** (-cfg.cooling_a)
    if rng.random() < math.exp((before.total - after.total) / temperature):
        return candidate, True
    return state, False


def solve(verb: str, corpus: PhraseCorpus, taxonomy: Taxonomy,
          idiom_dictionary: set[tuple[str, str]], cfg: SolverConfig,
          keep_trace: bool = False) -> SolveResult:
    """Run `cfg.restarts` seeded chains and return the best state visited.

    Restart k seeds its generator with cfg.seed + k, so results are
    reproducible bit for bit. Ties in total length go to the
    lexicographically smallest serialized assignment. A verb with a single
    retained phrase short-circuits to its idiom assignment.
    """
    dist = phrase_distribution(corpus, verb)
    objects = sorted(dist)
    if len(objects) == 1:
        assignment = all_idiom(verb, objects)
        length = description_length(assignment, dist, taxonomy, cfg.theta)
        return SolveResult(assignment, length, 0, 0, () if keep_trace else None)

    phrases = [VerbPhrase(verb, obj) for obj in objects]
    locked = frozenset(obj for obj in objects if (verb, obj) in idiom_dictionary)
    universe = pattern_universe(phrases, taxonomy)
    max_iterations = cfg.max_iterations if cfg.max_iterations is not None \
        else 20 * len(universe)

    best: tuple[Assignment, DescriptionLength, tuple | None, int] | None = None

    def consider(assignment: Assignment, length: DescriptionLength, restart: int):
        nonlocal best
        if best is None or length.total < best[1].total:
            best = (assignment, length, None, restart)
        elif length.total == best[1].total:
            key = assignment.sort_key()
            best_key = best[2] if best[2] is not None else best[0].sort_key()
            if key < best_key:
                best = (assignment, length, key, restart)
            else:
                best = (best[0], best[1], best_key, best[3])

    trace: list[TraceEntry] = []
    iterations = 0
    for restart in range(cfg.restarts):
        rng = random.Random(cfg.seed + restart)
        state = all_idiom(verb, objects)
        length = description_length(state, dist, taxonomy, cfg.theta)
        consider(state, length, restart)
        stall = 0
        step = 0
        while step < max_iterations and stall < cfg.beta:
            step += 1
            proposal = universe[rng.randrange(len(universe))]
            previous = state
            state, accepted = anneal_step(previous, proposal, cfg, step, rng,
                                          locked, dist, taxonomy,
                                          current_length=length)
            if state is previous:
                stall += 1
            else:
                length = description_length(state, dist, taxonomy, cfg.theta)
                consider(state, length, restart)
                stall = 0
            if keep_trace:
                if state is previous:
                    moves: tuple = ()
                else:
                    moves = tuple((obj, previous.mapping[obj], state.mapping[obj])
                                  for obj in previous.mapping
                                  if state.mapping[obj] != previous.mapping[obj])
                trace.append(TraceEntry(restart, step, proposal, accepted,
                                        moves, length.total))
        iterations += step

    assert best is not None
    return SolveResult(best[0], best[1], iterations, best[3],
                       tuple(trace) if keep_trace else None)


def brute_force_optimum(verb: str, corpus: PhraseCorpus, taxonomy: Taxonomy,
                        idiom_dictionary: set[tuple[str, str]],
                        theta: float) -> tuple[Assignment, DescriptionLength]:
    """Global optimum by exhaustive enumeration of valid assignments.

    Refuses instances whose raw candidate product exceeds
    ENUMERATION_GUARD. Dictionary phrases are held at their idiom pattern.
    Ties go to the lexicographically smallest serialized assignment.
    """
    if theta < 0:
        raise ValueError("theta must be >= 0")
    dist = phrase_distribution(corpus, verb)
    objects = sorted(dist)
    per_phrase = [candidate_patterns(VerbPhrase(verb, obj), taxonomy) for obj in objects]
    space = 1
    for candidates in per_phrase:
        space *= len(candidates)
    if space > ENUMERATION_GUARD:
        raise InstanceTooLargeError(
            f"{space} assignments exceed the enumeration guard of {ENUMERATION_GUARD}")

    choices: list[list[VerbPattern]] = []
    for obj, candidates in zip(objects, per_phrase):
        if (verb, obj) in idiom_dictionary:
            choices.append([candidates[0]])  # idiom is first by construction
        else:
            choices.append(candidates)
    probs = [dist[obj] for obj in objects]
    surprisals = [[0.0 if a.is_idiom
                   else -math.log2(taxonomy.entity_given_concept(obj, a.label))
                   for a in options]
                  for obj, options in zip(objects, choices)]

    log2 = math.log2
    best_total = math.inf
    best_combo: tuple[int, ...] | None = None
    best_key = None

    def combo_key(combo: tuple[int, ...]):
        return tuple((objects[i], choices[i][ci].kind, choices[i][ci].label)
                     for i, ci in enumerate(combo))

    for combo in itertools.product(*(range(len(options)) for options in choices)):
        masses: dict[VerbPattern, float] = {}
        for i, ci in enumerate(combo):
            pattern = choices[i][ci]
            masses[pattern] = masses.get(pattern, 0.0) + probs[i]
        pattern_bits = 0.0
        conditional_bits = 0.0
        for i, ci in enumerate(combo):
            pattern_bits -= probs[i] * log2(masses[choices[i][ci]])
            conditional_bits += probs[i] * surprisals[i][ci]
        total = max(pattern_bits, 0.0) + theta * max(conditional_bits, 0.0)
        if total < best_total:
            best_total = total
            best_combo = combo
            best_key = None
        elif total == best_total and best_combo is not None:
            key = combo_key(combo)
            if best_key is None:
                best_key = combo_key(best_combo)
            if key < best_key:
                best_combo, best_key = combo, key

    assert best_combo is not None
    assignment = Assignment(verb, {objects[i]: choices[i][ci]
                                   for i, ci in enumerate(best_combo)})
    return assignment, description_length(assignment, dist, taxonomy, theta)
