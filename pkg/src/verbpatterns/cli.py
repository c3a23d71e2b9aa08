"""Batch command line front end.

Subcommands:
  extract        solve every verb in a corpus and write patterns.jsonl plus
                 a run manifest (config, seed, input digests)
  stats          per-verb phrase/pattern counts from a patterns file
  eval           coverage/precision of learned or baseline patterns against
                 gold labels
  conceptualize  rank concepts for an entity, optionally verb-aware

All randomness is seeded and per-verb solves are independent, so identical
inputs and flags reproduce byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .conceptualize import (IDIOM_STOP, KNOWN_CONCEPT, conceptualize_known_phrase,
                            prior_from_patterns, rank_concepts)
from .corpus import PhraseCorpus, load_corpus, phrase_distribution
from .errors import VerbPatternsError
from .evaluate import (assign_baseline, evaluation_counts, load_gold_labels,
                       load_test_phrases)
from .patterns import (CONCEPT, assignment_store, load_patterns_jsonl,
                       pattern_record, pattern_distribution, weighted_patterns)
from .solver import SolverConfig, load_idiom_dictionary, solve
from .taxonomy import Taxonomy, load_taxonomy


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def _nonnegative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verbpatterns",
        description="Summarize verb-object phrases into idiom and concept patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    extract = sub.add_parser("extract", help="solve all verbs and write patterns.jsonl")
    extract.add_argument("--corpus", required=True, help="phrase TSV: verb, object, count")
    extract.add_argument("--taxonomy", required=True, help="taxonomy TSV: concept, entity, count")
    extract.add_argument("--idioms", help="dictionary TSV of verb, object pairs locked to idioms")
    extract.add_argument("--out", required=True, help="output patterns.jsonl path")
    extract.add_argument("--theta", type=_nonnegative_float, default=0.25,
                         help="weight of the conditional code length (default 0.25)")
    extract.add_argument("--gamma", type=_positive_float, default=0.01,
                         help="idiom typicality constant (default 0.01)")
    extract.add_argument("--t0", type=_positive_float, default=1.0,
                         help="initial temperature in bits (default 1.0)")
    extract.add_argument("--cooling-a", type=_positive_float, default=0.5,
                         help="cooling exponent (default 0.5)")
    extract.add_argument("--beta", type=_positive_int, default=200,
                         help="stop after this many unchanged iterations (default 200)")
    extract.add_argument("--restarts", type=_positive_int, default=4,
                         help="independent chains per verb (default 4)")
    extract.add_argument("--seed", type=int, default=0, help="base RNG seed (default 0)")
    extract.add_argument("--min-freq", type=_positive_int, default=5,
                         help="drop phrases rarer than this (default 5)")
    extract.add_argument("--max-iterations", type=_positive_int, default=None,
                         help="iteration cap per chain (default: 20x pattern universe)")
    extract.add_argument("--workers", type=_positive_int, default=1,
                         help="parallel verb solves (default 1)")
    extract.set_defaults(handler=_run_extract)

    stats = sub.add_parser("stats", help="per-verb pattern statistics")
    stats.add_argument("--patterns", required=True, help="patterns.jsonl from extract")
    stats.set_defaults(handler=_run_stats)

    evaluate = sub.add_parser("eval", help="coverage/precision against gold labels")
    evaluate.add_argument("--patterns", required=True, help="patterns.jsonl from extract")
    evaluate.add_argument("--test", required=True, help="test TSV: verb, object")
    evaluate.add_argument("--gold", required=True,
                          help="gold TSV: verb, object, kind, label")
    evaluate.add_argument("--baseline", choices=["ib", "cb"],
                          help="evaluate a baseline instead of the learned patterns")
    evaluate.add_argument("--corpus", help="required with --baseline")
    evaluate.add_argument("--taxonomy", help="required with --baseline cb")
    evaluate.add_argument("--min-freq", type=_positive_int, default=5)
    evaluate.set_defaults(handler=_run_eval)

    concept = sub.add_parser("conceptualize", help="rank concepts for an entity")
    concept.add_argument("--patterns", required=True, help="patterns.jsonl from extract")
    concept.add_argument("--taxonomy", required=True)
    concept.add_argument("--entity", required=True)
    concept.add_argument("--verb", help="verb context; enables the learned prior")
    concept.add_argument("--context", help="comma-separated context entities")
    concept.add_argument("--top", type=_positive_int, default=None,
                         help="print only the top k concepts")
    concept.add_argument("--epsilon", type=_nonnegative_float, default=0.0,
                         help="additive smoothing of every factor (default 0, i.e. off)")
    concept.set_defaults(handler=_run_conceptualize)
    return parser


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _extract_verb_records(verb: str, corpus: PhraseCorpus, taxonomy: Taxonomy,
                          idioms: set[tuple[str, str]],
                          cfg: SolverConfig) -> tuple[str, list[dict]]:
    result = solve(verb, corpus, taxonomy, idioms, cfg)
    dist = phrase_distribution(corpus, verb)
    masses = pattern_distribution(result.assignment, dist)
    members: dict = {}
    for obj, pattern in result.assignment.mapping.items():
        members.setdefault(pattern, []).append(obj)
    ordered = sorted(masses, key=lambda a: (-masses[a], a.kind, a.label))
    records = []
    for pattern in ordered:
        phrases = [{"object": obj, "count": corpus.count(verb, obj), "p": dist[obj]}
                   for obj in sorted(members[pattern])]
        records.append(pattern_record(pattern, masses[pattern], phrases))
    return verb, records


def _run_extract(args) -> int:
    corpus = load_corpus(args.corpus, min_count=args.min_freq)
    taxonomy = load_taxonomy(args.taxonomy)
    idioms = load_idiom_dictionary(args.idioms) if args.idioms else set()
    cfg = SolverConfig(theta=args.theta, gamma=args.gamma, t0=args.t0,
                       cooling_a=args.cooling_a, beta=args.beta, seed=args.seed,
                       restarts=args.restarts, max_iterations=args.max_iterations)
    verbs = corpus.verbs()
    worker = partial(_extract_verb_records, corpus=corpus, taxonomy=taxonomy,
                     idioms=idioms, cfg=cfg)
    if args.workers > 1 and len(verbs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            by_verb = dict(pool.map(worker, verbs))
    else:
        by_verb = dict(worker(verb) for verb in verbs)

    n_patterns = 0
    with open(args.out, "w", encoding="utf-8") as out:
        for verb in verbs:  # deterministic merge order
            for record in by_verb[verb]:
                out.write(json.dumps(record, ensure_ascii=False) + "\n")
                n_patterns += 1

    manifest = {
        "command": "extract",
        "config": {
            "theta": cfg.theta, "gamma": cfg.gamma, "t0": cfg.t0,
            "cooling_a": cfg.cooling_a, "beta": cfg.beta, "seed": cfg.seed,
            "restarts": cfg.restarts, "max_iterations": cfg.max_iterations,
            "min_freq": args.min_freq, "workers": args.workers,
        },
        "inputs": {
            "corpus": {"path": args.corpus, "sha256": _sha256(args.corpus)},
            "taxonomy": {"path": args.taxonomy, "sha256": _sha256(args.taxonomy)},
            "idioms": ({"path": args.idioms, "sha256": _sha256(args.idioms)}
                       if args.idioms else None),
        },
        "output": args.out,
        "verbs": len(verbs),
        "patterns": n_patterns,
    }
    with open(args.out + ".manifest.json", "w", encoding="utf-8") as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True)
        handle.write("\n")
    print(f"wrote {n_patterns} patterns for {len(verbs)} verbs to {args.out}")
    return 0


def _run_stats(args) -> int:
    records = load_patterns_jsonl(args.patterns)
    by_verb: dict[str, list[dict]] = {}
    for record in records:
        by_verb.setdefault(record["verb"], []).append(record)
    total_phrases = 0
    total_patterns = 0
    total_concept_phrases = 0
    for verb in sorted(by_verb):
        verb_records = by_verb[verb]
        n_phrases = sum(len(r["phrases"]) for r in verb_records)
        n_concept = sum(len(r["phrases"]) for r in verb_records if r["kind"] == CONCEPT)
        fraction = n_concept / n_phrases if n_phrases else 0.0
        print(f"{verb}\tphrases={n_phrases}\tpatterns={len(verb_records)}"
              f"\tconceptualized_fraction={fraction:.6f}")
        total_phrases += n_phrases
        total_patterns += len(verb_records)
        total_concept_phrases += n_concept
    n_verbs = len(by_verb)
    if n_verbs:
        overall = total_concept_phrases / total_phrases if total_phrases else 0.0
        print(f"overall\tverbs={n_verbs}\tavg_phrases={total_phrases / n_verbs:.2f}"
              f"\tavg_patterns={total_patterns / n_verbs:.2f}"
              f"\tconceptualized_fraction={overall:.6f}")
    else:
        print("overall\tverbs=0")
    return 0


def _run_eval(args) -> int:
    test_phrases = load_test_phrases(args.test)
    gold = load_gold_labels(args.gold)
    if args.baseline:
        if not args.corpus:
            raise VerbPatternsError("--baseline requires --corpus")
        if args.baseline == "cb" and not args.taxonomy:
            raise VerbPatternsError("--baseline cb requires --taxonomy")
        corpus = load_corpus(args.corpus, min_count=args.min_freq)
        taxonomy = load_taxonomy(args.taxonomy) if args.taxonomy \
            else Taxonomy.from_counts({})
        store = {verb: assign_baseline(verb, corpus, taxonomy, args.baseline)
                 for verb in sorted({p.verb for p in test_phrases})
                 if verb in corpus}
    else:
        store = assignment_store(load_patterns_jsonl(args.patterns))
    counts = evaluation_counts(test_phrases, store, gold)
    coverage = counts.n_cover / counts.n_all if counts.n_all else 0.0
    print(f"n_all={counts.n_all} n_cover={counts.n_cover} coverage={coverage:.6f}")
    if counts.n_judged:
        precision = counts.n_correct / counts.n_judged
        print(f"n_judged={counts.n_judged} n_correct={counts.n_correct}"
              f" precision={precision:.6f}")
    else:
        print("n_judged=0 n_correct=0 precision=n/a")
    return 0


def _run_conceptualize(args) -> int:
    taxonomy = load_taxonomy(args.taxonomy)
    records = load_patterns_jsonl(args.patterns)
    context = [e for e in (args.context.split(",") if args.context else []) if e]
    output = {
        "entity": args.entity,
        "verb": args.verb,
        "context": context,
        "epsilon": args.epsilon,
    }
    if args.verb:
        known = conceptualize_known_phrase(args.verb, args.entity,
                                           assignment_store(records))
        if known.status == KNOWN_CONCEPT:
            output["mode"] = "known-concept"
            output["concepts"] = [{"concept": known.concept, "score": 1.0}]
            print(json.dumps(output, ensure_ascii=False))
            return 0
        if known.status == IDIOM_STOP:
            output["mode"] = "idiom-stop"
            output["concepts"] = []
            print(json.dumps(output, ensure_ascii=False))
            return 0
    priors = {verb: prior_from_patterns(verb, pairs)
              for verb, pairs in weighted_patterns(records).items()}
    ranked = rank_concepts(args.entity, context, args.verb, taxonomy, priors,
                           epsilon=args.epsilon)
    if args.top is not None:
        ranked = ranked[:args.top]
    output["mode"] = "ranked"
    output["concepts"] = [{"concept": concept, "score": score}
                          for concept, score in ranked]
    print(json.dumps(output, ensure_ascii=False))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (VerbPatternsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
