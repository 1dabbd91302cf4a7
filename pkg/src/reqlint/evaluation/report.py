"""Dataset-level evaluation: detection quality and score fidelity."""

import statistics
from dataclasses import dataclass

from ..errors import DegenerateRange, TooFewSamples, UnknownProject
from ..scoring.alpha import POLICIES
from ..scoring.clarity import clarity
from ..scoring.testability import (RequirementScore, score_requirement,
                                   testability)
from ..smells.types import Smell
from ..text import analyze
from .matching import aggregate_counts, match_record
from .metrics import (ErrorSummary, PrfScores, error_summary,
                      precision_recall)
from .ranks import permutation_pvalue, spearman
from .tree import RegressionTree, fit_regression_tree
from ..smells.detector import detect_smells


@dataclass(frozen=True)
class DetectionReport:
    """Per-smell detection quality over a labeled dataset."""

    counts: dict     # Smell -> MatchCounts
    per_smell: dict  # Smell -> PrfScores

    @property
    def average(self) -> PrfScores:
        """Unweighted mean over the nine smell rows, column by column."""
        scores = [self.per_smell[s] for s in Smell]
        return PrfScores(
            precision=statistics.fmean(s.precision for s in scores),
            recall=statistics.fmean(s.recall for s in scores),
            f1=statistics.fmean(s.f1 for s in scores),
        )

    def render_table(self) -> str:
        header = (f"{'smell':<22} {'tp':>4} {'fp':>4} {'fn':>4} "
                  f"{'precision':>10} {'recall':>8} {'f1':>8}")
        lines = [header]
        for smell in Smell:
            c = self.counts[smell]
            s = self.per_smell[smell]
            lines.append(
                f"{smell.column:<22} {c.tp:>4} {c.fp:>4} {c.fn:>4} "
                f"{s.precision:>10.4f} {s.recall:>8.4f} {s.f1:>8.4f}")
        avg = self.average
        lines.append(
            f"{'average':<22} {'':>4} {'':>4} {'':>4} "
            f"{avg.precision:>10.4f} {avg.recall:>8.4f} {avg.f1:>8.4f}")
        return "\n".join(lines)


def evaluate_detection(records, lexicon=None) -> DetectionReport:
    per_record = [
        match_record(record, detect_smells(analyze(record.text), lexicon))
        for record in records
    ]
    counts = aggregate_counts(per_record)
    per_smell = {smell: precision_recall(c) for smell, c in counts.items()}
    return DetectionReport(counts=counts, per_smell=per_smell)


def ground_truth_score(record, alphas: dict) -> RequirementScore:
    """Score a requirement from its annotations instead of the detector."""
    analyzed = analyze(record.text)
    n_words = analyzed.word_count
    c = clarity(record.smelly_word_count, n_words,
                record.smell_type_count)
    scores = {policy: testability(c, alpha, len(analyzed.sentences))
              for policy, alpha in alphas.items()}
    return RequirementScore(
        text=record.text,
        findings=(),
        n_words=n_words,
        n_smelly_words=record.smelly_word_count,
        n_smell_types=record.smell_type_count,
        n_sentences=len(analyzed.sentences),
        clarity=c,
        testability=scores,
    )


@dataclass(frozen=True)
class ScoreComparison:
    """Annotation-based vs detection-based testability, one policy."""

    policy: str
    truth: tuple
    predicted: tuple
    errors: ErrorSummary
    spearman: float | None
    pvalue: float | None


def compare_scores(records, profiles: dict, policy: str, lexicon=None,
                   permutations: int = 2000,
                   seed: int = 0) -> ScoreComparison:
    truth, predicted = [], []
    for record in records:
        if record.project not in profiles:
            raise UnknownProject(record.project)
        alphas = {policy: profiles[record.project].alpha(policy)}
        truth.append(ground_truth_score(record, alphas)
                     .testability[policy])
        predicted.append(score_requirement(record.text, alphas, lexicon)
                         .testability[policy])
    errors = error_summary(truth, predicted)
    if len(truth) < 2:
        rho = None
        pvalue = None
    else:
        try:
            rho = spearman(truth, predicted)
            pvalue = permutation_pvalue(truth, predicted,
                                        permutations=permutations,
                                        seed=seed)
        except DegenerateRange:
            rho = None
            pvalue = None
    return ScoreComparison(policy=policy, truth=tuple(truth),
                           predicted=tuple(predicted), errors=errors,
                           spearman=rho, pvalue=pvalue)


def smell_count_features(records):
    """Annotated word counts per smell, as a feature table."""
    names = [smell.column for smell in Smell]
    rows = [
        [float(sum(len(term.split()) for term in record.terms_for(smell)))
         for smell in Smell]
        for record in records
    ]
    return rows, names


@dataclass(frozen=True)
class EvaluationReport:
    n_requirements: int
    detection: DetectionReport
    scores: dict  # policy -> ScoreComparison
    tree: RegressionTree | None
    tree_note: str | None

    @property
    def average_f1(self) -> float:
        return self.detection.average.f1

    def to_json(self) -> dict:
        detection = {}
        for smell in Smell:
            c = self.detection.counts[smell]
            s = self.detection.per_smell[smell]
            detection[smell.column] = {
                "tp": c.tp, "fp": c.fp, "fn": c.fn,
                "precision": s.precision, "recall": s.recall, "f1": s.f1,
            }
        avg = self.detection.average
        detection["average"] = {
            "precision": avg.precision, "recall": avg.recall,
            "f1": avg.f1,
        }
        scores = {}
        for policy, comparison in self.scores.items():
            e = comparison.errors
            scores[policy] = {
                "mae": e.mae, "mse": e.mse, "rmse": e.rmse,
                "msle": e.msle, "mdae": e.mdae,
                "spearman": comparison.spearman,
                "pvalue": comparison.pvalue,
            }
        return {
            "n_requirements": self.n_requirements,
            "detection": detection,
            "scores": scores,
            "tree": self.tree.render() if self.tree else None,
            "tree_note": self.tree_note,
        }

    def render(self) -> str:
        lines = [f"requirements evaluated: {self.n_requirements}", "",
                 "detection", self.detection.render_table(), ""]
        for policy, comparison in self.scores.items():
            e = comparison.errors
            lines.append(f"scores ({policy})")
            lines.append(
                f"  mae={e.mae:.4f} mse={e.mse:.4f} rmse={e.rmse:.4f} "
                f"msle={e.msle:.4f} mdae={e.mdae:.4f}")
            if comparison.spearman is None:
                lines.append("  rank correlation undefined "
                             "(constant scores)")
            else:
                lines.append(
                    f"  spearman={comparison.spearman:.4f} "
                    f"(p={comparison.pvalue:.4f})")
            lines.append("")
        if self.tree is not None:
            lines.append("testability tree")
            lines.append(self.tree.render())
        elif self.tree_note:
            lines.append(f"testability tree skipped: {self.tree_note}")
        return "\n".join(lines)


def evaluate(records, profiles: dict, lexicon=None, policies=POLICIES,
             permutations: int = 2000, seed: int = 0,
             tree_policy: str = "softened", tree_max_depth: int = 3,
             tree_min_split: int = 10) -> EvaluationReport:
    """Run the full evaluation over a labeled dataset."""
    records = list(records)
    detection = evaluate_detection(records, lexicon)
    scores = {
        policy: compare_scores(records, profiles, policy, lexicon,
                               permutations=permutations, seed=seed)
        for policy in policies
    }
    if tree_policy in scores:
        targets = list(scores[tree_policy].truth)
    else:
        comparison = compare_scores(records, profiles, tree_policy,
                                    lexicon, permutations=1, seed=seed)
        targets = list(comparison.truth)
    rows, names = smell_count_features(records)
    tree = None
    tree_note = None
    try:
        tree = fit_regression_tree(rows, targets, feature_names=names,
                                   max_depth=tree_max_depth,
                                   min_split=tree_min_split)
    except TooFewSamples as err:
        tree_note = str(err)
    return EvaluationReport(
        n_requirements=len(records),
        detection=detection,
        scores=scores,
        tree=tree,
        tree_note=tree_note,
    )
