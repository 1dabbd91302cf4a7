"""Testability: clarity discounted by the cost of extra sentences."""

from dataclasses import dataclass

from ..errors import InvalidCounts
from ..smells.detector import detect_smells
from ..smells.lexicon import Lexicon
from ..text.pipeline import analyze
from .clarity import clarity


def testability(clarity_value: float, alpha: float,
                n_sentences: int) -> float:
    """Discount clarity by (1 + alpha) for every sentence after the
    first.  A one-sentence requirement keeps its clarity unchanged.
    """
    if n_sentences < 1:
        raise InvalidCounts(
            f"requirement needs at least one sentence, got {n_sentences}")
    if not 0.0 <= clarity_value <= 1.0:
        raise InvalidCounts(f"clarity {clarity_value} outside [0, 1]")
    if alpha < 0.0:
        raise InvalidCounts(f"alpha cannot be negative, got {alpha}")
    return clarity_value / (1.0 + alpha) ** (n_sentences - 1)


@dataclass(frozen=True)
class RequirementScore:
    """Detection-based clarity and testability for one requirement."""

    text: str
    findings: tuple
    n_words: int
    n_smelly_words: int
    n_smell_types: int
    n_sentences: int
    clarity: float
    testability: dict  # policy name -> value


def smelly_word_count(findings) -> int:
    """Total words covered by findings; a two-word match counts twice."""
    return sum(len(f.matched_text.split()) for f in findings)


def score_requirement(text: str, alphas: dict,
                      lexicon: Lexicon | None = None) -> RequirementScore:
    """Analyze, detect and score one requirement.

    ``alphas`` maps policy names to alpha values, e.g. the softened and
    hardened alphas of the owning project.
    """
    analyzed = analyze(text)
    findings = detect_smells(analyzed, lexicon)
    n_words = analyzed.word_count
    n_smelly = smelly_word_count(findings)
    n_types = len({f.smell for f in findings})
    c = clarity(n_smelly, n_words, n_types)
    scores = {policy: testability(c, alpha, len(analyzed.sentences))
              for policy, alpha in alphas.items()}
    return RequirementScore(
        text=text,
        findings=tuple(findings),
        n_words=n_words,
        n_smelly_words=n_smelly,
        n_smell_types=n_types,
        n_sentences=len(analyzed.sentences),
        clarity=c,
        testability=scores,
    )
