"""Smell taxonomy shared by the detector, lexicon and dataset formats."""

from dataclasses import dataclass
from enum import Enum


class Smell(Enum):
    """The nine requirement smells.

    ``code`` is the stable short identifier used in lexicon files,
    ``column`` is the dataset column that carries ground-truth terms for
    the smell.
    """

    SUBJECTIVE_LANGUAGE = ("S1", "subjective_language")
    AMBIGUOUS_ADV_ADJ = ("S2", "ambiguous_adv_adj")
    NON_VERIFIABLE_TERM = ("S3", "non_verifiable_term")
    SUPERLATIVE = ("S4", "superlative")
    COMPARATIVE = ("S5", "comparative")
    NEGATIVE_STATEMENT = ("S6", "negative")
    VAGUE_PRONOUN = ("S7", "vague_pronoun")
    UNCERTAIN_VERB = ("S8", "uncertain_verb")
    POLYSEMY = ("S9", "polysemy")

    def __init__(self, code: str, column: str):
        self.code = code
        self.column = column

    @classmethod
    def from_code(cls, code: str) -> "Smell":
        for smell in cls:
            if smell.code == code:
                return smell
        raise KeyError(code)

    @classmethod
    def from_column(cls, column: str) -> "Smell":
        for smell in cls:
            if smell.column == column:
                return smell
        raise KeyError(column)


# Smells whose terms come from a word dictionary rather than POS rules.
LEXICON_SMELLS = frozenset({
    Smell.SUBJECTIVE_LANGUAGE,
    Smell.AMBIGUOUS_ADV_ADJ,
    Smell.NON_VERIFIABLE_TERM,
    Smell.POLYSEMY,
})

# Modal verbs that signal weak commitment.  shall, will and must bind
# the supplier and are deliberately absent.
UNCERTAIN_MODALS = frozenset({"may", "might", "can", "could", "should"})

# Word forms that negate the clause they appear in.
NEGATION_CUES = frozenset({"not", "n't", "no", "never", "neither", "nor"})


@dataclass(frozen=True)
class SmellFinding:
    """One detected smell occurrence.

    ``start``/``end`` are character offsets into the analyzed text,
    ``matched_text`` is the surface slice, ``lemma_key`` the lemma
    sequence that matched (lexicon hits) or the single lemma (POS hits),
    and ``source`` is "pos" or "lexicon".
    """

    smell: Smell
    start: int
    end: int
    matched_text: str
    lemma_key: str
    source: str

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)
