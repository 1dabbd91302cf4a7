"""Match annotated ground-truth terms against detector findings.

Both sides are reduced to the same canonical form (casefolded,
word-by-word lemmas) so an annotator writing "calls" matches a finding
reported as "call", and vice versa.  Matching is per smell over term
multisets: each annotated occurrence needs its own finding.
"""

from collections import Counter

from ..smells.types import Smell
from ..text.lemmatizer import RuleLemmatizer
from .metrics import MatchCounts

_lemmatizer = RuleLemmatizer()


def canonical_term(term: str) -> str:
    words = term.casefold().split()
    return " ".join(_lemmatizer.lemmatize(word) for word in words)


def match_record(record, findings) -> dict:
    """Per-smell counts for one requirement.

    ``record`` carries the annotated terms; ``findings`` come from the
    detector on the same text.
    """
    found_keys = {}
    for finding in findings:
        found_keys.setdefault(finding.smell, []).append(
            canonical_term(finding.matched_text))

    counts = {}
    for smell in Smell:
        annotated = Counter(canonical_term(t)
                            for t in record.terms_for(smell))
        found = Counter(found_keys.get(smell, ()))
        tp = sum((annotated & found).values())
        counts[smell] = MatchCounts(
            tp=tp,
            fp=sum(found.values()) - tp,
            fn=sum(annotated.values()) - tp,
        )
    return counts


def aggregate_counts(per_record) -> dict:
    totals = {smell: MatchCounts(0, 0, 0) for smell in Smell}
    for counts in per_record:
        for smell, c in counts.items():
            totals[smell] = totals[smell] + c
    return totals
