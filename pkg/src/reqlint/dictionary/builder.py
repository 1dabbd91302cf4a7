"""Cross-domain smelly-word ranking.

The reference domain's most frequent words are looked up in every other
domain.  Occurrences there get an underscore prefix, each marked domain
corpus is merged with the reference corpus, and one embedding is
trained per pairing.  A word whose plain and prefixed vectors stay
close keeps one meaning across domains; a low mean similarity marks a
candidate smelly word.
"""

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..errors import FormatError, MissingColumn, RowError
from ..smells.lexicon import Lexicon, LexiconEntry
from ..smells.types import Smell
from .corpus import PREFIX, prefix_occurrences, top_frequent_words
from .embedding import train_cbow

CANDIDATE_THRESHOLD = 0.5943


@dataclass(frozen=True)
class RankedWord:
    word: str
    similarities: dict  # domain -> cosine similarity
    mean: float


class RankedDictionary:
    """Words of the reference domain ranked by cross-domain stability."""

    def __init__(self, reference: str, domains, entries,
                 threshold: float = CANDIDATE_THRESHOLD):
        self.reference = reference
        self.domains = list(domains)
        self.entries = sorted(entries, key=lambda e: (e.mean, e.word))
        self.threshold = threshold

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def candidates(self) -> list:
        """Entries below the threshold, i.e. likely smelly words."""
        return [e for e in self.entries if e.mean < self.threshold]

    def mean_of(self, word: str) -> float:
        for entry in self.entries:
            if entry.word == word:
                return entry.mean
        raise KeyError(word)

    def to_lexicon(self, assignments=None,
                   default_smell=Smell.POLYSEMY) -> Lexicon:
        """Candidates as a loadable lexicon.

        ``assignments`` optionally maps words to their smell; anything
        unlisted gets ``default_smell``.
        """
        assignments = assignments or {}
        lexicon = Lexicon()
        for entry in self.candidates():
            smell = assignments.get(entry.word, default_smell)
            lexicon.add(LexiconEntry(key=entry.word, smell=smell,
                                     mean_similarity=entry.mean))
        return lexicon


def build_dictionary(corpora: dict, reference: str, top_n=1000,
                     threshold=CANDIDATE_THRESHOLD, dim=50, window=10,
                     min_count=5, negative=5, epochs=5,
                     learning_rate=0.025, seed=0) -> RankedDictionary:
    if reference not in corpora:
        raise FormatError(f"reference domain {reference!r} not in corpora")
    ref = corpora[reference]
    tops = top_frequent_words(ref, top_n)
    paired = [name for name in sorted(corpora) if name != reference]
    if not paired:
        raise FormatError("need at least one domain besides the reference")

    similarities = {w: {} for w in tops}
    for domain in paired:
        marked = prefix_occurrences(corpora[domain].documents, tops)
        merged = list(ref.documents) + marked
        model = train_cbow(merged, dim=dim, window=window,
                           min_count=min_count, negative=negative,
                           epochs=epochs, learning_rate=learning_rate,
                           seed=seed)
        for word in tops:
            prefixed = PREFIX + word
            if word in model and prefixed in model:
                similarities[word][domain] = model.similarity(word, prefixed)

    entries = []
    for word in tops:
        sims = similarities[word]
        if not sims:
            continue  # never frequent enough in any pairing
        entries.append(RankedWord(
            word=word,
            similarities=dict(sims),
            mean=float(np.mean(list(sims.values()))),
        ))
    return RankedDictionary(reference=reference, domains=paired,
                            entries=entries, threshold=threshold)


def sensitivity_by_domain(ranked: RankedDictionary) -> dict:
    """Re-rank with each domain left out and report candidate flips.

    For every paired domain, means are recomputed from the stored
    similarities without that domain's column.  The report lists words
    entering or leaving the candidate set and the largest mean shift.
    """
    report = {}
    for dropped in ranked.domains:
        entered, left = [], []
        max_shift = 0.0
        for entry in ranked.entries:
            rest = {d: s for d, s in entry.similarities.items()
                    if d != dropped}
            if not rest:
                continue
            new_mean = float(np.mean(list(rest.values())))
            max_shift = max(max_shift, abs(new_mean - entry.mean))
            was = entry.mean < ranked.threshold
            now = new_mean < ranked.threshold
            if now and not was:
                entered.append(entry.word)
            elif was and not now:
                left.append(entry.word)
        report[dropped] = {
            "entered": entered,
            "left": left,
            "max_mean_shift": max_shift,
        }
    return report


def save_ranking(ranked: RankedDictionary, path):
    """Write the full ranking as CSV: word, one column per domain, mean."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["word"] + ranked.domains + ["mean"])
        for entry in ranked.entries:
            row = [entry.word]
            for domain in ranked.domains:
                sim = entry.similarities.get(domain)
                row.append("" if sim is None else f"{sim:.6f}")
            row.append(f"{entry.mean:.6f}")
            writer.writerow(row)


def load_ranking(path, reference="", threshold=CANDIDATE_THRESHOLD
                 ) -> RankedDictionary:
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise FormatError("ranking file is empty") from None
        if len(header) < 3 or header[0] != "word" or header[-1] != "mean":
            raise MissingColumn("word ... mean")
        domains = header[1:-1]
        entries = []
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise RowError(
                    f"expected {len(header)} fields, got {len(row)}",
                    row=row_no)
            sims = {}
            try:
                for domain, cell in zip(domains, row[1:-1]):
                    if cell.strip():
                        sims[domain] = float(cell)
                mean = float(row[-1])
            except ValueError:
                raise RowError("similarity is not a number",
                               row=row_no) from None
            entries.append(RankedWord(word=row[0], similarities=sims,
                                      mean=mean))
    return RankedDictionary(reference=reference, domains=domains,
                            entries=entries, threshold=threshold)
