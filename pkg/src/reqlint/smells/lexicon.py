"""Smelly-word lexicon: CSV loading, validation and lookup."""

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import DuplicateKey, FormatError, UnknownSmellCode
from .types import LEXICON_SMELLS, Smell

HEADER = ["term", "smell", "mean_similarity"]
MAX_KEY_WORDS = 5

_LEXICON_CODES = {s.code: s for s in LEXICON_SMELLS}


@dataclass(frozen=True)
class LexiconEntry:
    key: str
    smell: Smell
    mean_similarity: float | None

    @property
    def lemmas(self) -> tuple[str, ...]:
        return tuple(self.key.split())


class Lexicon:
    """Maps lemma sequences (1 to 5 lemmas) to dictionary smells."""

    def __init__(self, entries=()):
        self._entries: dict[str, LexiconEntry] = {}
        self.max_key_words = 1
        for entry in entries:
            self.add(entry)

    def add(self, entry: LexiconEntry):
        if entry.key in self._entries:
            raise DuplicateKey(f"duplicate lexicon term {entry.key!r}")
        self._entries[entry.key] = entry
        self.max_key_words = max(self.max_key_words, len(entry.lemmas))

    def lookup(self, lemmas) -> LexiconEntry | None:
        return self._entries.get(" ".join(lemmas))

    def __contains__(self, key: str) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries.values())

    @property
    def version(self) -> str:
        """Content fingerprint, stable across row order."""
        import hashlib
        blob = "\n".join(sorted(
            f"{e.key},{e.smell.code},{e.mean_similarity}"
            for e in self._entries.values()))
        return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _parse_row(row, line_no):
    if len(row) != 3:
        raise FormatError(
            f"expected 3 fields, got {len(row)}", line=line_no)
    term, code, mean = (field.strip() for field in row)
    if not term:
        raise FormatError("empty term", line=line_no)
    if term != term.lower():
        raise FormatError(f"term {term!r} is not lowercase", line=line_no)
    parts = term.split()
    if len(parts) > MAX_KEY_WORDS:
        raise FormatError(
            f"term {term!r} has {len(parts)} words, limit is "
            f"{MAX_KEY_WORDS}", line=line_no)
    smell = _LEXICON_CODES.get(code)
    if smell is None:
        raise UnknownSmellCode(
            f"smell code {code!r} is not a dictionary smell", line=line_no)
    if mean == "":
        value = None
    else:
        try:
            value = float(mean)
        except ValueError:
            raise FormatError(
                f"mean_similarity {mean!r} is not a number",
                line=line_no) from None
    return LexiconEntry(key=" ".join(parts), smell=smell,
                        mean_similarity=value)


def load_lexicon(path=None) -> Lexicon:
    """Read a lexicon CSV.

    Lines starting with ``#`` and blank lines are skipped.  The first
    data line must be the ``term,smell,mean_similarity`` header.
    """
    if path is None:
        ref = resources.files("reqlint.smells").joinpath(
            "data/default_lexicon.csv")
        text = ref.read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")

    lexicon = Lexicon()
    saw_header = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = next(csv.reader([line]))
        if not saw_header:
            if [f.strip() for f in row] != HEADER:
                raise FormatError(
                    f"expected header {','.join(HEADER)!r}", line=line_no)
            saw_header = True
            continue
        try:
            lexicon.add(_parse_row(row, line_no))
        except DuplicateKey as err:
            raise DuplicateKey(str(err), line=line_no) from None
    if not saw_header:
        raise FormatError("missing header line")
    return lexicon


def save_lexicon(lexicon: Lexicon, path):
    """Write entries back out in the loadable CSV format."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(HEADER)
        for entry in sorted(lexicon, key=lambda e: e.key):
            mean = "" if entry.mean_similarity is None \
                else f"{entry.mean_similarity:.4f}"
            writer.writerow([entry.key, entry.smell.code, mean])


_default = None


def default_lexicon() -> Lexicon:
    global _default
    if _default is None:
        _default = load_lexicon()
    return _default
