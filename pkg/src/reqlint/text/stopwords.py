"""Stop-word list loading and filtering."""

from importlib import resources

from ..errors import FormatError

_DEFAULT_RESOURCE = "stopwords_en.txt"


def load_stop_words(path=None):
    """Load a stop-word set: UTF-8, one entry per line, '#' comments.

    With no path, loads the bundled 194-entry English list. Entries are
    lowercased; blank lines are skipped; a duplicate entry is a FormatError.
    """
    if path is None:
        text = (
            resources.files("reqlint.text")
            .joinpath("data", _DEFAULT_RESOURCE)
            .read_text(encoding="utf-8")
        )
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    words = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entry = line.lower()
        if entry in words:
            raise FormatError(f"duplicate stop word {entry!r}", line=number)
        words.add(entry)
    return frozenset(words)


def remove_stop_words(lemmas, stop_words):
    """Filter a lemma sequence, keeping order; matching is case-insensitive."""
    return [w for w in lemmas if w.lower() not in stop_words]
