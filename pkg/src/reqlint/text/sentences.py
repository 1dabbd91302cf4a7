"""Sentence splitting with abbreviation and decimal handling."""

from dataclasses import dataclass

from ..errors import EmptyText

TERMINATORS = ".!?"

# Closing characters that may sit between a terminator and the following space.
CLOSERS = "\"')]}»’”"

# Lowercased tokens (including the trailing period) that do not end a sentence.
ABBREVIATIONS = {
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "al.", "et.", "no.", "nos.",
    "fig.", "figs.", "sec.", "secs.", "eq.", "eqs.", "approx.", "dept.",
    "inc.", "ltd.", "co.", "corp.", "dr.", "mr.", "mrs.", "ms.", "prof.",
    "st.", "jr.", "sr.", "rev.", "min.", "max.", "resp.", "ca.",
}


@dataclass(frozen=True)
class Sentence:
    """One sentence with its [start, end) character range in the source text."""

    text: str
    start: int
    end: int


def _token_before(text, dot_index):
    """The maximal non-space run ending at text[dot_index] (the period included)."""
    i = dot_index
    while i > 0 and not text[i - 1].isspace():
        i -= 1
    return text[i:dot_index + 1]


def _is_abbreviation_dot(text, i):
    token = _token_before(text, i).lower()
    if token in ABBREVIATIONS:
        return True
    # Single-letter initials such as the first period in "U. Smith".
    if len(token) == 2 and token[0].isalpha():
        return True
    # Interior periods of dotted abbreviations ("U.S.", "e.g.") never have a
    # following space, so only the final period reaches this check; forms like
    # "u.s." are caught by the multi-dot shape.
    if token.count(".") >= 2 and all(len(p) <= 2 for p in token[:-1].split(".")):
        return True
    return False


def split_sentences(text):
    """Split text into sentences covering every non-whitespace character.

    A sentence ends at '.', '!' or '?' (plus any closing quotes/brackets)
    followed by whitespace or end of text. Periods inside known
    abbreviations, initials, and decimal numbers do not terminate.
    Raises EmptyText for blank input.
    """
    if not text or not text.strip():
        raise EmptyText("cannot split blank text")

    boundaries = []
    n = len(text)
    for i, ch in enumerate(text):
        if ch not in TERMINATORS:
            continue
        j = i + 1
        while j < n and text[j] in CLOSERS:
            j += 1
        if j < n and not text[j].isspace():
            continue
        if ch == ".":
            if i + 1 < n and text[i + 1].isdigit():
                continue
            if i > 0 and text[i - 1].isdigit() and i + 1 < n and text[i + 1].isdigit():
                continue
            if _is_abbreviation_dot(text, i):
                continue
        boundaries.append(j)

    sentences = []
    cursor = 0
    for b in boundaries:
        piece = text[cursor:b]
        if piece.strip():
            start = cursor + (len(piece) - len(piece.lstrip()))
            end = cursor + len(piece.rstrip())
            sentences.append(Sentence(text[start:end], start, end))
        cursor = b
    tail = text[cursor:]
    if tail.strip():
        start = cursor + (len(tail) - len(tail.lstrip()))
        end = cursor + len(tail.rstrip())
        sentences.append(Sentence(text[start:end], start, end))
    return sentences
