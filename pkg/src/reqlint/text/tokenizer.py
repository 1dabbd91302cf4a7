"""Regex tokenizer producing word and punctuation tokens with char spans."""

import re
from dataclasses import dataclass, replace

# Tokens are matched in order: dotted abbreviations, numbers (with decimal
# points / digit-group commas), words (hyphen and apostrophe compounds),
# ellipses, then any single non-space character.
_TOKEN_RE = re.compile(
    r"""(?:[A-Za-z]\.){2,}
      | \d+(?:[.,]\d+)*
      | [A-Za-z0-9_]+(?:['’-][A-Za-z0-9_]+)*
      | \.\.\.
      | …
      | \S
    """,
    re.VERBOSE,
)

# Contracted endings split into their own tokens, PTB style.
_CLITICS = ("n't", "'s", "'re", "'ve", "'ll", "'d", "'m")

_WORD_CHAR_RE = re.compile(r"[A-Za-z0-9]")


@dataclass(frozen=True)
class Token:
    """One token: surface slice [start, end), word flag, optional lemma/tag."""

    surface: str
    start: int
    end: int
    is_word: bool
    lemma: str = None
    tag: str = None

    def with_lemma(self, lemma):
        return replace(self, lemma=lemma)

    def with_tag(self, tag):
        return replace(self, tag=tag)


def _is_word(surface):
    return bool(_WORD_CHAR_RE.search(surface))


def _split_clitics(surface, start):
    """Yield (surface, start, end) pieces, splitting one trailing clitic."""
    lowered = surface.lower()
    if lowered == "cannot":
        yield surface[:3], start, start + 3
        yield surface[3:], start + 3, start + 6
        return
    for clitic in _CLITICS:
        if lowered.endswith(clitic) and len(surface) > len(clitic):
            cut = len(surface) - len(clitic)
            head = surface[:cut]
            # "o'clock" style words keep their apostrophe; only split when the
            # head is itself word-like and does not end with an apostrophe.
            if head and head[-1] not in "'’":
                yield head, start, start + cut
                yield surface[cut:], start + cut, start + len(surface)
                return
    yield surface, start, start + len(surface)


def tokenize(text):
    """Tokenize text into ordered, non-overlapping tokens.

    Joining the surfaces with the original inter-token gaps reconstructs the
    text exactly. Hyphenated compounds stay single tokens; contracted
    endings ("n't", "'s", ...) become separate tokens; punctuation tokens
    have is_word False.
    """
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        for surface, start, end in _split_clitics(match.group(), match.start()):
            tokens.append(Token(surface, start, end, _is_word(surface)))
    return tokens


def word_tokens(tokens):
    """The subset of tokens that count as words."""
    return [t for t in tokens if t.is_word]
