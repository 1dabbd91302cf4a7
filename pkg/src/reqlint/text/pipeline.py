"""End-to-end text annotation: sentences, tokens, tags, lemmas."""

from dataclasses import dataclass

from .lemmatizer import RuleLemmatizer
from .sentences import Sentence, split_sentences
from .tagger import default_tagger, pos_tag
from .tokenizer import Token, tokenize


@dataclass(frozen=True)
class AnalyzedText:
    """A text with its sentence ranges and fully annotated tokens.

    Token offsets are relative to the original text, so a token can be
    mapped back to its sentence by comparing spans.
    """

    text: str
    sentences: list[Sentence]
    tokens: list[Token]

    def sentence_index(self, token: Token) -> int:
        for i, sent in enumerate(self.sentences):
            if sent.start <= token.start < sent.end:
                return i
        raise ValueError(f"token at {token.start} is outside every sentence")

    def tokens_in_sentence(self, index: int) -> list[Token]:
        sent = self.sentences[index]
        return [t for t in self.tokens if sent.start <= t.start < sent.end]

    @property
    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_word)


_lemmatizer = RuleLemmatizer()


def analyze(text: str, tagger=None) -> AnalyzedText:
    """Split, tokenize, tag and lemmatize ``text``.

    Tokens come back with both ``tag`` and ``lemma`` filled in.  Tagging
    runs per sentence so that context never leaks across a sentence
    boundary.
    """
    sentences = split_sentences(text)
    if tagger is None:
        tagger = default_tagger()

    annotated: list[Token] = []
    all_tokens = tokenize(text)
    for i in range(len(sentences)):
        sent = sentences[i]
        sent_tokens = [t for t in all_tokens if sent.start <= t.start < sent.end]
        tagged = pos_tag(sent_tokens, tagger=tagger)
        for tok in tagged:
            if tok.is_word:
                lemma = _lemmatizer.lemmatize(tok.surface, tok.tag)
            else:
                lemma = tok.surface
            annotated.append(tok.with_lemma(lemma))
    return AnalyzedText(text=text, sentences=sentences, tokens=annotated)
