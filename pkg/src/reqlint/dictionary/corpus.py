"""Domain corpus ingestion and cleaning for dictionary building."""

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import CorpusTooSmall, FormatError
from ..text.lemmatizer import RuleLemmatizer
from ..text.stopwords import load_stop_words
from ..text.tokenizer import tokenize

PREFIX = "_"


def clean_text(text: str, stop_words=None,
               lemmatizer: RuleLemmatizer | None = None) -> list[str]:
    """Lowercase, tokenize, drop stop words and punctuation, lemmatize."""
    if stop_words is None:
        stop_words = load_stop_words()
    if lemmatizer is None:
        lemmatizer = _shared_lemmatizer()
    out = []
    for token in tokenize(text.lower()):
        if not token.is_word:
            continue
        surface = token.surface
        if surface in stop_words:
            continue
        lemma = lemmatizer.lemmatize(surface)
        if lemma in stop_words:
            continue
        out.append(lemma)
    return out


_lemmatizer = None


def _shared_lemmatizer():
    global _lemmatizer
    if _lemmatizer is None:
        _lemmatizer = RuleLemmatizer()
    return _lemmatizer


@dataclass
class DomainCorpus:
    """Cleaned documents of one application domain."""

    name: str
    documents: list = field(default_factory=list)  # lists of lemmas

    @property
    def word_count(self) -> int:
        return sum(len(doc) for doc in self.documents)

    @property
    def vocabulary(self) -> set:
        return {w for doc in self.documents for w in doc}

    @property
    def vocabulary_size(self) -> int:
        return len(self.vocabulary)

    def counts(self) -> Counter:
        counter = Counter()
        for doc in self.documents:
            counter.update(doc)
        return counter


def ingest_corpus(root) -> dict:
    """Read ``root/<domain>/<doc>.txt`` into cleaned domain corpora."""
    root = Path(root)
    if not root.is_dir():
        raise FormatError(f"corpus directory {root} does not exist")
    stop_words = load_stop_words()
    lemmatizer = _shared_lemmatizer()
    corpora = {}
    for domain_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        corpus = DomainCorpus(name=domain_dir.name)
        for doc_path in sorted(domain_dir.glob("*.txt")):
            tokens = clean_text(doc_path.read_text(encoding="utf-8"),
                                stop_words, lemmatizer)
            if tokens:
                corpus.documents.append(tokens)
        if not corpus.documents:
            raise CorpusTooSmall(
                f"domain {domain_dir.name!r} has no usable documents")
        corpora[corpus.name] = corpus
    if not corpora:
        raise FormatError(f"no domain directories under {root}")
    return corpora


def top_frequent_words(corpus: DomainCorpus, n: int) -> list[str]:
    """The n most frequent words; ties resolve alphabetically."""
    counts = corpus.counts()
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [word for word, _ in ranked[:n]]


def prefix_occurrences(documents, words) -> list:
    """Prefix every occurrence of ``words`` with an underscore."""
    marked = set(words)
    return [[PREFIX + w if w in marked else w for w in doc]
            for doc in documents]
