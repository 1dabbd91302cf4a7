"""Averaged-perceptron part-of-speech tagger with a binary weights format.

Penn Treebank tag set. Punctuation tokens are tagged by a fixed map; word
tokens go through the perceptron. Weights files start with the magic bytes
"RQLT1" followed by a version byte and a zlib-compressed JSON payload.
"""

import json
import zlib
from collections import defaultdict
from importlib import resources

from ..errors import WeightsFormatError

MAGIC = b"RQLT1"
FORMAT_VERSION = 1

START = ["-START-", "-START2-"]
END = ["-END-", "-END2-"]

# Deterministic tags for non-word tokens.
PUNCT_TAGS = {
    ",": ",", ".": ".", "!": ".", "?": ".", ";": ":", ":": ":",
    "(": "(", ")": ")", "[": "(", "]": ")", "{": "(", "}": ")",
    '"': "''", "'": "''", "`": "``", "‘": "``", "’": "''",
    "“": "``", "”": "''", "-": ":", "–": ":", "—": ":",
    "...": ":", "…": ":", "/": "SYM", "\\": "SYM",
    "%": "SYM", "&": "CC", "$": "$", "#": "SYM", "*": "SYM", "+": "SYM",
    "=": "SYM", "<": "SYM", ">": "SYM", "@": "SYM", "•": ":",
}
DEFAULT_PUNCT_TAG = "SYM"


def _normalize(word):
    if word.isdigit():
        return "!YEAR" if len(word) == 4 else "!DIGIT"
    if any(ch.isdigit() for ch in word):
        return "!HASDIGIT"
    return word.lower()


def _features(i, word, context, prev, prev2):
    """Feature dict for position i; `context` is padded with START/END."""
    features = defaultdict(int)

    def add(name, *args):
        features[" ".join((name,) + args)] += 1

    j = i + len(START)
    add("bias")
    add("i suffix", word[-3:])
    add("i pref1", word[0])
    add("i-1 tag", prev)
    add("i-2 tag", prev2)
    add("i tag+i-2 tag", prev, prev2)
    add("i word", context[j])
    add("i-1 tag+i word", prev, context[j])
    add("i-1 word", context[j - 1])
    add("i-1 suffix", context[j - 1][-3:])
    add("i-2 word", context[j - 2])
    add("i+1 word", context[j + 1])
    add("i+1 suffix", context[j + 1][-3:])
    add("i+2 word", context[j + 2])
    return features


class AveragedPerceptron:
    """Multiclass perceptron with weight averaging at the end of training."""

    def __init__(self):
        self.weights = {}
        self.classes = set()
        self._totals = defaultdict(float)
        self._tstamps = defaultdict(int)
        self._instances = 0

    def predict(self, features):
        scores = defaultdict(float)
        for feature, value in features.items():
            if feature not in self.weights or value == 0:
                continue
            for label, weight in self.weights[feature].items():
                scores[label] += value * weight
        # Ties break on the label string so inference is deterministic.
        return max(self.classes, key=lambda label: (scores[label], label))

    def update(self, truth, guess, features):
        self._instances += 1
        if truth == guess:
            return

        def upd(label, feature, delta):
            key = (feature, label)
            weight = self.weights.setdefault(feature, {}).get(label, 0.0)
            self._totals[key] += (self._instances - self._tstamps[key]) * weight
            self._tstamps[key] = self._instances
            self.weights[feature][label] = weight + delta

        for feature in features:
            upd(truth, feature, 1.0)
            upd(guess, feature, -1.0)

    def average_weights(self):
        for feature, labels in self.weights.items():
            for label, weight in list(labels.items()):
                key = (feature, label)
                total = self._totals[key]
                total += (self._instances - self._tstamps[key]) * weight
                averaged = round(total / self._instances, 4)
                if averaged:
                    labels[label] = averaged
                else:
                    del labels[label]


class PerceptronTagger:
    """Sequence tagger over word surfaces."""

    def __init__(self):
        self.model = AveragedPerceptron()
        self.tagdict = {}

    def tag_words(self, words):
        """Tag a list of word surfaces, returning a tag list."""
        context = START + [_normalize(w) for w in words] + END
        prev, prev2 = START
        tags = []
        for i, word in enumerate(words):
            tag = self.tagdict.get(_normalize(word))
            if tag is None:
                features = _features(i, _normalize(word), context, prev, prev2)
                tag = self.model.predict(features)
            tags.append(tag)
            prev2, prev = prev, tag
        return tags

    def train(self, sentences, iterations=8, seed=1):
        """Train from (words, tags) pairs; deterministic for a fixed seed."""
        import random

        self._make_tagdict(sentences)
        self.tagdict.update(PUNCT_TAGS)
        self.model.classes = {t for _, tags in sentences for t in tags}
        rng = random.Random(seed)
        data = list(sentences)
        for _ in range(iterations):
            rng.shuffle(data)
            for words, tags in data:
                context = START + [_normalize(w) for w in words] + END
                prev, prev2 = START
                for i, word in enumerate(words):
                    guess = self.tagdict.get(_normalize(word))
                    if guess is None:
                        features = _features(
                            i, _normalize(word), context, prev, prev2
                        )
                        guess = self.model.predict(features)
                        self.model.update(tags[i], guess, features)
                    prev2, prev = prev, guess
        self.model.average_weights()

    def _make_tagdict(self, sentences, min_count=10, ambiguity=0.99):
        counts = defaultdict(lambda: defaultdict(int))
        for words, tags in sentences:
            for word, tag in zip(words, tags):
                counts[_normalize(word)][tag] += 1
        for word, tag_counts in counts.items():
            tag, mode = max(tag_counts.items(), key=lambda kv: (kv[1], kv[0]))
            total = sum(tag_counts.values())
            if total >= min_count and mode / total >= ambiguity:
                self.tagdict[word] = tag

    def save(self, path):
        payload = {
            "classes": sorted(self.model.classes),
            "tagdict": self.tagdict,
            "weights": self.model.weights,
        }
        blob = zlib.compress(json.dumps(payload, sort_keys=True).encode("utf-8"), 9)
        with open(path, "wb") as handle:
            handle.write(MAGIC + bytes([FORMAT_VERSION]) + blob)

    @classmethod
    def load(cls, path=None):
        """Load weights from a path or the bundled default file."""
        if path is None:
            raw = (
                resources.files("reqlint.text")
                .joinpath("data", "tagger_weights.rqlt")
                .read_bytes()
            )
        else:
            with open(path, "rb") as handle:
                raw = handle.read()
        if raw[: len(MAGIC)] != MAGIC:
            raise WeightsFormatError("bad magic; not a tagger weights file")
        version = raw[len(MAGIC)]
        if version != FORMAT_VERSION:
            raise WeightsFormatError(f"unsupported weights version {version}")
        try:
            payload = json.loads(zlib.decompress(raw[len(MAGIC) + 1:]))
        except (zlib.error, json.JSONDecodeError) as exc:
            raise WeightsFormatError(f"corrupt weights payload: {exc}") from exc
        tagger = cls()
        tagger.model.classes = set(payload["classes"])
        tagger.tagdict = payload["tagdict"]
        tagger.model.weights = payload["weights"]
        return tagger


_default_tagger = None


def default_tagger():
    """The bundled tagger, loaded once per process."""
    global _default_tagger
    if _default_tagger is None:
        _default_tagger = PerceptronTagger.load()
    return _default_tagger


def pos_tag(tokens, tagger=None):
    """Return a new token list with tags filled in.

    Word tokens are tagged by the perceptron (with punctuation context);
    non-word tokens get fixed punctuation tags.
    """
    if tagger is None:
        tagger = default_tagger()
    tags = tagger.tag_words([t.surface for t in tokens])
    out = []
    for token, tag in zip(tokens, tags):
        if not token.is_word:
            tag = PUNCT_TAGS.get(token.surface, DEFAULT_PUNCT_TAG)
        out.append(token.with_tag(tag))
    return out
