"""Small CBOW word embedding trainer with negative sampling.

Deterministic for a given seed: vocabulary order, weight init and
negative draws all come from one PCG64 stream, so two runs produce
byte-identical vectors.  The context window is fixed (not sampled),
which keeps results reproducible and is close enough to the usual
shrinking-window variant for ranking purposes.
"""

from collections import Counter

import numpy as np

from ..errors import CorpusTooSmall

MIN_TOKENS_PER_DIM = 10


class CbowModel:
    """Trained embedding: word -> dense vector."""

    def __init__(self, words, vectors):
        self.words = list(words)
        self.index = {w: i for i, w in enumerate(self.words)}
        self.vectors = vectors

    @property
    def vocabulary(self):
        return list(self.words)

    def __contains__(self, word) -> bool:
        return word in self.index

    def __len__(self) -> int:
        return len(self.words)

    def vector(self, word) -> np.ndarray:
        return self.vectors[self.index[word]].copy()

    def similarity(self, a: str, b: str) -> float:
        va, vb = self.vector(a), self.vector(b)
        denom = float(np.linalg.norm(va) * np.linalg.norm(vb))
        if denom == 0.0:
            return 0.0
        return float(va @ vb) / denom


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-x))


def train_cbow(documents, dim=50, window=10, min_count=5, negative=5,
               epochs=5, learning_rate=0.025, seed=0) -> CbowModel:
    """Train CBOW with negative sampling over cleaned documents.

    ``documents`` is an iterable of token lists.  Words below
    ``min_count`` are ignored entirely.
    """
    counts = Counter()
    for doc in documents:
        counts.update(doc)
    vocab = sorted((w for w, c in counts.items() if c >= min_count),
                   key=lambda w: (-counts[w], w))
    if not vocab:
        raise CorpusTooSmall(
            f"no words reach min_count={min_count}")
    index = {w: i for i, w in enumerate(vocab)}

    encoded = []
    total_tokens = 0
    for doc in documents:
        ids = np.array([index[w] for w in doc if w in index],
                       dtype=np.int64)
        if len(ids) >= 2:
            encoded.append(ids)
            total_tokens += len(ids)
    if total_tokens < MIN_TOKENS_PER_DIM * dim:
        raise CorpusTooSmall(
            f"corpus has {total_tokens} trainable tokens, "
            f"need at least {MIN_TOKENS_PER_DIM * dim} for dim={dim}")

    rng = np.random.Generator(np.random.PCG64(seed))
    vocab_size = len(vocab)
    w_in = (rng.random((vocab_size, dim)) - 0.5) / dim
    w_out = np.zeros((vocab_size, dim))

    freq = np.array([counts[w] for w in vocab], dtype=np.float64)
    noise_cum = np.cumsum(freq ** 0.75)
    noise_total = noise_cum[-1]

    total_updates = total_tokens * epochs
    processed = 0
    min_lr = learning_rate * 1e-4

    for _ in range(epochs):
        for doc in encoded:
            n = len(doc)
            for pos in range(n):
                lr = max(learning_rate * (1.0 - processed / total_updates),
                         min_lr)
                processed += 1
                lo = 0 if pos < window else pos - window
                hi = min(n, pos + window + 1)
                if hi - lo <= 1:
                    continue
                context = np.concatenate((doc[lo:pos], doc[pos + 1:hi]))
                target = doc[pos]

                h = w_in[context].mean(axis=0)
                draws = rng.random(negative) * noise_total
                negatives = np.searchsorted(noise_cum, draws)
                negatives = negatives[negatives != target]
                outs = np.concatenate(([target], negatives))

                labels = np.zeros(len(outs))
                labels[0] = 1.0
                score = _sigmoid(w_out[outs] @ h)
                g = (labels - score) * lr
                grad_h = g @ w_out[outs]
                np.add.at(w_out, outs, np.outer(g, h))
                np.add.at(w_in, context, grad_h / len(context))

    return CbowModel(vocab, w_in)
