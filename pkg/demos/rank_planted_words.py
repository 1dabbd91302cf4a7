import random

from reqlint.dictionary.builder import build_dictionary
from reqlint.dictionary.corpus import DomainCorpus

print("== RANKING WORDS BY CROSS-DOMAIN STABILITY ==============")

# Two tiny synthetic domains.  "stack" keeps the same companions in
# both; "bank" switches from money words to river words.  A useful
# ranking puts the meaning-shifting word at the bottom.

SHARED = ["push", "pop", "frame", "heap", "queue", "node"]
MONEY = ["money", "loan", "account", "deposit", "credit", "teller"]
RIVER = ["river", "water", "shore", "stream", "flood", "mud"]
FILLER = ["green", "stone", "cloud", "window", "engine", "paper"]

print("1. generating the corpora...")
rng = random.Random(7)


def sentence(anchor, context):
    words = [anchor, anchor]
    for _ in range(rng.randint(5, 9)):
        words.append(rng.choice(context if rng.random() < 0.8 else FILLER))
    rng.shuffle(words)
    return words


corpora = {"REF": DomainCorpus(name="REF"),
           "OTHER": DomainCorpus(name="OTHER")}
for name, bank_context in (("REF", MONEY), ("OTHER", RIVER)):
    doc = []
    for _ in range(300):
        roll = rng.random()
        if roll < 0.35:
            doc.append(sentence("stack", SHARED))
        elif roll < 0.7:
            doc.append(sentence("bank", bank_context))
        else:
            doc.append([rng.choice(FILLER) for _ in range(7)])
    corpora[name].documents.extend(doc)
    print(f"   {name}: {len(doc)} sentences")

print("2. training one embedding per domain pairing...")
ranked = build_dictionary(corpora, reference="REF", top_n=2,
                          dim=30, min_count=2, epochs=5, seed=7)

print("3. the ranking (ascending mean similarity)...")
for entry in ranked:
    flag = "  <- candidate" if entry.mean < ranked.threshold else ""
    print(f"   {entry.word:<8s} mean={entry.mean:.4f}{flag}")

print("4. interpreting...")
low, high = ranked.entries[0], ranked.entries[-1]
print(f"   {low.word!r} drifts between domains while {high.word!r} "
      f"keeps its meaning")
assert low.word == "bank" and high.word == "stack"
