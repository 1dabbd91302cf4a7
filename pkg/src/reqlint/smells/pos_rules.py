"""Tag-driven smell rules.

These fire before lexicon lookup; a token claimed by a rule never
participates in a dictionary match.
"""

from .types import NEGATION_CUES, UNCERTAIN_MODALS, Smell

SUPERLATIVE_TAGS = frozenset({"JJS", "RBS"})
COMPARATIVE_TAGS = frozenset({"JJR", "RBR"})
RELATIVE_PRONOUN_TAGS = frozenset({"WDT", "WP"})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})

# "this" and "it" are vague only when nothing in the sentence so far
# could be their referent.
ANAPHORS = frozenset({"this", "it"})


def match_pos_rule(token, noun_seen_in_sentence: bool) -> Smell | None:
    """Return the smell a single token triggers, if any."""
    tag = token.tag or ""
    word = (token.lemma or token.surface).lower()
    surface = token.surface.lower()

    if tag in SUPERLATIVE_TAGS:
        return Smell.SUPERLATIVE
    if tag in COMPARATIVE_TAGS:
        return Smell.COMPARATIVE
    if surface in NEGATION_CUES or word in NEGATION_CUES:
        return Smell.NEGATIVE_STATEMENT
    if tag in RELATIVE_PRONOUN_TAGS:
        return Smell.VAGUE_PRONOUN
    if word in ANAPHORS and not noun_seen_in_sentence:
        return Smell.VAGUE_PRONOUN
    if tag == "MD" and word in UNCERTAIN_MODALS:
        return Smell.UNCERTAIN_VERB
    return None
