"""Smell detection over analyzed text.

Two passes per sentence: tag rules claim single tokens first, then the
lexicon is matched greedily (longest key first) over the remaining runs
of word tokens.  Runs break at punctuation and at tokens a tag rule
already claimed, so a multi-word key never jumps across either.
"""

from ..text.pipeline import AnalyzedText, analyze
from .lexicon import Lexicon, default_lexicon
from .pos_rules import NOUN_TAGS, match_pos_rule
from .types import SmellFinding


def _pos_pass(tokens):
    findings = {}
    noun_seen = False
    for idx, tok in enumerate(tokens):
        if not tok.is_word:
            continue
        smell = match_pos_rule(tok, noun_seen)
        if smell is not None:
            findings[idx] = SmellFinding(
                smell=smell,
                start=tok.start,
                end=tok.end,
                matched_text=tok.surface,
                lemma_key=(tok.lemma or tok.surface).lower(),
                source="pos",
            )
        if tok.tag in NOUN_TAGS:
            noun_seen = True
    return findings


def _lexicon_runs(tokens, claimed):
    run = []
    for idx, tok in enumerate(tokens):
        if tok.is_word and idx not in claimed:
            run.append(tok)
        else:
            if run:
                yield run
            run = []
    if run:
        yield run


def _lexicon_pass(tokens, claimed, lexicon: Lexicon):
    findings = []
    for run in _lexicon_runs(tokens, claimed):
        lemmas = [(t.lemma or t.surface).lower() for t in run]
        i = 0
        while i < len(run):
            entry = None
            length = 0
            for width in range(min(lexicon.max_key_words,
                                   len(run) - i), 0, -1):
                entry = lexicon.lookup(lemmas[i:i + width])
                if entry is not None:
                    length = width
                    break
            if entry is None:
                i += 1
                continue
            first, last = run[i], run[i + length - 1]
            findings.append(SmellFinding(
                smell=entry.smell,
                start=first.start,
                end=last.end,
                matched_text=" ".join(t.surface for t in run[i:i + length]),
                lemma_key=entry.key,
                source="lexicon",
            ))
            i += length
    return findings


def detect_smells(analyzed: AnalyzedText,
                  lexicon: Lexicon | None = None) -> list[SmellFinding]:
    if lexicon is None:
        lexicon = default_lexicon()
    findings = []
    for s in range(len(analyzed.sentences)):
        tokens = analyzed.tokens_in_sentence(s)
        pos_findings = _pos_pass(tokens)
        findings.extend(pos_findings.values())
        findings.extend(_lexicon_pass(tokens, set(pos_findings), lexicon))
    findings.sort(key=lambda f: (f.start, f.end))
    return findings


def detect_in_text(text: str,
                   lexicon: Lexicon | None = None) -> list[SmellFinding]:
    """Convenience wrapper: analyze then detect."""
    return detect_smells(analyze(text), lexicon)
