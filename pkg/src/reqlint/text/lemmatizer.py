"""Rule-based English lemmatizer: exception table plus suffix rules.

Suffix stripping is deliberately conservative. Verb/noun endings are only
stripped when the POS hint licenses them or, for untagged input, when the
candidate stem validates against a core vocabulary; comparative and
superlative endings additionally accept a curated gradable-adjective list.
Unknown words come back as their lowercased surface.
"""

# Irregular and no-strip forms, surface -> lemma.
EXCEPTIONS = {
    "is": "be", "am": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have",
    "does": "do", "did": "do", "done": "do",
    "goes": "go", "went": "go", "gone": "go",
    "said": "say", "made": "make", "given": "give", "taken": "take",
    "seen": "see", "shown": "show", "known": "know", "found": "find",
    "sent": "send", "built": "build", "kept": "keep", "got": "get",
    "held": "hold", "met": "meet", "set": "set", "put": "put", "let": "let",
    "read": "read", "ran": "run", "run": "run", "came": "come",
    "gave": "give", "took": "take", "saw": "see", "wrote": "write",
    "written": "write", "chose": "choose", "chosen": "choose",
    "agreed": "agree", "freed": "free", "guaranteed": "guarantee",
    "better": "good", "best": "good", "worse": "bad", "worst": "bad",
    "more": "more", "most": "most", "less": "less", "least": "least",
    "children": "child", "men": "man", "women": "woman", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "people": "people", "data": "data",
    "criteria": "criterion", "indices": "index", "matrices": "matrix",
    "analyses": "analysis", "statuses": "status", "axes": "axis",
    "series": "series", "species": "species", "news": "news",
    "gas": "gas", "lens": "lens", "bias": "bias", "alias": "alias",
    "always": "always", "perhaps": "perhaps", "besides": "besides",
    "towards": "towards", "whereas": "whereas", "its": "its",
    "hers": "hers", "ours": "ours", "yours": "yours", "theirs": "theirs",
    "n't": "not", "wo": "will", "ca": "can", "sha": "shall",
    "an": "an", "as": "as",
}

# Tag-dependent irregulars checked before the general table.
TAGGED_EXCEPTIONS = {
    ("left", "VBD"): "leave",
    ("left", "VBN"): "leave",
    ("saw", "VBD"): "see",
    ("found", "VBD"): "find",
    ("found", "VBN"): "find",
}

# Adjective stems whose -er/-est forms strip even without a POS hint.
GRADABLE_STEMS = frozenset("""
    fast high long large big small great low slow short safe new old strong
    weak late early easy simple hard soft quick deep wide narrow cheap clear
    close cold warm hot dark light heavy rich poor young broad clean fair
    fine full smart tight loose tough rough smooth sharp flat thin thick
    rare strict
""".split())

# Core vocabulary used to validate candidate stems for untagged input.
VALIDATION_VOCAB = frozenset("""
    access acquire add agree allow analyze apply base build cache calculate
    call carry change check choose clean clear close commit compare compute
    configure connect copy count crash crawl create danger define delete
    deliver describe design detect determine develop die display do embed
    employ enable ensure enter evaluate exceed execute expect export fail
    fetch file filter find fit fix form format generate get give go group
    handle happen have help hold identify ignore implement import include
    increase index insert install issue keep know label learn let limit link
    list load lock log look make manage map mark match measure merge modify
    monitor move name need note notify obtain offer open operate order parse pass
    permit place plan point present print process produce provide publish put
    push query queue quote raise range rank reach read receive record reduce
    refer reject release reload remove rename render repeat replace report
    request require reset resolve restore retain retrieve return review run
    save scale schedule score search select send serve set share show sign
    skip sort specify split start state stop store submit support sync tag
    take test time trace track train transfer transform translate try type
    update upload use validate value verify view wait work write
""".split())

_VOWELS = "aeiou"


def _validate(stem, trust):
    """Pick the right stem variant: bare, undoubled, or with restored 'e'."""
    undoubled = None
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "lsez":
        undoubled = stem[:-1]
    restored = stem + "e"
    for candidate in (stem, undoubled, restored):
        if candidate and candidate in VALIDATION_VOCAB:
            return candidate
    if not trust:
        return None
    # POS hint says the suffix is real; fall back to shape heuristics.
    if undoubled:
        return undoubled
    if stem and stem[-1] in "cuvz" or stem.endswith(("at", "iz", "as", "us")):
        return restored
    return stem


def _strip_plural(word):
    if len(word) < 4 or not word.endswith("s"):
        return None
    if word.endswith(("ss", "us", "is")):
        return None
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(("sses", "xes", "ches", "shes", "zzes", "oes")):
        return word[:-2]
    return word[:-1]


def _strip_ing(word, trust):
    if len(word) < 5 or not word.endswith("ing"):
        return None
    return _validate(word[:-3], trust)


def _strip_ed(word, trust):
    if len(word) < 4 or not word.endswith("ed") or word.endswith("eed"):
        return None
    if word.endswith("ied") and len(word) > 4:
        return word[:-3] + "y"
    return _validate(word[:-2], trust)


def _strip_grade(word, suffix, tagged):
    """Strip a comparative/superlative ending when licensed."""
    if not word.endswith(suffix) or len(word) - len(suffix) < 2:
        return None
    stem = word[: -len(suffix)]
    if stem.endswith("i"):
        stem = stem[:-1] + "y"
    candidates = [stem]
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "ls":
        candidates.append(stem[:-1])
    candidates.append(stem + "e")
    for candidate in candidates:
        if candidate in GRADABLE_STEMS:
            return candidate
    if tagged:
        return candidates[1] if len(candidates) == 3 else stem
    return None


class RuleLemmatizer:
    """Maps inflected surfaces to lemmas; idempotent on its own outputs."""

    def lemmatize(self, surface, tag=None):
        word = surface.lower()
        if tag and (word, tag) in TAGGED_EXCEPTIONS:
            return TAGGED_EXCEPTIONS[(word, tag)]
        if word in EXCEPTIONS:
            return EXCEPTIONS[word]
        if not word.isalpha():
            return word

        if tag is None:
            result = (
                _strip_plural(word)
                or _strip_ing(word, trust=False)
                or _strip_ed(word, trust=False)
                or _strip_grade(word, "est", tagged=False)
                or _strip_grade(word, "er", tagged=False)
            )
            return result or word

        if tag in ("NNS", "NNPS", "VBZ"):
            return _strip_plural(word) or word
        if tag == "VBG":
            return _strip_ing(word, trust=True) or word
        if tag in ("VBD", "VBN"):
            return _strip_ed(word, trust=True) or word
        if tag in ("JJR", "RBR"):
            return _strip_grade(word, "er", tagged=True) or word
        if tag in ("JJS", "RBS"):
            return _strip_grade(word, "est", tagged=True) or word
        return word


_DEFAULT = RuleLemmatizer()


def lemmatize(token_or_text, tag=None):
    """Lemmatize a Token (using its tag) or a plain string."""
    if hasattr(token_or_text, "surface"):
        token = token_or_text
        return _DEFAULT.lemmatize(token.surface, tag if tag else token.tag)
    return _DEFAULT.lemmatize(token_or_text, tag)
