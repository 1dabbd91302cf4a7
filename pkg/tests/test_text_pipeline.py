from reqlint.text import analyze


def test_tokens_carry_tag_and_lemma():
    a = analyze("The systems were failing.")
    for tok in a.tokens:
        assert tok.tag is not None
        assert tok.lemma is not None
    by_surface = {t.surface: t.lemma for t in a.tokens}
    assert by_surface["systems"] == "system"
    assert by_surface["were"] == "be"
    assert by_surface["failing"] == "fail"


def test_sentence_association():
    a = analyze("Log requests. Reject duplicates.")
    assert len(a.sentences) == 2
    first = a.tokens_in_sentence(0)
    second = a.tokens_in_sentence(1)
    assert [t.surface for t in first] == ["Log", "requests", "."]
    assert [t.surface for t in second] == ["Reject", "duplicates", "."]
    for tok in first:
        assert a.sentence_index(tok) == 0
    for tok in second:
        assert a.sentence_index(tok) == 1


def test_word_count_ignores_punctuation():
    a = analyze("Stop, wait!")
    assert a.word_count == 2


def test_every_token_in_exactly_one_sentence():
    a = analyze("Alpha beta. Gamma delta? Epsilon.")
    counts = [0] * len(a.sentences)
    for tok in a.tokens:
        counts[a.sentence_index(tok)] += 1
    assert all(c > 0 for c in counts)
    assert sum(counts) == len(a.tokens)


def test_requirement_style_annotation():
    a = analyze("The system provides faster execution of pages while loading.")
    tags = {t.surface: t.tag for t in a.tokens}
    lemmas = {t.surface: t.lemma for t in a.tokens}
    assert tags["faster"] == "JJR"
    assert lemmas["faster"] == "fast"
    assert lemmas["pages"] == "page"
    assert tags["while"] == "IN"
