from .lemmatizer import RuleLemmatizer, lemmatize
from .pipeline import AnalyzedText, analyze
from .sentences import Sentence, split_sentences
from .stopwords import load_stop_words, remove_stop_words
from .tagger import PerceptronTagger, default_tagger, pos_tag
from .tokenizer import Token, tokenize, word_tokens

__all__ = [
    "AnalyzedText",
    "PerceptronTagger",
    "RuleLemmatizer",
    "Sentence",
    "Token",
    "analyze",
    "default_tagger",
    "lemmatize",
    "load_stop_words",
    "pos_tag",
    "remove_stop_words",
    "split_sentences",
    "tokenize",
    "word_tokens",
]
