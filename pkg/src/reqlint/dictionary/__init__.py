from .builder import (CANDIDATE_THRESHOLD, RankedDictionary, RankedWord,
                      build_dictionary, load_ranking, save_ranking,
                      sensitivity_by_domain)
from .corpus import (DomainCorpus, clean_text, ingest_corpus,
                     prefix_occurrences, top_frequent_words)
from .crawler import WikiCrawler
from .embedding import CbowModel, train_cbow

__all__ = [
    "CANDIDATE_THRESHOLD",
    "CbowModel",
    "DomainCorpus",
    "RankedDictionary",
    "RankedWord",
    "WikiCrawler",
    "build_dictionary",
    "clean_text",
    "ingest_corpus",
    "load_ranking",
    "prefix_occurrences",
    "save_ranking",
    "sensitivity_by_domain",
    "top_frequent_words",
    "train_cbow",
]
