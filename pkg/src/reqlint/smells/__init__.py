from .detector import detect_in_text, detect_smells
from .lexicon import (Lexicon, LexiconEntry, default_lexicon, load_lexicon,
                      save_lexicon)
from .types import (LEXICON_SMELLS, NEGATION_CUES, UNCERTAIN_MODALS, Smell,
                    SmellFinding)

__all__ = [
    "LEXICON_SMELLS",
    "Lexicon",
    "LexiconEntry",
    "NEGATION_CUES",
    "Smell",
    "SmellFinding",
    "UNCERTAIN_MODALS",
    "default_lexicon",
    "detect_in_text",
    "detect_smells",
    "load_lexicon",
    "save_lexicon",
]
