from .alpha import (POLICIES, AlphaConfig, AlphaProfile, DomainStats,
                    compute_alpha, default_alpha_config, domain_term,
                    load_alpha_config, normalize_dissimilarities)
from .clarity import clarity
from .testability import (RequirementScore, score_requirement,
                          smelly_word_count, testability)

__all__ = [
    "POLICIES",
    "AlphaConfig",
    "AlphaProfile",
    "DomainStats",
    "RequirementScore",
    "clarity",
    "compute_alpha",
    "default_alpha_config",
    "domain_term",
    "load_alpha_config",
    "normalize_dissimilarities",
    "score_requirement",
    "smelly_word_count",
    "testability",
]
