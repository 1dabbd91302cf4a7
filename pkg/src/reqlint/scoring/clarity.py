"""Clarity score: how much of a requirement is free of smells."""

from ..errors import InvalidCounts


def clarity(n_smelly_words: int, n_words: int, n_smell_types: int) -> float:
    """Clarity of a requirement from its smell counts.

    A clean requirement has clarity 1.  Otherwise the smelly-word ratio
    is taken to the power 1/t where t is the number of distinct smell
    types present: many different smells in one requirement hurt more
    than many instances of the same smell.
    """
    if n_words <= 0:
        raise InvalidCounts(f"word count must be positive, got {n_words}")
    if n_smelly_words < 0:
        raise InvalidCounts(
            f"smelly word count cannot be negative, got {n_smelly_words}")
    if n_smelly_words > n_words:
        raise InvalidCounts(
            f"smelly words ({n_smelly_words}) exceed words ({n_words})")
    if n_smell_types < 0:
        raise InvalidCounts(
            f"smell type count cannot be negative, got {n_smell_types}")
    if n_smelly_words == 0:
        return 1.0
    if n_smell_types == 0:
        raise InvalidCounts(
            "smelly words present but smell type count is zero")
    return 1.0 - (n_smelly_words / n_words) ** (1.0 / n_smell_types)
