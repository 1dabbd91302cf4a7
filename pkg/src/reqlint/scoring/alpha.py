"""Per-sentence cost factor (alpha) from project aspects.

Alpha averages four aspects: how far the application domain sits from
everyday technical language, system criticality, requirement type and
whether the document uses a single-sentence template.  Each aspect maps
to an interval; the softened policy reads the lower bounds, the
hardened policy the upper bounds.
"""

import csv
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..errors import (DegenerateRange, DuplicateKey, FormatError,
                      InvalidCounts, UnknownDomainCode)

POLICIES = ("softened", "hardened")

CONFIG_HEADER = ["kind", "key", "softened", "hardened"]


@dataclass(frozen=True)
class AlphaConfig:
    criticality: dict
    requirement_type: dict
    template: dict
    domains: dict

    def aspect(self, name: str) -> dict:
        return getattr(self, name)


@dataclass(frozen=True)
class DomainStats:
    """Raw corpus statistics for one application domain."""

    code: str
    avg_similarity: float
    vocabulary: int
    words: int

    @property
    def dissimilarity(self) -> float:
        if self.words <= 0 or self.vocabulary <= 0:
            raise InvalidCounts(
                f"domain {self.code}: vocabulary and word counts "
                "must be positive")
        return (1.0 - self.avg_similarity) * self.vocabulary / self.words


def normalize_dissimilarities(values: dict) -> dict:
    """Min-max scale raw dissimilarities to [0, 1]."""
    if not values:
        raise InvalidCounts("no domains to normalize")
    low = min(values.values())
    high = max(values.values())
    if high == low:
        raise DegenerateRange(
            "all domains have the same dissimilarity, cannot normalize")
    return {code: (v - low) / (high - low) for code, v in values.items()}


def _parse_config(text: str) -> AlphaConfig:
    sections = {"criticality": {}, "requirement_type": {}, "template": {},
                "domain": {}}
    saw_header = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = next(csv.reader([line]))
        if not saw_header:
            if [f.strip() for f in row] != CONFIG_HEADER:
                raise FormatError(
                    f"expected header {','.join(CONFIG_HEADER)!r}",
                    line=line_no)
            saw_header = True
            continue
        if len(row) != 4:
            raise FormatError(f"expected 4 fields, got {len(row)}",
                              line=line_no)
        kind, key, soft, hard = (f.strip() for f in row)
        if kind not in sections:
            raise FormatError(f"unknown kind {kind!r}", line=line_no)
        if key in sections[kind]:
            raise DuplicateKey(f"duplicate {kind} entry {key!r}",
                               line=line_no)
        try:
            if kind == "domain":
                value = float(soft)
                if not 0.0 <= value <= 1.0:
                    raise FormatError(
                        f"domain value {value} outside [0, 1]", line=line_no)
                sections[kind][key] = value
            else:
                lo, hi = float(soft), float(hard)
                if not 0.0 <= lo <= hi <= 1.0:
                    raise FormatError(
                        f"bounds ({lo}, {hi}) must sit inside [0, 1] "
                        "with softened <= hardened", line=line_no)
                sections[kind][key] = (lo, hi)
        except ValueError:
            raise FormatError("numeric field is not a number",
                              line=line_no) from None
    if not saw_header:
        raise FormatError("missing header line")
    for kind, table in sections.items():
        if not table:
            raise FormatError(f"no {kind} entries")
    return AlphaConfig(criticality=sections["criticality"],
                       requirement_type=sections["requirement_type"],
                       template=sections["template"],
                       domains=sections["domain"])


def load_alpha_config(path=None) -> AlphaConfig:
    if path is None:
        ref = resources.files("reqlint.scoring").joinpath(
            "data/alpha_config.csv")
        text = ref.read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return _parse_config(text)


_default_config = None


def default_alpha_config() -> AlphaConfig:
    global _default_config
    if _default_config is None:
        _default_config = load_alpha_config()
    return _default_config


def domain_term(domains, config: AlphaConfig) -> float:
    """Mean normalized dissimilarity over the project's domains."""
    if not domains:
        raise UnknownDomainCode("project declares no domains")
    values = []
    for code in domains:
        if code not in config.domains:
            raise UnknownDomainCode(code)
        values.append(config.domains[code])
    return sum(values) / len(values)


def _aspect_value(table: dict, option: str, policy: str, aspect: str):
    if option not in table:
        raise FormatError(f"unknown {aspect} level {option!r}")
    lo, hi = table[option]
    return lo if policy == "softened" else hi


@dataclass(frozen=True)
class AlphaProfile:
    """Project-level inputs for alpha.

    ``pinned`` optionally fixes the alpha for a policy, bypassing the
    computation; projects scored with an externally agreed alpha use it.
    """

    domains: tuple
    criticality: str
    requirement_type: str
    template: str
    pinned: dict = field(default_factory=dict)

    def alpha(self, policy: str, config: AlphaConfig | None = None) -> float:
        if policy not in POLICIES:
            raise FormatError(f"unknown policy {policy!r}")
        if policy in self.pinned:
            return self.pinned[policy]
        if config is None:
            config = default_alpha_config()
        return compute_alpha(self.domains, self.criticality,
                             self.requirement_type, self.template,
                             policy, config)


def compute_alpha(domains, criticality: str, requirement_type: str,
                  template: str, policy: str,
                  config: AlphaConfig | None = None) -> float:
    if policy not in POLICIES:
        raise FormatError(f"unknown policy {policy!r}")
    if config is None:
        config = default_alpha_config()
    total = (domain_term(domains, config)
             + _aspect_value(config.criticality, criticality, policy,
                             "criticality")
             + _aspect_value(config.requirement_type, requirement_type,
                             policy, "requirement type")
             + _aspect_value(config.template, template, policy, "template"))
    return total / 4.0
