"""Labeled requirement datasets and project profiles.

A dataset row holds one requirement, its project and the ground-truth
smelly terms per smell column.  Inside a column, ``*`` separates terms
and ``-`` (or an empty field) means no terms.  Files are regular
RFC-4180 CSV with a fixed header.
"""

import csv
import io
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import FormatError, MissingColumn, RowError
from .scoring.alpha import AlphaProfile
from .smells.types import Smell

DATASET_COLUMNS = ["text", "project"] + [s.column for s in Smell]
PROFILE_COLUMNS = ["project", "domains", "criticality", "requirement_type",
                   "template", "alpha_softened", "alpha_hardened"]

EMPTY_FIELD = "-"
TERM_SEPARATOR = "*"


@dataclass(frozen=True)
class GroundTruthRecord:
    """One labeled requirement."""

    text: str
    project: str
    terms: dict = field(default_factory=dict)  # Smell -> tuple of terms

    @property
    def smelly_word_count(self) -> int:
        """Total annotated words; multi-word terms count every word."""
        return sum(len(term.split())
                   for terms in self.terms.values() for term in terms)

    @property
    def smell_type_count(self) -> int:
        return sum(1 for terms in self.terms.values() if terms)

    def terms_for(self, smell: Smell) -> tuple:
        return self.terms.get(smell, ())


def _parse_terms(field_value: str):
    value = field_value.strip()
    if value in ("", EMPTY_FIELD):
        return ()
    return tuple(t.strip() for t in value.split(TERM_SEPARATOR) if t.strip())


def _validate_terms(record: GroundTruthRecord, row_no: int):
    lowered = record.text.lower()
    for smell, terms in record.terms.items():
        for term in terms:
            if term.lower() not in lowered:
                raise RowError(
                    f"term {term!r} ({smell.column}) does not occur in "
                    f"the requirement text", row=row_no)


def load_dataset(path=None) -> list:
    """Read a labeled dataset; default is the bundled reference corpus."""
    if path is None:
        ref = resources.files("reqlint").joinpath(
            "data/reference_requirements.csv")
        text = ref.read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")

    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("dataset file is empty") from None
    for column in DATASET_COLUMNS:
        if column not in header:
            raise MissingColumn(column)
    index = {name: header.index(name) for name in DATASET_COLUMNS}

    records = []
    for row_no, row in enumerate(reader, start=2):
        if not row or all(not f.strip() for f in row):
            continue
        if len(row) != len(header):
            raise RowError(
                f"expected {len(header)} fields, got {len(row)}", row=row_no)
        text_value = row[index["text"]].strip()
        if not text_value:
            raise RowError("empty requirement text", row=row_no)
        project = row[index["project"]].strip()
        if not project:
            raise RowError("empty project name", row=row_no)
        terms = {}
        for smell in Smell:
            parsed = _parse_terms(row[index[smell.column]])
            if parsed:
                terms[smell] = parsed
        record = GroundTruthRecord(text=text_value, project=project,
                                   terms=terms)
        _validate_terms(record, row_no)
        records.append(record)
    return records


def save_dataset(records, path):
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(DATASET_COLUMNS)
        for record in records:
            row = [record.text, record.project]
            for smell in Smell:
                terms = record.terms_for(smell)
                row.append(TERM_SEPARATOR.join(terms) if terms
                           else EMPTY_FIELD)
            writer.writerow(row)


def load_profiles(path=None) -> dict:
    """Read project profiles; default is the bundled reference set.

    Returns a mapping of project name to AlphaProfile.  The two alpha
    columns, when filled, pin that policy's alpha instead of computing
    it from the aspect columns.
    """
    if path is None:
        ref = resources.files("reqlint").joinpath(
            "data/reference_profiles.csv")
        text = ref.read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")

    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("profile file is empty") from None
    for column in PROFILE_COLUMNS:
        if column not in header:
            raise MissingColumn(column)
    index = {name: header.index(name) for name in PROFILE_COLUMNS}

    profiles = {}
    for row_no, row in enumerate(reader, start=2):
        if not row or all(not f.strip() for f in row):
            continue
        if len(row) != len(header):
            raise RowError(
                f"expected {len(header)} fields, got {len(row)}", row=row_no)
        project = row[index["project"]].strip()
        if not project:
            raise RowError("empty project name", row=row_no)
        if project in profiles:
            raise RowError(f"duplicate project {project!r}", row=row_no)
        domains = tuple(d.strip() for d in
                        row[index["domains"]].split("+") if d.strip())
        if not domains:
            raise RowError("no domains listed", row=row_no)
        pinned = {}
        for policy, column in (("softened", "alpha_softened"),
                               ("hardened", "alpha_hardened")):
            value = row[index[column]].strip()
            if value:
                try:
                    pinned[policy] = float(value)
                except ValueError:
                    raise RowError(
                        f"{column} {value!r} is not a number",
                        row=row_no) from None
        profiles[project] = AlphaProfile(
            domains=domains,
            criticality=row[index["criticality"]].strip(),
            requirement_type=row[index["requirement_type"]].strip(),
            template=row[index["template"]].strip(),
            pinned=pinned,
        )
    return profiles


def save_profiles(profiles: dict, path):
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(PROFILE_COLUMNS)
        for project in sorted(profiles):
            p = profiles[project]
            writer.writerow([
                project, "+".join(p.domains), p.criticality,
                p.requirement_type, p.template,
                p.pinned.get("softened", ""),
                p.pinned.get("hardened", ""),
            ])
