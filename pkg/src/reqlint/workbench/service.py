"""Workbench core: projects, stored requirements, labeling and reports.

Requirement documents carry their analysis (findings and scores) plus a
lexicon version stamp.  Opening a store with a different lexicon
re-scores every stale document once and persists the result, so stored
scores always equal recomputation from text + current lexicon.
"""

import csv
import hashlib
import io
import time
import uuid

import numpy as np

from ..datasets import DATASET_COLUMNS, EMPTY_FIELD, TERM_SEPARATOR
from ..datasets import GroundTruthRecord
from ..errors import (EmptyText, FormatError, InvalidTerm, MissingColumn,
                      UnknownProject, UnknownRequirement)
from ..evaluation import evaluate
from ..scoring.alpha import POLICIES, AlphaProfile
from ..scoring.testability import score_requirement
from ..smells.lexicon import default_lexicon
from ..smells.types import Smell
from .store import DocumentStore

SMELL_COLUMNS = [smell.column for smell in Smell]
REVIEW_FLAGS = ("unreviewed", "reviewed")


def _now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


def _new_id() -> str:
    return uuid.uuid4().hex[:12]


def _content_hash(text: str) -> str:
    return hashlib.sha256(text.strip().encode("utf-8")).hexdigest()[:16]


def _require_term_occurs(term: str, text: str):
    if term.lower() not in text.lower():
        raise InvalidTerm(f"term {term!r} does not occur in the text")


def analysis_document(text: str, alphas: dict, lexicon) -> dict:
    """Findings plus scores for one requirement text."""
    score = score_requirement(text, alphas, lexicon)
    return {
        "findings": [
            {"smell": f.smell.code, "column": f.smell.column,
             "start": f.start, "end": f.end,
             "matched_text": f.matched_text, "source": f.source}
            for f in score.findings],
        "n_words": score.n_words,
        "n_smelly_words": score.n_smelly_words,
        "n_smell_types": score.n_smell_types,
        "n_sentences": score.n_sentences,
        "clarity": score.clarity,
        "alpha": dict(alphas),
        "testability": dict(score.testability),
    }


class Workbench:

    def __init__(self, data_dir, lexicon=None):
        self.store = DocumentStore(data_dir)
        self.lexicon = lexicon if lexicon is not None else default_lexicon()
        self._projects = {}
        self._requirements = {}
        self._load()

    # ------------------------------------------------------- persistence

    def _load(self):
        for doc in self.store.load("projects"):
            self._projects[doc["id"]] = doc
        stale = False
        for doc in self.store.load("requirements"):
            self._requirements[doc["id"]] = doc
            if doc.get("lexicon_version") != self.lexicon.version:
                self._rescore(doc)
                stale = True
        if stale:
            self._flush_requirements()

    def _flush_projects(self):
        self.store.save("projects", list(self._projects.values()))

    def _flush_requirements(self):
        self.store.save("requirements", list(self._requirements.values()))

    # ---------------------------------------------------------- projects

    def create_project(self, name: str, profile) -> dict:
        if not name or not name.strip():
            raise FormatError("project name is empty")
        if isinstance(profile, AlphaProfile):
            profile_doc = {
                "domains": list(profile.domains),
                "criticality": profile.criticality,
                "requirement_type": profile.requirement_type,
                "template": profile.template,
                "pinned": dict(profile.pinned),
            }
        else:
            profile_doc = {
                "domains": list(profile["domains"]),
                "criticality": profile["criticality"],
                "requirement_type": profile["requirement_type"],
                "template": profile["template"],
                "pinned": dict(profile.get("pinned", {})),
            }
        doc = {
            "id": _new_id(),
            "name": name.strip(),
            "profile": profile_doc,
            "created_at": _now(),
        }
        # surfaces bad domain codes or aspect levels at creation time
        self._alphas(doc)
        self._projects[doc["id"]] = doc
        self._flush_projects()
        return doc

    def list_projects(self) -> list:
        return list(self._projects.values())

    def get_project(self, project_id: str) -> dict:
        if project_id not in self._projects:
            raise UnknownProject(project_id)
        return self._projects[project_id]

    def _profile(self, project_doc) -> AlphaProfile:
        p = project_doc["profile"]
        return AlphaProfile(
            domains=tuple(p["domains"]),
            criticality=p["criticality"],
            requirement_type=p["requirement_type"],
            template=p["template"],
            pinned=dict(p.get("pinned", {})),
        )

    def _alphas(self, project_doc) -> dict:
        profile = self._profile(project_doc)
        return {policy: profile.alpha(policy) for policy in POLICIES}

    # ------------------------------------------------------ requirements

    def _rescore(self, doc):
        project = self.get_project(doc["project_id"])
        doc["analysis"] = analysis_document(
            doc["text"], self._alphas(project), self.lexicon)
        doc["lexicon_version"] = self.lexicon.version

    def add_requirement(self, project_id: str, text: str,
                        labels=None, actor: str = "user") -> dict:
        project = self.get_project(project_id)
        if not text or not text.strip():
            raise EmptyText("requirement text is blank")
        text = text.strip()
        content_hash = _content_hash(text)
        for doc in self._requirements.values():
            if (doc["project_id"] == project_id
                    and doc["content_hash"] == content_hash):
                return doc
        doc = {
            "id": _new_id(),
            "project_id": project_id,
            "text": text,
            "content_hash": content_hash,
            "analysis": analysis_document(text, self._alphas(project),
                                          self.lexicon),
            "labels": self._checked_labels(labels or {}, text),
            "review_flag": "unreviewed",
            "audit": [{"at": _now(), "actor": actor, "action": "created"}],
            "lexicon_version": self.lexicon.version,
            "created_at": _now(),
        }
        self._requirements[doc["id"]] = doc
        self._flush_requirements()
        return doc

    def get_requirement(self, requirement_id: str) -> dict:
        if requirement_id not in self._requirements:
            raise UnknownRequirement(requirement_id)
        return self._requirements[requirement_id]

    def list_requirements(self, project_id: str) -> list:
        self.get_project(project_id)
        return [doc for doc in self._requirements.values()
                if doc["project_id"] == project_id]

    def _checked_labels(self, labels: dict, text: str) -> dict:
        checked = {}
        for column, terms in labels.items():
            if column not in SMELL_COLUMNS:
                raise FormatError(f"unknown smell column {column!r}")
            terms = [t.strip() for t in terms if t and t.strip()]
            for term in terms:
                if TERM_SEPARATOR in term:
                    raise InvalidTerm(
                        f"term {term!r} contains the separator "
                        f"{TERM_SEPARATOR!r}")
                _require_term_occurs(term, text)
            if terms:
                checked[column] = terms
        return checked

    def set_labels(self, requirement_id: str, labels: dict,
                   actor: str = "user") -> dict:
        doc = self.get_requirement(requirement_id)
        doc["labels"] = self._checked_labels(labels, doc["text"])
        # edited annotations are no longer expert-confirmed
        doc["review_flag"] = "unreviewed"
        doc["audit"].append(
            {"at": _now(), "actor": actor, "action": "labels_updated"})
        self._flush_requirements()
        return doc

    def review(self, requirement_id: str,
               actor: str = "reviewer") -> dict:
        doc = self.get_requirement(requirement_id)
        doc["review_flag"] = "reviewed"
        doc["audit"].append(
            {"at": _now(), "actor": actor, "action": "reviewed"})
        self._flush_requirements()
        return doc

    # ----------------------------------------------------------- analyze

    def analyze_request(self, text: str, project_id=None,
                        profile=None) -> dict:
        if not text or not text.strip():
            raise EmptyText("text is blank")
        if project_id is not None:
            alphas = self._alphas(self.get_project(project_id))
        elif profile is not None:
            alpha_profile = AlphaProfile(
                domains=tuple(profile["domains"]),
                criticality=profile["criticality"],
                requirement_type=profile["requirement_type"],
                template=profile["template"],
                pinned=dict(profile.get("pinned", {})),
            )
            alphas = {policy: alpha_profile.alpha(policy)
                      for policy in POLICIES}
        else:
            raise FormatError("need a project_id or an inline profile")
        document = analysis_document(text.strip(), alphas, self.lexicon)
        document["text"] = text.strip()
        return document

    # ----------------------------------------------------- import/export

    def import_dataset(self, project_id: str, csv_text: str,
                       actor: str = "import") -> dict:
        self.get_project(project_id)
        reader = csv.reader(io.StringIO(csv_text))
        try:
            header = [h.strip().lower() for h in next(reader)]
        except StopIteration:
            raise FormatError("dataset file is empty") from None
        for column in DATASET_COLUMNS:
            if column not in header:
                raise MissingColumn(column)
        index = {name: header.index(name) for name in DATASET_COLUMNS}

        added, skipped, errors = [], 0, []
        known_hashes = {
            doc["content_hash"] for doc in self._requirements.values()
            if doc["project_id"] == project_id}
        for row_no, row in enumerate(reader, start=2):
            if not row or all(not f.strip() for f in row):
                continue
            if len(row) != len(header):
                errors.append(f"row {row_no}: expected {len(header)} "
                              f"fields, got {len(row)}")
                continue
            text = row[index["text"]].strip()
            if not text:
                errors.append(f"row {row_no}: empty requirement text")
                continue
            labels = {}
            row_errors = []
            for column in SMELL_COLUMNS:
                cell = row[index[column]].strip()
                if cell in ("", EMPTY_FIELD):
                    continue
                terms = [t.strip() for t in cell.split(TERM_SEPARATOR)
                         if t.strip()]
                for term in terms:
                    if term.lower() not in text.lower():
                        row_errors.append(
                            f"row {row_no}: term {term!r} ({column}) "
                            f"does not occur in the text")
                if terms:
                    labels[column] = terms
            if row_errors:
                errors.extend(row_errors)
                continue
            if _content_hash(text) in known_hashes:
                skipped += 1
                continue
            doc = self.add_requirement(project_id, text, labels=labels,
                                       actor=actor)
            known_hashes.add(doc["content_hash"])
            added.append(doc["id"])
        return {"added": added, "skipped": skipped, "errors": errors}

    def export_dataset(self, project_id: str) -> str:
        project = self.get_project(project_id)
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(DATASET_COLUMNS)
        for doc in self.list_requirements(project_id):
            row = [doc["text"], project["name"]]
            for column in SMELL_COLUMNS:
                terms = doc["labels"].get(column, [])
                row.append(TERM_SEPARATOR.join(terms) if terms
                           else EMPTY_FIELD)
            writer.writerow(row)
        return out.getvalue()

    # ------------------------------------------------------------ report

    def report(self, project_id: str, policy: str = "softened",
               permutations: int = 500, seed: int = 0) -> dict:
        project = self.get_project(project_id)
        if policy not in POLICIES:
            raise FormatError(f"unknown policy {policy!r}")
        docs = self.list_requirements(project_id)
        if not docs:
            raise FormatError("project has no requirements")

        rows = [{
            "id": doc["id"],
            "text": doc["text"],
            "clarity": doc["analysis"]["clarity"],
            "testability": doc["analysis"]["testability"],
            "n_findings": len(doc["analysis"]["findings"]),
            "review_flag": doc["review_flag"],
        } for doc in docs]

        values = [doc["analysis"]["testability"][policy] for doc in docs]
        counts, edges = np.histogram(values, bins=10, range=(0.0, 1.0))
        histogram = {
            "policy": policy,
            "bin_edges": [float(e) for e in edges],
            "counts": [int(c) for c in counts],
        }

        reviewed = [doc for doc in docs
                    if doc["review_flag"] == "reviewed"]
        evaluation = None
        evaluation_note = None
        if reviewed:
            records = [
                GroundTruthRecord(
                    text=doc["text"], project=project["name"],
                    terms={Smell.from_column(c): tuple(terms)
                           for c, terms in doc["labels"].items()})
                for doc in reviewed]
            profiles = {project["name"]: self._profile(project)}
            evaluation = evaluate(records, profiles, lexicon=self.lexicon,
                                  permutations=permutations,
                                  seed=seed).to_json()
        else:
            evaluation_note = ("no reviewed requirements; "
                               "ground-truth comparison skipped")

        return {
            "project": {"id": project["id"], "name": project["name"]},
            "policy": policy,
            "n_requirements": len(docs),
            "requirements": rows,
            "histogram": histogram,
            "evaluation": evaluation,
            "evaluation_note": evaluation_note,
        }
