import pytest

from reqlint.errors import (EmptyText, FormatError, InvalidTerm,
                            MissingColumn, UnknownProject,
                            UnknownRequirement)
from reqlint.smells.lexicon import Lexicon, LexiconEntry
from reqlint.smells.types import Smell
from reqlint.workbench.service import Workbench

GAMMA_PROFILE = {
    "domains": ["EC", "CS"],
    "criticality": "business_critical",
    "requirement_type": "functional",
    "template": "single_sentence",
}

R7_TEXT = ("The system will employ on demand asynchronous loading for "
           "faster execution of pages.")


@pytest.fixture()
def bench(tmp_path):
    return Workbench(tmp_path / "data")


@pytest.fixture()
def project(bench):
    return bench.create_project("Gamma-J", GAMMA_PROFILE)


def test_create_and_get_project(bench, project):
    assert bench.get_project(project["id"])["name"] == "Gamma-J"
    assert [p["id"] for p in bench.list_projects()] == [project["id"]]


def test_unknown_project(bench):
    with pytest.raises(UnknownProject):
        bench.get_project("nope")


def test_blank_project_name(bench):
    with pytest.raises(FormatError):
        bench.create_project("  ", GAMMA_PROFILE)


def test_bad_profile_rejected_at_creation(bench):
    profile = dict(GAMMA_PROFILE, criticality="catastrophic")
    with pytest.raises(FormatError):
        bench.create_project("X", profile)


def test_requirement_is_scored_on_add(bench, project):
    doc = bench.add_requirement(project["id"], R7_TEXT)
    analysis = doc["analysis"]
    assert analysis["clarity"] == pytest.approx(0.61, abs=0.01)
    assert analysis["testability"]["softened"] == pytest.approx(
        0.61, abs=0.01)
    assert analysis["alpha"]["softened"] == pytest.approx(0.3445,
                                                          abs=0.001)
    found = {f["column"] for f in analysis["findings"]}
    assert found == {"comparative", "polysemy"}
    assert doc["review_flag"] == "unreviewed"


def test_duplicate_text_is_not_stored_twice(bench, project):
    first = bench.add_requirement(project["id"], R7_TEXT)
    second = bench.add_requirement(project["id"], " " + R7_TEXT + " ")
    assert second["id"] == first["id"]
    assert len(bench.list_requirements(project["id"])) == 1


def test_blank_requirement_rejected(bench, project):
    with pytest.raises(EmptyText):
        bench.add_requirement(project["id"], "   ")


def test_labels_validated_and_review_flow(bench, project):
    doc = bench.add_requirement(project["id"], R7_TEXT)
    updated = bench.set_labels(doc["id"],
                               {"comparative": ["faster"],
                                "polysemy": ["pages"]})
    assert updated["labels"] == {"comparative": ["faster"],
                                 "polysemy": ["pages"]}
    assert updated["review_flag"] == "unreviewed"

    reviewed = bench.review(doc["id"], actor="alex")
    assert reviewed["review_flag"] == "reviewed"
    actions = [entry["action"] for entry in reviewed["audit"]]
    assert actions == ["created", "labels_updated", "reviewed"]
    assert reviewed["audit"][-1]["actor"] == "alex"

    # editing labels voids the confirmation
    edited = bench.set_labels(doc["id"], {"comparative": ["faster"]})
    assert edited["review_flag"] == "unreviewed"


def test_label_term_must_occur(bench, project):
    doc = bench.add_requirement(project["id"], R7_TEXT)
    with pytest.raises(InvalidTerm):
        bench.set_labels(doc["id"], {"polysemy": ["zeppelin"]})


def test_label_unknown_column(bench, project):
    doc = bench.add_requirement(project["id"], R7_TEXT)
    with pytest.raises(FormatError):
        bench.set_labels(doc["id"], {"sarcasm": ["faster"]})


def test_unknown_requirement(bench):
    with pytest.raises(UnknownRequirement):
        bench.get_requirement("nope")


def test_analyze_request_with_project(bench, project):
    doc = bench.analyze_request(R7_TEXT, project_id=project["id"])
    assert doc["testability"]["softened"] == pytest.approx(0.61,
                                                           abs=0.01)


def test_analyze_request_with_inline_profile(bench):
    doc = bench.analyze_request(R7_TEXT, profile=GAMMA_PROFILE)
    assert doc["testability"]["softened"] == pytest.approx(0.61,
                                                           abs=0.01)


def test_analyze_request_needs_a_profile_source(bench):
    with pytest.raises(FormatError):
        bench.analyze_request(R7_TEXT)
    with pytest.raises(EmptyText):
        bench.analyze_request("  ", profile=GAMMA_PROFILE)


def test_state_survives_reopening(tmp_path):
    bench = Workbench(tmp_path / "data")
    project = bench.create_project("Gamma-J", GAMMA_PROFILE)
    doc = bench.add_requirement(project["id"], R7_TEXT)
    bench.set_labels(doc["id"], {"comparative": ["faster"]})

    reopened = Workbench(tmp_path / "data")
    loaded = reopened.get_requirement(doc["id"])
    assert loaded["labels"] == {"comparative": ["faster"]}
    assert loaded["analysis"] == doc["analysis"]


def test_lexicon_change_triggers_rescore(tmp_path):
    bench = Workbench(tmp_path / "data")
    project = bench.create_project("Gamma-J", GAMMA_PROFILE)
    doc = bench.add_requirement(project["id"], R7_TEXT)
    assert any(f["column"] == "polysemy"
               for f in doc["analysis"]["findings"])

    empty = Lexicon()
    reopened = Workbench(tmp_path / "data", lexicon=empty)
    loaded = reopened.get_requirement(doc["id"])
    assert loaded["lexicon_version"] == empty.version
    assert not any(f["column"] == "polysemy"
                   for f in loaded["analysis"]["findings"])
    # "pages" no longer counts, only "faster" remains smelly
    assert loaded["analysis"]["n_smelly_words"] == 1

    # and the re-score was persisted, not just held in memory
    third = Workbench(tmp_path / "data", lexicon=empty)
    assert (third.get_requirement(doc["id"])["analysis"]
            == loaded["analysis"])


DATASET_CSV = """text,project,subjective_language,ambiguous_adv_adj,non_verifiable_term,superlative,comparative,negative,vague_pronoun,uncertain_verb,polysemy
"The system will employ on demand asynchronous loading for faster execution of pages.",Gamma-J,-,-,-,-,faster,-,-,-,pages
"The word processor shall support several file types.",Gamma-J,-,-,several,-,-,-,-,-,word*types
"The system shall log every transaction.",Gamma-J,-,-,-,-,-,-,-,-,-
"""


def test_import_dataset(bench, project):
    result = bench.import_dataset(project["id"], DATASET_CSV)
    assert len(result["added"]) == 3
    assert result["errors"] == []
    assert result["skipped"] == 0
    docs = bench.list_requirements(project["id"])
    by_text = {d["text"]: d for d in docs}
    labeled = by_text["The word processor shall support several file "
                      "types."]
    assert labeled["labels"]["polysemy"] == ["word", "types"]
    assert labeled["labels"]["non_verifiable_term"] == ["several"]


def test_import_is_idempotent(bench, project):
    bench.import_dataset(project["id"], DATASET_CSV)
    again = bench.import_dataset(project["id"], DATASET_CSV)
    assert again["added"] == []
    assert again["skipped"] == 3
    assert len(bench.list_requirements(project["id"])) == 3


def test_import_accumulates_row_errors(bench, project):
    bad = DATASET_CSV + (
        '"The scheduler shall run jobs.",Gamma-J,-,-,-,-,-,-,-,-,zeppelin\n'
        '"",Gamma-J,-,-,-,-,-,-,-,-,-\n')
    result = bench.import_dataset(project["id"], bad)
    assert len(result["added"]) == 3
    assert len(result["errors"]) == 2
    assert "zeppelin" in result["errors"][0]
    assert "row 5" in result["errors"][0]
    assert "row 6" in result["errors"][1]


def test_import_missing_column(bench, project):
    broken = DATASET_CSV.replace("polysemy", "mystery", 1)
    with pytest.raises(MissingColumn):
        bench.import_dataset(project["id"], broken)


def test_export_roundtrip_fixed_point(bench, project):
    bench.import_dataset(project["id"], DATASET_CSV)
    exported = bench.export_dataset(project["id"])

    other = bench.create_project("Gamma-J", GAMMA_PROFILE)
    bench.import_dataset(other["id"], exported)
    assert bench.export_dataset(other["id"]) == exported


def test_export_empty_project_is_header_only(bench, project):
    exported = bench.export_dataset(project["id"])
    assert exported.splitlines() == [
        "text,project,subjective_language,ambiguous_adv_adj,"
        "non_verifiable_term,superlative,comparative,negative,"
        "vague_pronoun,uncertain_verb,polysemy"]


def test_report_scores_and_histogram(bench, project):
    bench.import_dataset(project["id"], DATASET_CSV)
    report = bench.report(project["id"], policy="softened")
    assert report["n_requirements"] == 3
    assert len(report["requirements"]) == 3
    histogram = report["histogram"]
    assert len(histogram["counts"]) == 10
    assert len(histogram["bin_edges"]) == 11
    assert sum(histogram["counts"]) == 3
    assert report["evaluation"] is None
    assert "no reviewed" in report["evaluation_note"]


def test_report_includes_evaluation_once_reviewed(bench, project):
    bench.import_dataset(project["id"], DATASET_CSV)
    for doc in bench.list_requirements(project["id"]):
        bench.review(doc["id"])
    report = bench.report(project["id"], permutations=50)
    assert report["evaluation_note"] is None
    evaluation = report["evaluation"]
    assert evaluation["n_requirements"] == 3
    assert evaluation["scores"]["softened"]["mae"] >= 0.0


def test_report_needs_requirements(bench, project):
    with pytest.raises(FormatError):
        bench.report(project["id"])


def test_report_unknown_policy(bench, project):
    bench.add_requirement(project["id"], R7_TEXT)
    with pytest.raises(FormatError):
        bench.report(project["id"], policy="wishful")
