import pytest
from fastapi.testclient import TestClient

from reqlint.workbench.api import create_app
from reqlint.workbench.service import Workbench

GAMMA_PROFILE = {
    "domains": ["EC", "CS"],
    "criticality": "business_critical",
    "requirement_type": "functional",
    "template": "single_sentence",
}

R7_TEXT = ("The system will employ on demand asynchronous loading for "
           "faster execution of pages.")

DATASET_CSV = """text,project,subjective_language,ambiguous_adv_adj,non_verifiable_term,superlative,comparative,negative,vague_pronoun,uncertain_verb,polysemy
"The system will employ on demand asynchronous loading for faster execution of pages.",Gamma-J,-,-,-,-,faster,-,-,-,pages
"The word processor shall support several file types.",Gamma-J,-,-,several,-,-,-,-,-,word*types
"""


@pytest.fixture()
def client(tmp_path):
    bench = Workbench(tmp_path / "data")
    return TestClient(create_app(workbench=bench))


@pytest.fixture()
def project_id(client):
    response = client.post("/projects", json={
        "name": "Gamma-J", "profile": GAMMA_PROFILE})
    assert response.status_code == 201
    return response.json()["id"]


def test_project_lifecycle(client, project_id):
    listing = client.get("/projects")
    assert listing.status_code == 200
    assert [p["id"] for p in listing.json()] == [project_id]
    single = client.get(f"/projects/{project_id}")
    assert single.json()["name"] == "Gamma-J"
    assert single.json()["profile"]["domains"] == ["EC", "CS"]


def test_unknown_project_is_404(client):
    assert client.get("/projects/nope").status_code == 404
    assert client.get("/projects/nope/report").status_code == 404


def test_analyze_with_stored_profile(client, project_id):
    response = client.post("/analyze", json={
        "text": R7_TEXT, "project_id": project_id})
    assert response.status_code == 200
    doc = response.json()
    assert doc["testability"]["softened"] == pytest.approx(0.61,
                                                           abs=0.01)
    assert doc["alpha"]["hardened"] == pytest.approx(0.6145, abs=0.001)
    columns = {f["column"] for f in doc["findings"]}
    assert columns == {"comparative", "polysemy"}
    for finding in doc["findings"]:
        start, end = finding["start"], finding["end"]
        assert doc["text"][start:end] == finding["matched_text"]


def test_analyze_with_inline_profile(client):
    response = client.post("/analyze", json={
        "text": R7_TEXT, "profile": GAMMA_PROFILE})
    assert response.status_code == 200


def test_analyze_blank_text_is_400(client, project_id):
    response = client.post("/analyze", json={
        "text": "   ", "project_id": project_id})
    assert response.status_code == 400


def test_analyze_unknown_project_is_404(client):
    response = client.post("/analyze", json={
        "text": R7_TEXT, "project_id": "nope"})
    assert response.status_code == 404


def test_requirement_labeling_flow(client, project_id):
    created = client.post(f"/projects/{project_id}/requirements",
                          json={"text": R7_TEXT})
    assert created.status_code == 201
    rid = created.json()["id"]

    labeled = client.put(f"/requirements/{rid}/labels", json={
        "labels": {"comparative": ["faster"], "polysemy": ["pages"]}})
    assert labeled.status_code == 200
    assert labeled.json()["labels"]["polysemy"] == ["pages"]
    assert labeled.json()["review_flag"] == "unreviewed"

    reviewed = client.post(f"/requirements/{rid}/review",
                           json={"actor": "alex"})
    assert reviewed.status_code == 200
    assert reviewed.json()["review_flag"] == "reviewed"
    assert reviewed.json()["audit"][-1]["actor"] == "alex"


def test_bad_label_term_is_400(client, project_id):
    rid = client.post(f"/projects/{project_id}/requirements",
                      json={"text": R7_TEXT}).json()["id"]
    response = client.put(f"/requirements/{rid}/labels", json={
        "labels": {"polysemy": ["zeppelin"]}})
    assert response.status_code == 400


def test_unknown_requirement_is_404(client):
    assert client.get("/requirements/nope").status_code == 404
    assert client.put("/requirements/nope/labels",
                      json={"labels": {}}).status_code == 404
    assert client.post("/requirements/nope/review").status_code == 404


def test_import_export_report(client, project_id):
    imported = client.post(f"/projects/{project_id}/import",
                           json={"csv": DATASET_CSV})
    assert imported.status_code == 200
    assert len(imported.json()["added"]) == 2

    exported = client.get(f"/projects/{project_id}/export")
    assert exported.status_code == 200
    assert exported.headers["content-type"].startswith("text/csv")
    assert "word*types" in exported.text

    report = client.get(f"/projects/{project_id}/report",
                        params={"policy": "hardened"})
    assert report.status_code == 200
    body = report.json()
    assert body["policy"] == "hardened"
    assert sum(body["histogram"]["counts"]) == 2
    assert body["evaluation"] is None


def test_import_malformed_csv_is_400(client, project_id):
    response = client.post(f"/projects/{project_id}/import",
                           json={"csv": "text,project\nx,y\n"})
    assert response.status_code == 400


def test_report_bad_policy_is_400(client, project_id):
    client.post(f"/projects/{project_id}/requirements",
                json={"text": R7_TEXT})
    response = client.get(f"/projects/{project_id}/report",
                          params={"policy": "wishful"})
    assert response.status_code == 400
