"""HTTP JSON API over the workbench service.

Error mapping: unknown ids turn into 404, everything a client sent
wrong (blank text, bad labels, malformed CSV) into 400.  A built web UI
under ``frontend/dist`` is served on /ui when present.
"""

import os
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from ..errors import (EmptyText, FormatError, InvalidTerm, MissingColumn,
                      ReqlintError, RowError, UnknownDomainCode,
                      UnknownProject, UnknownRequirement)
from .service import Workbench

DATA_DIR_ENV = "REQLINT_DATA_DIR"

NOT_FOUND = (UnknownProject, UnknownRequirement)
BAD_REQUEST = (EmptyText, InvalidTerm, FormatError, MissingColumn,
               RowError, UnknownDomainCode)


class ProfileBody(BaseModel):
    domains: list
    criticality: str
    requirement_type: str
    template: str
    pinned: dict = {}


class ProjectBody(BaseModel):
    name: str
    profile: ProfileBody


class RequirementBody(BaseModel):
    text: str


class AnalyzeBody(BaseModel):
    text: str
    project_id: str | None = None
    profile: ProfileBody | None = None


class LabelsBody(BaseModel):
    labels: dict
    actor: str = "user"


class ReviewBody(BaseModel):
    actor: str = "reviewer"


class ImportBody(BaseModel):
    csv: str


def _data_dir(data_dir=None):
    if data_dir is not None:
        return data_dir
    return os.environ.get(DATA_DIR_ENV, "reqlint_data")


def create_app(workbench: Workbench | None = None,
               data_dir=None) -> FastAPI:
    bench = workbench or Workbench(_data_dir(data_dir))
    app = FastAPI(title="reqlint workbench")

    @app.exception_handler(ReqlintError)
    async def reqlint_error(request: Request, err: ReqlintError):
        if isinstance(err, NOT_FOUND):
            status = 404
        elif isinstance(err, BAD_REQUEST):
            status = 400
        else:
            status = 500
        return JSONResponse(status_code=status,
                            content={"detail": str(err)})

    @app.post("/projects", status_code=201)
    def create_project(body: ProjectBody):
        return bench.create_project(body.name,
                                    body.profile.model_dump())

    @app.get("/projects")
    def list_projects():
        return bench.list_projects()

    @app.get("/projects/{project_id}")
    def get_project(project_id: str):
        return bench.get_project(project_id)

    @app.post("/projects/{project_id}/requirements", status_code=201)
    def add_requirement(project_id: str, body: RequirementBody):
        return bench.add_requirement(project_id, body.text)

    @app.get("/projects/{project_id}/requirements")
    def list_requirements(project_id: str):
        return bench.list_requirements(project_id)

    @app.get("/requirements/{requirement_id}")
    def get_requirement(requirement_id: str):
        return bench.get_requirement(requirement_id)

    @app.post("/analyze")
    def analyze(body: AnalyzeBody):
        profile = body.profile.model_dump() if body.profile else None
        return bench.analyze_request(body.text,
                                     project_id=body.project_id,
                                     profile=profile)

    @app.put("/requirements/{requirement_id}/labels")
    def set_labels(requirement_id: str, body: LabelsBody):
        return bench.set_labels(requirement_id, body.labels,
                                actor=body.actor)

    @app.post("/requirements/{requirement_id}/review")
    def review(requirement_id: str, body: ReviewBody | None = None):
        actor = body.actor if body else "reviewer"
        return bench.review(requirement_id, actor=actor)

    @app.post("/projects/{project_id}/import")
    def import_dataset(project_id: str, body: ImportBody):
        return bench.import_dataset(project_id, body.csv)

    @app.get("/projects/{project_id}/export")
    def export_dataset(project_id: str):
        csv_text = bench.export_dataset(project_id)
        return Response(content=csv_text, media_type="text/csv")

    @app.get("/projects/{project_id}/report")
    def report(project_id: str, policy: str = "softened"):
        return bench.report(project_id, policy=policy)

    ui_dist = Path(__file__).resolve().parents[3] / "frontend" / "dist"
    if ui_dist.is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dist, html=True),
                  name="ui")

    return app
