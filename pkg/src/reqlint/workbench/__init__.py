"""Application shell: persistence, HTTP API and command line."""

from .api import create_app
from .service import Workbench, analysis_document
from .store import DocumentStore

__all__ = ["create_app", "Workbench", "analysis_document",
           "DocumentStore"]
