"""Service layer: pydantic schemas, command handlers, and the FastAPI app."""

from . import handlers, schemas
from .main import app

__all__ = ["app", "handlers", "schemas"]
