"""JSON-over-HTTP service exposing evaluation, checking and hierarchies.

The service is stateless: every request is parsed, computed and forgotten.
Validation problems come back as HTTP 400 with ``{"error": NAME, "detail"}``;
anything else is a 500 with the same shape.
"""

from __future__ import annotations

import json
import logging
from typing import Any, Awaitable, Callable

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import __version__
from ..errors import PARSE_ERROR, MbwmError, ValidationError
from . import evaluation, schemas

log = logging.getLogger("mbwm.server")


def _error_response(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


async def _json_body(request: Request) -> Any:
    try:
        return json.loads(await request.body())
    except json.JSONDecodeError as err:
        raise ValidationError(f"invalid JSON body: {err}", PARSE_ERROR) from err


def _handler(
    fn: Callable[[Any], dict]
) -> Callable[[Request], Awaitable[JSONResponse]]:
    async def endpoint(request: Request) -> JSONResponse:
        try:
            return JSONResponse(fn(await _json_body(request)))
        except ValidationError as err:
            return _error_response(400, err.code, err.detail)
        except MbwmError as err:
            return _error_response(500, err.code, err.detail)
        except Exception:  # pragma: no cover - defensive
            log.exception("unexpected failure")
            return _error_response(500, "INTERNAL", "unexpected failure")

    return endpoint


def _evaluate(body: Any) -> dict:
    pcs, options = schemas.parse_request(body)
    return evaluation.evaluate_response(pcs, options)


def _check(body: Any) -> dict:
    pcs, options = schemas.parse_request(body)
    return evaluation.check_response(pcs, options)


def _hierarchy(body: Any) -> dict:
    return evaluation.hierarchy_response(schemas.parse_hierarchy(body))


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="mbwm", version=__version__, docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    app.add_api_route("/api/evaluate", _handler(_evaluate), methods=["POST"])
    app.add_api_route("/api/check", _handler(_check), methods=["POST"])
    app.add_api_route("/api/hierarchy", _handler(_hierarchy), methods=["POST"])

    async def health(_: Request) -> JSONResponse:
        return JSONResponse({"status": "ok", "version": __version__})

    app.add_api_route("/api/health", health, methods=["GET"])

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
