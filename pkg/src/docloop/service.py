"""HTTP service exposing the pipeline and the feedback store.

Six POST endpoints, permissive CORS, and a single error envelope:
every failure body is {"error": "<message>"} and every success is plain JSON.
Bodies that do not parse as JSON get the exact 400 message
"Invalid input, JSON expected"; images no backend can resolve get a 422.
"""
from __future__ import annotations

import base64
import binascii
import io
import json
import os
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException
from PIL import Image, UnidentifiedImageError

from .errors import AnchorNotFound, BadImage, DocloopError, NoDocumentFound
from .feedback import FeedbackStore
from .model import ImageRef
from .pipeline import (
    DetectorBackend,
    ManifestIndex,
    OcrBackend,
    OracleDetector,
    OracleOcr,
    extract,
    identify,
)
from .templates import TemplateRegistry, bundled_registry

SUCCESS_MESSAGE = "Request processed successfully."
INVALID_JSON_MESSAGE = "Invalid input, JSON expected"


@dataclass
class ServiceContext:
    registry: TemplateRegistry
    detector: DetectorBackend
    ocr: OcrBackend
    store: FeedbackStore

    @classmethod
    def oracle_from_env(cls) -> "ServiceContext":
        """Build an oracle-backed context from environment variables.

        DATASET_DIR points at a generated dataset (for the manifest index);
        REQUESTS_DIR, REJECTED_DIR, and TEMPLATES_DIR override the defaults.
        """
        dataset_dir = os.environ.get("DATASET_DIR")
        if dataset_dir:
            index = ManifestIndex.for_dataset(dataset_dir)
        else:
            index = ManifestIndex([])
        templates_dir = os.environ.get("TEMPLATES_DIR")
        if not templates_dir and Path("./templates").is_dir():
            templates_dir = "./templates"
        registry = (
            TemplateRegistry.from_directory(templates_dir)
            if templates_dir
            else bundled_registry()
        )
        store = FeedbackStore(
            os.environ.get("REQUESTS_DIR", "./modification_requests"),
            os.environ.get("REJECTED_DIR", "./rejected_pipeline"),
        )
        return cls(
            registry=registry,
            detector=OracleDetector(index),
            ocr=OracleOcr(index),
            store=store,
        )


def _error_body(exc: Exception) -> dict:
    if isinstance(exc, DocloopError):
        return {"error": f"{type(exc).__name__}: {exc}"}
    return {"error": str(exc)}


def _decode_image(image_b64: str) -> ImageRef:
    try:
        raw = base64.b64decode(image_b64, validate=True)
    except (binascii.Error, ValueError) as exc:
        raise BadImage(f"image payload is not valid base64: {exc}") from exc
    try:
        image = Image.open(io.BytesIO(raw))
        image.load()
    except UnidentifiedImageError as exc:
        raise BadImage(f"image payload is not a decodable image: {exc}") from exc
    return ImageRef(pixels=image)


def create_app(context: ServiceContext | None = None) -> FastAPI:
    app = FastAPI(title="docloop", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    ctx = context or ServiceContext.oracle_from_env()

    @app.exception_handler(StarletteHTTPException)
    async def http_exception_handler(request: Request, exc: StarletteHTTPException):
        return JSONResponse(status_code=exc.status_code, content={"error": str(exc.detail)})

    @app.exception_handler(Exception)
    async def unhandled_exception_handler(request: Request, exc: Exception):
        return JSONResponse(status_code=500, content=_error_body(exc))

    async def _json_object(request: Request) -> dict | None:
        try:
            data = json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError):
            return None
        return data if isinstance(data, dict) else None

    @app.post("/document/identify")
    async def document_identify(request: Request):
        data = await _json_object(request)
        if data is None:
            return JSONResponse(status_code=400, content={"error": INVALID_JSON_MESSAGE})
        try:
            ref = _decode_image(data["image"])
            detection = identify(ref, ctx.detector)
        except NoDocumentFound as exc:
            return JSONResponse(
                status_code=422, content={"error": f"UnresolvableImage: {exc}"}
            )
        except Exception as exc:
            return JSONResponse(status_code=500, content=_error_body(exc))
        return JSONResponse(
            status_code=200,
            content={"class_id": detection.class_id, "confidence": detection.confidence},
        )

    @app.post("/document/extract/data")
    async def document_extract_data(request: Request):
        data = await _json_object(request)
        if data is None:
            return JSONResponse(status_code=400, content={"error": INVALID_JSON_MESSAGE})
        try:
            ref = _decode_image(data["image"])
            detection = identify(ref, ctx.detector)
        except NoDocumentFound as exc:
            return JSONResponse(
                status_code=422, content={"error": f"UnresolvableImage: {exc}"}
            )
        except Exception as exc:
            return JSONResponse(status_code=500, content=_error_body(exc))
        try:
            result = extract(ref, detection.class_id, ctx.ocr, ctx.registry)
        except AnchorNotFound:
            return JSONResponse(
                status_code=200,
                content={
                    "class_id": detection.class_id,
                    "confidence": detection.confidence,
                    "error_detail": "anchor_not_found",
                    "fields": [],
                    "serialized": "",
                },
            )
        except Exception as exc:
            return JSONResponse(status_code=500, content=_error_body(exc))
        return JSONResponse(
            status_code=200,
            content={
                "class_id": result.class_id,
                "confidence": detection.confidence,
                "fields": [{"code": code, "text": text} for code, text in result.fields],
                "serialized": result.serialized,
            },
        )

    @app.post("/document/propose/modification")
    async def document_propose_modification(request: Request):
        data = await _json_object(request)
        if data is None:
            return JSONResponse(status_code=400, content={"error": INVALID_JSON_MESSAGE})
        try:
            ctx.store.propose(
                data["document_identified"], data["document_suggested"], data["image"]
            )
        except Exception as exc:
            return JSONResponse(status_code=500, content=_error_body(exc))
        return JSONResponse(status_code=200, content={"message": SUCCESS_MESSAGE})

    @app.post("/document/request/getAll")
    async def document_requests(request: Request):
        try:
            requests = ctx.store.list_requests()
        except Exception as exc:
            return JSONResponse(status_code=500, content=_error_body(exc))
        return JSONResponse(status_code=200, content=[r.to_json_dict() for r in requests])

    @app.post("/document/request/reject")
    async def document_request_reject(request: Request):
        data = await _json_object(request)
        if data is None:
            return JSONResponse(status_code=400, content={"error": INVALID_JSON_MESSAGE})
        try:
            ctx.store.reject(int(data["req_id"]))
        except Exception as exc:
            return JSONResponse(status_code=500, content=_error_body(exc))
        return JSONResponse(status_code=200, content={"message": SUCCESS_MESSAGE})

    @app.post("/document/request/approve")
    async def document_request_approve(request: Request):
        data = await _json_object(request)
        if data is None:
            return JSONResponse(status_code=400, content={"error": INVALID_JSON_MESSAGE})
        try:
            ctx.store.approve(int(data["req_id"]))
        except Exception as exc:
            return JSONResponse(status_code=500, content=_error_body(exc))
        return JSONResponse(status_code=200, content={"message": SUCCESS_MESSAGE})

    return app


def serve(
    port: int = 5000,
    host: str = "127.0.0.1",
    context: ServiceContext | None = None,
) -> None:
    import uvicorn

    uvicorn.run(create_app(context), host=host, port=port, log_level="info")
