"""JSON-over-HTTP annotation service consumed by the web frontend."""

from __future__ import annotations

from fastapi import Depends, FastAPI, Header, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from ..prompting import CorrectnessLabel
from .store import AnnotationStore, Judgment


class JudgmentBody(BaseModel):
    task_id: str
    annotator_id: str
    agrees: bool
    disagreement_reason: str = ""
    corrected_label: str | None = None


def create_app(store: AnnotationStore, cors_origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="annotation service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def bearer_token(authorization: str = Header(default="")) -> str:
        if authorization.lower().startswith("bearer "):
            return authorization[7:]
        return ""

    def find_batch_for_task(task_id: str) -> str | None:
        for batch_id, tasks in store.batches.items():
            if any(t.task_id == task_id for t in tasks):
                return batch_id
        return None

    @app.get("/batches/{batch_id}/next")
    def next_task(batch_id: str, annotator: str, token: str = Depends(bearer_token)):
        if batch_id not in store.batches:
            raise HTTPException(404, f"unknown batch {batch_id}")
        if not store.authenticate(batch_id, annotator, token):
            raise HTTPException(401, f"unknown annotator {annotator}")
        task = store.next_task(batch_id, annotator)
        if task is None:
            progress = store.progress(batch_id)
            return {"done": True, "total": progress["total"]}
        record = task.to_record()
        record["done"] = False
        return record

    @app.post("/judgments")
    def submit_judgment(body: JudgmentBody, token: str = Depends(bearer_token)):
        batch_id = find_batch_for_task(body.task_id)
        if batch_id is None:
            raise HTTPException(404, f"unknown task {body.task_id}")
        if not store.authenticate(batch_id, body.annotator_id, token):
            raise HTTPException(401, f"unknown annotator {body.annotator_id}")
        try:
            judgment = Judgment(
                task_id=body.task_id,
                annotator_id=body.annotator_id,
                agrees=body.agrees,
                disagreement_reason=body.disagreement_reason,
                corrected_label=(
                    CorrectnessLabel(body.corrected_label)
                    if body.corrected_label
                    else None
                ),
            )
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        judgment_id, superseded = store.submit(judgment)
        payload = {"id": judgment_id}
        if superseded is not None:
            payload["supersedes"] = superseded
            return payload  # 200: overwrite with audit trail
        from fastapi.responses import JSONResponse

        return JSONResponse(payload, status_code=201)

    @app.get("/batches/{batch_id}/progress")
    def progress(batch_id: str):
        if batch_id not in store.batches:
            raise HTTPException(404, f"unknown batch {batch_id}")
        return store.progress(batch_id)

    @app.get("/batches/{batch_id}/report")
    def report(batch_id: str):
        if batch_id not in store.batches:
            raise HTTPException(404, f"unknown batch {batch_id}")
        try:
            result = store.batch_report(batch_id)
        except Exception as exc:
            raise HTTPException(409, str(exc)) from exc
        return {
            "batch_id": result.batch_id,
            "correlation": str(result.correlation),
            "unanimity": str(result.unanimity),
            "majorities": {
                task_id: {"label": label.value, "tie": tie}
                for task_id, (label, tie) in result.majorities.items()
            },
        }

    return app
