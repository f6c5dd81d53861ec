"""JSON-over-HTTP facade: frameworks, facet reports, navigation sessions.

State is in-memory only; ids are random tokens and do not survive a
restart.  Frameworks are immutable and shared; each session has its own
lock, so operations on distinct sessions run concurrently while one
session is always mutated serially.  Significance scores travel as
exact {num, den} pairs plus a convenience decimal.
"""

from __future__ import annotations

import threading
import uuid
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .errors import (
    ArgFacetsError,
    BudgetExceededError,
    EmptyHistoryError,
    FrameworkError,
    NotACurrentFacetError,
    ParseError,
)
from .facets import (
    Literal,
    Polarity,
    facet_report,
    session_create,
    significance_table,
)
from .formats import FORMATS, parse_framework
from .framework import ArgumentationFramework, ArgumentSet, Semantics
from .search import Budget, enumerate_extensions


class FrameworkUpload(BaseModel):
    text: str
    format: str = "apx"
    name: str | None = None


class SessionCreateBody(BaseModel):
    framework_id: str
    semantics: str


class ApproveBody(BaseModel):
    argument: str
    polarity: str = "approve"


class _SessionSlot:
    __slots__ = ("lock", "session", "framework_id")

    def __init__(self, session, framework_id: str):
        self.lock = threading.Lock()
        self.session = session
        self.framework_id = framework_id


def _new_id() -> str:
    return uuid.uuid4().hex[:12]


def _names(F: ArgumentationFramework, s: ArgumentSet) -> list[str]:
    return [F.name_of(i) for i in s]


def _score_json(score) -> dict:
    return {
        "num": score.numerator,
        "den": score.denominator,
        "decimal": float(score),
        "display": str(score),
    }


def _entries_json(F: ArgumentationFramework, entries) -> list[dict]:
    return [
        {
            "argument": F.name_of(e.literal.argument),
            "polarity": e.literal.polarity.value,
            "remaining_facets": e.remaining_facets,
            "score": _score_json(e.score),
        }
        for e in entries
    ]


def _semantics_or_400(value: str) -> Semantics:
    try:
        return Semantics(value)
    except ValueError:
        raise _HttpError(400, f"unknown semantics {value!r}") from None


class _HttpError(Exception):
    def __init__(self, status: int, detail: str):
        self.status = status
        self.detail = detail


def create_app(
    example_dir: str | Path | None = None,
    deadline_s: float | None = None,
    frontend_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="argfacets service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    frameworks: dict[str, tuple[str, ArgumentationFramework]] = {}
    sessions: dict[str, _SessionSlot] = {}
    store_lock = threading.Lock()

    @app.exception_handler(_HttpError)
    async def _http_error(_: Request, exc: _HttpError):
        return JSONResponse({"detail": exc.detail}, status_code=exc.status)

    @app.exception_handler(RequestValidationError)
    async def _bad_body(_: Request, exc: RequestValidationError):
        return JSONResponse({"detail": str(exc.errors())}, status_code=400)

    @app.exception_handler(BudgetExceededError)
    async def _budget(_: Request, exc: BudgetExceededError):
        partial = exc.partial
        payload = {
            "status": "budget_exceeded",
            "detail": str(exc),
            "exhausted": False,
            "partial": None if partial is None else list(map(int, partial)),
        }
        return JSONResponse(payload, status_code=202)

    def get_framework(fid: str) -> tuple[str, ArgumentationFramework]:
        try:
            return frameworks[fid]
        except KeyError:
            raise _HttpError(404, f"unknown framework {fid!r}") from None

    def get_slot(sid: str) -> _SessionSlot:
        try:
            return sessions[sid]
        except KeyError:
            raise _HttpError(404, f"unknown session {sid!r}") from None

    def framework_handle(fid: str) -> dict:
        name, F = get_framework(fid)
        return {
            "id": fid,
            "name": name,
            "n_arguments": F.n_arguments,
            "n_attacks": F.n_attacks,
        }

    def add_framework(name: str, F: ArgumentationFramework) -> dict:
        fid = _new_id()
        with store_lock:
            frameworks[fid] = (name, F)
        return framework_handle(fid)

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/frameworks", status_code=201)
    def upload_framework(body: FrameworkUpload):
        if body.format not in FORMATS:
            raise _HttpError(400, f"unknown format {body.format!r}")
        try:
            F = parse_framework(body.text, body.format)
        except (ParseError, FrameworkError) as e:
            raise _HttpError(422, f"parse failure: {e}") from None
        return add_framework(body.name or "upload", F)

    @app.get("/frameworks")
    def list_frameworks():
        with store_lock:
            ids = list(frameworks)
        return [framework_handle(fid) for fid in ids]

    @app.get("/frameworks/{fid}")
    def framework_detail(fid: str):
        name, F = get_framework(fid)
        return {
            "id": fid,
            "name": name,
            "arguments": list(F.names()),
            "attacks": sorted(
                [F.name_of(a), F.name_of(b)] for a, b in F.attacks
            ),
        }

    @app.get("/frameworks/{fid}/extensions")
    def framework_extensions(fid: str, semantics: str, max_models: int | None = None):
        _, F = get_framework(fid)
        sigma = _semantics_or_400(semantics)
        if max_models is not None and max_models < 1:
            raise _HttpError(400, "max_models must be >= 1")
        budget = None
        if max_models is not None or deadline_s is not None:
            budget = Budget(max_models=max_models, deadline=deadline_s)
        result = enumerate_extensions(F, sigma, budget=budget)
        return {
            "semantics": sigma.value,
            "extensions": [_names(F, e) for e in result.extensions],
            "count": len(result.extensions),
            "exhausted": result.exhausted,
        }

    @app.get("/frameworks/{fid}/facets")
    def framework_facets(fid: str, semantics: str):
        _, F = get_framework(fid)
        sigma = _semantics_or_400(semantics)
        report = facet_report(F, sigma, deadline_s=deadline_s)
        return {
            "semantics": sigma.value,
            "cred": _names(F, report.cred),
            "skep": _names(F, report.skep),
            "facets": _names(F, report.facets),
            "n_facets": len(report.facets),
        }

    @app.get("/frameworks/{fid}/significance")
    def framework_significance(fid: str, semantics: str):
        _, F = get_framework(fid)
        sigma = _semantics_or_400(semantics)
        entries = significance_table(F, sigma)
        return {"semantics": sigma.value, "entries": _entries_json(F, entries)}

    def session_payload(sid: str, slot: _SessionSlot) -> dict:
        s = slot.session
        F = s.framework
        state = s.state()
        sample = s.sample_extension()
        return {
            "id": sid,
            "framework_id": slot.framework_id,
            "semantics": s.semantics.value,
            "history": [
                {"argument": F.name_of(l.argument), "polarity": l.polarity.value}
                for l in state.history
            ],
            "facets": _names(F, state.facets),
            "significance": _entries_json(F, state.significance),
            "sample_extension": None if sample is None else _names(F, sample),
        }

    @app.post("/sessions", status_code=201)
    def create_session(body: SessionCreateBody):
        name_F = get_framework(body.framework_id)
        sigma = _semantics_or_400(body.semantics)
        session = session_create(name_F[1], sigma)
        sid = _new_id()
        slot = _SessionSlot(session, body.framework_id)
        with store_lock:
            sessions[sid] = slot
        return {
            "id": sid,
            "framework_id": body.framework_id,
            "semantics": sigma.value,
            "history_length": 0,
        }

    @app.get("/sessions/{sid}")
    def session_detail(sid: str):
        slot = get_slot(sid)
        with slot.lock:
            return session_payload(sid, slot)

    @app.post("/sessions/{sid}/approve")
    def session_approve_ep(sid: str, body: ApproveBody):
        slot = get_slot(sid)
        try:
            polarity = Polarity(body.polarity)
        except ValueError:
            raise _HttpError(400, f"unknown polarity {body.polarity!r}") from None
        with slot.lock:
            s = slot.session
            try:
                idx = s.framework.index_of(body.argument)
            except FrameworkError as e:
                raise _HttpError(400, str(e)) from None
            try:
                slot.session = s.approve(Literal(idx, polarity))
            except NotACurrentFacetError as e:
                raise _HttpError(409, str(e)) from None
            return session_payload(sid, slot)

    @app.post("/sessions/{sid}/undo")
    def session_undo_ep(sid: str):
        slot = get_slot(sid)
        with slot.lock:
            try:
                slot.session = slot.session.undo()
            except EmptyHistoryError as e:
                raise _HttpError(409, str(e)) from None
            return session_payload(sid, slot)

    examples_root = Path(example_dir) if example_dir is not None else None

    @app.get("/examples")
    def list_examples():
        if examples_root is None or not examples_root.is_dir():
            return []
        names = [
            p.name
            for p in sorted(examples_root.iterdir())
            if p.is_file() and p.suffix.lower() in (".apx", ".tgf", ".af", ".iccma23")
        ]
        return [{"name": n} for n in names]

    @app.post("/examples/{name}/load", status_code=201)
    def load_example(name: str):
        if examples_root is None:
            raise _HttpError(404, "no example directory configured")
        path = examples_root / name
        if "/" in name or not path.is_file():
            raise _HttpError(404, f"unknown example {name!r}")
        from .bench import detect_format

        try:
            F = parse_framework(path.read_text(), detect_format(path))
        except (ParseError, FrameworkError) as e:
            raise _HttpError(422, f"parse failure: {e}") from None
        return add_framework(name, F)

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=str(frontend_dir), html=True), name="ui")

    return app


def run_server(
    host: str = "127.0.0.1",
    port: int = 8080,
    example_dir: str | None = None,
    deadline_s: float | None = None,
    frontend_dir: str | None = None,
) -> None:
    """Bind, print the actual port (useful with port 0), and serve."""
    import socket

    import uvicorn

    app = create_app(example_dir, deadline_s, frontend_dir)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind((host, port))
    bound = sock.getsockname()[1]
    print(f"listening on {host}:{bound}", flush=True)
    config = uvicorn.Config(app, log_level="warning")
    server = uvicorn.Server(config)
    server.run(sockets=[sock])
