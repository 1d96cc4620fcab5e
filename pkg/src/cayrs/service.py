"""Stateless HTTP API over the engine.

Linkage identity is the content hash of the uploaded document, so uploads
are idempotent; analysis results live in a bounded in-memory LRU and each
linkage is analyzed at most once.  Bad input returns 400, domain errors
return 422 with a machine readable error name (NotConnected additionally
carries the nearest realization pair).
"""

from __future__ import annotations

import hashlib
import json
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import FileResponse, JSONResponse

from .cayley_space import build_ccs, link_intervals
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import CayrsError, InvalidLinkage, NotConnected, NotLowComplexity
from .linkage import TDLinkage, analyze, enumerate_base_nonedges
from .motion import (
    UniformSampler,
    curve3d,
    find_all_components,
    find_paths,
    nearest_realizations,
    sample_realizations,
    traced_curves,
)
from .realization import RealizationType, realize
from .serialize import (
    analysis_to_dict,
    ccs_to_dict,
    component_summaries,
    curve3d_to_dict,
    linkage_from_dict,
    motion_to_dict,
    realization_to_dict,
)


@dataclass
class CacheEntry:
    id: str
    tdl: TDLinkage
    base_nonedges: list
    lock: threading.Lock = field(default_factory=threading.Lock)
    ccs: object = None
    components: object = None

    def linked_ccs(self, config: EngineConfig):
        if not self.tdl.td_low:
            raise NotLowComplexity(
                self.tdl.low_diagnostic or "not low Cayley complexity"
            )
        with self.lock:
            if self.ccs is None:
                self.ccs = link_intervals(self.tdl, build_ccs(self.tdl, config), config)
            return self.ccs

    def all_components(self, config: EngineConfig):
        ccs = self.linked_ccs(config)
        with self.lock:
            if self.components is None:
                self.components = find_all_components(self.tdl, ccs, config)
            return self.components


class SessionCache:
    """Content-hash keyed LRU of analyzed linkages."""

    def __init__(self, config: EngineConfig, maxsize: int = 64):
        self.config = config
        self.maxsize = maxsize
        self._entries: OrderedDict[str, CacheEntry] = OrderedDict()
        self._lock = threading.Lock()

    def put(self, document: dict) -> CacheEntry:
        content = json.dumps(document, sort_keys=True).encode()
        key = hashlib.sha256(content).hexdigest()[:16]
        with self._lock:
            if key in self._entries:
                self._entries.move_to_end(key)
                return self._entries[key]
        spec = linkage_from_dict(document)
        tdl = analyze(spec)
        bases = enumerate_base_nonedges(tdl.vertices, tdl.edges)
        entry = CacheEntry(id=key, tdl=tdl, base_nonedges=bases)
        with self._lock:
            if key not in self._entries:
                self._entries[key] = entry
                while len(self._entries) > self.maxsize:
                    self._entries.popitem(last=False)
            self._entries.move_to_end(key)
            return self._entries[key]

    def get(self, key: str) -> CacheEntry | None:
        with self._lock:
            entry = self._entries.get(key)
            if entry is not None:
                self._entries.move_to_end(key)
            return entry


def _realization_query(tdl, length, type_text, config):
    try:
        rtype = RealizationType.parse(type_text)
    except ValueError as exc:
        raise InvalidLinkage(str(exc)) from exc
    return realize(tdl, length, rtype, config)


def create_app(config: EngineConfig = DEFAULT_CONFIG, frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="cayrs", version="0.1.0")
    cache = SessionCache(config)

    @app.exception_handler(RequestValidationError)
    async def bad_request(_, exc):
        return JSONResponse(status_code=400, content={"error": "BadRequest", "message": str(exc)})

    @app.exception_handler(InvalidLinkage)
    async def invalid_linkage(_, exc: InvalidLinkage):
        return JSONResponse(status_code=400, content={"error": exc.name, "message": str(exc)})

    @app.exception_handler(CayrsError)
    async def domain_error(_, exc: CayrsError):
        body = {"error": exc.name, "message": str(exc)}
        if isinstance(exc, NotConnected):
            n1, n2, dist = exc.nearest
            body["nearest"] = {
                "r1": realization_to_dict(n1),
                "r2": realization_to_dict(n2),
                "distance": dist,
            }
        return JSONResponse(status_code=422, content=body)

    def entry_or_404(linkage_id: str) -> CacheEntry:
        entry = cache.get(linkage_id)
        if entry is None:
            raise InvalidLinkage(f"unknown linkage id {linkage_id}")
        return entry

    def component_or_422(entry: CacheEntry, index: int):
        comps = entry.all_components(config)
        if not (0 <= index < len(comps)):
            raise NotLowComplexity(f"component index {index} out of range ({len(comps)})")
        return comps[index]

    @app.post("/linkages")
    async def upload(request: Request):
        try:
            document = await request.json()
        except Exception as exc:
            return JSONResponse(
                status_code=400, content={"error": "BadRequest", "message": f"invalid JSON: {exc}"}
            )
        entry = cache.put(document)
        body = analysis_to_dict(entry.tdl, base_nonedges=entry.base_nonedges)
        body["id"] = entry.id
        return body

    @app.get("/linkages/{linkage_id}/ccs")
    def get_ccs(linkage_id: str):
        entry = entry_or_404(linkage_id)
        return ccs_to_dict(entry.linked_ccs(config))

    @app.get("/linkages/{linkage_id}/components")
    def get_components(linkage_id: str):
        entry = entry_or_404(linkage_id)
        return {"components": component_summaries(entry.all_components(config))}

    @app.get("/linkages/{linkage_id}/components/{index}/samples")
    def get_samples(linkage_id: str, index: int, n: int = DEFAULT_CONFIG.samples_per_leg):
        entry = entry_or_404(linkage_id)
        comp = component_or_422(entry, index)
        samples = sample_realizations(entry.tdl, comp, UniformSampler(n), config)
        return {"realizations": [realization_to_dict(r) for r in samples]}

    @app.get("/linkages/{linkage_id}/components/{index}/curve3d")
    def get_curve3d(
        linkage_id: str, index: int, f1: str, f2: str, f3: str,
        n: int = DEFAULT_CONFIG.samples_per_leg,
    ):
        entry = entry_or_404(linkage_id)
        comp = component_or_422(entry, index)

        def parse(text):
            parts = [p for p in text.replace(",", " ").split() if p]
            if len(parts) != 2:
                raise InvalidLinkage(f"bad non-edge {text!r}")
            return parts[0], parts[1]

        curve = curve3d(
            entry.tdl, comp, parse(f1), parse(f2), parse(f3),
            sampler=UniformSampler(n), config=config,
        )
        return curve3d_to_dict(curve)

    @app.get("/linkages/{linkage_id}/components/{index}/trace")
    def get_trace(
        linkage_id: str, index: int, vertices: str,
        n: int = DEFAULT_CONFIG.samples_per_leg,
    ):
        entry = entry_or_404(linkage_id)
        comp = component_or_422(entry, index)
        names = [v for v in vertices.replace(",", " ").split() if v]
        curves = traced_curves(entry.tdl, comp, names, UniformSampler(n), config)
        return {v: [list(p) for p in pts] for v, pts in curves.items()}

    @app.get("/linkages/{linkage_id}/realization")
    def get_realization(linkage_id: str, length: float, type: str):
        entry = entry_or_404(linkage_id)
        return realization_to_dict(_realization_query(entry.tdl, length, type, config))

    @app.post("/linkages/{linkage_id}/path")
    async def post_path(linkage_id: str, request: Request):
        entry = entry_or_404(linkage_id)
        body = await request.json()
        try:
            src, dst = body["from"], body["to"]
            r1 = _realization_query(entry.tdl, float(src["length"]), src["type"], config)
            r2 = _realization_query(entry.tdl, float(dst["length"]), dst["type"], config)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidLinkage(f"malformed path request: {exc}") from exc
        ccs = entry.linked_ccs(config)
        paths = find_paths(entry.tdl, ccs, r1, r2, config)
        if not paths:
            comps = entry.all_components(config)
            from .motion import find_component

            c1 = find_component(entry.tdl, ccs, r1, config)
            c2 = find_component(entry.tdl, ccs, r2, config)
            nearest = nearest_realizations(entry.tdl, c1, c2, config=config)
            raise NotConnected(c1, c2, nearest)
        return {"paths": [motion_to_dict(p) for p in paths]}

    @app.post("/linkages/{linkage_id}/closest")
    async def post_closest(linkage_id: str, request: Request):
        entry = entry_or_404(linkage_id)
        body = await request.json()
        try:
            i, j = int(body["c1"]), int(body["c2"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidLinkage(f"malformed closest request: {exc}") from exc
        comp1 = component_or_422(entry, i)
        comp2 = component_or_422(entry, j)
        n = int(body.get("samples", DEFAULT_CONFIG.samples_per_leg))
        r1, r2, dist = nearest_realizations(
            entry.tdl, comp1, comp2, UniformSampler(n), config
        )
        return {
            "r1": realization_to_dict(r1),
            "r2": realization_to_dict(r2),
            "distance": dist,
        }

    if frontend_dir:
        # hosts the built explorer: index.html refers to styles.css and
        # dist/main.js relative to the site root
        root = Path(frontend_dir).resolve()

        @app.get("/")
        def index():
            return FileResponse(root / "index.html")

        @app.get("/styles.css")
        def styles():
            return FileResponse(root / "styles.css")

        @app.get("/dist/{path:path}")
        def dist_asset(path: str):
            target = (root / "dist" / path).resolve()
            if not str(target).startswith(str(root / "dist")) or not target.is_file():
                raise InvalidLinkage(f"no such asset {path}")
            return FileResponse(target)

    return app
