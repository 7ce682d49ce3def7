"""HTTP API: classification, per-user blocking, feedback capture,
durable event log, and atomic retraining.

State layout:
- ModelRegistry holds immutable model bundles; publishing a new version
  is a single reference swap, so a request that grabbed a snapshot keeps
  using it until it finishes (never mixed versions within one response).
- The event log is append-only JSON-Lines with fsync on append; crash
  recovery replays it to rebuild per-user profiles, the blocked-link
  audit list, and the corrected-example training queue.
- Per-user profile updates are serialized behind one lock per user.
"""

from __future__ import annotations

import html as html_lib
import json
import os
import re
import threading
import time
from dataclasses import dataclass, field

import httpx
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .annotation import AnnotationPipeline
from .blocker import (
    Action,
    ConceptGraph,
    Decision,
    build_nugget,
    extract_tags,
    hybrid_decision,
    load_concept_graph,
    normalize_pattern,
    pattern_decision,
    topic_decision,
    update_profile,
)
from .blocker.profiles import UserProfile
from .bundle import ModelBundle, train_bundle
from .corpus import (
    CorpusError,
    Label,
    LabeledHeadline,
    Lexicon,
    bundled_data_path,
    load_bundled_lexicons,
    load_corpus,
)
from .pipeline import TrainConfig

MAX_BATCH = 200
FEEDBACK_KINDS = ("BlockSimilar", "ReportFalsePositive", "ReportFalseNegative", "Clicked")
_USER_RE = re.compile(r"^[0-9a-f]{64}$")
_TITLE_RE = re.compile(r"<title[^>]*>(.*?)</title>", re.IGNORECASE | re.DOTALL)
DEFAULT_FETCH_TIMEOUT = 5.0
DEFAULT_FETCH_CAP = 512 * 1024


class ServiceError(Exception):
    def __init__(self, code: str, message: str, status: int = 400):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status


@dataclass
class ServiceConfig:
    bundle_path: str
    event_log_path: str
    corpus_path: str | None = None  # defaults to the bundled sample corpus
    graph_path: str | None = None  # defaults to the bundled concept graph
    method: str = "pattern"  # pattern | topic | hybrid
    fetch_timeout: float = DEFAULT_FETCH_TIMEOUT
    fetch_cap: int = DEFAULT_FETCH_CAP
    retrain_interval_s: float = 86400.0
    auto_retrain: bool = False


def resolve_title(
    url: str,
    timeout: float = DEFAULT_FETCH_TIMEOUT,
    cap: int = DEFAULT_FETCH_CAP,
    client: httpx.Client | None = None,
) -> str:
    """Fetches the page and returns the first <title> text,
    entity-decoded and whitespace-normalized. Never fabricates one."""
    if not url.startswith(("http://", "https://")):
        raise ServiceError("bad_url", f"unsupported URL scheme: {url}")
    own_client = client is None
    if own_client:
        client = httpx.Client(timeout=timeout, follow_redirects=True)
    try:
        with client.stream("GET", url) as resp:
            if resp.status_code < 200 or resp.status_code >= 300:
                raise ServiceError(
                    "http_status", f"GET {url} returned {resp.status_code}", status=502
                )
            chunks = []
            size = 0
            for chunk in resp.iter_bytes():
                chunks.append(chunk)
                size += len(chunk)
                if size >= cap:
                    break
            body = b"".join(chunks)[:cap]
    except httpx.TimeoutException as exc:
        raise ServiceError("timeout", f"GET {url} timed out") from exc
    except httpx.HTTPError as exc:
        raise ServiceError("fetch_failed", f"GET {url} failed: {exc}") from exc
    finally:
        if own_client:
            client.close()
    match = _TITLE_RE.search(body.decode("utf-8", errors="replace"))
    if not match or not match.group(1).strip():
        raise ServiceError("missing_title", f"no title element found at {url}", status=502)
    return " ".join(html_lib.unescape(match.group(1)).split())


class EventLog:
    """Append-only JSON-Lines log, fsync on append."""

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()
        self._seq = 0
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)

    def replay(self) -> list[dict]:
        records = []
        if os.path.exists(self.path):
            with open(self.path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        records.append(json.loads(line))
        if records:
            self._seq = max(r["seq"] for r in records)
        return records

    def append(self, record: dict) -> int:
        with self._lock:
            self._seq += 1
            record = dict(record, seq=self._seq)
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            return self._seq


class ModelRegistry:
    """Immutable bundles; one active version; lock-free reads via a
    single reference assignment on publish."""

    def __init__(self, bundle: ModelBundle):
        self._active = bundle
        self._versions: dict[int, ModelBundle] = {bundle.model_version: bundle}
        self._lock = threading.Lock()

    @property
    def active(self) -> ModelBundle:
        return self._active

    def publish(self, bundle: ModelBundle) -> None:
        with self._lock:
            if bundle.model_version <= self._active.model_version:
                raise ServiceError(
                    "version_order", "new model version must increase", status=500
                )
            self._versions[bundle.model_version] = bundle
            self._active = bundle

    def get(self, version: int) -> ModelBundle | None:
        return self._versions.get(version)


@dataclass
class BlockedEntry:
    headline: str
    timestamp: int
    basis: str
    correct: bool | None = None


@dataclass
class UserState:
    profile: UserProfile
    blocked: list[BlockedEntry] = field(default_factory=list)
    last_timestamp: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)


class Service:
    def __init__(self, config: ServiceConfig, bundle: ModelBundle | None = None):
        self.config = config
        self.lexicons: dict[str, Lexicon] = load_bundled_lexicons()
        graph_path = config.graph_path or str(bundled_data_path("concept_graph.txt"))
        self.graph: ConceptGraph = load_concept_graph(graph_path)
        corpus_path = config.corpus_path or str(bundled_data_path("sample_corpus.jsonl"))
        self.base_corpus: list[LabeledHeadline] = load_corpus(corpus_path, "jsonl").headlines
        if bundle is None:
            bundle = self._load_latest_bundle()
        self.registry = ModelRegistry(bundle)
        self.log = EventLog(config.event_log_path)
        self.users: dict[str, UserState] = {}
        self.corrections: list[tuple[str, Label]] = []
        self._seen_feedback: dict[tuple, int | None] = {}
        self._retrain_lock = threading.Lock()
        self._users_lock = threading.Lock()
        for record in self.log.replay():
            self._apply_record(record)

    # -- startup ---------------------------------------------------------

    def _load_latest_bundle(self) -> ModelBundle:
        base = self.config.bundle_path
        best_path, best_version = base, -1
        directory = os.path.dirname(os.path.abspath(base)) or "."
        prefix = os.path.basename(base) + ".v"
        if os.path.isdir(directory):
            for name in os.listdir(directory):
                if name.startswith(prefix):
                    try:
                        version = int(name[len(prefix):])
                    except ValueError:
                        continue
                    if version > best_version:
                        best_version = version
                        best_path = os.path.join(directory, name)
        return ModelBundle.load(best_path)

    # -- helpers ---------------------------------------------------------

    def _pipeline(self, bundle: ModelBundle) -> AnnotationPipeline:
        return bundle.annotation_pipeline()

    def _user_state(self, user: str) -> UserState:
        with self._users_lock:
            if user not in self.users:
                self.users[user] = UserState(profile=UserProfile(user_id=user))
            return self.users[user]

    def _block_decision(self, pattern, tags, profile):
        method = self.config.method
        if method == "pattern":
            return pattern_decision(pattern, profile)
        nugget = build_nugget(set(tags), self.graph)
        if method == "topic":
            return topic_decision(nugget, profile)
        return hybrid_decision(pattern, nugget, profile)

    # -- classify --------------------------------------------------------

    def classify_texts(self, texts: list[str], user: str | None) -> dict:
        if user is not None and not _USER_RE.fullmatch(user):
            raise ServiceError("bad_user", "user must be 64 lowercase hex chars")
        if len(texts) > MAX_BATCH:
            raise ServiceError("batch_limit", f"at most {MAX_BATCH} texts per request")
        bundle = self.registry.active  # one snapshot for the whole response
        pipe = self._pipeline(bundle)
        state = self._user_state(user) if user else None
        results = []
        for text in texts:
            if not isinstance(text, str) or not text.strip():
                results.append(
                    {"text": text, "error": {"code": "empty_text", "message": "empty headline"}}
                )
                continue
            ann = pipe.annotate(0, text)
            label, score = bundle.classify_annotated(ann, self.lexicons)
            block = False
            if state is not None and label == Label.CLICKBAIT:
                pattern = normalize_pattern(ann, self.lexicons["common200"])
                tags = extract_tags(ann)
                with state.lock:
                    decision = self._block_decision(pattern, tags, state.profile)
                    block = decision.decision == Decision.BLOCK
                    if block and not any(e.headline == text for e in state.blocked):
                        timestamp = int(time.time() * 1000)
                        basis = (
                            f"{decision.method}:block={decision.block_score:.4f}"
                            f",click={decision.click_score:.4f}"
                        )
                        self.log.append(
                            {
                                "type": "autoblock",
                                "user": user,
                                "headline": text,
                                "timestamp": timestamp,
                                "basis": basis,
                            }
                        )
                        state.blocked.append(BlockedEntry(text, timestamp, basis))
            results.append(
                {"text": text, "label": label.value, "score": score, "block": block}
            )
        return {"version": bundle.model_version, "results": results}

    # -- feedback --------------------------------------------------------

    def record_feedback(self, event: dict) -> dict:
        user = event.get("user")
        kind = event.get("kind")
        headline = event.get("headline")
        url = event.get("url")
        timestamp = event.get("timestamp")
        if not isinstance(user, str) or not _USER_RE.fullmatch(user):
            raise ServiceError("bad_user", "user must be 64 lowercase hex chars")
        if kind not in FEEDBACK_KINDS:
            raise ServiceError("bad_kind", f"kind must be one of {FEEDBACK_KINDS}")
        if not isinstance(headline, str) or not headline.strip():
            raise ServiceError("bad_headline", "headline must be a non-empty string")
        if not isinstance(timestamp, int) or timestamp < 0:
            raise ServiceError("bad_timestamp", "timestamp must be UTC milliseconds")
        if url is not None and not isinstance(url, str):
            raise ServiceError("bad_url", "url must be a string when present")
        key = (user, timestamp, headline, kind)
        state = self._user_state(user)
        with state.lock:
            if key in self._seen_feedback:
                return {"seq": self._seen_feedback[key], "duplicate": True}
            if timestamp < state.last_timestamp:
                raise ServiceError(
                    "timestamp_order",
                    "timestamp must be non-decreasing per user",
                )
            record = {
                "type": "feedback",
                "user": user,
                "kind": kind,
                "headline": headline,
                "url": url,
                "timestamp": timestamp,
            }
            seq = self.log.append(record)
            record["seq"] = seq
            self._apply_feedback(record)
        return {"seq": seq, "duplicate": False}

    def _apply_feedback(self, record: dict) -> None:
        """Updates in-memory state for one feedback record; used both on
        the live path (after append) and during log replay."""
        user = record["user"]
        kind = record["kind"]
        headline = record["headline"]
        timestamp = record["timestamp"]
        key = (user, timestamp, headline, kind)
        state = self._user_state(user)
        self._seen_feedback[key] = record.get("seq")
        state.last_timestamp = max(state.last_timestamp, timestamp)
        if kind == "ReportFalsePositive":
            self.corrections.append((headline, Label.NEWS))
            return
        if kind == "ReportFalseNegative":
            self.corrections.append((headline, Label.CLICKBAIT))
            return
        action = Action.BLOCKED if kind == "BlockSimilar" else Action.CLICKED
        pipe = self._pipeline(self.registry.active)
        ann = pipe.annotate(0, headline)
        pattern = normalize_pattern(ann, self.lexicons["common200"])
        tags = extract_tags(ann)
        link = record.get("url") or headline
        update_profile(
            state.profile, link, headline, action, set(tags), timestamp, pattern,
            graph=self.graph,
        )

    def _apply_record(self, record: dict) -> None:
        kind = record.get("type")
        if kind == "feedback":
            state = self._user_state(record["user"])
            with state.lock:
                self._apply_feedback(record)
        elif kind == "autoblock":
            state = self._user_state(record["user"])
            with state.lock:
                state.blocked.append(
                    BlockedEntry(record["headline"], record["timestamp"], record["basis"])
                )
        elif kind == "blockreview":
            self._apply_block_review(
                record["user"], record["headline"], record["timestamp"],
                record["correct"],
            )

    # -- blocked list ----------------------------------------------------

    def list_blocked(self, user: str) -> list[dict]:
        if not _USER_RE.fullmatch(user):
            raise ServiceError("bad_user", "user must be 64 lowercase hex chars")
        with self._users_lock:
            state = self.users.get(user)
        if state is None:
            return []
        with state.lock:
            return [
                {
                    "headline": e.headline,
                    "timestamp": e.timestamp,
                    "basis": e.basis,
                    "correct": e.correct,
                }
                for e in state.blocked
            ]

    def review_block(self, user: str, headline: str, correct: bool) -> dict:
        """Marking a block incorrect moves the link's influence from the
        block side to the click side of the user's profile."""
        if not _USER_RE.fullmatch(user):
            raise ServiceError("bad_user", "user must be 64 lowercase hex chars")
        state = self._user_state(user)
        with state.lock:
            if not any(e.headline == headline for e in state.blocked):
                raise ServiceError("unknown_block", "no such blocked entry", status=404)
            timestamp = int(time.time() * 1000)
            self.log.append(
                {
                    "type": "blockreview",
                    "user": user,
                    "headline": headline,
                    "timestamp": timestamp,
                    "correct": correct,
                }
            )
        self._apply_block_review(user, headline, timestamp, correct)
        return {"ok": True}

    def _apply_block_review(
        self, user: str, headline: str, timestamp: int, correct: bool
    ) -> None:
        state = self._user_state(user)
        with state.lock:
            for entry in state.blocked:
                if entry.headline == headline:
                    entry.correct = correct
            if correct:
                return
            flipped = False
            for entry in state.profile.history:
                if entry.headline == headline and entry.action == Action.BLOCKED:
                    entry.action = Action.CLICKED
                    flipped = True
            if flipped:
                state.profile.rebuild_derived(self.graph)
            else:
                pipe = self._pipeline(self.registry.active)
                ann = pipe.annotate(0, headline)
                update_profile(
                    state.profile, headline, headline, Action.CLICKED,
                    set(extract_tags(ann)),
                    timestamp,
                    normalize_pattern(ann, self.lexicons["common200"]),
                    graph=self.graph,
                )

    # -- retrain ---------------------------------------------------------

    def retrain(self) -> dict:
        """Trains a new model version on base corpus + corrected
        examples and publishes it atomically. The annotation models are
        carried over unchanged: their training data does not change, and
        retraining them is deterministic-identical."""
        with self._retrain_lock:
            old = self.registry.active
            corrections = list(self.corrections)
            corpus = list(self.base_corpus)
            next_id = max((h.id for h in corpus), default=-1) + 1
            for text, label in corrections:
                corpus.append(LabeledHeadline(id=next_id, text=text, label=label))
                next_id += 1
            try:
                bundle = train_bundle(
                    corpus,
                    treebank=[],
                    lexicons=self.lexicons,
                    cfg=old.config,
                    model_version=old.model_version + 1,
                    pipe=self._pipeline(old),
                )
                path = f"{self.config.bundle_path}.v{bundle.model_version}"
                bundle.save(path)
            except Exception as exc:
                raise ServiceError(
                    "retrain_failed", f"training failed: {exc}", status=500
                ) from exc
            self.registry.publish(bundle)
            return {"model_version": bundle.model_version}


def _error_response(exc: ServiceError) -> JSONResponse:
    return JSONResponse(
        status_code=exc.status,
        content={"error": {"code": exc.code, "message": exc.message}},
    )


def create_app(service: Service) -> FastAPI:
    app = FastAPI()
    app.state.service = service

    @app.exception_handler(ServiceError)
    async def handle_service_error(request: Request, exc: ServiceError):
        return _error_response(exc)

    async def _body(request: Request) -> dict:
        try:
            data = await request.json()
        except Exception:
            raise ServiceError("bad_json", "request body must be a JSON object")
        if not isinstance(data, dict):
            raise ServiceError("bad_json", "request body must be a JSON object")
        return data

    @app.post("/v1/classify")
    async def classify(request: Request):
        data = await _body(request)
        texts = data.get("texts")
        if not isinstance(texts, list):
            raise ServiceError("bad_texts", "texts must be a list of strings")
        return service.classify_texts(texts, data.get("user"))

    @app.post("/v1/classify-url")
    async def classify_url(request: Request):
        data = await _body(request)
        url = data.get("url")
        if not isinstance(url, str):
            raise ServiceError("bad_url", "url must be a string")
        title = resolve_title(
            url, timeout=service.config.fetch_timeout, cap=service.config.fetch_cap
        )
        out = service.classify_texts([title], data.get("user"))
        return {"version": out["version"], "title": title, "result": out["results"][0]}

    @app.post("/v1/feedback")
    async def feedback(request: Request):
        data = await _body(request)
        event = data.get("event", data)
        if not isinstance(event, dict):
            raise ServiceError("bad_event", "event must be an object")
        return service.record_feedback(event)

    @app.get("/v1/blocked")
    async def blocked(user: str = ""):
        if not user:
            raise ServiceError("bad_user", "user query parameter required")
        return {"blocked": service.list_blocked(user)}

    @app.post("/v1/blocked/feedback")
    async def blocked_feedback(request: Request):
        data = await _body(request)
        user = data.get("user")
        headline = data.get("headline")
        correct = data.get("correct")
        if not isinstance(user, str) or not isinstance(headline, str) \
                or not isinstance(correct, bool):
            raise ServiceError("bad_request", "user, headline, correct required")
        return service.review_block(user, headline, correct)

    @app.post("/v1/admin/retrain")
    async def retrain():
        return service.retrain()

    @app.get("/v1/health")
    async def health():
        return {"version": 1, "model_version": service.registry.active.model_version}

    return app


def build_service(config: ServiceConfig) -> FastAPI:
    return create_app(Service(config))
