"""Starts a local clickshield service for the extension's end-to-end
tests.

Trains (or reuses a cached) model bundle, binds uvicorn to a free port,
and prints one line the test harness parses:

    READY <port> <event_log_path>
"""

import pathlib
import socket
import sys
import tempfile

from clickshield.annotation.conllu import load_conllu
from clickshield.bundle import ModelBundle, train_bundle
from clickshield.corpus import bundled_data_path, load_bundled_lexicons, load_corpus
from clickshield.pipeline import TrainConfig
from clickshield.service import Service, ServiceConfig, create_app

CACHE = pathlib.Path(__file__).resolve().parent.parent / ".cache"


def ensure_bundle() -> pathlib.Path:
    CACHE.mkdir(exist_ok=True)
    path = CACHE / "model.bundle"
    if path.exists():
        try:
            ModelBundle.load(str(path))
            return path
        except Exception:
            path.unlink()
    corpus = load_corpus(str(bundled_data_path("sample_corpus.jsonl")), "jsonl").headlines
    treebank, _ = load_conllu(str(bundled_data_path("treebank.conllu")))
    bundle = train_bundle(corpus, treebank, load_bundled_lexicons(), TrainConfig())
    bundle.save(str(path))
    return path


def main() -> None:
    import uvicorn

    bundle_path = ensure_bundle()
    run_dir = pathlib.Path(tempfile.mkdtemp(prefix="clickshield-e2e-"))
    event_log = run_dir / "events.jsonl"
    config = ServiceConfig(
        bundle_path=str(bundle_path),
        event_log_path=str(event_log),
    )
    app = create_app(Service(config))
    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    print(f"READY {port} {event_log}", flush=True)
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    sys.exit(main())
