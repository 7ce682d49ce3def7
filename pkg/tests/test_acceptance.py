"""Release gate: one test (and one pass/fail line under -v) per
product-level criterion. Each test prints an ACCEPTANCE line on success;
a failure here blocks release."""

import math
import random
import threading
import time
from collections import Counter

import numpy as np
import pytest
from fastapi.testclient import TestClient

from clickshield.bayes import score_nb, train_nb
from clickshield.blocker.concepts import build_nugget, parse_concept_graph
from clickshield.blocker.patterns import (
    HeadlinePattern,
    normalize_pattern,
    word_edit_distance,
)
from clickshield.blocker.profiles import (
    Action,
    Decision,
    UserProfile,
    hybrid_decision,
    pattern_decision,
    topic_decision,
    update_profile,
)
from clickshield.bundle import train_bundle
from clickshield.corpus import Label
from clickshield.metrics import roc_auc
from clickshield.pipeline import (
    TrainConfig,
    baseline_cross_validate,
    cross_validate,
    table2_report,
)
from clickshield.service import Service, ServiceConfig, create_app
from clickshield.svm import kkt_violation, svm_decision, train_svm_smo

from test_bayes import brute_force_log_odds, fixture_corpora
from test_blocker import TOY_GRAPH, dp_oracle, exhaustive_distance
from test_metrics import brute_force_auc

CB, NEWS = Label.CLICKBAIT, Label.NEWS
USER = "a" * 64


def ok(name):
    print(f"ACCEPTANCE {name}: PASS", flush=True)


# 1 ------------------------------------------------------------------------


def test_criterion_nb_brute_force_oracle():
    probes = [Counter(), Counter({"you": 1}), Counter({"court": 2, "you": 1}),
              Counter({"unseen": 3}), Counter({"a": 2, "b": 1})]
    for examples in fixture_corpora():
        assert len(examples) <= 50
        model = train_nb("word_ngram", examples, alpha=1.0)
        for probe in probes:
            assert math.isclose(
                score_nb(model, probe),
                brute_force_log_odds(examples, probe, 1.0),
                abs_tol=1e-9,
            )
    ok("naive-bayes log-odds matches joint-probability oracle within 1e-9")


# 2 ------------------------------------------------------------------------


def test_criterion_edit_distance_oracles():
    rng = random.Random(42)
    alphabet = ["which", "NN", "JJ", "<D>", "<QUOTE>", "are", "you", "NNS"]
    for _ in range(1000):
        a = tuple(rng.choice(alphabet) for _ in range(rng.randrange(0, 12)))
        b = tuple(rng.choice(alphabet) for _ in range(rng.randrange(0, 12)))
        assert word_edit_distance(HeadlinePattern(a), HeadlinePattern(b)) == dp_oracle(a, b)
    short = [()]
    frontier = [()]
    for _ in range(4):
        frontier = [p + (s,) for p in frontier for s in ("a", "b", "c")]
        short += frontier
    for a in short:
        for b in short:
            assert (
                word_edit_distance(HeadlinePattern(a), HeadlinePattern(b))
                == exhaustive_distance(a, b)
            )
    ok("word edit distance matches DP oracle (1000 pairs) and exhaustive search (len<=4)")


# 3 ------------------------------------------------------------------------


def test_criterion_pattern_normalization_worked_examples(annotation_pipeline, lexicons):
    common = lexicons["common200"]
    a = annotation_pipeline.annotate(0, "Which Dead “Grey's Anatomy” Character Are You")
    assert normalize_pattern(a, common).items == (
        "which", "JJ", "<QUOTE>", "character", "are", "you",
    )
    b = annotation_pipeline.annotate(1, "Which “Inside Amy Schumer” Character Are You")
    assert normalize_pattern(b, common).items == (
        "which", "<QUOTE>", "character", "are", "you",
    )
    ok("pattern normalization reproduces both worked examples token-for-token")


# 4 ------------------------------------------------------------------------


def test_criterion_smo_kkt_and_xor():
    xor_x = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
    xor_y = np.array([-1.0, -1.0, 1.0, 1.0])
    model = train_svm_smo(xor_x, xor_y, C=10.0, gamma=1.0)
    assert (np.sign(svm_decision(model, xor_x)) == xor_y).all()
    assert kkt_violation(model, xor_x, xor_y) <= 1e-3
    assert abs(float(np.dot(model.alphas, model.support_labels))) <= 1e-6
    for seed in range(10):
        rng = np.random.default_rng(seed)
        x = rng.normal(size=(50, 4))
        y = np.where(x[:, 0] - x[:, 1] + 0.3 * rng.normal(size=50) > 0, 1.0, -1.0)
        if abs(y.sum()) == 50:
            y[0] = -y[0]
        trained = train_svm_smo(x, y, C=1.0, tol=1e-3, seed=seed)
        assert kkt_violation(trained, x, y) <= 1e-3
        assert abs(float(np.dot(trained.alphas, trained.support_labels))) <= 1e-6
    ok("SMO satisfies KKT within 1e-3 and sum(alpha*y)=0 +-1e-6; XOR accuracy 1.0")


# 5 ------------------------------------------------------------------------


def test_criterion_roc_auc_pairwise_oracle():
    rng = random.Random(13)
    for n in (10, 50, 200, 500):
        for _ in range(5):
            labels = [rng.randrange(2) for _ in range(n)]
            if len(set(labels)) < 2:
                labels[0] = 1 - labels[0]
            scores = [rng.choice([0.0, 0.25, 0.5, 0.75, 1.0]) for _ in range(n)]
            assert roc_auc(labels, scores) == brute_force_auc(labels, scores)
    ok("ROC AUC equals the O(n^2) pairwise oracle exactly up to n=500")


# 6 and 7 ------------------------------------------------------------------


@pytest.fixture(scope="module")
def full_report(sample_corpus, sample_annotations, lexicons, downworthy_rules):
    start = time.monotonic()
    report = table2_report(
        sample_corpus, sample_annotations, lexicons, downworthy_rules, TrainConfig()
    )
    return report, time.monotonic() - start


def test_criterion_cv_beats_rule_baseline(sample_corpus, full_report):
    report, elapsed = full_report
    assert len(sample_corpus) >= 400
    svm_acc = report["all_features"]["svm"].accuracy
    base_acc = report["downworthy_baseline"]["svm"].accuracy
    assert svm_acc - base_acc >= 0.10
    assert elapsed < 300
    ok(
        "10-fold CV all-features SVM beats the rule baseline by >=10 points "
        f"({svm_acc:.3f} vs {base_acc:.3f}) in {elapsed:.0f}s (<5min)"
    )


def test_criterion_all_features_dominates_groups(full_report):
    report, _ = full_report
    groups = ("sentence_structure", "word_patterns", "clickbait_language", "ngram_features")
    for kind in ("svm", "tree", "forest"):
        best = report["all_features"][kind].accuracy
        for group in groups:
            assert best >= report[group][kind].accuracy, (kind, group)
    ok("all-features accuracy >= every single-group row for every model kind")


# 8 ------------------------------------------------------------------------


def test_criterion_corpus_direction_checks(sample_corpus, sample_annotations, lexicons):
    from clickshield.stats import compute_corpus_stats

    stats = compute_corpus_stats(sample_corpus, sample_annotations, lexicons)
    cb = stats.per_class[CB]
    news = stats.per_class[NEWS]
    assert cb.mean_headline_words > news.mean_headline_words
    assert cb.mean_word_chars < news.mean_word_chars
    assert cb.stopword_fraction > news.stopword_fraction
    assert cb.contraction_headline_fraction > news.contraction_headline_fraction
    ok("clickbait headlines are longer, with shorter words, more stopwords, "
       "and more contraction-bearing headlines")


# 9 ------------------------------------------------------------------------


def _quiz(i):
    subjects = ["Football Star", "Disney Princess", "Pizza Topping", "Pop Song",
                "City Skyline", "Dog Breed", "Sitcom Friend", "Superhero Movie"]
    return f"Can You Guess The {subjects[i % len(subjects)]} From One Picture"


def _news(i):
    topics = ["budget vote", "court appeal", "trade deal", "storm warning",
              "election recount", "rail strike", "border accord", "tax reform"]
    return f"Parliament debates {topics[i % len(topics)]} after long session"


def test_criterion_blocking_synthetic_oracles(annotation_pipeline, lexicons):
    common = lexicons["common200"]

    # pattern-preference user: blocks quiz-style headlines, clicks news
    events = []
    for i in range(40):
        blocked = i % 2 == 0
        text = _quiz(i) if blocked else _news(i)
        events.append((text, Action.BLOCKED if blocked else Action.CLICKED, 1000 + i))
    profile = UserProfile(user_id="pattern-user")
    patterns = {}
    for text, action, ts in events[:32]:
        ann = annotation_pipeline.annotate(0, text)
        patterns[text] = normalize_pattern(ann, common)
        update_profile(profile, text, text, action, set(), ts, patterns[text])
    correct = 0
    for text, action, _ in events[32:]:
        ann = annotation_pipeline.annotate(0, text)
        decision = pattern_decision(normalize_pattern(ann, common), profile)
        predicted = decision.decision == Decision.BLOCK
        correct += predicted == (action == Action.BLOCKED)
    pattern_acc = correct / 8
    assert pattern_acc >= 0.90

    # topic-preference user on a toy concept graph: blocks animal stories,
    # clicks plant stories
    graph = parse_concept_graph(
        "conceptgraph v1\n"
        "N n_dog dog\nN n_cat cat\nN n_horse horse\nN n_bird bird\n"
        "N n_animal animal\n"
        "N n_rose rose\nN n_tulip tulip\nN n_oak oak\nN n_fern fern\n"
        "N n_plant plant\n"
        "H n_dog n_animal\nH n_cat n_animal\nH n_horse n_animal\nH n_bird n_animal\n"
        "H n_rose n_plant\nH n_tulip n_plant\nH n_oak n_plant\nH n_fern n_plant\n"
    )
    animals = ["dog", "cat", "horse", "bird"]
    plants = ["rose", "tulip", "oak", "fern"]
    topic_events = []
    for i in range(40):
        blocked = i % 2 == 0
        pool = animals if blocked else plants
        tags = {pool[i % 4], pool[(i + 1) % 4]}
        topic_events.append((f"story {i}", Action.BLOCKED if blocked else Action.CLICKED,
                             tags, 1000 + i))
    topic_profile = UserProfile(user_id="topic-user")
    for text, action, tags, ts in topic_events[:32]:
        update_profile(topic_profile, text, text, action, tags, ts,
                       HeadlinePattern((text,)), graph=graph)
    correct = 0
    for text, action, tags, _ in topic_events[32:]:
        decision = topic_decision(build_nugget(tags, graph), topic_profile)
        predicted = decision.decision == Decision.BLOCK
        correct += predicted == (action == Action.BLOCKED)
    topic_acc = correct / 8
    assert topic_acc >= 0.90

    # degenerate hybrid weights reproduce the pure methods' decisions
    for text, action, tags, _ in topic_events[32:]:
        nugget = build_nugget(tags, graph)
        pattern = HeadlinePattern((text,))
        assert hybrid_decision(pattern, nugget, topic_profile, weight_topic=1.0).decision \
            == topic_decision(nugget, topic_profile).decision
        assert hybrid_decision(pattern, nugget, topic_profile, weight_topic=0.0).decision \
            == pattern_decision(pattern, topic_profile).decision
    ok(
        f"blocking oracles: pattern accuracy {pattern_acc:.2f} >= 0.90, "
        f"topic accuracy {topic_acc:.2f} >= 0.90, hybrid w=1/w=0 match pure methods"
    )


# 10 -----------------------------------------------------------------------


@pytest.fixture(scope="module")
def service_config(
    tmp_path_factory, sample_corpus, sample_annotations, annotation_pipeline, lexicons
):
    root = tmp_path_factory.mktemp("gate-svc")
    bundle = train_bundle(
        sample_corpus, [], lexicons, TrainConfig(),
        pipe=annotation_pipeline, anns=sample_annotations,
    )
    bundle_path = str(root / "model.bundle")
    bundle.save(bundle_path)
    return ServiceConfig(
        bundle_path=bundle_path,
        event_log_path=str(root / "events.jsonl"),
    )


def test_criterion_service_end_to_end(service_config, sample_corpus):
    service = Service(service_config)
    client = TestClient(create_app(service))

    # block-similar feedback, then a distance-1 variant gets blocked
    resp = client.post("/v1/feedback", json={
        "user": USER, "kind": "BlockSimilar",
        "headline": "Which Dead Grey Character Are You", "timestamp": 1000,
    })
    assert resp.status_code == 200
    resp = client.post("/v1/classify", json={
        "texts": ["Which Grey Character Are You"], "user": USER,
    })
    result = resp.json()["results"][0]
    assert result["label"] == "clickbait" and result["block"] is True

    # crash-restart: a new process over the same disk state reproduces
    # the exact responses on a 50-item probe
    probe = [h.text for h in sample_corpus[:50]]
    before = client.post("/v1/classify", json={"texts": probe, "user": USER}).json()
    reborn = Service(service_config)
    client2 = TestClient(create_app(reborn))
    after = client2.post("/v1/classify", json={"texts": probe, "user": USER}).json()
    assert after == before

    # atomic retrain swap under >=100 concurrent classify requests
    for i in range(5):
        reborn.record_feedback({
            "user": USER, "kind": "ReportFalseNegative",
            "headline": f"Probe correction {i}", "timestamp": 2000 + i, "url": None,
        })
    responses = []
    lock = threading.Lock()
    start = threading.Barrier(9)
    swapped = threading.Event()

    def hammer():
        start.wait()
        extra = 3
        while extra:
            if swapped.is_set():
                extra -= 1
            out = reborn.classify_texts(probe[:2], None)
            with lock:
                responses.append(out)

    def swap():
        start.wait()
        time.sleep(0.05)
        reborn.retrain()
        swapped.set()

    threads = [threading.Thread(target=hammer) for _ in range(8)]
    trainer = threading.Thread(target=swap)
    for t in threads + [trainer]:
        t.start()
    for t in threads + [trainer]:
        t.join()
    assert len(responses) >= 100
    by_version = {}
    for out in responses:
        assert out["version"] in (1, 2)
        by_version.setdefault(out["version"], set()).add(
            tuple(r["score"] for r in out["results"])
        )
    for version, score_sets in by_version.items():
        assert len(score_sets) == 1, f"mixed-version response for v{version}"
    assert 2 in by_version
    ok(
        "service end-to-end: distance-1 variant blocked, crash-restart "
        f"byte-identical on 50-item probe, atomic model swap across "
        f"{len(responses)} concurrent requests"
    )
