import pytest

from clickshield.annotation.conllu import load_conllu
from clickshield.corpus import (
    bundled_data_path,
    load_bundled_lexicons,
    load_corpus,
    load_lexicon,
)
from clickshield.pipeline import TrainConfig, annotate_corpus, train_annotation


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per release criterion at the end of the run."""
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) != "call":
                continue
            if "test_acceptance.py" not in rep.nodeid:
                continue
            printed = "".join(
                text for title, text in rep.sections if "stdout" in title
            )
            detail = next(
                (ln for ln in printed.splitlines() if ln.startswith("ACCEPTANCE")),
                None,
            )
            if outcome == "passed" and detail:
                lines.append(detail)
            else:
                name = rep.nodeid.split("::")[-1]
                lines.append(f"ACCEPTANCE {name}: {'PASS' if outcome == 'passed' else 'FAIL'}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def treebank():
    sentences, skipped = load_conllu(str(bundled_data_path("treebank.conllu")))
    assert skipped == 0
    return sentences


@pytest.fixture(scope="session")
def annotation_pipeline(treebank):
    return train_annotation(treebank, TrainConfig())


@pytest.fixture(scope="session")
def lexicons():
    return load_bundled_lexicons()


@pytest.fixture(scope="session")
def downworthy_rules():
    return load_lexicon(bundled_data_path("downworthy_rules.txt"), "downworthy_rules")


@pytest.fixture(scope="session")
def sample_corpus():
    result = load_corpus(str(bundled_data_path("sample_corpus.jsonl")), "jsonl")
    assert not result.errors
    return result.headlines


@pytest.fixture(scope="session")
def sample_annotations(sample_corpus, annotation_pipeline):
    return annotate_corpus(sample_corpus, annotation_pipeline)
