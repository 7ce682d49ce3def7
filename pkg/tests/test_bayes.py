import math
from collections import Counter

import pytest

from clickshield.bayes import NaiveBayesModel, score_nb, train_nb
from clickshield.corpus import Label

CB, NEWS = Label.CLICKBAIT, Label.NEWS


def toy_model(alpha=1.0):
    examples = [
        (CB, Counter(["you"])), (CB, Counter(["you"])), (CB, Counter(["you"])),
        (NEWS, Counter(["obama"])), (NEWS, Counter(["obama"])), (NEWS, Counter(["obama"])),
    ]
    return train_nb("subject", examples, alpha=alpha)


def brute_force_log_odds(examples, items, alpha):
    """Joint-probability oracle: log P(CB)·ΠP(item|CB)^c − same for news."""
    vocab = set()
    counts = {CB: Counter(), NEWS: Counter()}
    n_docs = {CB: 0, NEWS: 0}
    for label, ms in examples:
        counts[label].update(ms)
        vocab.update(ms)
        n_docs[label] += 1
    v = len(vocab)
    total_docs = n_docs[CB] + n_docs[NEWS]
    out = 0.0
    for label, sign in ((CB, 1.0), (NEWS, -1.0)):
        log_joint = math.log(n_docs[label] / total_docs)
        denom = sum(counts[label].values()) + alpha * v
        for item, c in items.items():
            p = (counts[label][item] + alpha) / denom
            log_joint += c * math.log(p)
        out += sign * log_joint
    return out


def test_hand_computed_probability():
    model = toy_model()
    # P(you|CB) = (3+1)/(3+2) = 0.8 with vocab {you, obama}
    assert math.isclose(math.exp(model.log_probs["you"][CB.value]), 0.8)


def test_priors_balanced():
    model = toy_model()
    assert math.isclose(model.log_prior[CB.value], math.log(0.5))
    assert math.isclose(
        math.exp(model.log_prior[CB.value]) + math.exp(model.log_prior[NEWS.value]), 1.0
    )


def test_unseen_smoothing_definition():
    model = toy_model()
    # alpha=1, class has N=3 tokens, V=2 vocab -> P_unseen = 1/(3+2)
    assert math.isclose(math.exp(model.log_unseen[CB.value]), 1 / 5)


def test_score_log4():
    model = toy_model()
    assert math.isclose(score_nb(model, Counter(["you"])), math.log(4), abs_tol=1e-12)


def test_empty_multiset_prior_odds():
    assert score_nb(toy_model(), Counter()) == 0.0


def test_factorization_identity():
    model = toy_model()
    prior_odds = model.log_prior[CB.value] - model.log_prior[NEWS.value]
    lhs = score_nb(model, Counter(["you", "obama"]))
    rhs = (score_nb(model, Counter(["you"])) + score_nb(model, Counter(["obama"]))
           - prior_odds)
    assert math.isclose(lhs, rhs, abs_tol=1e-12)


def test_class_absent_fatal():
    with pytest.raises(ValueError):
        train_nb("subject", [(CB, Counter(["you"]))])


def test_alpha_nonpositive_rejected():
    with pytest.raises(ValueError):
        toy_model(alpha=0.0)


def fixture_corpora():
    base = [
        (CB, Counter({"you": 2, "this": 1})),
        (CB, Counter({"we": 1})),
        (CB, Counter({"you": 1, "guess": 3})),
        (NEWS, Counter({"court": 2})),
        (NEWS, Counter({"minister": 1, "court": 1})),
        (NEWS, Counter({"quake": 4, "court": 1})),
    ]
    yield base
    yield base * 4  # 24 items
    yield [(CB, Counter({"a": 1}))] * 25 + [(NEWS, Counter({"b": 1}))] * 25


def test_brute_force_oracle():
    probes = [Counter(), Counter({"you": 1}), Counter({"court": 2, "you": 1}),
              Counter({"unseen-item": 3}), Counter({"a": 1, "b": 1})]
    for examples in fixture_corpora():
        assert len(examples) <= 50
        model = train_nb("word_ngram", examples, alpha=1.0)
        for probe in probes:
            assert math.isclose(
                score_nb(model, probe),
                brute_force_log_odds(examples, probe, 1.0),
                abs_tol=1e-9,
            )


def test_count_doubling_invariance():
    # doubling every count (and the smoothing pseudo-count with them)
    # leaves every conditional probability, hence every score, unchanged
    for examples in fixture_corpora():
        doubled = [(lab, Counter({k: 2 * v for k, v in ms.items()}))
                   for lab, ms in examples]
        a = train_nb("word_ngram", examples, alpha=1.0)
        b = train_nb("word_ngram", doubled, alpha=2.0)
        for probe in [Counter(), Counter({"you": 1, "court": 1}),
                      Counter({"unseen": 2})]:
            assert math.isclose(score_nb(a, probe), score_nb(b, probe), abs_tol=1e-9)


def test_label_swap_negates_scores():
    for examples in fixture_corpora():
        swapped = [(NEWS if lab == CB else CB, ms) for lab, ms in examples]
        a = train_nb("word_ngram", examples)
        b = train_nb("word_ngram", swapped)
        for probe in [Counter(), Counter({"you": 2}), Counter({"court": 1})]:
            assert math.isclose(score_nb(a, probe), -score_nb(b, probe), abs_tol=1e-9)


def test_serialization_round_trip():
    model = train_nb("word_ngram", [
        (CB, Counter({("can", "we"): 2})), (NEWS, Counter({("court",): 1})),
    ])
    again = NaiveBayesModel.from_dict(model.to_dict())
    assert again == model
    assert score_nb(again, Counter({("can", "we"): 1})) == \
           score_nb(model, Counter({("can", "we"): 1}))
