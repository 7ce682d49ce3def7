#!/usr/bin/env python
"""Generate the bundled dependency treebank sample (CoNLL-U).

Headline-style sentences are produced from hand-written templates with
gold Penn tags and dependency trees, so tagger/parser training data is
deterministic and licence-clean. Run from the repo root:

    python tools/gen_treebank.py > src/clickshield/data/treebank.conllu
"""

from __future__ import annotations

import random
import sys

T = tuple[str, str, int, str]  # form, xpos, head (1-based, 0=root), deprel

NOUNS = [
    "song", "character", "house", "man", "woman", "dog", "cat", "fan",
    "reaction", "video", "story", "way", "friend", "month", "sign", "world",
    "government", "court", "leader", "fire", "crash", "plea", "husband",
    "baby", "driver", "witch", "housewife", "quiz", "photo", "list",
    "reason", "city", "bomb", "attack", "deal", "president", "trick",
    "secret", "moment", "job", "school", "car", "game", "team", "book",
    "movie", "singer", "actor", "place", "recipe", "dress", "puppy",
    "teacher", "student", "doctor", "budget", "election", "storm", "virus",
    "protest", "strike", "border", "treaty", "market", "bank", "zodiac",
    "birth", "appeal", "match", "minister", "senate", "economy", "wedding",
    "kitchen", "garden", "phone", "hotel", "island", "train", "airport",
]
PLURALS = [
    "things", "reasons", "photos", "ways", "facts", "people", "kids",
    "girls", "guys", "men", "women", "birds", "dogs", "cats", "celebrities",
    "moments", "signs", "secrets", "tricks", "jobs", "songs", "stories",
    "videos", "games", "movies", "recipes", "places", "teachers", "students",
    "workers", "voters", "houses", "books", "friends", "parents", "fans",
    "puppies", "soldiers", "leaders", "protesters",
]
PROPER = [
    "Disney", "Turkey", "Obama", "Facebook", "FIFA", "Starbucks", "America",
    "China", "India", "Iran", "Israel", "Korea", "London", "Paris", "Google",
    "Harry", "Potter", "Hogwarts", "Shane", "Williams", "York", "Texas",
    "Europe", "Russia", "Brazil", "Canada", "Germany", "Japan", "Nepal",
    "Peru", "Boston", "Chicago", "Hollywood", "Netflix", "Twitter", "Grey",
    "Anatomy", "Amy", "Schumer", "Madonna", "Adele", "Beyonce", "Senate",
    "Congress", "NATO", "NASA", "EU", "UN",
]
ADJECTIVES = [
    "dead", "new", "old", "best", "real", "drunk", "amazing", "simple",
    "young", "badass", "epic", "little", "big", "hilarious", "perfect",
    "weird", "creepy", "tiny", "huge", "strange", "famous", "local",
    "foreign", "national", "awkward", "adorable", "brutal", "honest",
    "secret", "gut-wrenching", "super-excited", "breathtaking", "stunning",
    "dangerous", "deadly", "severe", "rare", "senior", "former",
]
ADVERBS = ["really", "actually", "never", "always", "again", "still", "finally", "probably", "well", "badly", "quickly", "slowly"]
VBZ = ["warns", "says", "dies", "kills", "wins", "rules", "knows", "looks", "makes", "announces", "hits", "begins", "ends", "rises", "falls", "approves", "rejects", "backs"]
VBD = ["said", "warned", "died", "won", "announced", "ruled", "hit", "made", "found", "lost", "signed", "rejected", "approved", "blamed", "praised"]
VBP = ["fly", "happen", "matter", "agree", "win", "laugh", "cry", "dance", "know", "love", "want", "need", "say", "look", "make", "protest", "vote"]
VBN = ["killed", "posted", "found", "arrested", "injured", "born", "obsessed", "based", "blamed", "banned", "elected", "released", "signed"]
VB = ["guess", "believe", "know", "make", "see", "watch", "win", "cry", "laugh", "smile", "grin", "quit", "vote", "resign"]


def _pick(rng, pool):
    return rng.choice(pool)


class Sentence:
    def __init__(self):
        self.tokens: list[T] = []

    def add(self, form: str, xpos: str, head: int, deprel: str) -> int:
        self.tokens.append((form, xpos, head, deprel))
        return len(self.tokens)

    def validate(self) -> "Sentence":
        n = len(self.tokens)
        roots = [t for t in self.tokens if t[2] == 0]
        assert len(roots) == 1, self.tokens
        for form, _, head, _ in self.tokens:
            assert 0 <= head <= n and form
        # projectivity and acyclicity
        heads = [t[2] - 1 for t in self.tokens]
        for d1 in range(n):
            if heads[d1] < 0:
                continue
            a1, b1 = sorted((d1, heads[d1]))
            for d2 in range(n):
                if heads[d2] < 0:
                    continue
                a2, b2 = sorted((d2, heads[d2]))
                assert not (a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1), self.tokens
        seen = set()
        for d in range(n):
            node, path = d, set()
            while node >= 0:
                assert node not in path, self.tokens
                path.add(node)
                node = heads[node]
        return self


def t_intransitive(rng) -> Sentence:
    s = Sentence()
    subj = _pick(rng, PLURALS)
    verb = _pick(rng, VBP)
    s.add(subj, "NNS", 2, "nsubj")
    s.add(verb, "VBP", 0, "root")
    if rng.random() < 0.4:
        s.tokens = []
        s.add(subj, "NNS", 3, "nsubj")
        s.add(_pick(rng, ADVERBS), "RB", 3, "advmod")
        s.add(verb, "VBP", 0, "root")
    return s


def t_transitive_news(rng) -> Sentence:
    s = Sentence()
    s.add(_pick(rng, PROPER), "NNP", 2, "nsubj")
    s.add(_pick(rng, VBZ), "VBZ", 0, "root")
    if rng.random() < 0.5:
        s.add(_pick(rng, PROPER), "NNP", 2, "dobj")
    else:
        s.add(_pick(rng, NOUNS), "NN", 2, "dobj")
    if rng.random() < 0.5:
        s.add("over", "IN", 5, "case")
        s.add(_pick(rng, NOUNS), "NN", 2, "nmod")
    return s


def t_passive_news(rng) -> Sentence:
    s = Sentence()
    s.add(_pick(rng, NOUNS), "NN", 2, "nsubj")
    s.add(_pick(rng, VBN), "VBN", 0, "root")
    s.add(rng.choice(["after", "in", "before"]), "IN", 4, "case")
    s.add(_pick(rng, NOUNS), "NN", 2, "nmod")
    return s


def t_kills_news(rng) -> Sentence:
    s = Sentence()
    s.add(_pick(rng, NOUNS), "NN", 2, "nsubj")
    s.add(rng.choice(["kills", "injures"]), "VBZ", 0, "root")
    n = str(rng.randrange(2, 90))
    if rng.random() < 0.5:
        s.add("at", "IN", 4, "advmod")
        s.add("least", "JJS", 5, "nummod")
        s.add(n, "CD", 2, "dobj")
    else:
        s.add(n, "CD", 2, "dobj")
    base = len(s.tokens)
    s.add("in", "IN", base + 2, "case")
    s.add(_pick(rng, PROPER), "NNP", 2, "nmod")
    return s


def t_quiz_question(rng) -> Sentence:
    s = Sentence()
    # which [JJ] [NNP] NN are you [based on your NN NN]
    mods = []
    if rng.random() < 0.6:
        mods.append((_pick(rng, ADJECTIVES), "JJ", "amod"))
    if rng.random() < 0.5:
        mods.append((_pick(rng, PROPER), "NNP", "compound"))
    noun_pos = 1 + len(mods) + 1
    verb_pos = noun_pos + 1
    s.add("which", "WDT", noun_pos, "det")
    for form, xpos, rel in mods:
        s.add(form, xpos, noun_pos, rel)
    s.add(_pick(rng, NOUNS), "NN", verb_pos, "dobj")
    s.add("are", "VBP", 0, "root")
    s.add("you", "PRP", verb_pos, "nsubj")
    if rng.random() < 0.4:
        based = s.add("based", "VBN", verb_pos, "advcl")
        obj = based + 4
        s.add("on", "IN", obj, "case")
        s.add("your", "PRP$", obj, "poss")
        s.add(_pick(rng, NOUNS), "NN", obj, "compound")
        s.add(_pick(rng, NOUNS), "NN", based, "nmod")
    return s


def t_can_we_guess(rng) -> Sentence:
    s = Sentence()
    s.add("can", "MD", 3, "aux")
    s.add("we", "PRP", 3, "nsubj")
    s.add("guess", "VB", 0, "root")
    s.add("your", "PRP$", 6, "poss")
    s.add(_pick(rng, NOUNS), "NN", 6, "compound")
    s.add(_pick(rng, NOUNS), "NN", 3, "dobj")
    return s


def t_how_well(rng) -> Sentence:
    s = Sentence()
    s.add("how", "WRB", 2, "advmod")
    s.add("well", "RB", 5, "advmod")
    s.add("do", "VBP", 5, "aux")
    s.add("you", "PRP", 5, "nsubj")
    s.add("know", "VB", 0, "root")
    s.add("your", "PRP$", 7, "poss")
    s.add(_pick(rng, NOUNS), "NN", 5, "dobj")
    return s


def t_number_things(rng) -> Sentence:
    s = Sentence()
    s.add(str(rng.randrange(3, 40)), "CD", 2, "nummod")
    s.add(_pick(rng, PLURALS), "NNS", 0, "root")
    if rng.random() < 0.7:
        s.add("that", "WDT", 4, "nsubj")
        s.add(rng.choice(["happen", "matter", "work"]), "VBP", 2, "acl:relcl")
        s.add("when", "WRB", 8, "mark")
        s.add("your", "PRP$", 7, "poss")
        s.add(_pick(rng, NOUNS), "NN", 8, "nsubj")
        s.add(rng.choice(["is", "looks", "gets"]), "VBZ", 4, "advcl")
        s.add(_pick(rng, ADJECTIVES), "JJ", 8, "acomp")
    else:
        s.add("about", "IN", 4, "case")
        s.add(_pick(rng, NOUNS), "NN", 2, "nmod")
    return s


def t_wont_believe(rng) -> Sentence:
    s = Sentence()
    s.add("you", "PRP", 4, "nsubj")
    s.add("wo", "MD", 4, "aux")
    s.add("n't", "RB", 4, "advmod")
    s.add("believe", "VB", 0, "root")
    s.add("this", "DT", 7, "det")
    s.add(_pick(rng, ADJECTIVES), "JJ", 7, "amod")
    s.add(_pick(rng, NOUNS), "NN", 4, "dobj")
    return s


def t_contraction_copula(rng) -> Sentence:
    s = Sentence()
    pron, tag = rng.choice([("they", "PRP"), ("you", "PRP"), ("we", "PRP")])
    s.add(pron, tag, 3, "nsubj")
    s.add("'re", "VBP", 3, "aux")
    s.add(rng.choice(["coming", "going", "trying", "winning"]), "VBG", 0, "root")
    if rng.random() < 0.5:
        s.add("again", "RB", 3, "advmod")
    return s


def t_will_make(rng) -> Sentence:
    s = Sentence()
    s.add("this", "DT", 3, "det")
    s.add(_pick(rng, ADJECTIVES), "JJ", 3, "amod")
    s.add(_pick(rng, NOUNS), "NN", 5, "nsubj")
    s.add("will", "MD", 5, "aux")
    s.add("make", "VB", 0, "root")
    s.add("you", "PRP", 5, "dobj")
    s.add(_pick(rng, VB), "VB", 5, "xcomp")
    return s


def t_copular(rng) -> Sentence:
    s = Sentence()
    s.add("the", "DT", 2, "det")
    s.add(_pick(rng, NOUNS), "NN", 3, "nsubj")
    s.add("is", "VBZ", 0, "root")
    if rng.random() < 0.3:
        s.add(_pick(rng, ADVERBS), "RB", 5, "advmod")
    s.add(_pick(rng, ADJECTIVES), "JJ", 3, "acomp")
    return s


def t_possessive(rng) -> Sentence:
    s = Sentence()
    s.add("this", "DT", 2, "det")
    s.add(_pick(rng, NOUNS), "NN", 4, "poss")
    s.add("'s", "POS", 2, "case")
    s.add(_pick(rng, NOUNS), "NN", 6, "nsubj")
    s.add("is", "VBZ", 6, "aux")
    s.add(rng.choice(["trending", "winning", "spreading", "growing"]), "VBG", 0, "root")
    return s


def t_vbd_news(rng) -> Sentence:
    s = Sentence()
    s.add(_pick(rng, PROPER), "NNP", 2, "nsubj")
    s.add(_pick(rng, VBD), "VBD", 0, "root")
    s.add("the", "DT", 4, "det")
    s.add(_pick(rng, NOUNS), "NN", 2, "dobj")
    if rng.random() < 0.5:
        s.add("against", "IN", 6, "case")
        s.add(_pick(rng, PROPER), "NNP", 2, "nmod")
    return s


def t_quoted_news(rng) -> Sentence:
    s = Sentence()
    s.add(_pick(rng, PROPER), "NNP", 2, "nsubj")
    s.add("says", "VBZ", 0, "root")
    s.add("‘", "``", 2, "punct")
    s.add(_pick(rng, NOUNS), "NN", 6, "nsubj")
    s.add("is", "VBZ", 6, "aux")
    s.add(rng.choice(["coming", "ending", "working"]), "VBG", 2, "dep")
    s.add("’", "''", 2, "punct")
    return s


def t_relclause_long(rng) -> Sentence:
    # a NN whose NN and NN were VBN by a JJ NN has VBN a JJ NNP NN
    s = Sentence()
    s.add("a", "DT", 2, "det")
    s.add(rng.choice(["22-Year-Old", "teacher", "mother", "veteran", "nurse"]), "NN", 14, "nsubj")
    s.add("whose", "WP$", 4, "poss")
    s.add(rng.choice(["husband", "son", "brother", "friend"]), "NN", 8, "nsubj")
    s.add("and", "CC", 6, "cc")
    s.add(rng.choice(["baby", "sister", "dog", "neighbor"]), "NN", 4, "conj")
    s.add("were", "VBD", 8, "aux")
    s.add("killed", "VBN", 2, "acl:relcl")
    s.add("by", "IN", 12, "case")
    s.add("a", "DT", 12, "det")
    s.add(rng.choice(["drunk", "reckless", "distracted"]), "JJ", 12, "amod")
    s.add("driver", "NN", 8, "nmod:agent")
    s.add("has", "VBZ", 14, "aux")
    s.add("posted", "VBN", 0, "root")
    s.add("a", "DT", 18, "det")
    s.add(rng.choice(["gut-wrenching", "heartbreaking", "stunning"]), "JJ", 18, "amod")
    s.add(_pick(rng, PROPER), "NNP", 18, "compound")
    s.add(rng.choice(["plea", "message", "tribute", "video"]), "NN", 14, "dobj")
    return s


def t_dead_quote_question(rng) -> Sentence:
    # which JJ ‘ NNP NNP ’ NN are you
    s = Sentence()
    s.add("which", "WDT", 7, "det")
    s.add(_pick(rng, ADJECTIVES), "JJ", 7, "amod")
    s.add("‘", "``", 7, "punct")
    s.add(_pick(rng, PROPER), "NNP", 5, "compound")
    s.add(_pick(rng, PROPER), "NNP", 7, "compound")
    s.add("’", "''", 7, "punct")
    s.add(_pick(rng, NOUNS), "NN", 8, "dobj")
    s.add("are", "VBP", 0, "root")
    s.add("you", "PRP", 8, "nsubj")
    return s


TEMPLATES = [
    (t_intransitive, 8),
    (t_transitive_news, 12),
    (t_passive_news, 8),
    (t_kills_news, 8),
    (t_quiz_question, 10),
    (t_can_we_guess, 6),
    (t_how_well, 5),
    (t_number_things, 10),
    (t_wont_believe, 6),
    (t_contraction_copula, 5),
    (t_will_make, 6),
    (t_copular, 6),
    (t_possessive, 4),
    (t_vbd_news, 10),
    (t_quoted_news, 4),
    (t_relclause_long, 6),
    (t_dead_quote_question, 5),
]


def title_case(form: str, xpos: str) -> str:
    if xpos in ("``", "''", ".", ",", ":") or not form[:1].isalpha():
        return form
    if form in ("n't", "'re", "'ll", "'ve", "'d", "'m", "'s", "wo", "ca"):
        return form if form not in ("wo", "ca") else form.capitalize()
    return form[0].upper() + form[1:]


def main(n_sentences: int = 2600, seed: int = 13) -> None:
    rng = random.Random(seed)
    pool = []
    for template, weight in TEMPLATES:
        pool.extend([template] * weight)
    out = []
    for _ in range(n_sentences):
        sent = rng.choice(pool)(rng).validate()
        out.append(sent.tokens)
        if rng.random() < 0.45:  # title-cased duplicate, same gold tags
            out.append([(title_case(f, x), x, h, r) for f, x, h, r in sent.tokens])
    lines = []
    for tokens in out:
        for i, (form, xpos, head, rel) in enumerate(tokens, start=1):
            lines.append(f"{i}\t{form}\t_\t_\t{xpos}\t_\t{head}\t{rel}\t_\t_")
        lines.append("")
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
