#!/usr/bin/env python
"""Generate the bundled sample corpus (JSON-Lines, balanced).

Headlines are assembled from templates mirroring the two styles the
engine targets: listicle/question-style bait and terse factual news.

    python tools/gen_corpus.py > src/clickshield/data/sample_corpus.jsonl
"""

from __future__ import annotations

import json
import random
import sys

TOPICS = [
    "Disney", "Harry Potter", "FIFA", "Starbucks", "Netflix", "Hollywood",
    "Facebook", "Google", "Hogwarts", "Madonna", "Adele", "Beyonce",
]
NOUNS = [
    "Dog", "Cat", "Best Friend", "Mom", "Dad", "Teacher", "Roommate",
    "Boyfriend", "Girlfriend", "Sister", "Brother", "Neighbor", "Boss",
    "Puppy", "Kitten", "Wedding", "Kitchen", "Phone", "Haircut",
]
PLURALS = [
    "Things", "Reasons", "Photos", "Facts", "Secrets", "Tricks", "Signs",
    "Moments", "Ways", "Recipes", "Memes", "Gifts", "Habits", "Mistakes",
]
QUIZ_NOUNS = [
    "Character", "Song", "Villain", "Princess", "Witch", "Housewife",
    "Superhero", "Snack", "City", "Decade", "Dessert", "Hairstyle",
]
HYPERBOLIC = [
    "Amazing", "Hilarious", "Breathtaking", "Jaw-Dropping", "Gut-Wrenching",
    "Unbelievable", "Epic", "Stunning", "Mind-Blowing", "Heartbreaking",
]
ADJ = ["Awkward", "Weird", "Creepy", "Adorable", "Tiny", "Huge", "Secret", "Honest", "Badass", "Simple"]
ZODIAC = ["Zodiac Sign", "Birth Month", "Favorite Color", "Coffee Order", "Taste In Music"]

COUNTRIES = [
    "Turkey", "China", "India", "Iran", "Israel", "Korea", "Russia",
    "France", "Germany", "Japan", "Brazil", "Canada", "Nepal", "Peru",
    "Egypt", "Spain", "Mexico", "Australia",
]
NEWS_TOPICS = [
    "budget", "trade deal", "migrant deal", "ceasefire", "tax reform",
    "border treaty", "energy policy", "sanctions", "election law",
    "climate accord", "security pact", "visa deal",
]
NEWS_EVENTS = ["earthquake", "flood", "hurricane", "wildfire", "explosion", "landslide", "storm"]
NEWS_VERBS = ["warns", "rejects", "approves", "backs", "condemns", "sanctions"]
OFFICIALS = ["president", "prime minister", "senate", "parliament", "supreme court", "central bank", "foreign minister"]


def clickbait_templates(rng: random.Random) -> str:
    n = rng.choice([7, 9, 11, 13, 15, 17, 19, 21, 23, 25])
    t = rng.choice(TOPICS)
    noun = rng.choice(NOUNS)
    plural = rng.choice(PLURALS)
    quiz = rng.choice(QUIZ_NOUNS)
    hyper = rng.choice(HYPERBOLIC)
    adj = rng.choice(ADJ)
    zod = rng.choice(ZODIAC)
    templates = [
        f"{n} {plural} That Happen When Your {noun} Is Obsessed With {t}",
        f"Which {t} {quiz} Are You Based On Your {zod}",
        f"Can We Guess Your {quiz} Based On Your {zod}",
        f"How Well Do You Know Your {noun}",
        f"You Won't Believe What This {noun} Did Next",
        f"This {noun}'s {hyper} Reaction Will Blow Your Mind",
        f"{n} Reasons Why Your {noun} Is Secretly {adj}",
        f"They're Obsessed With {t} And It's {hyper}",
        f"What Happens When You Give A {noun} {t} Will Make You Cry",
        f"{n} {adj} Photos That Prove {t} Won The Internet",
        f"We Tried The New {t} {rng.choice(['Drink', 'Snack', 'Menu'])} And It's {hyper}",
        f"{n} {plural} Only People Obsessed With {t} Will Understand",
        f"This Is What Your {zod} Says About Your {noun}",
        f"{n} Of The Most {hyper} {plural} You'll See Today",
        f"Here's Why Everyone Can't Stop Talking About {t}",
        f"A {noun} Whose {rng.choice(['Husband', 'Sister', 'Dog'])} Went Viral Has Posted A {hyper} Reply",
        f"What This {adj} {noun} Did For {t} Is {hyper}",
        f"{n} Times Your {noun} Was The Most {adj} One In The Room",
        f"Do You Actually Remember These {t} {plural}",
        f"People Are Losing It Over This {adj} {t} {quiz}",
    ]
    return rng.choice(templates)


def news_templates(rng: random.Random) -> str:
    c1, c2 = rng.sample(COUNTRIES, 2)
    topic = rng.choice(NEWS_TOPICS)
    event = rng.choice(NEWS_EVENTS)
    verb = rng.choice(NEWS_VERBS)
    official = rng.choice(OFFICIALS)
    n = rng.choice([3, 7, 12, 19, 24, 40, 57, 86])
    templates = [
        f"{c1} {verb} {c2} over {topic}",
        f"{event.capitalize()} kills {n} in {c1}",
        f"{c1} supreme court rules on {topic} appeal",
        f"{c1} signs {topic} with {c2}",
        f"Man arrested after {c1} train crash",
        f"{c1} {official} announces {topic}",
        f"{c1} election: {official} concedes defeat",
        f"Dozens injured as {event} hits {c1}",
        f"{c1} parliament passes {topic} bill",
        f"{c1} central bank raises rates amid inflation",
        f"Talks stall between {c1} and {c2} on {topic}",
        f"{c1} opposition leader found guilty of fraud",
        f"Strike halts {c1} rail network for third day",
        f"{c1} reports record exports despite {topic} row",
        f"Court orders retrial in {c1} corruption case",
        f"{c1} {official} resigns after {topic} vote",
        f"Floodwaters recede in {c1} as cleanup begins",
        f"{c1} unveils plan to cut emissions by {n} percent",
        f"Wikinews interviews {c1} {official} on {topic}",
        f"{c1} police detain {n} after {event} protest",
    ]
    return rng.choice(templates)


def main(per_class: int = 230, seed: int = 41) -> None:
    rng = random.Random(seed)
    rows = []
    seen = set()
    while sum(1 for r in rows if r["label"] == "clickbait") < per_class:
        text = clickbait_templates(rng)
        if text not in seen:
            seen.add(text)
            rows.append({"headline": text, "label": "clickbait", "source": rng.choice(
                ["buzzfeed.com", "upworthy.com", "viralnova.com", "scoopwhoop.com", "viralstories.com"])})
    while sum(1 for r in rows if r["label"] == "news") < per_class:
        text = news_templates(rng)
        if text not in seen:
            seen.add(text)
            rows.append({"headline": text, "label": "news", "source": "en.wikinews.org"})
    order = list(range(len(rows)))
    rng.shuffle(order)
    for i in order:
        sys.stdout.write(json.dumps(rows[i], ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
