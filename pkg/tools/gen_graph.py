#!/usr/bin/env python
"""Generate the bundled miniature concept graph.

WordNet-style hypernym hierarchy over everyday topics, emitted in the
documented `conceptgraph v1` format so a full graph can be dropped in.

    python tools/gen_graph.py > src/clickshield/data/concept_graph.txt
"""

from __future__ import annotations

import sys

# hierarchy: parent -> children; leaves may carry extra lemmas via "name|alias"
HIERARCHY: dict[str, list[str]] = {
    "entity": ["organism", "artifact", "event", "location", "activity", "abstraction", "person_root"],
    "organism": ["animal", "plant"],
    "animal": ["mammal", "bird", "fish", "reptile", "insect"],
    "mammal": ["dog", "cat", "horse", "cow", "pig", "sheep", "lion", "tiger", "bear",
               "elephant", "monkey", "whale", "dolphin", "rabbit", "mouse", "puppy|pup",
               "kitten", "fox", "wolf", "deer"],
    "bird": ["eagle", "owl", "parrot", "penguin", "chicken", "duck", "sparrow", "crow"],
    "fish": ["salmon", "shark", "tuna", "goldfish"],
    "reptile": ["snake", "lizard", "turtle", "crocodile"],
    "insect": ["bee", "ant", "butterfly", "mosquito"],
    "plant": ["tree", "flower", "grass", "cactus", "rose", "oak", "tulip"],
    "artifact": ["vehicle", "building", "device", "clothing", "food", "drink", "weapon", "furniture"],
    "vehicle": ["car", "truck", "bus", "train", "plane|airplane", "bicycle|bike", "motorcycle", "boat", "ship"],
    "building": ["house", "school", "hospital", "church", "castle", "tower", "stadium", "airport", "hotel"],
    "device": ["phone|smartphone", "computer|pc", "laptop", "camera", "television|tv", "radio",
               "tablet", "console", "robot", "drone"],
    "clothing": ["dress", "shirt", "shoes", "hat", "jacket", "jeans", "scarf"],
    "food": ["pizza", "burger", "pasta", "salad", "cake", "chocolate", "cheese", "bread",
             "sushi", "taco", "soup", "sandwich", "cookie", "pancake", "bacon"],
    "drink": ["coffee", "tea", "beer", "wine", "juice", "soda", "butterbeer", "cocktail", "milkshake"],
    "weapon": ["gun", "bomb", "knife", "missile"],
    "furniture": ["chair", "table", "bed", "sofa", "desk"],
    "event": ["disaster", "ceremony", "conflict", "competition", "holiday"],
    "disaster": ["earthquake", "flood", "hurricane", "wildfire", "tsunami", "drought", "landslide"],
    "ceremony": ["wedding", "funeral", "graduation", "coronation"],
    "conflict": ["war", "protest", "riot", "strike", "battle"],
    "competition": ["election", "tournament", "race", "championship", "olympics", "world cup|worldcup"],
    "holiday": ["christmas", "halloween", "easter", "thanksgiving"],
    "location": ["country", "city", "region", "landmark"],
    "country": ["america|usa|united states", "china", "india", "russia", "france", "germany",
                "japan", "brazil", "canada", "turkey", "iran", "israel", "korea", "nepal",
                "peru", "egypt", "spain", "italy", "mexico", "australia"],
    "city": ["london", "paris", "york|new york", "tokyo", "moscow", "berlin", "boston",
             "chicago", "delhi", "beijing", "sydney", "rome", "madrid", "hollywood"],
    "region": ["europe", "asia", "africa", "arctic", "sahara"],
    "landmark": ["eiffel tower", "great wall", "taj mahal", "statue of liberty"],
    "activity": ["sport", "art", "science", "politics", "business", "entertainment", "cooking", "travel"],
    "sport": ["football|soccer", "basketball", "tennis", "cricket", "rugby", "golf",
              "swimming", "boxing", "baseball", "hockey", "skiing", "yoga", "fifa"],
    "art": ["music", "painting", "dance", "poetry", "sculpture", "photography"],
    "music": ["song", "album", "concert", "band", "guitar", "piano", "pop", "rock", "jazz", "opera"],
    "science": ["physics", "chemistry", "biology", "astronomy", "mathematics", "medicine",
                "space", "nasa", "vaccine", "climate"],
    "politics": ["government", "parliament", "senate", "congress", "president", "minister",
                 "policy", "budget", "treaty", "sanctions", "referendum", "brexit"],
    "business": ["market", "bank", "startup", "stocks", "economy", "trade", "tax",
                 "bitcoin", "currency", "merger"],
    "entertainment": ["movie|film", "series|show", "celebrity", "franchise", "quiz", "meme",
                      "cartoon", "theater", "festival"],
    "movie|film": ["comedy", "thriller", "documentary", "animation"],
    "celebrity": ["actor", "actress", "singer", "madonna", "adele", "beyonce", "amy schumer",
                  "jk rowling|j.k. rowling", "shane williams"],
    "franchise": ["harry potter", "star wars", "disney", "marvel", "pokemon",
                  "grey's anatomy|greys anatomy", "game of thrones"],
    "harry potter": ["hogwarts", "hermione", "dumbledore", "wizarding world", "quidditch"],
    "disney": ["mickey mouse", "frozen", "pixar"],
    "cooking": ["recipe", "baking", "grilling", "chef"],
    "travel": ["vacation", "beach", "cruise", "camping", "hiking", "resort"],
    "abstraction": ["emotion", "relationship", "astrology", "number_concept", "health"],
    "emotion": ["love", "fear", "anger", "joy", "surprise", "disgust"],
    "relationship": ["marriage", "friendship", "family", "dating", "divorce"],
    "astrology": ["zodiac", "horoscope", "zodiac sign|star sign", "aries", "taurus",
                  "gemini", "leo", "virgo", "libra", "scorpio", "pisces"],
    "number_concept": ["statistic", "ranking", "lottery"],
    "health": ["diet", "fitness", "cancer", "flu", "therapy", "sleep"],
    "person_root": ["man", "woman", "child|kid", "baby", "teacher", "doctor", "nurse",
                    "police|police officer", "soldier", "driver", "student", "parent",
                    "mom|mother", "dad|father", "husband", "wife", "girl", "boy",
                    "friend", "leader", "judge", "lawyer", "farmer", "chef_person"],
}


def main() -> None:
    names: dict[str, str] = {}  # concept -> node id
    counter = 0

    def node_id(concept: str) -> str:
        nonlocal counter
        if concept not in names:
            counter += 1
            names[concept] = f"n{counter:04d}"
        return names[concept]

    lines = ["conceptgraph v1"]
    emitted_nodes: set[str] = set()
    all_concepts: set[str] = set(HIERARCHY)
    for children in HIERARCHY.values():
        all_concepts.update(children)
    for concept in sorted(all_concepts):
        nid = node_id(concept)
        lemmas = [l.strip() for l in concept.split("|")]
        lines.append(f"N {nid} {','.join(l.replace(' ', '_') for l in lemmas)}")
        emitted_nodes.add(concept)
    for parent, children in sorted(HIERARCHY.items()):
        for child in children:
            lines.append(f"H {node_id(child)} {node_id(parent)}")
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
