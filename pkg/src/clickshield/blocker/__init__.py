"""Personalized clickbait blocking: linguistic patterns, topic nuggets
over a concept graph, and a hybrid of both."""

from .concepts import (
    ConceptGraph,
    ConceptGraphError,
    Nugget,
    build_nugget,
    extract_tags,
    headline_content_tags,
    load_concept_graph,
    merge_nuggets,
    nugget_similarity,
    parse_concept_graph,
)
from .patterns import (
    DIGIT_TAG,
    QUOTE_TAG,
    HeadlinePattern,
    normalize_pattern,
    pattern_similarity,
    word_edit_distance,
)
from .profiles import (
    HISTORY_WINDOW,
    Action,
    BlockDecision,
    Decision,
    HistoryEntry,
    UserProfile,
    hybrid_decision,
    pattern_decision,
    topic_decision,
    update_profile,
)

__all__ = [
    "ConceptGraph",
    "ConceptGraphError",
    "Nugget",
    "build_nugget",
    "extract_tags",
    "headline_content_tags",
    "load_concept_graph",
    "merge_nuggets",
    "nugget_similarity",
    "parse_concept_graph",
    "DIGIT_TAG",
    "QUOTE_TAG",
    "HeadlinePattern",
    "normalize_pattern",
    "pattern_similarity",
    "word_edit_distance",
    "HISTORY_WINDOW",
    "Action",
    "BlockDecision",
    "Decision",
    "HistoryEntry",
    "UserProfile",
    "hybrid_decision",
    "pattern_decision",
    "topic_decision",
    "update_profile",
]
