"""Per-user profiles and the block/do-not-block decisions.

Aggregation over a profile's derived sets is nearest neighbor (maximum
similarity); ties and cold starts resolve to Allow, since blocking
content the user never condemned is the costlier error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .concepts import ConceptGraph, Nugget, build_nugget, merge_nuggets, nugget_similarity
from .patterns import HeadlinePattern, pattern_similarity

HISTORY_WINDOW = 100  # most recent links per action that drive derived state


class Action(Enum):
    CLICKED = "clicked"
    BLOCKED = "blocked"


class Decision(Enum):
    BLOCK = "block"
    ALLOW = "allow"


@dataclass
class HistoryEntry:
    timestamp: int
    link: str
    headline: str
    action: Action
    tags: frozenset[str]
    pattern: HeadlinePattern


@dataclass
class BlockDecision:
    decision: Decision
    block_score: float
    click_score: float
    method: str  # pattern | topic | hybrid

    def __post_init__(self):
        if self.decision == Decision.BLOCK:
            assert self.block_score > self.click_score


@dataclass
class UserProfile:
    user_id: str
    history: list[HistoryEntry] = field(default_factory=list)
    block_patterns: list[HeadlinePattern] = field(default_factory=list)
    click_patterns: list[HeadlinePattern] = field(default_factory=list)
    block_nuggets: list[Nugget] = field(default_factory=list)
    click_nuggets: list[Nugget] = field(default_factory=list)

    def rebuild_derived(self, graph: ConceptGraph | None = None) -> None:
        ordered = sorted(self.history, key=lambda e: (e.timestamp, e.link))
        recent: dict[Action, list[HistoryEntry]] = {a: [] for a in Action}
        for entry in ordered:
            recent[entry.action].append(entry)
        for action in Action:
            recent[action] = recent[action][-HISTORY_WINDOW:]
        self.block_patterns = [e.pattern for e in recent[Action.BLOCKED]]
        self.click_patterns = [e.pattern for e in recent[Action.CLICKED]]
        if graph is not None:
            self.block_nuggets = merge_nuggets(
                [build_nugget(set(e.tags), graph) for e in recent[Action.BLOCKED]]
            )
            self.click_nuggets = merge_nuggets(
                [build_nugget(set(e.tags), graph) for e in recent[Action.CLICKED]]
            )


def update_profile(
    profile: UserProfile,
    link: str,
    headline: str,
    action: Action,
    tags: set[str],
    timestamp: int,
    pattern: HeadlinePattern,
    graph: ConceptGraph | None = None,
) -> UserProfile:
    """Appends to history (idempotent on duplicate link+timestamp) and
    rebuilds the derived sets from the most recent window."""
    for entry in profile.history:
        if entry.link == link and entry.timestamp == timestamp:
            return profile
    profile.history.append(
        HistoryEntry(
            timestamp=timestamp,
            link=link,
            headline=headline,
            action=action,
            tags=frozenset(t.lower() for t in tags),
            pattern=pattern,
        )
    )
    profile.rebuild_derived(graph)
    return profile


def _nearest(pattern: HeadlinePattern, patterns: list[HeadlinePattern]) -> float:
    if not patterns:
        return 0.0
    return max(pattern_similarity(pattern, q) for q in patterns)


def pattern_decision(pattern: HeadlinePattern, profile: UserProfile) -> BlockDecision:
    block_score = _nearest(pattern, profile.block_patterns)
    click_score = _nearest(pattern, profile.click_patterns)
    decision = Decision.BLOCK if block_score > click_score else Decision.ALLOW
    return BlockDecision(decision, block_score, click_score, method="pattern")


def _nearest_nugget(nugget: Nugget, nuggets: list[Nugget]) -> float:
    if not nuggets:
        return 0.0
    return float(max(nugget_similarity(nugget, q) for q in nuggets))


def topic_decision(nugget: Nugget, profile: UserProfile) -> BlockDecision:
    block_score = _nearest_nugget(nugget, profile.block_nuggets)
    click_score = _nearest_nugget(nugget, profile.click_nuggets)
    decision = Decision.BLOCK if block_score > click_score else Decision.ALLOW
    return BlockDecision(decision, block_score, click_score, method="topic")


def hybrid_decision(
    pattern: HeadlinePattern,
    nugget: Nugget,
    profile: UserProfile,
    weight_topic: float = 0.5,
) -> BlockDecision:
    """Pattern scores are already in [0,1]; topic scores are normalized
    by the largest topic score observed on either side of this query."""
    p_block = _nearest(pattern, profile.block_patterns)
    p_click = _nearest(pattern, profile.click_patterns)
    t_block = _nearest_nugget(nugget, profile.block_nuggets)
    t_click = _nearest_nugget(nugget, profile.click_nuggets)
    top = max(t_block, t_click)
    if top > 0:
        t_block /= top
        t_click /= top
    block_score = weight_topic * t_block + (1 - weight_topic) * p_block
    click_score = weight_topic * t_click + (1 - weight_topic) * p_click
    decision = Decision.BLOCK if block_score > click_score else Decision.ALLOW
    return BlockDecision(decision, block_score, click_score, method="hybrid")
