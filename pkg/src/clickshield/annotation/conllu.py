"""CoNLL-U reading and writing (10-column, blank-line separated).

The XPOS column carries Penn Treebank tags and DEPREL the dependency
relation; these are the columns the rest of the pipeline consumes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

log = logging.getLogger(__name__)


@dataclass
class ConlluToken:
    form: str
    xpos: str
    head: int  # 1-based, 0 = root
    deprel: str


@dataclass
class ConlluSentence:
    tokens: list[ConlluToken]


def parse_conllu(text: str) -> tuple[list[ConlluSentence], int]:
    """Returns (sentences, skipped_block_count). Malformed blocks are
    skipped with a warning rather than aborting the whole file."""
    sentences: list[ConlluSentence] = []
    skipped = 0
    for block in text.split("\n\n"):
        lines = [l for l in block.splitlines() if l and not l.startswith("#")]
        if not lines:
            continue
        tokens: list[ConlluToken] = []
        ok = True
        for line in lines:
            cols = line.split("\t")
            if len(cols) != 10:
                ok = False
                break
            tok_id, form, _, _, xpos, _, head, deprel = cols[:8]
            if "-" in tok_id or "." in tok_id:
                continue  # multiword/empty nodes are out of scope
            try:
                idx = int(tok_id)
                head_idx = int(head)
            except ValueError:
                ok = False
                break
            if idx != len(tokens) + 1 or not form:
                ok = False
                break
            tokens.append(ConlluToken(form=form, xpos=xpos, head=head_idx, deprel=deprel))
        if ok and tokens and any(t.head == 0 for t in tokens) and all(
            0 <= t.head <= len(tokens) for t in tokens
        ):
            sentences.append(ConlluSentence(tokens))
        else:
            skipped += 1
            log.warning("skipping malformed CoNLL-U block: %r", lines[0][:60])
    return sentences, skipped


def load_conllu(path) -> tuple[list[ConlluSentence], int]:
    with open(path, encoding="utf-8") as f:
        return parse_conllu(f.read())


def format_conllu(sentences: list[ConlluSentence]) -> str:
    blocks = []
    for sent in sentences:
        lines = []
        for i, tok in enumerate(sent.tokens, start=1):
            lines.append(
                "\t".join(
                    [str(i), tok.form, "_", "_", tok.xpos, "_", str(tok.head), tok.deprel, "_", "_"]
                )
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
