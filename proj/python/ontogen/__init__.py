"""Knowledge-based sentence generation from text meaning representations."""

import json
from pathlib import Path

from ._ontogen import (
    AllSetsPruned,
    Error,
    KnowledgeBase,
    NoRealizableSense,
    ParseError,
    Tmr,
    UnknownConcept,
    ValidationError,
    generate,
    indefinite_article,
    isomorphic,
    load_kb,
    parse_tmr,
    past_tense,
    report,
    strip_metadata,
)


def load_tmr(path):
    return parse_tmr(Path(path).read_text())


def structured_report(tmr, kb, **kwargs):
    return json.loads(report(tmr, kb, **kwargs))


__all__ = [
    "AllSetsPruned",
    "Error",
    "KnowledgeBase",
    "NoRealizableSense",
    "ParseError",
    "Tmr",
    "UnknownConcept",
    "ValidationError",
    "generate",
    "indefinite_article",
    "isomorphic",
    "load_kb",
    "load_tmr",
    "parse_tmr",
    "past_tense",
    "report",
    "strip_metadata",
    "structured_report",
]
