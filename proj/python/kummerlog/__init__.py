"""Log Picard groups, mu_n torsors and log class pairings.

Each command returns the same JSON document as the command-line tool, as a
dict. Failures raise KummerlogError carrying the tool's exit code.
"""

import json

from . import _kummerlog

SCHEMA_VERSION = _kummerlog.SCHEMA_VERSION

__all__ = [
    "KummerlogError",
    "SCHEMA_VERSION",
    "logpic",
    "mun",
    "curve",
    "pair",
    "canonical",
    "render_pretty",
    "verdicts_ok",
]


class KummerlogError(Exception):
    """exit_code: 2 parse, 3 invalid input, 4 unsupported, 5 internal."""

    def __init__(self, doc):
        err = doc["error"]
        super().__init__(f"{err['kind']}: {err['message']}")
        self.document = doc
        self.exit_code = err["exit_code"]
        self.kind = err["kind"]
        self.position = err.get("position")


def _load(raw):
    doc = json.loads(raw)
    if "error" in doc:
        raise KummerlogError(doc)
    return doc


def verdicts_ok(doc):
    return all(doc.get("verdicts", {}).values())


def logpic(ring="Z", D="", div=None):
    return _load(_kummerlog.logpic(ring, D, div))


def mun(n, ring="Z", D=""):
    return _load(_kummerlog.mun(ring, D, n))


def curve(E, ring="Z", p=None):
    return _load(_kummerlog.curve(E, ring, p))


def pair(E, x, y, ring="Z", D=None, T=(), scale=None):
    if isinstance(T, str):
        T = [T]
    return _load(_kummerlog.pair(E, x, y, ring, D, list(T), scale))


def canonical(what, text, ring="Z"):
    """Canonical rendering of a literal; what is one of ring, element,
    prime, divisor, curve, point."""
    return _load(_kummerlog.canonical(what, ring, text))["value"]


def render_pretty(doc):
    return _kummerlog.render_pretty(json.dumps(doc))
