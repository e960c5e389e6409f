"""Bundled knot corpus and flexible diagram resolution.

The package ships a small JSON corpus of named knots as planar diagram
codes.  Callers can also hand any of the textual notations straight to
resolve_diagram, which guesses the format from the shape of the input.
"""

import json
import re
from importlib import resources

from .diagrams import parse_braid, parse_dt, parse_pd

_CORPUS_CACHE = {}


def corpus_path():
    return resources.files("knotperiod.data").joinpath("knots.json")


def load_corpus(path=None):
    """name -> record mapping from a corpus file (bundled one by default).

    Each record is {"name": str, "pd": [[a,b,c,d], ...], "components": int}
    with an optional "dt" list.
    """
    if path is None:
        key = "<bundled>"
        if key in _CORPUS_CACHE:
            return _CORPUS_CACHE[key]
        text = corpus_path().read_text()
    else:
        key = str(path)
        if key in _CORPUS_CACHE:
            return _CORPUS_CACHE[key]
        with open(path) as fh:
            text = fh.read()
    records = json.loads(text)
    out = {}
    for rec in records:
        name = rec["name"]
        if name in out:
            raise ValueError("duplicate corpus entry %r" % name)
        out[name] = rec
    _CORPUS_CACHE[key] = out
    return out


def knot_names(path=None):
    return sorted(load_corpus(path))


def knot_diagram(name, path=None):
    """Diagram for a named corpus knot."""
    corpus = load_corpus(path)
    if name not in corpus:
        raise KeyError("unknown knot %r (corpus has: %s)" % (name, ", ".join(sorted(corpus))))
    rec = corpus[name]
    d = parse_pd(json.dumps(rec["pd"])).to_diagram()
    if d.num_components != rec.get("components", 1):
        raise ValueError("corpus entry %r has inconsistent component count" % name)
    return d


def resolve_diagram(spec, path=None):
    """Diagram from a knot name, a PD code, a DT code, or a braid word.

    Names are looked up in the corpus first.  Otherwise the text is treated
    as PD when it contains brackets or X tokens, as a braid word when it
    mentions s/σ letters, and as a DT code when it is a bare list of even
    integers.
    """
    spec = spec.strip()
    corpus = load_corpus(path)
    if spec in corpus:
        return knot_diagram(spec, path)
    if "[" in spec or "X" in spec.upper():
        return parse_pd(spec).to_diagram()
    if re.search(r"[sSσ]\s*-?\d", spec):
        return parse_braid(spec)
    toks = spec.replace(",", " ").split()
    if toks and all(t.lstrip("-").isdigit() for t in toks):
        ints = [int(t) for t in toks]
        if all(v % 2 == 0 and v != 0 for v in ints):
            return parse_dt(spec)
        raise ValueError(
            "bare integer input is read as a DT code and needs nonzero even entries"
        )
    raise ValueError("unknown knot or notation %r" % spec)
