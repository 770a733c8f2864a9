"""Exact postulation of unions of small zero-dimensional schemes."""

import json as _json

from ._core import (
    PRIME,
    __version__,
    exceptions,
    monomials,
    numlem,
    postulate,
    secant_dim,
    section_count,
)
from ._core import regularity_json as _regularity_json
from ._core import verify_json as _verify_json

__all__ = [
    "PRIME",
    "__version__",
    "exceptions",
    "monomials",
    "numlem",
    "postulate",
    "regularity",
    "secant_dim",
    "section_count",
    "verify",
]


def verify(suite, **kwargs):
    """Run a statement suite and return its structured report."""
    return _json.loads(_verify_json(suite, **kwargs))


def regularity(kind, t, **kwargs):
    """Scan a bad-postulation construction: rows of (d, e, h0, h1) and the
    degree from which h1 stays zero."""
    return _json.loads(_regularity_json(kind, t, **kwargs))
