"""Python front end for the ekr derangement-graph checks.

Group parameters are passed as keyword arguments (n=8, abelian="4,2", p=5, ...),
exactly as the CLI flags. Results come back as plain dicts.
"""

import json
from pathlib import Path

from . import _ekr
from ._ekr import EkrError, claim_ids

__version__ = _ekr.__version__
__all__ = [
    "EkrError",
    "alpha",
    "catalog_scan",
    "claim_ids",
    "describe_group",
    "exit_code",
    "profile",
    "scan_robustness",
    "verify",
]


def _params(kw):
    return {k: ",".join(map(str, v)) if isinstance(v, (list, tuple)) else str(v) for k, v in kw.items()}


def describe_group(family=None, **params):
    return json.loads(_ekr.describe_group(family, _params(params)))


def profile(family=None, **params):
    return json.loads(_ekr.profile(family, _params(params)))


def alpha(family=None, removed=(), **params):
    """Exact independence number, optionally after removing the labels of `removed` (cycle notation)."""
    return json.loads(_ekr.alpha(family, _params(params), list(removed)))


def verify(claim, family=None, workers=1, catalog_dir=None, **params):
    if catalog_dir is None:
        catalog_dir = _default_catalog_dir()
    return json.loads(_ekr.verify(claim, family, _params(params), workers, str(catalog_dir)))


def scan_robustness(family=None, workers=1, budget=1_000_000, **params):
    return json.loads(_ekr.scan_robustness(family, _params(params), workers, budget))


def catalog_scan(path, degree, workers=1):
    return json.loads(_ekr.catalog_scan(str(path), degree, workers))


def exit_code(verdict):
    return _ekr.exit_code(json.dumps(verdict))


def _default_catalog_dir():
    import os

    env = os.environ.get("EKR_CATALOG_DIR")
    if env:
        return env
    here = Path(__file__).resolve()
    for up in here.parents:
        cand = up / "data" / "catalogs"
        if cand.is_dir():
            return cand
    return ""
