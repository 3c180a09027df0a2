"""Python access to the wbar library."""

import json as _json

from ._core import (
    BudgetExceeded,
    Error,
    Group,
    InsufficientTruncation,
    InvalidInput,
    NotSimplicial,
    OrdinalMap,
    VerificationFailure,
    Wbar,
    codegeneracy,
    coface,
    compose,
    count_maps,
    enumerate_maps,
    verify_epsilon,
    verify_filtration,
    verify_tuple_bijection,
    verify_zigzag,
    wbar_counts,
)
from . import _core


def random_bundle(group, max_dim=2, seed=0):
    """A random bundle over a small base, as a JSON-ready dict."""
    return _json.loads(_core.random_bundle_json(group, max_dim, seed))


def verify_bundle(bundle):
    """Structural check and classifying-map roundtrip for a bundle dict."""
    structure, roundtrip = _core.verify_bundle_json(_json.dumps(bundle))
    return {"structure": structure, "roundtrip": roundtrip}


def atlas_check(bundle, tau="gamma:2", L=3, M=2):
    atlas, factorization = _core.atlas_check_json(_json.dumps(bundle), tau, L, M)
    return {"atlas": atlas, "factorization": factorization}


__all__ = [name for name in dir() if not name.startswith("_")]
