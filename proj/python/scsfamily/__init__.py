"""Spectrally constrained sequence families from circular Florentine rectangles."""

import json as _json

from ._core import (
    Cfr,
    Family,
    cfr_from_prime,
    check_lemma4,
    check_spectrum,
    construction1,
    construction2,
    construction3,
    construction4,
    dft,
    idft,
    improved_bounds,
    interset_bound,
    inverse_difference_is_permutation,
    inverse_rows,
    liu_bound,
    optimality_factor,
    pccf,
    pccf_fast,
    search_cfr,
    summarize,
    verify_cfr,
)
from ._core import evaluate_bounds_json as _evaluate_bounds_json


def evaluate_bounds(L, n, M=1, K=1, **measured):
    """Full bounds report as a dict; measured values are keyword arguments."""
    return _json.loads(_evaluate_bounds_json(L, n, M, K, **measured))


__all__ = [name for name in dir() if not name.startswith("_")]
