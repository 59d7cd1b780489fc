"""Palindromic-length toolkit for the ruler and period-doubling sequences."""

from ._core import (
    dfa_accepts,
    is_pal_factor,
    learn_level_set_dfa,
    level_set,
    min_ops,
    pal_length,
    pal_suffixes,
    period_doubling,
    ruler,
    run_count,
    run_count_dfa,
)

__all__ = [
    "dfa_accepts",
    "is_pal_factor",
    "learn_level_set_dfa",
    "level_set",
    "min_ops",
    "pal_length",
    "pal_suffixes",
    "period_doubling",
    "ruler",
    "run_count",
    "run_count_dfa",
]
