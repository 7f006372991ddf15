"""Space-budgeted longest increasing subsequence algorithms."""

from ._core import (
    __version__,
    dp_lis_length,
    hard_instance,
    length_report,
    lis_extract,
    lis_length,
    piles,
    random_multiset,
    random_permutation,
    rpiles,
)

__all__ = [
    "__version__",
    "dp_lis_length",
    "hard_instance",
    "length_report",
    "lis_extract",
    "lis_length",
    "piles",
    "random_multiset",
    "random_permutation",
    "rpiles",
]
