"""Exact combinatorics of root data, Weyl groups and smooth mod-p characters.

The heavy lifting happens in the C++ extension; this package re-exports it.
"""

from ._core import (
    BoundError,
    CapabilityError,
    CheckError,
    ConfigError,
    bh_build,
    bh_socle,
    bruhat_leq,
    chain,
    conj343,
    describe_datum,
    example313,
    genericity,
    kostant_words,
    lemma314_sweep,
    ord_report,
    prop345,
    selftest,
    weyl_words,
)

__all__ = [
    "BoundError",
    "CapabilityError",
    "CheckError",
    "ConfigError",
    "bh_build",
    "bh_socle",
    "bruhat_leq",
    "chain",
    "conj343",
    "describe_datum",
    "example313",
    "genericity",
    "kostant_words",
    "lemma314_sweep",
    "ord_report",
    "prop345",
    "selftest",
    "weyl_words",
]
