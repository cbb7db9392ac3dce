"""Right-angled Artin group toolkit: normal forms, conjugacy, gates and Big sets."""

import json

from ._core import (
    BudgetError,
    Graph,
    InputError,
    are_conjugate,
    clf_csv,
    find_conjugator,
    gate,
    inv,
    mul,
    nf,
    shorten,
)
from ._core import big_json as _big_json


def big(graph, word):
    """Big set of `word` as {"maximal": bool, "domains": [{"delta": [...], "rep": str}]}."""
    return json.loads(_big_json(graph, word))


__all__ = [
    "BudgetError",
    "Graph",
    "InputError",
    "are_conjugate",
    "big",
    "clf_csv",
    "find_conjugator",
    "gate",
    "inv",
    "mul",
    "nf",
    "shorten",
]
