"""Graded Betti numbers of edge ideals of simple graphs."""

import json as _json

from ._edgebetti import *  # noqa: F401,F403
from ._edgebetti import census_json as _census_json
from ._edgebetti import strand_report_json as _strand_report_json


def census(g):
    """Induced-subgraph census as a dict (keys k, k_bipartite, c4, w4, d)."""
    return _json.loads(_census_json(g))


def strand_report(g, field=0):
    """Linear-strand report: one record per homological index."""
    return _json.loads(_strand_report_json(g, field))
