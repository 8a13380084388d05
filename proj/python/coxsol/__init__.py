"""Finite Coxeter groups, descent algebras and Orlik-Solomon algebras with exact arithmetic.

Results are returned as the same JSON documents the ``coxsol`` command emits,
decoded into Python objects.
"""

import json
from fractions import Fraction

from ._core import CoxsolError, Group

__all__ = ["CoxsolError", "Group", "group", "summary", "descent", "orlik_solomon", "table",
           "verify", "cyclotomic_value", "render"]


def group(name, max_elements=10000, seed_order=None):
    return Group(name, max_elements, seed_order)


def _group(g):
    return g if isinstance(g, Group) else group(g)


def summary(g):
    return json.loads(_group(g).summary_json())


def descent(g):
    return json.loads(_group(g).descent_json())


def orlik_solomon(g):
    return json.loads(_group(g).os_json())


def table(g):
    return json.loads(_group(g).table_json())


def render(g, what, format="markdown"):
    return _group(g).render(what, format)


def verify(conjecture, g, L=None):
    """Report for conjecture "a", "b" or "c"; L is a list of 1-based generators."""
    g = _group(g)
    if conjecture == "a":
        return json.loads(g.verify_a_json())
    if conjecture == "b":
        return json.loads(g.verify_b_json(L))
    if conjecture == "c":
        if L is None:
            raise ValueError("conjecture c needs L")
        return json.loads(g.verify_c_json(L))
    raise ValueError("conjecture must be 'a', 'b' or 'c'")


def cyclotomic_value(v):
    """Rational value of a serialized cyclotomic number, or None if irrational."""
    coeffs = [Fraction(int(n), int(d)) for n, d in v["coeffs"]]
    if any(coeffs[1:]):
        return None
    return coeffs[0] if coeffs else Fraction(0)
