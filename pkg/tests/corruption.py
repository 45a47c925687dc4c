"""Helpers for flipping single structure constants in fixture documents."""

import copy
from fractions import Fraction


def scalar_slots(raw: dict) -> list[list]:
    """Paths to every scalar inside a matrix, column or row of the document."""
    out = []

    def walk(v, path):
        if isinstance(v, dict):
            for k, x in v.items():
                walk(x, path + [k])
        elif isinstance(v, list):
            if v and isinstance(v[0], (str, int)):
                out.extend(path + [i] for i in range(len(v)))
            else:
                for i, x in enumerate(v):
                    walk(x, path + [i])

    walk(raw, [])
    return out


def corrupt(raw: dict, path: list) -> dict:
    """Copy of ``raw`` with the scalar at ``path`` shifted by one."""
    p = raw["field"]["prime_field"] if isinstance(raw["field"], dict) else None
    out = copy.deepcopy(raw)
    t = out
    for k in path[:-1]:
        t = t[k]
    v = Fraction(t[path[-1]]) + 1
    t[path[-1]] = str(v % p if p else v)
    return out


def differing_witnesses(report) -> list:
    return [f for f in report.failures if f.witness and f.witness.get("lhs") != f.witness.get("rhs")]
