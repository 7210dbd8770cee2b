"""Go-diagrams, Deodhar components and Wilson loop diagrams."""

import json

from . import _core

__all__ = ["plucker", "check", "fiber_poset", "sigma_cell", "monodromy", "evaluate_word"]


def plucker(diagram, weights=None, seed=1):
    w = "" if weights is None else json.dumps(weights)
    return json.loads(_core.plucker(json.dumps(diagram), w, seed))


def check(diagram):
    return json.loads(_core.check(json.dumps(diagram)))


def fiber_poset(diagram):
    return json.loads(_core.fiber_poset(json.dumps(diagram)))


def sigma_cell(wld):
    return json.loads(_core.sigma_cell(json.dumps(wld)))


def monodromy(wld, family, seed=1):
    return json.loads(_core.monodromy(json.dumps(wld), family, seed))


evaluate_word = _core.evaluate_word
