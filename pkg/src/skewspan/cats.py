"""Small standard categories used by tests, fixtures and examples."""

from __future__ import annotations

from typing import Dict, List, Tuple

from .category import FinCat
from .finset import Element, FinFn, FinSet


def make_fincat(
    objects: List[Element],
    arrows: List[Element],
    dom: Dict[Element, Element],
    cod: Dict[Element, Element],
    ident: Dict[Element, Element],
    comp: Dict[Tuple[Element, Element], Element],
) -> FinCat:
    obj_set = FinSet(objects)
    arr_set = FinSet(arrows)
    return FinCat(
        obj_set,
        arr_set,
        FinFn(arr_set, obj_set, dom),
        FinFn(arr_set, obj_set, cod),
        FinFn(obj_set, arr_set, ident),
        comp,
    )


def terminal_category() -> FinCat:
    """One object, its identity only."""
    return make_fincat(
        ["x"], ["1x"], {"1x": "x"}, {"1x": "x"}, {"x": "1x"}, {("1x", "1x"): "1x"}
    )


def interval_category() -> FinCat:
    """Two objects a, b and a single non-identity arrow u: a -> b."""
    comp = {
        ("1a", "1a"): "1a",
        ("1b", "1b"): "1b",
        ("u", "1a"): "u",
        ("1b", "u"): "u",
    }
    return make_fincat(
        ["a", "b"],
        ["1a", "u", "1b"],
        {"1a": "a", "u": "a", "1b": "b"},
        {"1a": "a", "u": "b", "1b": "b"},
        {"a": "1a", "b": "1b"},
        comp,
    )


def parallel_pair_category() -> FinCat:
    """Two objects with a parallel pair m, n: x -> y."""
    arrows = ["1x", "m", "n", "1y"]
    dom = {"1x": "x", "m": "x", "n": "x", "1y": "y"}
    cod = {"1x": "x", "m": "y", "n": "y", "1y": "y"}
    comp: Dict[Tuple[Element, Element], Element] = {}
    for f in arrows:
        comp[(f, "1x" if dom[f] == "x" else "1y")] = f
        comp[("1x" if cod[f] == "x" else "1y", f)] = f
    return make_fincat(["x", "y"], arrows, dom, cod, {"x": "1x", "y": "1y"}, comp)


def chain_with_parallel_category() -> FinCat:
    """A composable chain w -> x -> y -> z plus a spare parallel arrow w -> z.

    All composites are distinct arrows, so composition values can be
    redirected onto the spare arrow without breaking any leg
    conditions; used to build fixtures whose coherence fails in exactly
    one place.
    """
    objects = ["w", "x", "y", "z"]
    arrows = ["1w", "1x", "1y", "1z", "e", "f", "g", "fe", "gf", "gfe", "alt"]
    dom = {
        "1w": "w", "1x": "x", "1y": "y", "1z": "z",
        "e": "w", "f": "x", "g": "y",
        "fe": "w", "gf": "x", "gfe": "w", "alt": "w",
    }
    cod = {
        "1w": "w", "1x": "x", "1y": "y", "1z": "z",
        "e": "x", "f": "y", "g": "z",
        "fe": "y", "gf": "z", "gfe": "z", "alt": "z",
    }
    ident = {"w": "1w", "x": "1x", "y": "1y", "z": "1z"}
    comp: Dict[Tuple[Element, Element], Element] = {}
    for f in arrows:
        comp[(f, ident[dom[f]])] = f
        comp[(ident[cod[f]], f)] = f
    comp[("f", "e")] = "fe"
    comp[("g", "f")] = "gf"
    comp[("g", "fe")] = "gfe"
    comp[("gf", "e")] = "gfe"
    return make_fincat(objects, arrows, dom, cod, ident, comp)
