"""Reading and writing instance files.

An instance file is a JSON document with a ``sets`` section (name to
element list), a ``functions`` section (name to domain/codomain/map),
and exactly one payload section: ``monoidale``, ``category``,
``rstructure`` or ``monoid``.  Elements are strings; pairs are
two-element arrays, nested freely.  Maps are arrays of [key, value]
entries; pair-keyed tables (tau, delta, comp, mul, R_arrows) are
arrays of [first, second, value] entries.
"""

from __future__ import annotations

import json
from typing import Dict, List, Tuple

from .category import FinCat, Functor
from .characterization import RStructure
from .constructions import FinMonoid
from .errors import ParseError, ResolutionError
from .finset import Element, FinFn, FinSet
from .monoidale import SkewMonoidaleData
from .simplicial import dec_cat

PAYLOAD_KEYS = ("monoidale", "category", "rstructure", "monoid")


def element_to_json(x: Element):
    if isinstance(x, tuple):
        return [element_to_json(x[0]), element_to_json(x[1])]
    return x


def element_from_json(v) -> Element:
    if isinstance(v, str):
        return v
    if isinstance(v, list) and len(v) == 2:
        return (element_from_json(v[0]), element_from_json(v[1]))
    raise ParseError("bad element %r: expected string or pair" % (v,))


def finset_to_json(s: FinSet) -> list:
    return [element_to_json(x) for x in s]


def finset_from_json(v, name: str) -> FinSet:
    if not isinstance(v, list):
        raise ParseError("set %s must be a list" % name)
    try:
        return FinSet([element_from_json(x) for x in v])
    except ValueError as exc:
        raise ResolutionError("set %s: %s" % (name, exc))


def finfn_to_json(fn: FinFn, sets: Dict[str, str], dom_name: str, cod_name: str) -> dict:
    return {
        "domain": dom_name,
        "codomain": cod_name,
        "map": [[element_to_json(k), element_to_json(v)] for k, v in
                ((x, fn(x)) for x in fn.domain)],
    }


def _parse_fn(entry: dict, sets: Dict[str, FinSet], name: str) -> FinFn:
    for key in ("domain", "codomain", "map"):
        if key not in entry:
            raise ParseError("function %s lacks %r" % (name, key))
    for side in ("domain", "codomain"):
        if entry[side] not in sets:
            raise ResolutionError("function %s: unknown set %r" % (name, entry[side]))
    dom = sets[entry["domain"]]
    cod = sets[entry["codomain"]]
    table = {}
    for item in entry["map"]:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError("function %s: map entries are [key, value]" % name)
        k = element_from_json(item[0])
        v = element_from_json(item[1])
        if k in table:
            raise ResolutionError("function %s: duplicate key" % name)
        table[k] = v
    try:
        return FinFn(dom, cod, table)
    except ValueError as exc:
        raise ResolutionError("function %s: %s" % (name, exc))


def _parse_pair_table(entries, domain: FinSet, codomain: FinSet, name: str) -> FinFn:
    """A function keyed by pairs, given as [first, second, value] triples."""
    table = {}
    for item in entries:
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError("%s entries are [first, second, value]" % name)
        k = (element_from_json(item[0]), element_from_json(item[1]))
        if k in table:
            raise ResolutionError("%s: duplicate key" % name)
        table[k] = element_from_json(item[2])
    if set(table) != set(domain.elements):
        raise ResolutionError(
            "%s must be keyed by exactly the computed composable pairs" % name
        )
    try:
        return FinFn(domain, codomain, table)
    except ValueError as exc:
        raise ResolutionError("%s: %s" % (name, exc))


class Document:
    """A parsed instance file."""

    def __init__(self, raw: dict):
        self.raw = raw
        self.sets: Dict[str, FinSet] = {}
        for name, v in raw.get("sets", {}).items():
            self.sets[name] = finset_from_json(v, name)
        self.functions: Dict[str, FinFn] = {}
        for name, v in raw.get("functions", {}).items():
            self.functions[name] = _parse_fn(v, self.sets, name)
        payloads = [k for k in PAYLOAD_KEYS if k in raw]
        if len(payloads) != 1:
            raise ParseError("expected exactly one of %s" % (PAYLOAD_KEYS,))
        self.kind = payloads[0]

    def set_(self, name: str) -> FinSet:
        if name not in self.sets:
            raise ResolutionError("unknown set %r" % name)
        return self.sets[name]

    def fn(self, name: str) -> FinFn:
        if name not in self.functions:
            raise ResolutionError("unknown function %r" % name)
        return self.functions[name]


def load_document(path: str) -> Document:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(str(exc))
    if not isinstance(raw, dict):
        raise ParseError("instance file must be a JSON object")
    return Document(raw)


# ---------------------------------------------------------------------------
# monoidale


def monoidale_from_document(doc: Document) -> SkewMonoidaleData:
    if doc.kind != "monoidale":
        raise ParseError("file does not contain a monoidale section")
    spec = doc.raw["monoidale"]
    for key in ("carrier", "E", "s", "r", "t", "U", "j", "phi", "psi", "tau", "delta"):
        if key not in spec:
            raise ParseError("monoidale lacks %r" % key)
    C = doc.set_(spec["carrier"])
    E = doc.set_(spec["E"])
    s = doc.fn(spec["s"])
    r = doc.fn(spec["r"])
    t = doc.fn(spec["t"])
    U = doc.set_(spec["U"])
    j = doc.fn(spec["j"])
    phi = doc.fn(spec["phi"])
    psi = doc.fn(spec["psi"])
    from .finset import pullback

    x_set = pullback(t, s).apex
    tau = _parse_pair_table(spec["tau"], x_set, E, "tau")
    delta = _parse_pair_table(spec["delta"], x_set, E, "delta")
    return SkewMonoidaleData(C, E, s, r, t, U, j, phi, psi, tau, delta)


def monoidale_to_json(m: SkewMonoidaleData) -> dict:
    sets = {
        "C": finset_to_json(m.C),
        "E": finset_to_json(m.E),
        "U": finset_to_json(m.U),
    }
    functions = {
        "s": finfn_to_json(m.s, {}, "E", "C"),
        "r": finfn_to_json(m.r, {}, "E", "C"),
        "t": finfn_to_json(m.t, {}, "E", "C"),
        "j": finfn_to_json(m.j, {}, "U", "C"),
        "phi": finfn_to_json(m.phi, {}, "C", "E"),
        "psi": finfn_to_json(m.psi, {}, "C", "U"),
    }
    tau = [
        [element_to_json(q[0]), element_to_json(q[1]), element_to_json(m.tau(q))]
        for q in m.tau.domain
    ]
    delta = [
        [element_to_json(q[0]), element_to_json(q[1]), element_to_json(m.delta(q))]
        for q in m.delta.domain
    ]
    return {
        "sets": sets,
        "functions": functions,
        "monoidale": {
            "carrier": "C",
            "E": "E",
            "s": "s",
            "r": "r",
            "t": "t",
            "U": "U",
            "j": "j",
            "phi": "phi",
            "psi": "psi",
            "tau": tau,
            "delta": delta,
        },
    }


# ---------------------------------------------------------------------------
# category


def _category_from_spec(spec: dict, doc: Document) -> FinCat:
    for key in ("objects", "arrows", "dom", "cod", "id", "comp"):
        if key not in spec:
            raise ParseError("category lacks %r" % key)
    objects = doc.set_(spec["objects"])
    arrows = doc.set_(spec["arrows"])
    dom = doc.fn(spec["dom"])
    cod = doc.fn(spec["cod"])
    ident = doc.fn(spec["id"])
    comp = {}
    for item in spec["comp"]:
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError("comp entries are [g, f, composite]")
        g = element_from_json(item[0])
        f = element_from_json(item[1])
        h = element_from_json(item[2])
        for a in (g, f, h):
            if a not in arrows:
                raise ResolutionError("comp mentions unknown arrow")
        comp[(g, f)] = h
    try:
        return FinCat(objects, arrows, dom, cod, ident, comp)
    except ValueError as exc:
        raise ResolutionError(str(exc))


def category_from_document(doc: Document) -> FinCat:
    if doc.kind != "category":
        raise ParseError("file does not contain a category section")
    return _category_from_spec(doc.raw["category"], doc)


def category_to_json(c: FinCat) -> dict:
    return {
        "sets": {"objects": finset_to_json(c.objects), "arrows": finset_to_json(c.arrows)},
        "functions": {
            "dom": finfn_to_json(c.dom, {}, "arrows", "objects"),
            "cod": finfn_to_json(c.cod, {}, "arrows", "objects"),
            "id": finfn_to_json(c.ident, {}, "objects", "arrows"),
        },
        "category": {
            "objects": "objects",
            "arrows": "arrows",
            "dom": "dom",
            "cod": "cod",
            "id": "id",
            "comp": [
                [element_to_json(g), element_to_json(f), element_to_json(h)]
                for (g, f), h in c.comp.items()
            ],
        },
    }


# ---------------------------------------------------------------------------
# rstructure


def rstructure_from_document(doc: Document) -> RStructure:
    if doc.kind != "rstructure":
        raise ParseError("file does not contain an rstructure section")
    spec = doc.raw["rstructure"]
    for key in ("category", "R_objects", "R_arrows"):
        if key not in spec:
            raise ParseError("rstructure lacks %r" % key)
    cat = _category_from_spec(spec["category"], doc)
    dec, _cod = dec_cat(cat)
    obj_table = {}
    for item in spec["R_objects"]:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError("R_objects entries are [arrow, object]")
        obj_table[element_from_json(item[0])] = element_from_json(item[1])
    if set(obj_table) != set(dec.objects.elements):
        raise ResolutionError("R_objects must be keyed by exactly the arrows")
    arr_table = {}
    for item in spec["R_arrows"]:
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError("R_arrows entries are [first, second, value]")
        arr_table[(element_from_json(item[0]), element_from_json(item[1]))] = element_from_json(
            item[2]
        )
    if set(arr_table) != set(dec.arrows.elements):
        raise ResolutionError("R_arrows must be keyed by exactly the composable pairs")
    try:
        on_objects = FinFn(dec.objects, cat.objects, obj_table)
        on_arrows = FinFn(dec.arrows, cat.arrows, arr_table)
    except ValueError as exc:
        raise ResolutionError(str(exc))
    return RStructure(cat, Functor(dec, cat, on_objects, on_arrows))


def rstructure_to_json(rs: RStructure) -> dict:
    base = category_to_json(rs.cat)
    return {
        "sets": base["sets"],
        "functions": base["functions"],
        "rstructure": {
            "category": base["category"],
            "R_objects": [
                [element_to_json(f), element_to_json(rs.R.obj(f))]
                for f in rs.R.source.objects
            ],
            "R_arrows": [
                [
                    element_to_json(a[0]),
                    element_to_json(a[1]),
                    element_to_json(rs.R.arr(a)),
                ]
                for a in rs.R.source.arrows
            ],
        },
    }


# ---------------------------------------------------------------------------
# monoid


def monoid_from_document(doc: Document) -> FinMonoid:
    if doc.kind != "monoid":
        raise ParseError("file does not contain a monoid section")
    spec = doc.raw["monoid"]
    for key in ("carrier", "mul", "unit"):
        if key not in spec:
            raise ParseError("monoid lacks %r" % key)
    carrier = doc.set_(spec["carrier"])
    unit = element_from_json(spec["unit"])
    if unit not in carrier:
        raise ResolutionError("unit %r is not in the carrier" % (spec["unit"],))
    mul = {}
    for item in spec["mul"]:
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError("mul entries are [a, b, product]")
        a = element_from_json(item[0])
        b = element_from_json(item[1])
        v = element_from_json(item[2])
        for x in (a, b, v):
            if x not in carrier:
                raise ResolutionError("mul mentions unknown element")
        mul[(a, b)] = v
    if set(mul) != {(a, b) for a in carrier for b in carrier}:
        raise ResolutionError("mul must be total on carrier pairs")
    return FinMonoid(carrier, mul, unit)


def monoid_to_json(m: FinMonoid) -> dict:
    return {
        "sets": {"M": finset_to_json(m.carrier)},
        "monoid": {
            "carrier": "M",
            "unit": element_to_json(m.unit),
            "mul": [
                [element_to_json(a), element_to_json(b), element_to_json(m(a, b))]
                for a in m.carrier
                for b in m.carrier
            ],
        },
    }


def dump(data: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=False)
        fh.write("\n")
