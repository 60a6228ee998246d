"""Finite categories, functors, coslice categories and their Cod functors.

Composition is stored as an explicit table keyed (g, f) for "g after
f", defined exactly on composable pairs.  Validation is table-driven
so that invalid inputs are diagnosable rather than rejected at
construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import UnknownArrow, UnknownObject
from .finset import Element, FinFn, FinSet, pair, show


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[str] = None


@dataclass
class ValidationReport:
    failures: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, name: str, witness: str) -> None:
        self.failures.append(CheckResult(name, False, witness))

    def __repr__(self) -> str:
        if self.ok:
            return "ValidationReport(ok)"
        return "ValidationReport(%s)" % "; ".join(
            "%s at %s" % (f.name, f.witness) for f in self.failures
        )


class FinCat:
    """A finite category presented by explicit dom/cod/id/comp tables."""

    __slots__ = ("objects", "arrows", "dom", "cod", "ident", "comp")

    def __init__(
        self,
        objects: FinSet,
        arrows: FinSet,
        dom: FinFn,
        cod: FinFn,
        ident: FinFn,
        comp: Dict[Tuple[Element, Element], Element],
    ):
        if dom.domain != arrows or dom.codomain != objects:
            raise ValueError("dom must map arrows to objects")
        if cod.domain != arrows or cod.codomain != objects:
            raise ValueError("cod must map arrows to objects")
        if ident.domain != objects or ident.codomain != arrows:
            raise ValueError("id must map objects to arrows")
        for (g, f), h in comp.items():
            if g not in arrows or f not in arrows or h not in arrows:
                raise ValueError("composition table mentions unknown arrows")
        self.objects = objects
        self.arrows = arrows
        self.dom = dom
        self.cod = cod
        self.ident = ident
        self.comp = dict(comp)

    def compose(self, g: Element, f: Element) -> Element:
        """g after f."""
        return self.comp[(g, f)]

    def composable_pairs(self) -> List[Tuple[Element, Element]]:
        """All (f, g) with cod(f) = dom(g), in set order."""
        return [
            (f, g) for f in self.arrows for g in self.arrows if self.cod(f) == self.dom(g)
        ]

    def __repr__(self) -> str:
        return "FinCat(%d objects, %d arrows)" % (len(self.objects), len(self.arrows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.arrows == other.arrows
            and self.dom == other.dom
            and self.cod == other.cod
            and self.ident == other.ident
            and self.comp == other.comp
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.arrows))


def cat_validate(c: FinCat) -> ValidationReport:
    """Check every category law, reporting each violation with a witness."""
    report = ValidationReport()
    for x in c.objects:
        i = c.ident(x)
        if c.dom(i) != x:
            report.add("identity-dom", "dom(1_%s) = %s" % (show(x), show(c.dom(i))))
        if c.cod(i) != x:
            report.add("identity-cod", "cod(1_%s) = %s" % (show(x), show(c.cod(i))))
    composable = {(g, f) for f in c.arrows for g in c.arrows if c.cod(f) == c.dom(g)}
    for key in c.comp:
        if key not in composable:
            report.add("composability", "(%s, %s) is in the table" % (show(key[0]), show(key[1])))
    for g, f in sorted(composable - set(c.comp), key=lambda k: (c.arrows.index(k[0]), c.arrows.index(k[1]))):
        report.add("totality", "(%s, %s) is missing" % (show(g), show(f)))
    if not report.ok:
        return report
    for (g, f), h in c.comp.items():
        if c.dom(h) != c.dom(f):
            report.add("composite-dom", "%s . %s" % (show(g), show(f)))
        if c.cod(h) != c.cod(g):
            report.add("composite-cod", "%s . %s" % (show(g), show(f)))
    for f in c.arrows:
        if c.comp[(c.ident(c.cod(f)), f)] != f:
            report.add("left-identity", show(f))
        if c.comp[(f, c.ident(c.dom(f)))] != f:
            report.add("right-identity", show(f))
    for f in c.arrows:
        for g in c.arrows:
            if c.cod(f) != c.dom(g):
                continue
            gf = c.comp[(g, f)]
            for h in c.arrows:
                if c.cod(g) != c.dom(h):
                    continue
                hg = c.comp[(h, g)]
                if c.comp[(h, gf)] != c.comp[(hg, f)]:
                    report.add(
                        "associativity",
                        "(%s, %s, %s)" % (show(f), show(g), show(h)),
                    )
    return report


class Functor:
    """A functor given by its object and arrow tables."""

    __slots__ = ("source", "target", "on_objects", "on_arrows")

    def __init__(self, source: FinCat, target: FinCat, on_objects: FinFn, on_arrows: FinFn):
        if on_objects.domain != source.objects or on_objects.codomain != target.objects:
            raise ValueError("object part must map objects to objects")
        if on_arrows.domain != source.arrows or on_arrows.codomain != target.arrows:
            raise ValueError("arrow part must map arrows to arrows")
        self.source = source
        self.target = target
        self.on_objects = on_objects
        self.on_arrows = on_arrows

    def obj(self, x: Element) -> Element:
        return self.on_objects(x)

    def arr(self, f: Element) -> Element:
        return self.on_arrows(f)

    def __repr__(self) -> str:
        return "Functor(%r -> %r)" % (self.source, self.target)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Functor):
            return NotImplemented
        return self.on_objects == other.on_objects and self.on_arrows == other.on_arrows


def functor_validate(F: Functor) -> ValidationReport:
    """Check preservation of dom, cod, identities and composition."""
    report = ValidationReport()
    c, d = F.source, F.target
    for f in c.arrows:
        if d.dom(F.arr(f)) != F.obj(c.dom(f)):
            report.add("preserves-dom", show(f))
        if d.cod(F.arr(f)) != F.obj(c.cod(f)):
            report.add("preserves-cod", show(f))
    for x in c.objects:
        if F.arr(c.ident(x)) != d.ident(F.obj(x)):
            report.add("preserves-id", show(x))
    if not report.ok:
        return report
    for (g, f), h in c.comp.items():
        if d.comp.get((F.arr(g), F.arr(f))) != F.arr(h):
            report.add("preserves-comp", "(%s, %s)" % (show(g), show(f)))
    return report


def identity_functor(c: FinCat) -> Functor:
    return Functor(c, c, FinFn.identity(c.objects), FinFn.identity(c.arrows))


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G after F."""
    on_objects = FinFn(
        F.source.objects, G.target.objects, {x: G.obj(F.obj(x)) for x in F.source.objects}
    )
    on_arrows = FinFn(
        F.source.arrows, G.target.arrows, {f: G.arr(F.arr(f)) for f in F.source.arrows}
    )
    return Functor(F.source, G.target, on_objects, on_arrows)


def functor_is_iso(F: Functor) -> bool:
    return (
        functor_validate(F).ok
        and F.on_objects.is_bijective()
        and F.on_arrows.is_bijective()
    )


@dataclass
class CosliceCat:
    """The category of arrows out of a fixed vertex.

    Objects are the base arrows themselves; an arrow from f to g.f is
    the pair (f, g) for each g composable after f.
    """

    base: FinCat
    vertex: Element
    cat: FinCat

    def object_arrow(self, obj: Element) -> Element:
        """The base arrow an object stands for (the object itself)."""
        return obj

    def triangle_edge(self, arrow: Element) -> Element:
        """The base arrow g of a triangle (f, g)."""
        return arrow[1]


def coslice(c: FinCat, x: Element) -> CosliceCat:
    """The coslice of c under the object x."""
    if x not in c.objects:
        raise UnknownObject(show(x))
    objs = FinSet([f for f in c.arrows if c.dom(f) == x])
    arrows = []
    for f in objs:
        for g in c.arrows:
            if c.dom(g) == c.cod(f):
                arrows.append(pair(f, g))
    arr_set = FinSet(arrows)
    dom = FinFn(arr_set, objs, {a: a[0] for a in arrows})
    cod = FinFn(arr_set, objs, {a: c.comp[(a[1], a[0])] for a in arrows})
    ident = FinFn(objs, arr_set, {f: pair(f, c.ident(c.cod(f))) for f in objs})
    comp = {}
    for a in arrows:
        for b in arrows:
            # b after a, so a's composite must be b's source object
            if c.comp[(a[1], a[0])] == b[0]:
                comp[(b, a)] = pair(a[0], c.comp[(b[1], a[1])])
    return CosliceCat(c, x, FinCat(objs, arr_set, dom, cod, ident, comp))


def coslice_cod(c: FinCat, x: Element) -> Functor:
    """The codomain functor from (x down c) to c."""
    cos = coslice(c, x)
    on_objects = FinFn(cos.cat.objects, c.objects, {f: c.cod(f) for f in cos.cat.objects})
    on_arrows = FinFn(cos.cat.arrows, c.arrows, {a: a[1] for a in cos.cat.arrows})
    return Functor(cos.cat, c, on_objects, on_arrows)


def induced_coslice_functor(T: Functor, x: Element) -> Functor:
    """The functor (x down A) -> (Tx down B) induced by T: A -> B."""
    if x not in T.source.objects:
        raise UnknownObject(show(x))
    cos_a = coslice(T.source, x)
    cos_b = coslice(T.target, T.obj(x))
    on_objects = FinFn(
        cos_a.cat.objects, cos_b.cat.objects, {f: T.arr(f) for f in cos_a.cat.objects}
    )
    on_arrows = FinFn(
        cos_a.cat.arrows,
        cos_b.cat.arrows,
        {a: pair(T.arr(a[0]), T.arr(a[1])) for a in cos_a.cat.arrows},
    )
    return Functor(cos_a.cat, cos_b.cat, on_objects, on_arrows)


def coslice_of_coslice_iso(c: FinCat, f: Element) -> Tuple[Functor, Functor]:
    """The invertible functor (f down (x down c)) -> (cod f down c), with inverse.

    Its object part forgets the fixed first edge of a triangle; the
    inverse pastes it back.
    """
    if f not in c.arrows:
        raise UnknownArrow(show(f))
    x = c.dom(f)
    y = c.cod(f)
    cos_x = coslice(c, x)
    double = coslice(cos_x.cat, f)
    cos_y = coslice(c, y)
    fwd_obj = FinFn(
        double.cat.objects, cos_y.cat.objects, {o: o[1] for o in double.cat.objects}
    )
    fwd_arr = FinFn(
        double.cat.arrows,
        cos_y.cat.arrows,
        {a: pair(a[0][1], a[1][1]) for a in double.cat.arrows},
    )
    forward = Functor(double.cat, cos_y.cat, fwd_obj, fwd_arr)
    bwd_obj = FinFn(
        cos_y.cat.objects, double.cat.objects, {g: pair(f, g) for g in cos_y.cat.objects}
    )
    bwd_arr = FinFn(
        cos_y.cat.arrows,
        double.cat.arrows,
        {a: pair(pair(f, a[0]), pair(c.comp[(a[0], f)], a[1])) for a in cos_y.cat.arrows},
    )
    backward = Functor(cos_y.cat, double.cat, bwd_obj, bwd_arr)
    return forward, backward


def tag(i: int, x: Element) -> Element:
    return pair(str(i), x)


def cat_coproduct(cs: List[FinCat]) -> Tuple[FinCat, List[Functor]]:
    """Disjoint union of categories, objects and arrows tagged by index."""
    objs: List[Element] = []
    arrs: List[Element] = []
    dom: Dict[Element, Element] = {}
    cod: Dict[Element, Element] = {}
    ident: Dict[Element, Element] = {}
    comp: Dict[Tuple[Element, Element], Element] = {}
    for i, c in enumerate(cs):
        for x in c.objects:
            objs.append(tag(i, x))
        for f in c.arrows:
            arrs.append(tag(i, f))
            dom[tag(i, f)] = tag(i, c.dom(f))
            cod[tag(i, f)] = tag(i, c.cod(f))
        for x in c.objects:
            ident[tag(i, x)] = tag(i, c.ident(x))
        for (g, f), h in c.comp.items():
            comp[(tag(i, g), tag(i, f))] = tag(i, h)
    obj_set = FinSet(objs)
    arr_set = FinSet(arrs)
    total = FinCat(
        obj_set,
        arr_set,
        FinFn(arr_set, obj_set, dom),
        FinFn(arr_set, obj_set, cod),
        FinFn(obj_set, arr_set, ident),
        comp,
    )
    injections = []
    for i, c in enumerate(cs):
        on_objects = FinFn(c.objects, obj_set, {x: tag(i, x) for x in c.objects})
        on_arrows = FinFn(c.arrows, arr_set, {f: tag(i, f) for f in c.arrows})
        injections.append(Functor(c, total, on_objects, on_arrows))
    return total, injections


def relabel_cat(c: FinCat, obj_map: Dict[Element, Element], arr_map: Dict[Element, Element]) -> FinCat:
    """Rename objects and arrows along bijective tables."""
    objs = FinSet([obj_map[x] for x in c.objects])
    arrs = FinSet([arr_map[f] for f in c.arrows])
    dom = FinFn(arrs, objs, {arr_map[f]: obj_map[c.dom(f)] for f in c.arrows})
    cod = FinFn(arrs, objs, {arr_map[f]: obj_map[c.cod(f)] for f in c.arrows})
    ident = FinFn(objs, arrs, {obj_map[x]: arr_map[c.ident(x)] for x in c.objects})
    comp = {
        (arr_map[g], arr_map[f]): arr_map[h] for (g, f), h in c.comp.items()
    }
    return FinCat(objs, arrs, dom, cod, ident, comp)
