"""Monoids and categories as skew monoidal structures on spans.

A monoid M gives a structure with tensor apex M x M (projections and
multiplication as legs) whose constraints are all invertible, so it is
a genuine monoidale, not merely skew.  A small category generalises
this with composable pairs as the apex.  Both are instances of the
category shift: the category read off a monoid's structure is exactly
Dec of its one-object category.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .category import FinCat, Functor, ValidationReport, cat_validate, functor_validate
from .cats import make_fincat
from .errors import InvalidCategory, MonoidLawsFail, NotAMonoidMorphism
from .finset import Element, FinFn, FinSet, pair, show, terminal_set, UNIT
from .monoidale import SkewMonoidaleData
from .simplicial import dec_cat, dec_functor


@dataclass(frozen=True)
class FinMonoid:
    """A finite monoid as an explicit multiplication table."""

    carrier: FinSet
    mul: Dict[Tuple[Element, Element], Element]
    unit: Element

    def __call__(self, a: Element, b: Element) -> Element:
        return self.mul[(a, b)]


def monoid_validate(m: FinMonoid) -> ValidationReport:
    report = ValidationReport()
    if m.unit not in m.carrier:
        report.add("unit-element", show(m.unit))
        return report
    for a in m.carrier:
        for b in m.carrier:
            if (a, b) not in m.mul:
                report.add("totality", "(%s, %s)" % (show(a), show(b)))
                return report
            if m.mul[(a, b)] not in m.carrier:
                report.add("closure", "(%s, %s)" % (show(a), show(b)))
                return report
    for a in m.carrier:
        if m(m.unit, a) != a:
            report.add("left-unit", show(a))
        if m(a, m.unit) != a:
            report.add("right-unit", show(a))
    for a in m.carrier:
        for b in m.carrier:
            for c in m.carrier:
                if m(m(a, b), c) != m(a, m(b, c)):
                    report.add("associativity", "(%s, %s, %s)" % (show(a), show(b), show(c)))
                    return report
    return report


def zmod(n: int) -> FinMonoid:
    elems = [str(i) for i in range(n)]
    mul = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return FinMonoid(FinSet(elems), mul, "0")


def trivial_monoid() -> FinMonoid:
    return FinMonoid(FinSet(["e"]), {("e", "e"): "e"}, "e")


def left_absorbing_monoid() -> FinMonoid:
    """Three elements {1, a, b} with x.y = x for x, y in {a, b}; not commutative."""
    elems = ["1", "a", "b"]
    mul: Dict[Tuple[Element, Element], Element] = {}
    for x in elems:
        mul[("1", x)] = x
        mul[(x, "1")] = x
    for x in ("a", "b"):
        for y in ("a", "b"):
            mul[(x, y)] = x
    return FinMonoid(FinSet(elems), mul, "1")


def monoid_to_monoidale(m: FinMonoid) -> SkewMonoidaleData:
    """The span structure of a monoid: apex M x M, legs projections and mul.

    Arrows are pairs (a, b): a -> a.b; composition appends the second
    factors, the constraint tau keeps them.  The unit set is a point.
    """
    report = monoid_validate(m)
    if not report.ok:
        raise MonoidLawsFail(repr(report))
    M = m.carrier
    e_elems = [pair(a, b) for a in M for b in M]
    e_set = FinSet(e_elems)
    s = FinFn(e_set, M, {x: x[0] for x in e_elems})
    r = FinFn(e_set, M, {x: x[1] for x in e_elems})
    t = FinFn(e_set, M, {x: m(x[0], x[1]) for x in e_elems})
    u_set = terminal_set()
    j = FinFn(u_set, M, {UNIT: m.unit})
    phi = FinFn(M, e_set, {a: pair(a, m.unit) for a in M})
    psi = FinFn(M, u_set, {a: UNIT for a in M})
    x_pairs = [pair(f, g) for f in e_elems for g in e_elems if t(f) == s(g)]
    x_set = FinSet(x_pairs)
    tau = FinFn(x_set, e_set, {q: pair(q[0][1], q[1][1]) for q in x_pairs})
    delta = FinFn(x_set, e_set, {q: pair(q[0][0], m(q[0][1], q[1][1])) for q in x_pairs})
    return SkewMonoidaleData(M, e_set, s, r, t, u_set, j, phi, psi, tau, delta)


def category_to_monoidale(c: FinCat) -> SkewMonoidaleData:
    """The span structure of a small category, apex the composable pairs.

    The carrier is the arrow set; the unit set is the object set with
    the identity-arrow assignment as its leg.
    """
    report = cat_validate(c)
    if not report.ok:
        raise InvalidCategory(repr(report))
    A = c.arrows
    e_elems = [pair(f, g) for f in A for g in A if c.cod(f) == c.dom(g)]
    e_set = FinSet(e_elems)
    s = FinFn(e_set, A, {x: x[0] for x in e_elems})
    r = FinFn(e_set, A, {x: x[1] for x in e_elems})
    t = FinFn(e_set, A, {x: c.comp[(x[1], x[0])] for x in e_elems})
    u_set = FinSet(list(c.objects))
    j = FinFn(u_set, A, {x: c.ident(x) for x in u_set})
    phi = FinFn(A, e_set, {f: pair(f, c.ident(c.cod(f))) for f in A})
    psi = FinFn(A, u_set, {f: c.cod(f) for f in A})
    x_pairs = [pair(F, G) for F in e_elems for G in e_elems if t(F) == s(G)]
    x_set = FinSet(x_pairs)
    tau = FinFn(x_set, e_set, {q: pair(q[0][1], q[1][1]) for q in x_pairs})
    delta = FinFn(
        x_set,
        e_set,
        {q: pair(q[0][0], c.comp[(q[1][1], q[0][1])]) for q in x_pairs},
    )
    return SkewMonoidaleData(A, e_set, s, r, t, u_set, j, phi, psi, tau, delta)


def delooping(m: FinMonoid) -> FinCat:
    """The one-object category of a monoid, composition in diagram order.

    "f then g" composes to f.g, so the shift of this category matches
    the monoid's span structure on the nose.
    """
    report = monoid_validate(m)
    if not report.ok:
        raise MonoidLawsFail(repr(report))
    comp = {(g, f): m(f, g) for f in m.carrier for g in m.carrier}
    return make_fincat(
        ["o"],
        list(m.carrier),
        {f: "o" for f in m.carrier},
        {f: "o" for f in m.carrier},
        {"o": m.unit},
        comp,
    )


@dataclass(frozen=True)
class MonoidMorphism:
    source: FinMonoid
    target: FinMonoid
    mapping: FinFn


def monoid_morphism_validate(h: MonoidMorphism) -> ValidationReport:
    report = ValidationReport()
    if h.mapping.domain != h.source.carrier or h.mapping.codomain != h.target.carrier:
        report.add("boundaries", "mapping must go carrier to carrier")
        return report
    if h.mapping(h.source.unit) != h.target.unit:
        report.add("unit", show(h.source.unit))
    for a in h.source.carrier:
        for b in h.source.carrier:
            if h.mapping(h.source(a, b)) != h.target(h.mapping(a), h.mapping(b)):
                report.add("multiplication", "(%s, %s)" % (show(a), show(b)))
                return report
    return report


def monoid_category(m: FinMonoid) -> FinCat:
    """The category read off a monoid's span structure.

    Objects the carrier, arrows the pairs (a, b): a -> a.b, composition
    (a, b) then (a.b, c) = (a, b.c), identities (a, 1).
    """
    mon = monoid_to_monoidale(m)
    comp = {}
    for q in mon.composable():
        comp[(q[1], q[0])] = mon.delta(q)
    return FinCat(mon.C, mon.E, mon.s, mon.t, mon.phi, comp)


def mon_functor_T(h: MonoidMorphism) -> Functor:
    """The functor between monoid categories induced by a monoid map."""
    report = monoid_morphism_validate(h)
    if not report.ok:
        raise NotAMonoidMorphism(repr(report))
    src = monoid_category(h.source)
    tgt = monoid_category(h.target)
    on_objects = FinFn(src.objects, tgt.objects, {a: h.mapping(a) for a in src.objects})
    on_arrows = FinFn(
        src.arrows,
        tgt.arrows,
        {f: pair(h.mapping(f[0]), h.mapping(f[1])) for f in src.arrows},
    )
    return Functor(src, tgt, on_objects, on_arrows)


@dataclass
class DecComparisonReport:
    category_agrees: bool
    functor_agrees: bool = True
    details: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.category_agrees and self.functor_agrees


def dec_comparison(m: FinMonoid, morphism: MonoidMorphism = None) -> DecComparisonReport:
    """Check that a monoid's category is the shift of its delooping.

    With a morphism given, also checks that the induced functor matches
    the shifted functor between deloopings.
    """
    t_m = monoid_category(m)
    dec, _ = dec_cat(delooping(m))
    report = DecComparisonReport(category_agrees=True)
    if t_m != dec:
        report.category_agrees = False
        report.details.append("categories differ")
    if morphism is not None:
        if monoid_morphism_validate(morphism).ok:
            t_f = mon_functor_T(morphism)
            b_f = Functor(
                delooping(morphism.source),
                delooping(morphism.target),
                FinFn.from_callable(
                    FinSet(["o"]), FinSet(["o"]), lambda x: "o"
                ),
                morphism.mapping,
            )
            dec_f = dec_functor(b_f)
            if t_f.on_objects != dec_f.on_objects or t_f.on_arrows != dec_f.on_arrows:
                report.functor_agrees = False
                report.details.append("functors differ")
        else:
            report.functor_agrees = False
            report.details.append("not a monoid morphism")
    return report
