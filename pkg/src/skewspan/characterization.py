"""Translating between skew monoidal span data and functor structures.

A verified skew monoidal structure yields a finite category (objects
the carrier, arrows the tensor apex, composition from the
associativity component) together with a functor R from the shifted
category back to the category.  Conversely a category with such a
functor, subject to a square condition and a restricted-vertex
condition, rebuilds a verified structure.  Both directions are
implemented and cross-checked, along with the coslice-level
factorisation square and the object-level idempotent square.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .category import (
    CheckResult,
    FinCat,
    Functor,
    cat_validate,
    compose_functors,
    coslice,
    coslice_cod,
    functor_validate,
    induced_coslice_functor,
)
from .errors import AxiomsFail, CapExceeded, ConditionsFail
from .finset import Element, FinFn, FinSet, enumerate_functions, pair, show
from .monoidale import SkewMonoidaleData, VerifyReport, verify
from .simplicial import dec_cat, dec_functor


@dataclass
class RStructure:
    """A finite category with a functor R from its shift back to itself."""

    cat: FinCat
    R: Functor  # Dec(cat) -> cat

    def e_value(self, x: Element) -> Element:
        """The idempotent-to-be E(x) = R(1_x)."""
        return self.R.obj(self.cat.ident(x))

    def unit_objects(self) -> List[Element]:
        """Objects fixed by E; the canonical splitting set."""
        return [x for x in self.cat.objects if self.e_value(x) == x]

    def restricted(self, x: Element) -> Functor:
        """R cut down to the coslice under x."""
        cos = coslice(self.cat, x)
        on_objects = FinFn(
            cos.cat.objects, self.cat.objects, {f: self.R.obj(f) for f in cos.cat.objects}
        )
        on_arrows = FinFn(
            cos.cat.arrows, self.cat.arrows, {a: self.R.arr(a) for a in cos.cat.arrows}
        )
        return Functor(cos.cat, self.cat, on_objects, on_arrows)


@dataclass
class ConditionReport:
    """Verdicts for functoriality, the shift square, the restricted-vertex
    condition, the per-arrow factorisation square, the object-level
    idempotent square, and idempotence itself."""

    functorial: CheckResult
    square: CheckResult
    restricted_vertices: CheckResult
    idempotent: CheckResult
    factor: CheckResult
    object_square: CheckResult
    lemma_consistent: bool

    @property
    def ok(self) -> bool:
        return (
            self.functorial.passed
            and self.square.passed
            and self.restricted_vertices.passed
            and self.idempotent.passed
        )

    def to_dict(self) -> dict:
        def d(c: CheckResult) -> dict:
            return {"passed": c.passed, "witness": c.witness}

        return {
            "functorial": d(self.functorial),
            "square": d(self.square),
            "restricted_vertices": d(self.restricted_vertices),
            "idempotent": d(self.idempotent),
            "factor": d(self.factor),
            "object_square": d(self.object_square),
            "lemma_consistent": self.lemma_consistent,
            "ok": self.ok,
        }


def extract(m: SkewMonoidaleData, report: Optional[VerifyReport] = None) -> RStructure:
    """Read off the category and the functor R from a verified instance.

    Objects are the carrier, arrows the tensor apex with dom = s and
    cod = t, identities phi, composition delta; R is r on objects and
    tau on arrows.
    """
    if report is None:
        report = verify(m)
    if not report.all_pass:
        raise AxiomsFail("instance does not verify; extraction refused")
    comp = {}
    for f, g in [(x[0], x[1]) for x in m.composable()]:
        comp[(g, f)] = m.delta((f, g))
    cat = FinCat(m.C, m.E, m.s, m.t, m.phi, comp)
    dec, _cod = dec_cat(cat)
    on_objects = FinFn(dec.objects, cat.objects, {f: m.r(f) for f in dec.objects})
    on_arrows = FinFn(dec.arrows, cat.arrows, {a: m.tau(a) for a in dec.arrows})
    return RStructure(cat, Functor(dec, cat, on_objects, on_arrows))


def _factor_at(rs: RStructure, f: Element) -> Optional[str]:
    """The factorisation square at one arrow; None when it commutes.

    Builds the four functors literally: the forgetful equivalence from
    the double coslice, the restriction of R at the source, its induced
    functor at f, and the restrictions of R at the two codomains.
    Functor validity of the restrictions is part of the check.
    """
    c = rs.cat
    x, y = c.dom(f), c.cod(f)
    r_x = rs.restricted(x)
    if not functor_validate(r_x).ok:
        return "restriction at %s is not a functor" % show(x)
    r_y = rs.restricted(y)
    if not functor_validate(r_y).ok:
        return "restriction at %s is not a functor" % show(y)
    rf = r_x.obj(f)
    r_rf = rs.restricted(rf)
    if not functor_validate(r_rf).ok:
        return "restriction at %s is not a functor" % show(rf)
    cod_x = coslice_cod(c, x)
    try:
        north = compose_functors(r_y, induced_coslice_functor(cod_x, f))
        south = compose_functors(r_rf, induced_coslice_functor(r_x, f))
    except (KeyError, ValueError) as exc:
        return "square does not assemble at %s: %s" % (show(f), exc)
    if north.on_objects != south.on_objects:
        return "object parts differ at %s" % show(f)
    if north.on_arrows != south.on_arrows:
        return "arrow parts differ at %s" % show(f)
    return None


def check_conditions(rs: RStructure) -> ConditionReport:
    """Evaluate every condition the characterisation imposes on (cat, R)."""
    c = rs.cat
    cat_ok = cat_validate(c)
    if not cat_ok.ok:
        bad = CheckResult("category", False, repr(cat_ok))
        return ConditionReport(bad, bad, bad, bad, bad, bad, True)

    fv = functor_validate(rs.R)
    functorial = CheckResult(
        "functorial", fv.ok, None if fv.ok else repr(fv.failures[0])
    )

    # shift square: R . Dec(Cod) = R . Dec(R) on Dec(Dec(cat))
    dec, cod = dec_cat(c)
    square = CheckResult("square", True)
    dec_cod = dec_functor(cod)
    dec_r = dec_functor(rs.R)
    top = compose_functors(rs.R, dec_cod)
    bottom = compose_functors(rs.R, dec_r)
    for obj in dec_cod.source.objects:
        if top.obj(obj) != bottom.obj(obj):
            square = CheckResult("square", False, "object %s" % show(obj))
            break
    if square.passed:
        for arr in dec_cod.source.arrows:
            if top.arr(arr) != bottom.arr(arr):
                square = CheckResult("square", False, "arrow %s" % show(arr))
                break

    idempotent = CheckResult("idempotent", True)
    for x in c.objects:
        if rs.e_value(rs.e_value(x)) != rs.e_value(x):
            idempotent = CheckResult("idempotent", False, show(x))
            break

    restricted = CheckResult("restricted_vertices", True)
    for x in rs.unit_objects():
        r_x = rs.restricted(x)
        cod_x = coslice_cod(c, x)
        if r_x.on_objects != cod_x.on_objects or r_x.on_arrows != cod_x.on_arrows:
            restricted = CheckResult("restricted_vertices", False, show(x))
            break

    factor = CheckResult("factor", True)
    for f in c.arrows:
        witness = _factor_at(rs, f)
        if witness is not None:
            factor = CheckResult("factor", False, witness)
            break

    object_square = CheckResult("object_square", True)
    for f in c.arrows:
        if rs.e_value(c.cod(f)) != rs.e_value(rs.R.obj(f)):
            object_square = CheckResult("object_square", False, show(f))
            break

    lemma_consistent = (not factor.passed) or object_square.passed
    return ConditionReport(
        functorial, square, restricted, idempotent, factor, object_square, lemma_consistent
    )


def build(rs: RStructure, report: Optional[ConditionReport] = None) -> SkewMonoidaleData:
    """Rebuild the skew monoidal data from a functor structure.

    The unit is the canonical splitting of the idempotent E: the set
    of E-fixed objects with the inclusion; psi sends an object to its
    E-value.
    """
    if report is None:
        report = check_conditions(rs)
    if not report.ok:
        raise ConditionsFail("conditions fail; refusing to build")
    c = rs.cat
    u_set = FinSet(rs.unit_objects())
    j = FinFn(u_set, c.objects, {x: x for x in u_set})
    psi = FinFn(c.objects, u_set, {x: rs.e_value(x) for x in c.objects})
    x_pairs = [
        pair(f, g) for f in c.arrows for g in c.arrows if c.cod(f) == c.dom(g)
    ]
    x_set = FinSet(x_pairs)
    delta = FinFn(x_set, c.arrows, {q: c.comp[(q[1], q[0])] for q in x_pairs})
    tau = FinFn(x_set, c.arrows, {q: rs.R.arr(q) for q in x_pairs})
    return SkewMonoidaleData(
        C=c.objects,
        E=c.arrows,
        s=c.dom,
        r=rs.R.on_objects,
        t=c.cod,
        U=u_set,
        j=j,
        phi=c.ident,
        psi=psi,
        tau=tau,
        delta=delta,
    )


def cod_rstructure(c: FinCat) -> RStructure:
    """The structure a bare category carries: R is the codomain functor."""
    _dec, cod = dec_cat(c)
    return RStructure(c, cod)


def restricted_monoidale(c: FinCat) -> SkewMonoidaleData:
    """The monoidale with unit of restricted form attached to a category."""
    return build(cod_rstructure(c))


@dataclass
class RoundTripReport:
    isomorphic: bool
    details: List[str] = field(default_factory=list)


def roundtrip(m: SkewMonoidaleData) -> RoundTripReport:
    """Compare build(extract(m)) with m.

    Everything must agree on the nose except the unit set, which is
    compared along the canonical bijection u |-> j(u) onto the
    splitting subset.
    """
    report = verify(m)
    if not report.all_pass:
        raise AxiomsFail("instance does not verify")
    rebuilt = build(extract(m, report))
    out = RoundTripReport(True)

    def fail(msg: str) -> None:
        out.isomorphic = False
        out.details.append(msg)

    if rebuilt.C != m.C:
        fail("carrier differs")
    if rebuilt.E != m.E:
        fail("tensor apex differs")
    for name in ("s", "r", "t", "phi"):
        if getattr(rebuilt, name) != getattr(m, name):
            fail("%s differs" % name)
    if rebuilt.tau != m.tau or rebuilt.delta != m.delta:
        fail("constraint components differ")
    # unit component, compared along u |-> j(u)
    j_image = [m.j(u) for u in m.U]
    if len(set(j_image)) != len(j_image):
        fail("unit map is not injective")
    elif set(j_image) != set(rebuilt.U.elements):
        fail("unit set does not match the splitting subset")
    else:
        for u in m.U:
            if rebuilt.j(m.j(u)) != m.j(u):
                fail("unit leg does not commute at %s" % show(u))
        for x in m.C:
            if rebuilt.psi(x) != m.j(m.psi(x)):
                fail("psi does not commute at %s" % show(x))
    return out


def enumerate_rstructures(c: FinCat, cap: int = 10**6) -> Iterator[RStructure]:
    """All functor structures on c passing every condition, brute force.

    Candidates are all (object part, arrow part) pairs of functions;
    each is filtered through functor validity and check_conditions.
    Deterministic order; raises CapExceeded if the candidate space is
    too large.
    """
    dec, _cod = dec_cat(c)
    n_obj = len(c.objects) ** len(dec.objects) if len(dec.objects) else 1
    n_arr = len(c.arrows) ** len(dec.arrows) if len(dec.arrows) else 1
    if n_obj * n_arr > cap:
        raise CapExceeded("%d candidate functors exceed cap %d" % (n_obj * n_arr, cap))
    for on_objects in enumerate_functions(dec.objects, c.objects, cap=cap):
        for on_arrows in enumerate_functions(dec.arrows, c.arrows, cap=cap):
            r = Functor(dec, c, on_objects, on_arrows)
            if not functor_validate(r).ok:
                continue
            rs = RStructure(c, r)
            if check_conditions(rs).ok:
                yield rs


def count_monoidales_with_fixed_category(c: FinCat, cap: int = 10**6) -> int:
    """Direct dual enumeration for the brute-force equivalence oracle.

    Holds the category-shaped components fixed (carrier = objects,
    tensor apex = arrows, s = dom, t = cod, delta = composition,
    phi = identities) and enumerates r, tau, the splitting subset,
    and psi; counts the candidates that verify under both checkers.
    """
    x_pairs = [pair(f, g) for f in c.arrows for g in c.arrows if c.cod(f) == c.dom(g)]
    x_set = FinSet(x_pairs)
    delta = FinFn(x_set, c.arrows, {q: c.comp[(q[1], q[0])] for q in x_pairs})
    subsets: List[List[Element]] = [[]]
    for x in c.objects:
        subsets = subsets + [s + [x] for s in subsets]
    total = 0
    n_r = len(c.objects) ** len(c.arrows) if len(c.arrows) else 1
    n_tau = len(c.arrows) ** len(x_pairs) if len(x_pairs) else 1
    if n_r * n_tau > cap:
        raise CapExceeded("dual enumeration exceeds cap")
    for r_fn in enumerate_functions(c.arrows, c.objects, cap=cap):
        for tau in enumerate_functions(x_set, c.arrows, cap=cap):
            for subset in subsets:
                if not subset and len(c.objects) > 0:
                    continue
                u_set = FinSet(subset)
                j = FinFn(u_set, c.objects, {x: x for x in subset})
                for psi in enumerate_functions(c.objects, u_set, cap=cap):
                    m = SkewMonoidaleData(
                        C=c.objects,
                        E=c.arrows,
                        s=c.dom,
                        r=r_fn,
                        t=c.cod,
                        U=u_set,
                        j=j,
                        phi=c.ident,
                        psi=psi,
                        tau=tau,
                        delta=delta,
                    )
                    if verify(m).all_pass:
                        total += 1
    return total


def mutate_rstructure(rs: RStructure, rng: random.Random) -> Tuple[RStructure, str]:
    """Perturb one value of R's object or arrow part."""
    which = rng.choice(["objects", "arrows"])
    fn = rs.R.on_objects if which == "objects" else rs.R.on_arrows
    if len(fn.domain) == 0 or len(fn.codomain) < 2:
        which = "arrows" if which == "objects" else "objects"
        fn = rs.R.on_objects if which == "objects" else rs.R.on_arrows
    x = rng.choice(fn.domain.elements)
    old = fn(x)
    new = rng.choice([v for v in fn.codomain if v != old])
    table = dict(fn.mapping)
    table[x] = new
    mutated = FinFn(fn.domain, fn.codomain, table)
    if which == "objects":
        r = Functor(rs.R.source, rs.R.target, mutated, rs.R.on_arrows)
    else:
        r = Functor(rs.R.source, rs.R.target, rs.R.on_objects, mutated)
    return RStructure(rs.cat, r), "R_%s(%s): %s -> %s" % (which, show(x), show(old), show(new))
