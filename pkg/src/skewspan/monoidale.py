"""Skew monoidal structure on a span of finite sets, with two verifiers.

The data is a carrier C, a tensor span C x C <- E -> C with legs
(s, r) and t, a unit U -> C, and the component functions phi, psi
(right unit constraint) and tau, delta (associativity constraint).
The left unit constraint is not stored: when it exists it is forced
pointwise, and ``wellformed`` synthesizes it.

Two independent checkers decide the five coherence axioms:

* ``axioms_pointwise`` evaluates the element equations the structure
  must satisfy, grouped by the axiom they come from.
* ``axioms_bicategorical`` builds both pasted sides of each axiom
  diagram out of actual span composites, tensors, whiskerings and
  structural cells, then compares the resulting apex maps pointwise.

``verify`` runs both and cross-checks their verdicts axiom by axiom.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from .category import CheckResult
from .errors import NotWellFormed
from .finset import UNIT, Element, FinFn, FinSet, pair, pullback, show, terminal_set
from .span import (
    Span,
    SpanTwoCell,
    comp_unit_left,
    comp_unit_right,
    compare_parallel_cells,
    identity_twocell,
    interchange,
    invert_twocell,
    middle_four,
    paste,
    span_compose,
    span_identity,
    span_tensor,
    twocell_tensor,
    whisker_left,
    whisker_right,
    word_identity,
)

AXIOM_KEYS = ("pentagon", "left", "right", "middle", "unit_unit")

AXIOM_TITLES = {
    "pentagon": "(1) pentagon",
    "left": "(2) left unit",
    "right": "(3) right unit",
    "middle": "(4) middle unit",
    "unit_unit": "(5) unit-unit",
}


@dataclass(frozen=True)
class SkewMonoidaleData:
    """Carrier, tensor span, unit span and constraint components."""

    C: FinSet
    E: FinSet
    s: FinFn
    r: FinFn
    t: FinFn
    U: FinSet
    j: FinFn
    phi: FinFn
    psi: FinFn
    tau: FinFn
    delta: FinFn

    def composable(self) -> FinSet:
        """The pullback apex X = {(f, g) | t(f) = s(g)}."""
        return pullback(self.t, self.s).apex


@dataclass
class AxiomReport:
    """Well-formedness results plus one verdict per axiom.

    A verdict of None means the axiom was not evaluated (ill-formed
    input).
    """

    checker: str
    wellformed: List[CheckResult] = field(default_factory=list)
    axioms: Dict[str, Optional[CheckResult]] = field(
        default_factory=lambda: {k: None for k in AXIOM_KEYS}
    )

    @property
    def wellformed_ok(self) -> bool:
        return all(c.passed for c in self.wellformed)

    @property
    def all_pass(self) -> bool:
        return self.wellformed_ok and all(
            c is not None and c.passed for c in self.axioms.values()
        )

    def verdict_map(self) -> Dict[str, Optional[bool]]:
        return {k: (None if c is None else c.passed) for k, c in self.axioms.items()}

    def to_dict(self) -> dict:
        return {
            "checker": self.checker,
            "wellformed": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in self.wellformed
            ],
            "axioms": {
                k: None
                if c is None
                else {"passed": c.passed, "witness": c.witness}
                for k, c in self.axioms.items()
            },
        }


@dataclass
class VerifyReport:
    """Both checkers' reports and their axiom-by-axiom agreement."""

    pointwise: AxiomReport
    bicategorical: AxiomReport
    agree: bool

    @property
    def all_pass(self) -> bool:
        return self.pointwise.all_pass and self.bicategorical.all_pass and self.agree

    def to_dict(self) -> dict:
        return {
            "pointwise": self.pointwise.to_dict(),
            "bicategorical": self.bicategorical.to_dict(),
            "agree": self.agree,
            "all_pass": self.all_pass,
        }


def _typecheck(m: SkewMonoidaleData, out: List[CheckResult]) -> bool:
    """Boundary sanity of all component functions, including tau/delta domains."""
    ok = True

    def expect(cond: bool, name: str, witness: str) -> None:
        nonlocal ok
        if not cond:
            out.append(CheckResult(name, False, witness))
            ok = False

    for name in ("s", "r", "t"):
        fn = getattr(m, name)
        expect(fn.domain == m.E and fn.codomain == m.C, "legs", "%s must map E to C" % name)
    expect(m.j.domain == m.U and m.j.codomain == m.C, "legs", "j must map U to C")
    expect(m.phi.domain == m.C and m.phi.codomain == m.E, "legs", "phi must map C to E")
    expect(m.psi.domain == m.C and m.psi.codomain == m.U, "legs", "psi must map C to U")
    if ok:
        x = m.composable()
        for name in ("tau", "delta"):
            fn = getattr(m, name)
            expect(
                fn.domain == x and fn.codomain == m.E,
                "legs",
                "%s must map the composable-pair set to E" % name,
            )
    if ok:
        out.append(CheckResult("legs", True))
    return ok


def wellformed(m: SkewMonoidaleData) -> AxiomReport:
    """Check the component conditions and synthesize the left unit map.

    Verifies the right-unit components (t.phi = 1, s.phi = 1,
    r.phi = j.psi), the associativity-component leg conditions, the
    left-unit existence condition (r and t agree on arrows whose
    source is in the image of the unit) and the target condition
    r(tau) = r(second argument).
    """
    report = AxiomReport(checker="wellformed")
    out = report.wellformed
    if not _typecheck(m, out):
        return report

    def check(name: str, pairs) -> None:
        for label, lhs, rhs in pairs:
            if lhs != rhs:
                out.append(CheckResult(name, False, label))
                return
        out.append(CheckResult(name, True))

    check("rho: t.phi = 1", [(show(x), m.t(m.phi(x)), x) for x in m.C])
    check("rho: s.phi = 1", [(show(x), m.s(m.phi(x)), x) for x in m.C])
    check("rho: r.phi = j.psi", [(show(x), m.r(m.phi(x)), m.j(m.psi(x))) for x in m.C])
    x_set = m.composable()
    check("alpha: t.delta = t.l", [(show(x), m.t(m.delta(x)), m.t(x[1])) for x in x_set])
    check("alpha: s.delta = s.h", [(show(x), m.s(m.delta(x)), m.s(x[0])) for x in x_set])
    check("alpha: s.tau = r.h", [(show(x), m.s(m.tau(x)), m.r(x[0])) for x in x_set])
    check("alpha: r.tau = r.l", [(show(x), m.r(m.tau(x)), m.r(x[1])) for x in x_set])
    check("alpha: r.delta = t.tau", [(show(x), m.r(m.delta(x)), m.t(m.tau(x))) for x in x_set])
    p_set = pullback(m.j, m.s).apex
    check("lambda exists: r.q = t.q", [(show(x), m.r(x[1]), m.t(x[1])) for x in p_set])
    return report


def synthesize_lambda(m: SkewMonoidaleData) -> FinFn:
    """The forced left unit map on P = {(u, f) | j(u) = s(f)}."""
    p = pullback(m.j, m.s).apex
    for x in p:
        if m.r(x[1]) != m.t(x[1]):
            raise NotWellFormed("left unit does not exist at %s" % show(x))
    return FinFn(p, m.C, {x: m.r(x[1]) for x in p})


def _axiom_check(name: str, instances) -> CheckResult:
    for label, eqs in instances:
        for lhs, rhs in eqs:
            if lhs != rhs:
                return CheckResult(name, False, label)
    return CheckResult(name, True)


def axioms_pointwise(m: SkewMonoidaleData) -> AxiomReport:
    """Evaluate the element equations of each axiom group.

    Writing gf for delta(f, g), g^f for tau(f, g) and 1_x for phi(x):

    * pentagon: (hg)f = h(gf), (hg)^f = h^{gf} g^f, h^g = (h^{gf})^{g^f}
      over composable triples;
    * left: g^f = g when the source of f is in the image of j;
    * right: psi_y = psi_{r(f)}, 1_y^f = 1_{r(f)} and 1_y f = f for
      every arrow f: x -> y;
    * middle: f 1_x = f for every arrow f: x -> y;
    * unit-unit: psi(j(u)) = u.
    """
    report = wellformed(m)
    report.checker = "pointwise"
    if not report.wellformed_ok:
        raise NotWellFormed(repr(report.wellformed))
    x_set = m.composable()
    tau, delta, phi, psi = m.tau, m.delta, m.phi, m.psi

    triples = [
        (x[0], x[1], h) for x in x_set for h in m.E if m.t(x[1]) == m.s(h)
    ]
    report.axioms["pentagon"] = _axiom_check(
        "pentagon",
        (
            (
                "(%s, %s, %s)" % (show(f), show(g), show(h)),
                [
                    (delta((f, delta((g, h)))), delta((delta((f, g)), h))),
                    (tau((f, delta((g, h)))), delta((tau((f, g)), tau((delta((f, g)), h))))),
                    (tau((g, h)), tau((tau((f, g)), tau((delta((f, g)), h))))),
                ],
            )
            for f, g, h in triples
        ),
    )
    image_j = {m.j(u) for u in m.U}
    report.axioms["left"] = _axiom_check(
        "left",
        (
            ("(%s, %s)" % (show(x[0]), show(x[1])), [(tau(x), x[1])])
            for x in x_set
            if m.s(x[0]) in image_j
        ),
    )
    report.axioms["right"] = _axiom_check(
        "right",
        (
            (
                show(f),
                [
                    (psi(m.t(f)), psi(m.r(f))),
                    (tau((f, phi(m.t(f)))), phi(m.r(f))),
                    (delta((f, phi(m.t(f)))), f),
                ],
            )
            for f in m.E
        ),
    )
    report.axioms["middle"] = _axiom_check(
        "middle", ((show(f), [(delta((phi(m.s(f)), f)), f)]) for f in m.E)
    )
    report.axioms["unit_unit"] = _axiom_check(
        "unit_unit", ((show(u), [(psi(m.j(u)), u)]) for u in m.U)
    )
    return report


# ---------------------------------------------------------------------------
# the bicategorical checker


class _Pasting:
    """The 1-cells and constraint 2-cells of an instance, as real spans."""

    def __init__(self, m: SkewMonoidaleData):
        self.m = m
        C = m.C
        self.id1 = span_identity(C)
        # tensor span: C x C <- E -> C with left leg (s, r)
        left = FinFn(m.E, _pairs(C), {f: pair(m.s(f), m.r(f)) for f in m.E})
        self.p = Span(_pairs(C), C, m.E, left, m.t, src_word=(C, C), tgt_word=(C,))
        # unit span: 1 <- U -> C, an empty boundary word on the left
        one = terminal_set()
        bang = FinFn(m.U, one, {u: UNIT for u in m.U})
        self.j = Span(one, C, m.U, bang, m.j, src_word=(), tgt_word=(C,))

        self.pp1 = span_tensor(self.p, self.id1)
        self.one_pp = span_tensor(self.id1, self.p)
        self.j1 = span_tensor(self.j, self.id1)
        self.one_j = span_tensor(self.id1, self.j)
        self.id_cc = span_tensor(self.id1, self.id1)
        self.id1_comp = span_compose(self.id1, self.id1)

        self.P_pp1 = span_compose(self.p, self.pp1)
        self.P_1pp = span_compose(self.p, self.one_pp)
        self.P_j1 = span_compose(self.p, self.j1)
        self.P_1j = span_compose(self.p, self.one_j)

        self.alpha = self._alpha()
        self.lambda_ = self._lambda()
        self.rho = self._rho()

    def _alpha(self) -> SpanTwoCell:
        m = self.m
        table = {}
        for q in self.P_pp1.apex:
            (f, _c), g = q[0], q[1]
            table[q] = pair(pair(m.s(f), m.tau((f, g))), m.delta((f, g)))
        mapping = FinFn(self.P_pp1.apex, self.P_1pp.apex, table)
        return SpanTwoCell(self.P_pp1, self.P_1pp, mapping)

    def _lambda(self) -> SpanTwoCell:
        m = self.m
        table = {q: m.r(q[1]) for q in self.P_j1.apex}
        mapping = FinFn(self.P_j1.apex, self.id1.apex, table)
        return SpanTwoCell(self.P_j1, self.id1, mapping)

    def _rho(self) -> SpanTwoCell:
        m = self.m
        table = {c: pair(pair(c, m.psi(c)), m.phi(c)) for c in m.C}
        mapping = FinFn(self.id1.apex, self.P_1j.apex, table)
        return SpanTwoCell(self.id1, self.P_1j, mapping)

    # -- the two sides of each axiom --------------------------------------

    def pentagon(self) -> Tuple[SpanTwoCell, SpanTwoCell]:
        p, id1 = self.p, self.id1
        pp1, one_pp = self.pp1, self.one_pp
        p11 = span_tensor(pp1, id1)
        one_one_p = span_tensor(id1, one_pp)
        lhs = paste(
            [
                whisker_left(p11, self.alpha),
                whisker_right(interchange(p, p), p),
                whisker_left(one_one_p, self.alpha),
            ]
        )
        rhs = paste(
            [
                whisker_right(middle_four(p, id1, pp1, id1), p),
                whisker_right(twocell_tensor(self.alpha, identity_twocell(self.id1_comp)), p),
                whisker_right(invert_twocell(middle_four(p, id1, one_pp, id1)), p),
                whisker_left(span_tensor(one_pp, id1), self.alpha),
                whisker_right(middle_four(id1, p, id1, pp1), p),
                whisker_right(twocell_tensor(identity_twocell(self.id1_comp), self.alpha), p),
                whisker_right(invert_twocell(middle_four(id1, p, id1, one_pp)), p),
            ]
        )
        return lhs, rhs

    def left_unit(self) -> Tuple[SpanTwoCell, SpanTwoCell]:
        p, id1, j, j1 = self.p, self.id1, self.j, self.j1
        j11 = span_tensor(j1, id1)
        unit_p = span_tensor(word_identity(()), p)
        lhs = paste(
            [
                whisker_left(j11, self.alpha),
                whisker_right(interchange(j, p), p),
                whisker_left(unit_p, self.lambda_),
            ]
        )
        rhs = paste(
            [
                whisker_right(middle_four(p, id1, j1, id1), p),
                whisker_right(twocell_tensor(self.lambda_, identity_twocell(self.id1_comp)), p),
                whisker_right(twocell_tensor(identity_twocell(id1), comp_unit_left(id1)), p),
                comp_unit_right(p),
                invert_twocell(comp_unit_left(p)),
            ]
        )
        return lhs, rhs

    def right_unit(self) -> Tuple[SpanTwoCell, SpanTwoCell]:
        p, id1, j = self.p, self.id1, self.j
        one_j = self.one_j
        one_one_j = span_tensor(id1, one_j)
        lhs = paste(
            [
                whisker_left(p, self.rho),
                whisker_right(interchange(p, j), p),
                whisker_left(one_one_j, self.alpha),
            ]
        )
        rhs = paste(
            [
                comp_unit_left(p),
                invert_twocell(comp_unit_right(p)),
                whisker_right(twocell_tensor(invert_twocell(comp_unit_left(id1)), self.rho), p),
                whisker_right(invert_twocell(middle_four(id1, p, id1, one_j)), p),
            ]
        )
        return lhs, rhs

    def middle_unit(self) -> Tuple[SpanTwoCell, SpanTwoCell]:
        p, id1, j1, one_j = self.p, self.id1, self.j1, self.one_j
        lhs = paste(
            [
                whisker_right(twocell_tensor(self.rho, invert_twocell(comp_unit_left(id1))), p),
                whisker_right(invert_twocell(middle_four(p, id1, one_j, id1)), p),
                whisker_left(span_tensor(one_j, id1), self.alpha),
                whisker_right(middle_four(id1, p, id1, j1), p),
                whisker_right(twocell_tensor(comp_unit_left(id1), self.lambda_), p),
            ]
        )
        rhs = identity_twocell(span_compose(p, self.id_cc))
        return lhs, rhs

    def unit_unit(self) -> Tuple[SpanTwoCell, SpanTwoCell]:
        p, id1, j = self.p, self.id1, self.j
        unit_j = span_tensor(word_identity(()), j)
        lhs = paste(
            [
                whisker_left(j, self.rho),
                whisker_right(interchange(j, j), p),
                whisker_left(unit_j, self.lambda_),
            ]
        )
        rhs = identity_twocell(span_compose(id1, j))
        return lhs, rhs


def twocell_tensor(a: SpanTwoCell, b: SpanTwoCell) -> SpanTwoCell:
    from .span import twocell_tensor

    return twocell_tensor(a, b)


def _pairs(c: FinSet) -> FinSet:
    return FinSet([pair(x, y) for x in c for y in c])


def axioms_bicategorical(m: SkewMonoidaleData) -> AxiomReport:
    """Build both pasted sides of each axiom and compare them pointwise.

    The sides are assembled from span composition, tensoring,
    whiskering, the constraint cells, and explicit structural cells
    (interchange, middle-four, composition units); comparison happens
    after transporting both pastings onto flattened endpoints.
    """
    report = wellformed(m)
    report.checker = "bicategorical"
    if not report.wellformed_ok:
        raise NotWellFormed(repr(report.wellformed))
    ctx = _Pasting(m)
    builders = {
        "pentagon": ctx.pentagon,
        "left": ctx.left_unit,
        "right": ctx.right_unit,
        "middle": ctx.middle_unit,
        "unit_unit": ctx.unit_unit,
    }
    for key, build in builders.items():
        lhs, rhs = build()
        equal, witness = compare_parallel_cells(lhs, rhs)
        report.axioms[key] = CheckResult(
            key, equal, None if witness is None else show(witness)
        )
    return report


def verify(m: SkewMonoidaleData) -> VerifyReport:
    """Run both checkers and cross-validate their verdicts."""
    wf = wellformed(m)
    if not wf.wellformed_ok:
        pw = AxiomReport(checker="pointwise", wellformed=wf.wellformed)
        bc = AxiomReport(checker="bicategorical", wellformed=wf.wellformed)
        return VerifyReport(pw, bc, agree=True)
    pw = axioms_pointwise(m)
    bc = axioms_bicategorical(m)
    agree = pw.verdict_map() == bc.verdict_map()
    return VerifyReport(pw, bc, agree)


def is_restricted_unit(m: SkewMonoidaleData) -> bool:
    """Unit of the restricted form: U = C and j the identity."""
    return m.U == m.C and m.j.is_identity()


def j_surjective(m: SkewMonoidaleData) -> bool:
    return m.j.is_surjective()


def r_equals_t(m: SkewMonoidaleData) -> bool:
    return all(m.r(f) == m.t(f) for f in m.E)


MUTABLE_FIELDS = ("s", "r", "t", "j", "phi", "psi", "tau", "delta")


def mutate(m: SkewMonoidaleData, rng: random.Random) -> Tuple[SkewMonoidaleData, str]:
    """Perturb one function value; returns the variant and a description.

    Components with empty domains or singleton codomains are skipped.
    """
    candidates = []
    for name in MUTABLE_FIELDS:
        fn: FinFn = getattr(m, name)
        if len(fn.domain) > 0 and len(fn.codomain) > 1:
            candidates.append(name)
    if not candidates:
        raise ValueError("instance has no mutable component")
    name = rng.choice(candidates)
    fn = getattr(m, name)
    x = rng.choice(fn.domain.elements)
    old = fn(x)
    new = rng.choice([v for v in fn.codomain if v != old])
    table = dict(fn.mapping)
    table[x] = new
    mutated = FinFn(fn.domain, fn.codomain, table)
    return (
        replace(m, **{name: mutated}),
        "%s(%s): %s -> %s" % (name, show(x), show(old), show(new)),
    )


def mutate_preserving(
    m: SkewMonoidaleData, rng: random.Random, attempts: int = 200
) -> Optional[Tuple[SkewMonoidaleData, str]]:
    """A single-value mutation that keeps the instance well-formed.

    Legs pin most components, so candidates are found by rejection;
    None when no well-formed variant shows up within the attempt
    budget.
    """
    for _ in range(attempts):
        variant, desc = mutate(m, rng)
        if wellformed(variant).wellformed_ok:
            return variant, desc
    return None
