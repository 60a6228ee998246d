"""Finite sets, total functions, and canonical pullbacks.

Elements are plain Python values: an atom is a string, a pair is a
2-tuple of elements (nesting allowed).  Equality is structural.  Every
construction fixes a deterministic element order (insertion order for
sets, lexicographic pair order for pullbacks and products) so that
repeated runs produce identical apexes and reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, Optional, Tuple, Union

from .errors import CapExceeded, DomainMismatch

Element = Union[str, Tuple["Element", "Element"]]

#: element of the canonical terminal set, also the empty flat tuple
UNIT: Element = "*"


def is_pair(x: Element) -> bool:
    return isinstance(x, tuple)


def pair(a: Element, b: Element) -> Element:
    return (a, b)


def show(x: Element) -> str:
    """Render an element the way the instance files spell it."""
    if is_pair(x):
        return "(%s, %s)" % (show(x[0]), show(x[1]))
    return str(x)


class FinSet:
    """A finite, duplicate-free, insertion-ordered set of elements."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[Element] = ()):
        elems = tuple(elements)
        index = {}
        for e in elems:
            if e in index:
                raise ValueError("duplicate element %s" % show(e))
            index[e] = len(index)
        self.elements: Tuple[Element, ...] = elems
        self._index: Dict[Element, int] = index

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinSet):
            return NotImplemented
        return frozenset(self._index) == frozenset(other._index)

    def __hash__(self) -> int:
        return hash(frozenset(self._index))

    def __repr__(self) -> str:
        return "FinSet([%s])" % ", ".join(show(e) for e in self.elements)

    def index(self, x: Element) -> int:
        return self._index[x]


def terminal_set() -> FinSet:
    """The chosen terminal set 1 = {*}."""
    return FinSet([UNIT])


class FinFn:
    """A total function between finite sets, stored as an explicit table."""

    __slots__ = ("domain", "codomain", "mapping")

    def __init__(self, domain: FinSet, codomain: FinSet, mapping: Dict[Element, Element]):
        if set(mapping) != set(domain.elements):
            missing = [e for e in domain if e not in mapping]
            extra = [e for e in mapping if e not in domain]
            raise ValueError(
                "mapping not total on domain (missing %r, extra %r)" % (missing[:3], extra[:3])
            )
        for k, v in mapping.items():
            if v not in codomain:
                raise ValueError("value %s of %s not in codomain" % (show(v), show(k)))
        self.domain = domain
        self.codomain = codomain
        self.mapping = dict(mapping)

    @classmethod
    def from_callable(cls, domain: FinSet, codomain: FinSet, fn: Callable[[Element], Element]) -> "FinFn":
        return cls(domain, codomain, {x: fn(x) for x in domain})

    @classmethod
    def identity(cls, s: FinSet) -> "FinFn":
        return cls(s, s, {x: x for x in s})

    def __call__(self, x: Element) -> Element:
        return self.mapping[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinFn):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.mapping == other.mapping
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, frozenset(self.mapping.items())))

    def __repr__(self) -> str:
        return "FinFn(%d -> %d)" % (len(self.domain), len(self.codomain))

    def is_identity(self) -> bool:
        return self.domain == self.codomain and all(self(x) == x for x in self.domain)

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.domain)

    def is_surjective(self) -> bool:
        return set(self.mapping.values()) == set(self.codomain.elements)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def image(self) -> FinSet:
        seen = []
        for x in self.domain:
            v = self(x)
            if v not in seen:
                seen.append(v)
        return FinSet(seen)


@dataclass(frozen=True)
class PullbackResult:
    """Canonical pullback: apex of pairs with the two projections."""

    apex: FinSet
    proj1: FinFn
    proj2: FinFn


def fn_compose(g: FinFn, f: FinFn) -> FinFn:
    """g after f; domains must match up."""
    if f.codomain != g.domain:
        raise DomainMismatch("codomain of f differs from domain of g")
    return FinFn(f.domain, g.codomain, {x: g(f(x)) for x in f.domain})


def bang(a: FinSet) -> FinFn:
    """The unique map A -> 1."""
    one = terminal_set()
    return FinFn(a, one, {x: UNIT for x in a})


def pullback(f: FinFn, g: FinFn) -> PullbackResult:
    """Pullback of f: A -> C against g: B -> C.

    The apex is the pair set {(a, b) | f(a) = g(b)} enumerated
    lexicographically in (order of A, order of B).
    """
    if f.codomain != g.codomain:
        raise DomainMismatch("pullback legs must share a codomain")
    pairs = []
    for a in f.domain:
        fa = f(a)
        for b in g.domain:
            if fa == g(b):
                pairs.append((a, b))
    apex = FinSet(pairs)
    proj1 = FinFn(apex, f.domain, {p: p[0] for p in pairs})
    proj2 = FinFn(apex, g.domain, {p: p[1] for p in pairs})
    return PullbackResult(apex, proj1, proj2)


def product(a: FinSet, b: FinSet) -> PullbackResult:
    """Cartesian product as a pullback over the terminal set."""
    return pullback(bang(a), bang(b))


def fn_product(f: FinFn, g: FinFn) -> FinFn:
    """(a, b) |-> (f(a), g(b)) between the canonical products."""
    dom = product(f.domain, g.domain).apex
    cod = product(f.codomain, g.codomain).apex
    return FinFn(dom, cod, {(a, b): (f(a), g(b)) for (a, b) in dom})


def enumerate_functions(a: FinSet, b: FinSet, cap: int = 10**6) -> Iterator[FinFn]:
    """Yield all |B|^|A| total functions A -> B in a fixed order.

    Raises CapExceeded before yielding anything if the count is above
    the cap.
    """
    n, m = len(a), len(b)
    count = m**n if n > 0 else 1
    if count > cap:
        raise CapExceeded("%d^%d functions exceed cap %d" % (m, n, cap))
    if n == 0:
        yield FinFn(a, b, {})
        return
    if m == 0:
        return
    elems_a = a.elements
    elems_b = b.elements
    digits = [0] * n
    while True:
        yield FinFn(a, b, {elems_a[i]: elems_b[digits[i]] for i in range(n)})
        i = n - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < m:
                break
            digits[i] = 0
            i -= 1
        if i < 0:
            return


def mediating_maps(pb: PullbackResult, h: FinFn, k: FinFn, cap: int = 10**6) -> list:
    """All maps m with proj1.m = h and proj2.m = k, found by brute force.

    Brute enumeration on purpose: this is the oracle for the pullback
    universal property, independent of the pairing formula.
    """
    found = []
    for m in enumerate_functions(h.domain, pb.apex, cap=cap):
        if all(pb.proj1(m(t)) == h(t) and pb.proj2(m(t)) == k(t) for t in h.domain):
            found.append(m)
    return found
