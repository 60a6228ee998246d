"""Spans of finite sets: 1-cells, 2-cells, composition, tensor, whiskering.

Composition is by the canonical pair pullback, so the apex of any
composite or tensor is a nested pair tree.  Every span carries a shape
descriptor mirroring that tree; ``flatten`` rebuilds the apex as flat
tuples of the atomic generator values, which makes equality of pasted
2-cells decidable by pointwise comparison.

Boundary objects are "words": tuples of column sets whose flat product
is the actual boundary set.  Tensoring concatenates words, so the
tensor is strictly associative and strictly unital on boundaries (the
empty word is the unit object).  Flat products nest to the left and a
one-column word is its column; this is the concrete form of working in
a strictified monoidal bicategory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import BoundaryMismatch, InvalidTwoCell, NotStructurallyIsomorphic
from .finset import UNIT, Element, FinFn, FinSet, pair, show, terminal_set

Word = Tuple[FinSet, ...]

# shape descriptors: ("leaf", droppable) | ("compose", s1, s2) | ("tensor", s1, s2)
Shape = tuple


def flat_product(word: Word) -> FinSet:
    """Left-nested flat product of the columns of a word.

    The empty word gives the terminal set {*}; a single column is the
    column itself; longer words nest pairs to the left.
    """
    if len(word) == 0:
        return terminal_set()
    acc = word[0]
    for col in word[1:]:
        acc = FinSet([pair(x, y) for x in acc for y in col])
    return acc


def concat_flat(x: Element, wx: int, y: Element, wy: int) -> Element:
    """Concatenate two left-nested flat tuples of known widths."""
    if wx == 0:
        return y
    if wy == 0:
        return x
    if wy == 1:
        return pair(x, y)
    # y = (y_init, y_last) with y_init of width wy - 1
    return pair(concat_flat(x, wx, y[0], wy - 1), y[1])


def split_flat(v: Element, wx: int, wy: int) -> Tuple[Element, Element]:
    """Inverse of concat_flat."""
    if wx == 0:
        return UNIT, v
    if wy == 0:
        return v, UNIT
    parts: List[Element] = []
    cur = v
    for _ in range(wx + wy - 1):
        parts.append(cur[1])
        cur = cur[0]
    parts.append(cur)
    parts.reverse()
    x = parts[0]
    for p in parts[1:wx]:
        x = pair(x, p)
    y = parts[wx]
    for p in parts[wx + 1 :]:
        y = pair(y, p)
    return x, y


class Span:
    """A 1-cell src -/-> tgt: two legs out of a common apex."""

    __slots__ = ("src", "tgt", "apex", "left", "right", "shape", "src_word", "tgt_word")

    def __init__(
        self,
        src: FinSet,
        tgt: FinSet,
        apex: FinSet,
        left: FinFn,
        right: FinFn,
        shape: Optional[Shape] = None,
        src_word: Optional[Word] = None,
        tgt_word: Optional[Word] = None,
    ):
        if left.domain != apex or right.domain != apex:
            raise BoundaryMismatch("legs must be total on the apex")
        if left.codomain != src or right.codomain != tgt:
            raise BoundaryMismatch("legs must land in the span boundaries")
        self.src = src
        self.tgt = tgt
        self.apex = apex
        self.left = left
        self.right = right
        if shape is None:
            shape = ("leaf", _is_unit_identity(src, tgt, apex, left, right))
        self.shape = shape
        self.src_word = src_word if src_word is not None else (src,)
        self.tgt_word = tgt_word if tgt_word is not None else (tgt,)
        _check_shape(self.shape, self.apex)

    def __repr__(self) -> str:
        return "Span(|src|=%d, |apex|=%d, |tgt|=%d)" % (len(self.src), len(self.apex), len(self.tgt))

    def same_boundaries(self, other: "Span") -> bool:
        return self.src == other.src and self.tgt == other.tgt


def _is_unit_identity(src, tgt, apex, left, right) -> bool:
    one = terminal_set()
    return src == one and tgt == one and apex == one and left.is_identity() and right.is_identity()


def _check_shape(shape: Shape, apex: FinSet) -> None:
    for x in apex:
        _check_shape_elem(shape, x)


def _check_shape_elem(shape: Shape, x: Element) -> None:
    tag = shape[0]
    if tag == "leaf":
        return
    if not isinstance(x, tuple):
        raise ValueError("apex element %s does not match shape" % show(x))
    _check_shape_elem(shape[1], x[0])
    _check_shape_elem(shape[2], x[1])


class SpanTwoCell:
    """A 2-cell: an apex map commuting with both legs."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source: Span, target: Span, mapping: FinFn):
        if not source.same_boundaries(target):
            raise BoundaryMismatch("2-cell endpoints must share boundaries")
        if mapping.domain != source.apex or mapping.codomain != target.apex:
            raise BoundaryMismatch("2-cell map must go from source apex to target apex")
        for x in source.apex:
            y = mapping(x)
            if target.left(y) != source.left(x) or target.right(y) != source.right(x):
                raise InvalidTwoCell(
                    "legs do not commute at %s |-> %s" % (show(x), show(y))
                )
        self.source = source
        self.target = target
        self.mapping = mapping

    def __call__(self, x: Element) -> Element:
        return self.mapping(x)

    def __repr__(self) -> str:
        return "SpanTwoCell(%r => %r)" % (self.source, self.target)

    def is_invertible(self) -> bool:
        return self.mapping.is_bijective()


def identity_twocell(s: Span) -> SpanTwoCell:
    return SpanTwoCell(s, s, FinFn.identity(s.apex))


def invert_twocell(cell: SpanTwoCell) -> SpanTwoCell:
    if not cell.is_invertible():
        raise InvalidTwoCell("2-cell is not invertible")
    inv = {cell.mapping(x): x for x in cell.source.apex}
    return SpanTwoCell(cell.target, cell.source, FinFn(cell.target.apex, cell.source.apex, inv))


def span_identity(c: FinSet) -> Span:
    """The identity span on a one-column word."""
    i = FinFn.identity(c)
    return Span(c, c, c, i, i, src_word=(c,), tgt_word=(c,))


def unit_identity_span() -> Span:
    """Identity span on the empty word (the unit object)."""
    one = terminal_set()
    i = FinFn.identity(one)
    return Span(one, one, one, i, i, src_word=(), tgt_word=())


def word_identity(word: Word) -> Span:
    """Identity span on a word, built as a tensor chain of column identities."""
    if len(word) == 0:
        return unit_identity_span()
    acc = span_identity(word[0])
    for col in word[1:]:
        acc = span_tensor(acc, span_identity(col))
    return acc


def span_from_legs(left: FinFn, right: FinFn) -> Span:
    """Atomic span from two legs out of a shared apex."""
    if left.domain != right.domain:
        raise BoundaryMismatch("legs must share an apex")
    return Span(left.codomain, right.codomain, left.domain, left, right)


def span_compose(g: Span, f: Span) -> Span:
    """The composite "g after f", by pullback of right(f) against left(g)."""
    if f.tgt != g.src:
        raise BoundaryMismatch("target of f must equal source of g")
    pairs = []
    for x in f.apex:
        v = f.right(x)
        for y in g.apex:
            if g.left(y) == v:
                pairs.append(pair(x, y))
    apex = FinSet(pairs)
    left = FinFn(apex, f.src, {p: f.left(p[0]) for p in pairs})
    right = FinFn(apex, g.tgt, {p: g.right(p[1]) for p in pairs})
    return Span(
        f.src,
        g.tgt,
        apex,
        left,
        right,
        shape=("compose", f.shape, g.shape),
        src_word=f.src_word,
        tgt_word=g.tgt_word,
    )


def span_tensor(f: Span, g: Span) -> Span:
    """Tensor of spans: apexes multiply, boundary words concatenate."""
    src_word = f.src_word + g.src_word
    tgt_word = f.tgt_word + g.tgt_word
    src = flat_product(src_word)
    tgt = flat_product(tgt_word)
    wfs, wgs = len(f.src_word), len(g.src_word)
    wft, wgt = len(f.tgt_word), len(g.tgt_word)
    pairs = [pair(x, y) for x in f.apex for y in g.apex]
    apex = FinSet(pairs)
    left = FinFn(apex, src, {p: concat_flat(f.left(p[0]), wfs, g.left(p[1]), wgs) for p in pairs})
    right = FinFn(apex, tgt, {p: concat_flat(f.right(p[0]), wft, g.right(p[1]), wgt) for p in pairs})
    return Span(
        src,
        tgt,
        apex,
        left,
        right,
        shape=("tensor", f.shape, g.shape),
        src_word=src_word,
        tgt_word=tgt_word,
    )


def twocell_vcompose(beta: SpanTwoCell, alpha: SpanTwoCell) -> SpanTwoCell:
    """Vertical composite "beta after alpha" (composition of apex maps)."""
    if alpha.target.apex != beta.source.apex or alpha.target is not beta.source:
        # same constructed span is the normal case; accept equal-valued spans
        if not _span_equal(alpha.target, beta.source):
            raise BoundaryMismatch("2-cells are not vertically composable")
    mapping = FinFn(
        alpha.source.apex,
        beta.target.apex,
        {x: beta.mapping(alpha.mapping(x)) for x in alpha.source.apex},
    )
    return SpanTwoCell(alpha.source, beta.target, mapping)


def _span_equal(a: Span, b: Span) -> bool:
    return (
        a.src == b.src
        and a.tgt == b.tgt
        and a.apex == b.apex
        and a.left == b.left
        and a.right == b.right
    )


def twocell_tensor(a: SpanTwoCell, b: SpanTwoCell) -> SpanTwoCell:
    """Tensor of 2-cells, (x, y) |-> (a(x), b(y))."""
    source = span_tensor(a.source, b.source)
    target = span_tensor(a.target, b.target)
    mapping = FinFn(
        source.apex, target.apex, {p: pair(a(p[0]), b(p[1])) for p in source.apex}
    )
    return SpanTwoCell(source, target, mapping)


def whisker_left(e: Span, tau: SpanTwoCell) -> SpanTwoCell:
    """Precompose both sides of tau with e: (x, r) |-> (x, tau(r))."""
    if e.tgt != tau.source.src:
        raise BoundaryMismatch("whiskering span does not reach the 2-cell source")
    source = span_compose(tau.source, e)
    target = span_compose(tau.target, e)
    mapping = FinFn(source.apex, target.apex, {p: pair(p[0], tau(p[1])) for p in source.apex})
    return SpanTwoCell(source, target, mapping)


def whisker_right(tau: SpanTwoCell, e: Span) -> SpanTwoCell:
    """Postcompose both sides of tau with e: (r, x) |-> (tau(r), x)."""
    if tau.source.tgt != e.src:
        raise BoundaryMismatch("whiskering span does not start at the 2-cell target")
    source = span_compose(e, tau.source)
    target = span_compose(e, tau.target)
    mapping = FinFn(source.apex, target.apex, {p: pair(tau(p[0]), p[1]) for p in source.apex})
    return SpanTwoCell(source, target, mapping)


# ---------------------------------------------------------------------------
# flattening and structural cells


def _leaves(shape: Shape, x: Element, out: List[Element], keep: List[bool]) -> None:
    if shape[0] == "leaf":
        out.append(x)
        keep.append(not shape[1])
        return
    _leaves(shape[1], x[0], out, keep)
    _leaves(shape[2], x[1], out, keep)


def _flat_tuple(values: List[Element]) -> Element:
    if not values:
        return UNIT
    acc = values[0]
    for v in values[1:]:
        acc = pair(acc, v)
    return acc


def flatten(s: Span) -> Tuple[Span, SpanTwoCell]:
    """Canonical flat form of a span plus the invertible 2-cell onto it.

    Apex elements become left-nested tuples of the atomic generator
    values in shape order; generators of unit identity spans are
    dropped (they are constant).  Idempotent: a flat span is atomic, so
    flattening it again is the identity.
    """
    table: Dict[Element, Element] = {}
    flat_elems: List[Element] = []
    for x in s.apex:
        vals: List[Element] = []
        keep: List[bool] = []
        _leaves(s.shape, x, vals, keep)
        flat = _flat_tuple([v for v, k in zip(vals, keep) if k])
        table[x] = flat
        flat_elems.append(flat)
    if len(set(flat_elems)) != len(flat_elems):
        raise NotStructurallyIsomorphic("flattening collapsed distinct apex elements")
    apex = FinSet(flat_elems)
    left = FinFn(apex, s.src, {table[x]: s.left(x) for x in s.apex})
    right = FinFn(apex, s.tgt, {table[x]: s.right(x) for x in s.apex})
    flat_span = Span(s.src, s.tgt, apex, left, right, src_word=s.src_word, tgt_word=s.tgt_word)
    iso = SpanTwoCell(s, flat_span, FinFn(s.apex, apex, table))
    return flat_span, iso


def structural_iso(a: Span, b: Span) -> SpanTwoCell:
    """The canonical invertible 2-cell between structurally equal spans.

    Both spans are flattened; if the flat apexes agree element-for-
    element the cell is flatten-then-unflatten.  Otherwise a matching
    is accepted only when the legs force it uniquely; anything else is
    an error, never a guess.
    """
    if not a.same_boundaries(b):
        raise BoundaryMismatch("spans do not share boundaries")
    fa, ia = flatten(a)
    fb, ib = flatten(b)
    if set(fa.apex.elements) == set(fb.apex.elements):
        mid = SpanTwoCell(fa, fb, FinFn(fa.apex, fb.apex, {x: x for x in fa.apex}))
        return twocell_vcompose(invert_twocell(ib), twocell_vcompose(mid, ia))
    # fall back to the unique leg-forced matching, if there is one
    table: Dict[Element, Element] = {}
    used: Dict[Element, Element] = {}
    for x in a.apex:
        candidates = [
            y for y in b.apex if b.left(y) == a.left(x) and b.right(y) == a.right(x)
        ]
        if len(candidates) != 1:
            raise NotStructurallyIsomorphic(
                "legs do not force a unique match at %s" % show(x)
            )
        y = candidates[0]
        if y in used:
            raise NotStructurallyIsomorphic("matching is not injective")
        used[y] = x
        table[x] = y
    if len(used) != len(b.apex):
        raise NotStructurallyIsomorphic("matching is not surjective")
    return SpanTwoCell(a, b, FinFn(a.apex, b.apex, table))


def span_iso_check(a: Span, b: Span) -> Optional[SpanTwoCell]:
    """Some leg-commuting bijection between the apexes, or None.

    A bijection exists iff the fibres over each (left, right) leg pair
    have equal sizes; the returned one matches fibres in order.
    """
    if not a.same_boundaries(b):
        raise BoundaryMismatch("spans do not share boundaries")
    fibres_a: Dict[Tuple[Element, Element], List[Element]] = {}
    for x in a.apex:
        fibres_a.setdefault((a.left(x), a.right(x)), []).append(x)
    fibres_b: Dict[Tuple[Element, Element], List[Element]] = {}
    for y in b.apex:
        fibres_b.setdefault((b.left(y), b.right(y)), []).append(y)
    if set(fibres_a) != set(fibres_b):
        return None
    table: Dict[Element, Element] = {}
    for key, xs in fibres_a.items():
        ys = fibres_b[key]
        if len(xs) != len(ys):
            return None
        table.update(zip(xs, ys))
    return SpanTwoCell(a, b, FinFn(a.apex, b.apex, table))


def interchange(f: Span, g: Span) -> SpanTwoCell:
    """The interchange cell: "f then g" to "g then f" on disjoint columns.

    Source is (1 (x) g) . (f (x) 1), target (f (x) 1) . (1 (x) g), with
    identity spans on the appropriate boundary words.
    """
    src_cell_src = span_compose(
        span_tensor(word_identity(f.tgt_word), g), span_tensor(f, word_identity(g.src_word))
    )
    src_cell_tgt = span_compose(
        span_tensor(f, word_identity(g.tgt_word)), span_tensor(word_identity(f.src_word), g)
    )
    table = {}
    for p in src_cell_src.apex:
        (x, b), (a, y) = p[0], p[1]
        table[p] = pair(pair(f.left(x), y), pair(x, g.right(y)))
    mapping = FinFn(src_cell_src.apex, src_cell_tgt.apex, table)
    return SpanTwoCell(src_cell_src, src_cell_tgt, mapping)


def middle_four(f: Span, g: Span, h: Span, k: Span) -> SpanTwoCell:
    """(f (x) g) . (h (x) k)  =>  (f . h) (x) (g . k), by pair reshuffling."""
    if h.tgt != f.src or k.tgt != g.src:
        raise BoundaryMismatch("middle-four factors are not composable")
    source = span_compose(span_tensor(f, g), span_tensor(h, k))
    target = span_tensor(span_compose(f, h), span_compose(g, k))
    table = {}
    for p in source.apex:
        (xh, xk), (xf, xg) = p[0], p[1]
        table[p] = pair(pair(xh, xf), pair(xk, xg))
    mapping = FinFn(source.apex, target.apex, table)
    return SpanTwoCell(source, target, mapping)


def comp_unit_left(s: Span) -> SpanTwoCell:
    """(identity on tgt) . s  =>  s."""
    source = span_compose(word_identity(s.tgt_word), s)
    mapping = FinFn(source.apex, s.apex, {p: p[0] for p in source.apex})
    return SpanTwoCell(source, s, mapping)


def comp_unit_right(s: Span) -> SpanTwoCell:
    """s . (identity on src)  =>  s."""
    source = span_compose(s, word_identity(s.src_word))
    mapping = FinFn(source.apex, s.apex, {p: p[1] for p in source.apex})
    return SpanTwoCell(source, s, mapping)


def paste(cells: List[SpanTwoCell]) -> SpanTwoCell:
    """Vertically compose cells, inserting structural transports as needed."""
    if not cells:
        raise ValueError("nothing to paste")
    acc = cells[0]
    for nxt in cells[1:]:
        if not _span_equal(acc.target, nxt.source):
            acc = twocell_vcompose(structural_iso(acc.target, nxt.source), acc)
        acc = twocell_vcompose(nxt, acc)
    return acc


def compare_parallel_cells(a: SpanTwoCell, b: SpanTwoCell) -> Tuple[bool, Optional[Element]]:
    """Compare two pastings after transporting both to flat endpoints.

    Returns (equal, witness); the witness is a flat source element on
    which the transported maps differ.
    """
    fsa, isa = flatten(a.source)
    fta, ita = flatten(a.target)
    fsb, isb = flatten(b.source)
    ftb, itb = flatten(b.target)
    if set(fsa.apex.elements) != set(fsb.apex.elements) or set(fta.apex.elements) != set(
        ftb.apex.elements
    ):
        raise NotStructurallyIsomorphic("pastings do not share flat endpoints")
    inv_isa = invert_twocell(isa)
    inv_isb = invert_twocell(isb)
    for x in fsa.apex:
        va = ita(a(inv_isa(x)))
        vb = itb(b(inv_isb(x)))
        if va != vb:
            return False, x
    return True, None
