"""Truncated simplicial sets, nerves, and the decalage construction.

Simplicial sets are stored to a finite depth with explicit face and
degeneracy tables; identities are checked pointwise within the
truncation.  Level-k nerve elements are diagram-ordered tuples of
arrows (left-nested pairs, bare at width one).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .category import (
    CheckResult,
    FinCat,
    Functor,
    ValidationReport,
    cat_coproduct,
    coslice,
    relabel_cat,
)
from .errors import DepthTooSmall
from .finset import Element, FinFn, FinSet, pair


def tuple_of(values: List[Element]) -> Element:
    """Left-nested tuple of the given width-1 values."""
    acc = values[0]
    for v in values[1:]:
        acc = pair(acc, v)
    return acc


def untuple(v: Element, width: int) -> List[Element]:
    parts: List[Element] = []
    for _ in range(width - 1):
        parts.append(v[1])
        v = v[0]
    parts.append(v)
    parts.reverse()
    return parts


@dataclass
class TruncSimplicialSet:
    """Levels S_0 .. S_depth with faces d_i and degeneracies s_i."""

    depth: int
    levels: List[FinSet]
    faces: Dict[Tuple[int, int], FinFn]  # (level k, index i): S_k -> S_{k-1}
    degeneracies: Dict[Tuple[int, int], FinFn]  # (level k, index i): S_k -> S_{k+1}

    def face(self, k: int, i: int) -> FinFn:
        return self.faces[(k, i)]

    def degeneracy(self, k: int, i: int) -> FinFn:
        return self.degeneracies[(k, i)]


def simp_validate(s: TruncSimplicialSet) -> ValidationReport:
    """Check the simplicial identities stored within the truncation."""
    report = ValidationReport()
    for k in range(1, s.depth + 1):
        for i in range(k + 1):
            if (k, i) not in s.faces:
                report.add("missing-face", "d_%d at level %d" % (i, k))
    for k in range(s.depth):
        for i in range(k + 1):
            if (k, i) not in s.degeneracies:
                report.add("missing-degeneracy", "s_%d at level %d" % (i, k))
    if not report.ok:
        return report

    def check(name, k, lhs, rhs):
        for x in s.levels[k]:
            if lhs(x) != rhs(x):
                report.add(name, "level %d, element %d" % (k, s.levels[k].index(x)))
                return

    # d_i d_j = d_{j-1} d_i for i < j
    for k in range(2, s.depth + 1):
        for j in range(k + 1):
            for i in range(j):
                check(
                    "face-face d_%d d_%d" % (i, j),
                    k,
                    lambda x, i=i, j=j, k=k: s.face(k - 1, i)(s.face(k, j)(x)),
                    lambda x, i=i, j=j, k=k: s.face(k - 1, j - 1)(s.face(k, i)(x)),
                )
    # s_i s_j = s_{j+1} s_i for i <= j
    for k in range(s.depth - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                check(
                    "degen-degen s_%d s_%d" % (i, j),
                    k,
                    lambda x, i=i, j=j, k=k: s.degeneracy(k + 1, i)(s.degeneracy(k, j)(x)),
                    lambda x, i=i, j=j, k=k: s.degeneracy(k + 1, j + 1)(s.degeneracy(k, i)(x)),
                )
    # mixed identities
    for k in range(s.depth):
        for j in range(k + 1):
            for i in range(k + 2):
                if i < j:
                    check(
                        "mixed d_%d s_%d" % (i, j),
                        k,
                        lambda x, i=i, j=j, k=k: s.face(k + 1, i)(s.degeneracy(k, j)(x)),
                        lambda x, i=i, j=j, k=k: s.degeneracy(k - 1, j - 1)(s.face(k, i)(x)),
                    )
                elif i in (j, j + 1):
                    check(
                        "mixed d_%d s_%d" % (i, j),
                        k,
                        lambda x, i=i, j=j, k=k: s.face(k + 1, i)(s.degeneracy(k, j)(x)),
                        lambda x: x,
                    )
                else:
                    check(
                        "mixed d_%d s_%d" % (i, j),
                        k,
                        lambda x, i=i, j=j, k=k: s.face(k + 1, i)(s.degeneracy(k, j)(x)),
                        lambda x, i=i, j=j, k=k: s.degeneracy(k - 1, j)(s.face(k, i - 1)(x)),
                    )
    return report


def _composable_tuples(c: FinCat, k: int) -> List[List[Element]]:
    if k == 0:
        return [[x] for x in c.objects]  # placeholder, objects handled separately
    chains = [[f] for f in c.arrows]
    for _ in range(k - 1):
        chains = [
            ch + [g] for ch in chains for g in c.arrows if c.cod(ch[-1]) == c.dom(g)
        ]
    return chains


def nerve(c: FinCat, depth: int) -> TruncSimplicialSet:
    """The nerve: level k is the set of composable k-tuples of arrows."""
    if depth < 0:
        raise DepthTooSmall("depth must be nonnegative")
    levels: List[FinSet] = [FinSet(list(c.objects))]
    chains_by_level: List[List[List[Element]]] = [[]]
    for k in range(1, depth + 1):
        chains = _composable_tuples(c, k)
        chains_by_level.append(chains)
        levels.append(FinSet([tuple_of(ch) for ch in chains]))
    faces: Dict[Tuple[int, int], FinFn] = {}
    degeneracies: Dict[Tuple[int, int], FinFn] = {}
    if depth >= 1:
        faces[(1, 0)] = FinFn(levels[1], levels[0], {f: c.cod(f) for f in levels[1]})
        faces[(1, 1)] = FinFn(levels[1], levels[0], {f: c.dom(f) for f in levels[1]})
    for k in range(2, depth + 1):
        for i in range(k + 1):
            table = {}
            for ch in chains_by_level[k]:
                if i == 0:
                    img = ch[1:]
                elif i == k:
                    img = ch[:-1]
                else:
                    img = ch[: i - 1] + [c.comp[(ch[i], ch[i - 1])]] + ch[i + 1 :]
                table[tuple_of(ch)] = tuple_of(img)
            faces[(k, i)] = FinFn(levels[k], levels[k - 1], table)
    if depth >= 1:
        degeneracies[(0, 0)] = FinFn(levels[0], levels[1], {x: c.ident(x) for x in levels[0]})
    for k in range(1, depth):
        for i in range(k + 1):
            table = {}
            for ch in chains_by_level[k]:
                if i == 0:
                    img = [c.ident(c.dom(ch[0]))] + ch
                else:
                    img = ch[:i] + [c.ident(c.cod(ch[i - 1]))] + ch[i:]
                table[tuple_of(ch)] = tuple_of(img)
            degeneracies[(k, i)] = FinFn(levels[k], levels[k + 1], table)
    return TruncSimplicialSet(depth, levels, faces, degeneracies)


@dataclass
class SimplicialMap:
    """A level-wise map of truncated simplicial sets."""

    source: TruncSimplicialSet
    target: TruncSimplicialSet
    components: List[FinFn]

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        s, t = self.source, self.target
        depth = min(s.depth, t.depth)
        for k in range(1, depth + 1):
            for i in range(k + 1):
                for x in s.levels[k]:
                    if t.face(k, i)(self.components[k](x)) != self.components[k - 1](s.face(k, i)(x)):
                        report.add("map-face", "d_%d level %d" % (i, k))
                        break
        for k in range(depth):
            for i in range(k + 1):
                for x in s.levels[k]:
                    if t.degeneracy(k, i)(self.components[k](x)) != self.components[k + 1](
                        s.degeneracy(k, i)(x)
                    ):
                        report.add("map-degeneracy", "s_%d level %d" % (i, k))
                        break
        return report


def dec_simplicial(s: TruncSimplicialSet) -> Tuple[TruncSimplicialSet, SimplicialMap]:
    """Shift away level zero; return the shift and the dropped face map d_0.

    The result has depth one less; retained faces and degeneracies have
    their indices lowered by one.  The level-wise d_0 is returned as a
    simplicial map and validated.
    """
    if s.depth < 1:
        raise DepthTooSmall("decalage needs depth at least 1")
    depth = s.depth - 1
    levels = [s.levels[k + 1] for k in range(depth + 1)]
    faces = {}
    for k in range(1, depth + 1):
        for i in range(k + 1):
            faces[(k, i)] = s.face(k + 1, i + 1)
    degeneracies = {}
    for k in range(depth):
        for i in range(k + 1):
            degeneracies[(k, i)] = s.degeneracy(k + 1, i + 1)
    dec = TruncSimplicialSet(depth, levels, faces, degeneracies)
    d0 = SimplicialMap(dec, s, [s.face(k + 1, 0) for k in range(depth + 1)])
    report = d0.validate()
    if not report.ok:
        raise ValueError("d_0 failed to be simplicial: %r" % report)
    return dec, d0


def dec_cat(c: FinCat) -> Tuple[FinCat, Functor]:
    """The category shift: objects are arrows, arrows are composable pairs.

    Built as the coproduct of all coslices, then relabelled so that the
    object set is literally the arrow set of c.  Also returns the
    codomain functor to c.
    """
    vertices = list(c.objects)
    coslices = [coslice(c, x) for x in vertices]
    total, _ = cat_coproduct([cs.cat for cs in coslices])
    obj_map = {x: x[1] for x in total.objects}  # strip index tag
    arr_map = {f: f[1] for f in total.arrows}
    dec = relabel_cat(total, obj_map, arr_map)
    on_objects = FinFn(dec.objects, c.objects, {f: c.cod(f) for f in dec.objects})
    on_arrows = FinFn(dec.arrows, c.arrows, {a: a[1] for a in dec.arrows})
    cod = Functor(dec, c, on_objects, on_arrows)
    return dec, cod


def dec_functor(F: Functor) -> Functor:
    """The shift of a functor: f |-> F(f) on objects, pairs componentwise."""
    dec_src, _ = dec_cat(F.source)
    dec_tgt, _ = dec_cat(F.target)
    on_objects = FinFn(dec_src.objects, dec_tgt.objects, {f: F.arr(f) for f in dec_src.objects})
    on_arrows = FinFn(
        dec_src.arrows,
        dec_tgt.arrows,
        {a: pair(F.arr(a[0]), F.arr(a[1])) for a in dec_src.arrows},
    )
    return Functor(dec_src, dec_tgt, on_objects, on_arrows)


def nerve_dec_compat(c: FinCat, depth: int) -> ValidationReport:
    """Check that the nerve of the shifted category is the shifted nerve.

    Levels of N(Dec c) are tuples of composable pairs; the canonical
    relabelling sends such a tuple to its underlying arrow chain.
    Asserts level bijections and commutation with all faces and
    degeneracies, within the requested depth.
    """
    if depth < 1:
        raise DepthTooSmall("comparison needs depth at least 1")
    report = ValidationReport()
    dec, _ = dec_cat(c)
    n_dec = nerve(dec, depth)
    dec_n, _ = dec_simplicial(nerve(c, depth + 1))

    relabel: List[FinFn] = []
    for k in range(depth + 1):
        table = {}
        for x in n_dec.levels[k]:
            if k == 0:
                table[x] = x  # objects of Dec c are arrows of c
            else:
                chain = untuple(x, k)
                arrows = [chain[0][0]] + [a[1] for a in chain]
                table[x] = tuple_of(arrows)
        if set(table.values()) != set(dec_n.levels[k].elements) or len(
            set(table.values())
        ) != len(table):
            report.add("level-mismatch", "level %d" % k)
            return report
        relabel.append(FinFn(n_dec.levels[k], dec_n.levels[k], table))
    for k in range(1, depth + 1):
        for i in range(k + 1):
            for x in n_dec.levels[k]:
                if dec_n.face(k, i)(relabel[k](x)) != relabel[k - 1](n_dec.face(k, i)(x)):
                    report.add("face-mismatch", "d_%d level %d" % (i, k))
                    break
    for k in range(depth):
        for i in range(k + 1):
            for x in n_dec.levels[k]:
                if dec_n.degeneracy(k, i)(relabel[k](x)) != relabel[k + 1](
                    n_dec.degeneracy(k, i)(x)
                ):
                    report.add("degeneracy-mismatch", "s_%d level %d" % (i, k))
                    break
    return report
