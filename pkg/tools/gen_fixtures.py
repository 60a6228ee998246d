#!/usr/bin/env python3
"""Regenerate the bundled instance files in src/skewspan/fixtures/.

Run from the repository root:  python3 tools/gen_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from skewspan import io as sio
from skewspan.cats import (
    chain_with_parallel_category,
    interval_category,
    parallel_pair_category,
    terminal_category,
)
from skewspan.characterization import cod_rstructure, restricted_monoidale
from skewspan.constructions import (
    category_to_monoidale,
    delooping,
    left_absorbing_monoid,
    monoid_to_monoidale,
    trivial_monoid,
    zmod,
)
from skewspan.finset import FinFn, FinSet
from skewspan.monoidale import SkewMonoidaleData

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "skewspan" / "fixtures"


def empty_monoidale() -> SkewMonoidaleData:
    empty = FinSet([])
    ef = FinFn(empty, empty, {})
    return SkewMonoidaleData(empty, empty, ef, ef, ef, empty, ef, ef, ef, ef, ef)


def broken_pentagon_monoidale() -> SkewMonoidaleData:
    """Well-formed, but one composition value is redirected onto the
    spare parallel arrow, so only the pentagon fails."""
    m = restricted_monoidale(chain_with_parallel_category())
    table = dict(m.delta.mapping)
    assert table[("e", "gf")] == "gfe"
    table[("e", "gf")] = "alt"
    from dataclasses import replace

    return replace(m, delta=FinFn(m.delta.domain, m.delta.codomain, table))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    monoidales = {
        "zmod2.json": monoid_to_monoidale(zmod(2)),
        "zmod3.json": monoid_to_monoidale(zmod(3)),
        "noncomm3.json": monoid_to_monoidale(left_absorbing_monoid()),
        "terminal.json": monoid_to_monoidale(trivial_monoid()),
        "empty.json": empty_monoidale(),
        "restricted_one.json": restricted_monoidale(terminal_category()),
        "restricted_two.json": restricted_monoidale(interval_category()),
        "restricted_bz2.json": restricted_monoidale(delooping(zmod(2))),
        "restricted_parallel.json": restricted_monoidale(parallel_pair_category()),
        "pairs_two.json": category_to_monoidale(interval_category()),
        "broken_pentagon.json": broken_pentagon_monoidale(),
    }
    for name, m in monoidales.items():
        sio.dump(sio.monoidale_to_json(m), str(OUT / name))
    categories = {
        "cat_one.json": terminal_category(),
        "cat_two.json": interval_category(),
        "cat_bz2.json": delooping(zmod(2)),
        "cat_parallel.json": parallel_pair_category(),
    }
    for name, c in categories.items():
        sio.dump(sio.category_to_json(c), str(OUT / name))
    monoids = {
        "monoid_zmod2.json": zmod(2),
        "monoid_zmod3.json": zmod(3),
        "monoid_noncomm3.json": left_absorbing_monoid(),
        "monoid_trivial.json": trivial_monoid(),
    }
    for name, mn in monoids.items():
        sio.dump(sio.monoid_to_json(mn), str(OUT / name))
    rstructures = {
        "rstructure_two_cod.json": cod_rstructure(interval_category()),
    }
    for name, rs in rstructures.items():
        sio.dump(sio.rstructure_to_json(rs), str(OUT / name))
    print("wrote %d fixtures to %s" % (len(monoidales) + len(categories) + len(monoids) + len(rstructures), OUT))


if __name__ == "__main__":
    main()
