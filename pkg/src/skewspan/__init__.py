"""Skew monoidal structures on spans of finite sets.

Spans of finite sets compose by pullback and tensor by cartesian
product; an object carrying a tensor span, a unit span and constraint
2-cells subject to five coherence axioms is verified here by two
independent checkers, translated to and from an equivalent description
as a category with a functor from its shift, and constructed from
monoids and small categories.
"""

from .category import FinCat, Functor, cat_validate, functor_validate
from .characterization import (
    ConditionReport,
    RStructure,
    build,
    check_conditions,
    cod_rstructure,
    enumerate_rstructures,
    extract,
    restricted_monoidale,
    roundtrip,
)
from .constructions import (
    FinMonoid,
    MonoidMorphism,
    category_to_monoidale,
    dec_comparison,
    delooping,
    mon_functor_T,
    monoid_to_monoidale,
)
from .finset import FinFn, FinSet, fn_compose, fn_product, product, pullback
from .monoidale import (
    AxiomReport,
    SkewMonoidaleData,
    VerifyReport,
    axioms_bicategorical,
    axioms_pointwise,
    verify,
    wellformed,
)
from .simplicial import TruncSimplicialSet, dec_cat, dec_functor, dec_simplicial, nerve
from .span import (
    Span,
    SpanTwoCell,
    flatten,
    span_compose,
    span_identity,
    span_iso_check,
    span_tensor,
    structural_iso,
    twocell_vcompose,
    whisker_left,
    whisker_right,
)

__version__ = "0.1.0"
