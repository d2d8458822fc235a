"""Finite rngs, their ideals and weights, idempotent-based single ideal
generators, and elementary matrix groups over them."""

from .errors import IrngError
from .kernel import BACKEND
from .rng import FiniteRng, RngElement, UnitizationElement, make_rng, parse_rng, serialize_rng
from .ideals import (
    AdditiveSubgroup,
    Ideal,
    ideal_generated_by,
    is_irng,
    left_ideal_generated_by,
    quotient,
    subgroup_from_generators,
    weight_exact,
    weight_lower_bound,
)
from .search import WeightResult
from .constructions import (
    find_unit_commutative,
    idempotent_from_element,
    single_generator_finite_irng,
)
from .freeidem import FreePoly, build_membership_certificate, theorem3_chain
from .semigroups import FiniteSemigroup, corollary8_generator, lemma9_extract
from .elgroup import ElMatrix, elementary, generate_group, group_weight

__version__ = "0.1.0"
