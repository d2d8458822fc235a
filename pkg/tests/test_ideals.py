from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from irng import catalog
from irng.constructions import single_generator_finite_irng
from irng.errors import AmbientMismatch, NotTwoSided, PreconditionFailed
from irng.ideals import (
    Ideal,
    ideal_generated_by,
    is_irng,
    is_single_generator,
    left_ideal_generated_by,
    naive_ideal,
    naive_span,
    principal_ideals,
    quotient,
    rzr_span_check,
    square,
    subgroup_from_generators,
    weight_exact,
    weight_lower_bound,
)
from irng.search import WeightResult, parse_weight_result
from strategies import SMALL_NAMES, all_elements, element_of, small_rng_strategy


def as_set(S):
    return frozenset(x.c for x in S.elements())


def named(R, label):
    return R.basis()[R.labels.index(label)]


# -- subgroups ---------------------------------------------------------------------

def test_subgroup_examples():
    Z4 = catalog.cyclic_rng(4, 1)
    assert subgroup_from_generators(Z4, []).order == 1
    assert as_set(subgroup_from_generators(Z4, [Z4.element([2])])) == {(0,), (2,)}
    V = catalog.zero_mult_rng((2, 2))
    assert subgroup_from_generators(V, [V.element([1, 1])]).order == 2


def test_subgroup_mismatch():
    R, S = catalog.cyclic_rng(4, 1), catalog.cyclic_rng(4, 2)
    with pytest.raises(AmbientMismatch):
        subgroup_from_generators(R, [S.element([1])])


@given(st.data())
def test_hnf_membership_matches_enumeration(data):
    R = data.draw(small_rng_strategy())
    gens = data.draw(st.lists(element_of(R), max_size=3))
    H = subgroup_from_generators(R, gens)
    span = naive_span(R, gens)
    assert as_set(H) == span
    assert H.order == len(span)
    assert R.order % H.order == 0
    for x in all_elements(R)[:64]:
        assert (x in H) == (x.c in span)


@given(st.data())
def test_equal_subgroups_have_equal_hnf(data):
    R = data.draw(small_rng_strategy())
    gens = data.draw(st.lists(element_of(R), min_size=1, max_size=3))
    A = subgroup_from_generators(R, gens)
    B = subgroup_from_generators(R, list(reversed(gens)) + [gens[0] + gens[-1]])
    assert A == B and A.hnf == B.hnf


# -- ideals ------------------------------------------------------------------------

def test_ideal_examples():
    Z4 = catalog.cyclic_rng(4, 1)
    assert ideal_generated_by(Z4, [Z4.zero()]).order == 1
    assert as_set(ideal_generated_by(Z4, [Z4.element([2])])) == {(0,), (2,)}
    M = catalog.matrix_rng(2, 2)
    assert ideal_generated_by(M, [named(M, "E11")]).is_full()


def test_left_ideal_examples():
    M = catalog.matrix_rng(2, 2)
    L = left_ideal_generated_by(M, [named(M, "E11")])
    assert L.order == 4
    assert as_set(L) == as_set(subgroup_from_generators(M, [named(M, "E11"), named(M, "E21")]))
    assert left_ideal_generated_by(M, [M.zero()]).order == 1
    R7 = catalog.remark7_rng()
    L = left_ideal_generated_by(R7, [named(R7, "E33")])
    # R E33 is spanned by E13, E23, E33
    assert as_set(L) == as_set(subgroup_from_generators(
        R7, [named(R7, "E13"), named(R7, "E23"), named(R7, "E33")]))


@given(st.data())
def test_ideal_matches_naive_closure(data):
    R = data.draw(small_rng_strategy())
    Z = data.draw(st.lists(element_of(R), max_size=2))
    I = ideal_generated_by(R, Z)
    assert I.is_closed()
    assert as_set(I) == naive_ideal(R, Z)


@given(st.data())
def test_ideal_closure_is_idempotent_and_monotone(data):
    R = data.draw(small_rng_strategy())
    Z = data.draw(st.lists(element_of(R), max_size=2))
    extra = data.draw(element_of(R))
    I = ideal_generated_by(R, Z)
    assert ideal_generated_by(R, I.generators()) == I
    assert I <= ideal_generated_by(R, Z + [extra])
    L = left_ideal_generated_by(R, Z)
    assert L.is_closed() and L <= I


def test_irng_examples():
    assert not is_irng(catalog.zero_mult_rng((2,)))
    assert is_irng(catalog.matrix_rng(2, 2))
    assert is_irng(catalog.remark7_rng())
    assert not is_irng(catalog.cyclic_rng(4, 2))
    assert square(catalog.cyclic_rng(4, 2)).order == 2


# -- span RZR ------------------------------------------------------------------------

def test_rzr_examples():
    M = catalog.matrix_rng(2, 2)
    assert rzr_span_check(M, [named(M, "E11")])
    Z4 = catalog.cyclic_rng(4, 1)
    assert rzr_span_check(Z4, [Z4.element([1])])
    R7 = catalog.remark7_rng()
    z, _ = single_generator_finite_irng(R7)
    assert rzr_span_check(R7, [z])


def test_rzr_preconditions():
    with pytest.raises(PreconditionFailed):
        rzr_span_check(catalog.zero_mult_rng((2,)), [])
    M = catalog.matrix_rng(2, 2)
    with pytest.raises(PreconditionFailed):
        rzr_span_check(M, [M.zero()])


@pytest.mark.parametrize("name", SMALL_NAMES)
def test_rzr_on_every_generating_singleton(name):
    R = catalog.get(name)
    if not is_irng(R) or R.order == 1:
        return
    for x in all_elements(R):
        if is_single_generator(R, x):
            assert rzr_span_check(R, [x])


# -- quotients ----------------------------------------------------------------------

def test_quotient_examples():
    Z4 = catalog.cyclic_rng(4, 1)
    Q, pm = quotient(Z4, ideal_generated_by(Z4, [Z4.element([2])]))
    assert Q.factors == (2,)
    assert pm(Z4.element([3])) * pm(Z4.element([3])) == pm(Z4.element([1]))
    assert Q.constants == (((1,),),)
    R = catalog.remark7_rng()
    Q, _ = quotient(R, Ideal(R))
    assert Q.order == R.order
    Q, _ = quotient(R, ideal_generated_by(R, R.basis()))
    assert Q.order == 1


def test_quotient_rejects_one_sided():
    M = catalog.matrix_rng(2, 2)
    with pytest.raises(NotTwoSided):
        quotient(M, left_ideal_generated_by(M, [named(M, "E11")]))
    with pytest.raises(NotTwoSided):
        quotient(M, subgroup_from_generators(M, [named(M, "E11")]))


@given(st.data())
def test_projection_is_surjective_homomorphism_with_kernel_I(data):
    R = data.draw(small_rng_strategy())
    Z = data.draw(st.lists(element_of(R), max_size=2))
    I = ideal_generated_by(R, Z)
    Q, pm = quotient(R, I)
    assert Q.order * I.order == R.order
    x, y = data.draw(element_of(R)), data.draw(element_of(R))
    assert pm(x + y) == pm(x) + pm(y)
    assert pm(x * y) == pm(x) * pm(y)
    assert (pm(x) == Q.zero()) == (x in I)
    for b in Q.basis():
        assert pm(pm.lift(b)) == b


# -- weight --------------------------------------------------------------------------

def test_lower_bound_examples():
    assert weight_lower_bound(catalog.zero_mult_rng((2, 2))) == 2
    assert weight_lower_bound(catalog.zero_mult_rng((6,))) == 1
    assert weight_lower_bound(catalog.remark7_rng()) == 1
    assert weight_lower_bound(catalog.zero_mult_rng((2, 4, 4))) == 3


def test_weight_examples():
    assert weight_exact(catalog.matrix_rng(2, 2)) == WeightResult.exact(1)
    assert weight_exact(catalog.zero_mult_rng((2, 2))) == WeightResult.exact(2)
    assert weight_exact(catalog.remark7_rng()) == WeightResult.exact(1)
    assert weight_exact(catalog.augmentation_ideal(3, catalog.cyclic_group(1))).n == 0


def _brute_weight(R):
    els = all_elements(R)
    for n in range(0, R.rank + 2):
        for Z in combinations(els, n):
            if len(naive_ideal(R, list(Z))) == R.order:
                return n


@given(small_rng_strategy().filter(lambda R: R.order <= 16))
def test_weight_matches_subset_enumeration(R):
    res = weight_exact(R)
    assert res.is_exact
    assert res.n == _brute_weight(R)
    assert res.n >= weight_lower_bound(R)
    assert ideal_generated_by(R, list(res.witness)).is_full()


def test_weight_budget_degrades_to_at_least():
    # the first principal ideal of remark7 is proper, so one join fits the budget
    assert weight_exact(catalog.remark7_rng(), cap=1) == WeightResult.at_least(1)
    assert weight_exact(catalog.zero_mult_rng((2, 2)), enum_cap=2) == WeightResult.at_least(2)


def test_greedy_cover_meeting_lower_bound_is_exact():
    res = weight_exact(catalog.zero_mult_rng((2, 2, 2, 2)), cap=1)
    assert res == WeightResult.exact(4)


def test_weight_result_text():
    assert str(WeightResult.exact(3)) == "exact 3"
    assert str(WeightResult.at_least(2)) == "at-least 2"
    assert parse_weight_result("at-least 2") == WeightResult.at_least(2)
    with pytest.raises(ValueError):
        parse_weight_result("maybe 2")


def test_principal_ideals_parallel_matches_serial():
    R = catalog.get("m2z3")
    serial = principal_ideals(R)
    parallel = principal_ideals(R, workers=2)
    assert [(x, I.hnf) for x, I in serial] == [(x, I.hnf) for x, I in parallel]
    assert weight_exact(R, workers=2) == weight_exact(R)
