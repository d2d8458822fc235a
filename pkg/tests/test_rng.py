from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from irng import catalog
from irng.errors import (
    AmbientMismatch,
    AssociativityViolation,
    BilinearityViolation,
    ParseError,
    TooLarge,
)
from irng.rng import (
    UnitizationElement,
    add,
    enumerate_elements,
    is_idempotent_element,
    make_rng,
    mul,
    neg,
    parse_rng,
    serialize_rng,
    u_add,
    u_mul,
    u_neg,
)
from strategies import all_elements, element_of, small_rng_strategy


def E(R, label):
    return R.basis()[R.labels.index(label)]


# -- construction ----------------------------------------------------------------

def test_matrix_ring_is_valid_and_matrix_units_multiply():
    R = catalog.matrix_rng(2, 2)
    assert R.order == 16
    assert E(R, "E11") * E(R, "E12") == E(R, "E12")
    assert E(R, "E12") * E(R, "E11") == R.zero()


def test_cyclic_rng_products():
    R = make_rng([4], [[[2]]])
    e = R.basis()[0]
    assert e * (3 * e) == 2 * e


def test_associativity_violation_names_triple():
    with pytest.raises(AssociativityViolation) as exc:
        make_rng([2, 2], [[[0, 1], [1, 0]], [[0, 0], [0, 0]]])
    assert (exc.value.i, exc.value.j, exc.value.l) == (0, 0, 0)


def test_bilinearity_violation():
    # e1 has order 2, so e1*e1 = e2 of order 4 is not well defined
    with pytest.raises(BilinearityViolation) as exc:
        make_rng([2, 4], [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])
    assert (exc.value.i, exc.value.j, exc.value.t) == (0, 0, 1)


def test_shape_errors():
    with pytest.raises(ValueError):
        make_rng([2, 2], [[[0, 0]]])
    with pytest.raises(ValueError):
        make_rng([1], [[[0]]])


def _naive_accepts(factors, table):
    k = len(factors)
    for i, j, t in product(range(k), repeat=3):
        c = table[i][j][t]
        if (factors[i] * c) % factors[t] or (factors[j] * c) % factors[t]:
            return False

    def m(x, y):
        out = [0] * k
        for i, j in product(range(k), repeat=2):
            for t in range(k):
                out[t] += x[i] * y[j] * table[i][j][t]
        return tuple(v % d for v, d in zip(out, factors))

    elems = list(product(*(range(d) for d in factors)))
    return all(m(m(x, y), z) == m(x, m(y, z)) for x in elems for y in elems for z in elems)


@given(st.data())
def test_make_rng_accepts_exactly_valid_tables(data):
    k = data.draw(st.integers(1, 2))
    factors = data.draw(st.lists(st.sampled_from([2, 3, 4]), min_size=k, max_size=k))
    table = [[[data.draw(st.integers(0, factors[t] - 1)) for t in range(k)]
              for _ in range(k)] for _ in range(k)]
    expected = _naive_accepts(factors, table)
    try:
        make_rng(factors, table)
        accepted = True
    except (AssociativityViolation, BilinearityViolation):
        accepted = False
    assert accepted == expected


# -- element arithmetic ----------------------------------------------------------

def test_zero_times_anything():
    R = catalog.remark7_rng()
    for x in all_elements(R):
        assert R.zero() * x == R.zero() and x * R.zero() == R.zero()


def test_idempotent_examples():
    R = catalog.matrix_rng(2, 2)
    assert is_idempotent_element(E(R, "E11"))
    Z4 = catalog.cyclic_rng(4, 1)
    assert not is_idempotent_element(Z4.element([2]))
    # {0, 2, 4} in Z/6 has generator e = 2 with e*e = 2e; the element 4 is 2e
    sub = catalog.cyclic_rng(3, 2)
    assert is_idempotent_element(sub.element([2]))


def test_function_forms_and_mismatch():
    R = catalog.cyclic_rng(4, 1)
    x, y = R.element([1]), R.element([3])
    assert add(x, y) == R.zero()
    assert neg(x) == y
    assert mul(y, y) == x
    S = catalog.cyclic_rng(4, 2)
    with pytest.raises(AmbientMismatch):
        add(x, S.element([1]))
    with pytest.raises(AmbientMismatch):
        mul(x, S.element([1]))


@given(st.data())
def test_ring_axioms(data):
    R = data.draw(small_rng_strategy())
    x, y, z = (data.draw(element_of(R)) for _ in range(3))
    assert (x + y) * z == x * z + y * z
    assert z * (x + y) == z * x + z * y
    assert (x * y) * z == x * (y * z)
    assert x + (-x) == R.zero()
    assert all(0 <= c < d for c, d in zip((x * y).c, R.factors))


def test_axioms_exhaustive_on_remark7():
    R = catalog.remark7_rng()
    els = all_elements(R)
    for x, y, z in product(els[:12], els, els):
        assert (x * y) * z == x * (y * z)
        assert (x + y) * z == x * z + y * z


# -- unitization ---------------------------------------------------------------

def test_unitization_examples():
    R = catalog.cyclic_rng(3, 2)
    one = UnitizationElement.one(R)
    a = UnitizationElement(5, R.element([1]))
    assert one * a == a and a * one == a
    x, y = R.element([1]), R.element([2])
    lhs = (one - x) * (one - y)
    assert lhs == UnitizationElement(1, -x - y + x * y)
    # (0, 4)(0, 2) = (0, 2) inside Z/6, i.e. (2e)(e) = e
    assert UnitizationElement.embed(R.element([2])) * UnitizationElement.embed(x) \
        == UnitizationElement.embed(x)


def test_unitization_integers_are_exact():
    R = catalog.cyclic_rng(2, 1)
    big = UnitizationElement(2 ** 40, R.zero())
    assert (big * big).m == 2 ** 80


@given(st.data())
def test_unitization_is_associative_and_embedding_is_hom(data):
    R = data.draw(small_rng_strategy())
    ints = st.integers(-50, 50)
    a, b, c = (UnitizationElement(data.draw(ints), data.draw(element_of(R))) for _ in range(3))
    assert u_mul(u_mul(a, b), c) == u_mul(a, u_mul(b, c))
    assert u_mul(a, u_add(b, c)) == u_add(u_mul(a, b), u_mul(a, c))
    assert u_add(a, u_neg(a)) == UnitizationElement(0, R.zero())
    x, y = data.draw(element_of(R)), data.draw(element_of(R))
    emb = UnitizationElement.embed
    assert emb(x) * emb(y) == emb(x * y)
    assert emb(x) + emb(y) == emb(x + y)
    # the image is an ideal: (m, r)(0, x) has zero integer part
    assert (a * emb(x)).m == 0 and (emb(x) * a).m == 0


def test_unitization_mismatch():
    R, S = catalog.cyclic_rng(2, 1), catalog.cyclic_rng(3, 1)
    with pytest.raises(AmbientMismatch):
        UnitizationElement.embed(R.element([1])) + UnitizationElement.embed(S.element([1]))


# -- enumeration -----------------------------------------------------------------

def test_enumeration_order():
    R = catalog.zero_mult_rng((2,))
    assert [x.c for x in enumerate_elements(R)] == [(0,), (1,)]
    R = catalog.zero_mult_rng((2, 2))
    assert [x.c for x in enumerate_elements(R)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(list(enumerate_elements(catalog.remark7_rng()))) == 32


def test_enumeration_cap():
    R = catalog.zero_mult_rng((4, 4, 4))
    with pytest.raises(TooLarge):
        list(R.elements(cap=10))


# -- file format -------------------------------------------------------------------

@pytest.mark.parametrize("name", catalog.catalog_names("rng"))
def test_serialize_round_trip(name):
    R = catalog.get(name)
    text = serialize_rng(R)
    S = parse_rng(text)
    assert S == R and S.name == R.name
    assert serialize_rng(S) == text


def test_parse_tolerates_comments_and_whitespace():
    text = """# a comment
    rng   cyc
      factors 4   # trailing
    c 1 1   2
    """
    R = parse_rng(text)
    assert R.factors == (4,) and R.constants == (((2,),),)


@pytest.mark.parametrize("text", [
    "",
    "ring x\nfactors 2\nc 1 1 1\n",
    "rng x\nfactor 2\nc 1 1 1\n",
    "rng x\nfactors 2\n",
    "rng x\nfactors 2\nc 1 1 1\nc 1 1 1\n",
    "rng x\nfactors 2\nc 1 2 1\n",
    "rng x\nfactors 2\nc 1 1 a\n",
    "rng x\nfactors 2 2\nc 1 1 1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_rng(text)
