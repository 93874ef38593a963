from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import P, terms
from lambdadelta.syntax import ABST, Bind, Ref, Sort, occurs, parse_env, print_env, print_term
from lambdadelta.subst import csubst_all, fsubst_all, subst0_enumerate, subst_all

XX = P("(x)x", "[x:*0]*0")


def test_subst_all_replaces_every_occurrence():
    assert print_term(subst_all(0, Sort(0), XX), depth=1) == "(*0)*0"


def test_subst_all_no_occurrence():
    assert subst_all(0, Sort(0), Sort(1)) is None


def test_subst_all_relocates_under_binder():
    assert subst_all(0, Ref(1), Bind(ABST, Ref(0), Ref(1))) == Bind(ABST, Ref(1), Ref(2))


def test_subst0_enumerate_all_nonempty_subsets():
    got = {print_term(t, depth=1) for t in subst0_enumerate(0, Sort(0), XX)}
    assert got == {"(*0)x0", "(x0)*0", "(*0)*0"}


def test_subst0_enumerate_no_occurrence():
    assert subst0_enumerate(0, Sort(0), Sort(1)) == frozenset()


def test_subst0_enumerate_single_occurrence():
    t = P("[y:*0]x", "[x:*0]*0")
    assert subst0_enumerate(0, Sort(1), t) == {subst_all(0, Sort(1), t)}


def test_csubst_all():
    env = parse_env("[a=*0][b=a]*0")
    assert print_env(csubst_all(1, Sort(0), env)) == "[x0=*0][x1=*0]*0"


def test_csubst_all_no_occurrence():
    assert csubst_all(0, Sort(0), parse_env("[a=*0][b=*1]*0")) is None


def test_fsubst_term_only():
    env = parse_env("[a=*0]*0")
    e2, t2 = fsubst_all(0, Sort(0), env, Ref(0))
    assert e2 == env and t2 == Sort(0)


def test_fsubst_no_occurrence():
    assert fsubst_all(0, Sort(0), parse_env("[a=*0]*0"), Sort(1)) is None


@given(terms(3), st.integers(0, 2), st.sampled_from([Sort(0), Sort(1), Ref(0), Ref(1), Ref(2)]))
@settings(max_examples=300)
def test_subst_all_is_an_instance_and_removes_the_variable(t, i, w):
    assume(w != Ref(i))
    result = subst_all(i, w, t)
    instances = subst0_enumerate(i, w, t)
    if result is None:
        assert not instances and not occurs(i, t)
    else:
        assert result in instances
        assert not occurs(i, result)
