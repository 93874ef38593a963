import pytest
from hypothesis import given, settings

from conftest import P, terms
from lambdadelta.errors import DanglingReference, FuelExhausted
from lambdadelta.reduction import (DEFAULT_FUEL, Scheme, check_scope, conv_dec, default_fuel,
                                   env_step_enumerate, is_normal, normalize, pr0_enumerate,
                                   pr2_enumerate, reduce_once)
from lambdadelta.syntax import Ref, Sort, free_vars, parse_env, print_env, print_term


def step(t_text, env_text="*0"):
    env = parse_env(env_text)
    result = reduce_once(env, P(t_text, env_text))
    assert result is not None
    t, s = result
    return print_term(t, env), s.scheme


class TestReduceOnce:
    def test_tau(self):
        assert step("<*1>*0") == ("*0", Scheme.TAU)

    def test_beta(self):
        assert step("(*0)[x:*1]x") == ("[x0=*0]x0", Scheme.BETA)

    def test_env_delta(self):
        assert step("a", "[a=*1]*0") == ("*1", Scheme.DELTA_ENV)

    def test_normal(self):
        assert reduce_once(parse_env("*0"), P("(*0)*0")) is None

    def test_upsilon(self):
        assert step("(*0)[x=*1]x") == ("[x0=*1](*0)x0", Scheme.UPSILON)

    def test_zeta(self):
        assert step("[x=*0]*1") == ("*1", Scheme.ZETA)

    def test_leftmost_outermost(self):
        # the outer cast fires before the inner beta redex
        assert step("<*2>(*0)[x:*1]x") == ("(*0)[x0:*1]x0", Scheme.TAU)


class TestNormalize:
    def schemes(self, text):
        env = parse_env("*0")
        nf, steps = normalize(env, P(text), trace=True)
        return print_term(nf, env), [s.scheme for s in steps]

    def test_beta_delta_zeta(self):
        assert self.schemes("(*0)[x:*1]x") == ("*0", [Scheme.BETA, Scheme.DELTA_LOCAL, Scheme.ZETA])

    def test_upsilon_delta_zeta(self):
        assert self.schemes("(*0)[x=*1]x") == (
            "(*0)*1", [Scheme.UPSILON, Scheme.DELTA_LOCAL, Scheme.ZETA])

    def test_already_normal(self):
        assert self.schemes("(*0)*0") == ("(*0)*0", [])

    def test_trace_format(self):
        env = parse_env("*0")
        _, steps = normalize(env, P("(*0)[x:*1]x"), trace=True)
        assert steps[0].format(env) == "beta @ . : (*0)[x0:*1]x0 --> [x0=*0]x0"

    def test_fuel_exhausted(self):
        # (w)w with w = [x:*0](x)x loops forever
        omega = "([w:*0](w)w)[w:*0](w)w"
        with pytest.raises(FuelExhausted):
            normalize(parse_env("*0"), P(omega), fuel=50)

    def test_default_fuel_from_environment(self, monkeypatch):
        monkeypatch.delenv("LD_FUEL", raising=False)
        assert default_fuel() == DEFAULT_FUEL == 100_000
        monkeypatch.setenv("LD_FUEL", "7")
        assert default_fuel() == 7


class TestIsNormal:
    def test_applied_sort(self):
        assert is_normal(parse_env("*0"), P("(*0)*0"))

    def test_zeta_redex(self):
        assert not is_normal(parse_env("*0"), P("[x=*0]*1"))

    def test_applied_variable(self):
        env = "[x:[z:*0]*0][y:*0]*0"
        assert is_normal(parse_env(env), P("(y)x", env))


class TestPr0:
    def show(self, ts, depth=0):
        return {print_term(t, depth=depth) for t in ts}

    def test_sort(self):
        assert pr0_enumerate(Sort(0)) == {Sort(0)}

    def test_tau(self):
        assert self.show(pr0_enumerate(P("<*1>*0"))) == {"<*1>*0", "*0"}

    def test_beta(self):
        assert self.show(pr0_enumerate(P("(*0)[x:*1]x"))) == {"(*0)[x0:*1]x0", "[x0=*0]x0"}

    def test_reflexive(self):
        t = P("[x=*0](x)x")
        assert t in pr0_enumerate(t)

    @given(terms(2, max_leaves=8))
    @settings(max_examples=200, deadline=None)
    def test_diamond(self, t):
        reducts = list(pr0_enumerate(t))
        for a in reducts:
            for b in reducts:
                assert pr0_enumerate(a) & pr0_enumerate(b)


class TestPr2:
    def test_env_delta_is_included(self):
        env = parse_env("[a=*1]*0")
        assert Sort(1) in pr2_enumerate(env, Ref(0))

    @given(terms(2, max_leaves=8))
    @settings(max_examples=200, deadline=None)
    def test_engine_steps_are_pr2_steps(self, t):
        env = parse_env("[a:*0][b=a]*0")
        result = reduce_once(env, t)
        if result is not None:
            after, s = result
            assert after in pr2_enumerate(env, t)
            if s.scheme is Scheme.UPSILON:
                assert free_vars(after) == free_vars(t)


class TestEnvStep:
    def show(self, text):
        return {print_env(e) for e in env_step_enumerate(parse_env(text))}

    def test_empty(self):
        assert self.show("*0") == {"*0"}

    def test_tau_inside_item(self):
        assert self.show("[a=<*1>*0]*0") == {"[x0=<*1>*0]*0", "[x0=*0]*0"}

    def test_normal_item(self):
        assert self.show("[a:*0]*0") == {"[x0:*0]*0"}


class TestConv:
    def test_abbreviation(self):
        assert conv_dec(parse_env("*0"), P("[x=*0]x"), Sort(0))

    def test_distinct_sorts(self):
        assert not conv_dec(parse_env("*0"), Sort(0), Sort(1))

    def test_eta(self):
        assert conv_dec(parse_env("*0"), P("[y:*0](y)[x:*0]x"), P("[x:*0]x"))


def test_check_scope():
    check_scope(parse_env("[a:*0]*0"), Ref(0))
    with pytest.raises(DanglingReference):
        check_scope(parse_env("[a:*0]*0"), Ref(1))
