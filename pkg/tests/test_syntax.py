import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, terms
from lambdadelta.errors import DanglingReference, MissingSortHead, TermSyntaxError, UnboundName
from lambdadelta.oracle.generate import terms_upto
from lambdadelta.syntax import (ABBR, ABST, APPL, CAST, VOID, Bind, Env, Flat, Item, Ref, Sort,
                                env_lookup, free_vars, is_env_shaped, lift, lift_many, occurs,
                                parse_env, parse_term, print_env, print_term)

TY3_ENV = "[x0:*0][x1:*0][x2:x1]*0"


class TestParse:
    def test_sort(self):
        assert parse_term("*0") == Sort(0)

    def test_single_binder(self):
        assert parse_term("[x:*0]x") == Bind(ABST, Sort(0), Ref(0))

    def test_ty3_ex1_term(self):
        t = parse_term("(x2)[x3:x0]*0", parse_env(TY3_ENV))
        assert t == Flat(APPL, Ref(0), Bind(ABST, Ref(2), Sort(0)))

    def test_items_and_comments(self):
        t = parse_term("# a comment\n [y]  <*1> (*0) [z=*2] z  # trailing")
        assert t == Bind(VOID, None, Flat(CAST, Sort(1), Flat(APPL, Sort(0), Bind(ABBR, Sort(2), Ref(0)))))

    def test_shadowing_resolves_innermost(self):
        assert parse_term("[x:*0][x:*1]x") == Bind(ABST, Sort(0), Bind(ABST, Sort(1), Ref(0)))

    def test_flat_items_are_transparent(self):
        assert parse_term("[x:*0](*1)<*2>x") == Bind(ABST, Sort(0), Flat(APPL, Sort(1), Flat(CAST, Sort(2), Ref(0))))

    def test_unbound_name(self):
        with pytest.raises(UnboundName) as info:
            parse_term("[x:*0]y")
        assert info.value.name == "y" and info.value.pos == 6

    @pytest.mark.parametrize("text", ["", "[x:*0", "(*0", "[x:*0]", "*", "[x;*0]x", "*0 *1", "x)"])
    def test_syntax_errors(self, text):
        with pytest.raises(TermSyntaxError) as info:
            parse_term(text, parse_env("[x:*0]*0"))
        assert info.value.pos is not None


class TestParseEnv:
    def test_empty(self):
        e = parse_env("*0")
        assert e.items == () and e.head == 0

    def test_ty3_env(self):
        e = parse_env(TY3_ENV)
        assert [it.kind for it in e.items] == [ABST] * 3 and e.head == 0
        assert e.items[2].arg == Ref(0)

    def test_missing_sort_head(self):
        with pytest.raises(MissingSortHead):
            parse_env("[x:*0]x")

    def test_flat_items_kept(self):
        e = parse_env("(*1)[a:*0]<a>*3")
        assert [it.kind for it in e.items] == [APPL, ABST, CAST] and e.head == 3
        assert e.depth == 1


class TestPrint:
    def test_sort(self):
        assert print_term(Sort(3)) == "*3"

    def test_abbr(self):
        assert print_term(Bind(ABBR, Sort(0), Ref(0))) == "[x0=*0]x0"

    def test_cast(self):
        assert print_term(Flat(CAST, Sort(1), Sort(0))) == "<*1>*0"

    def test_names_continue_after_env(self):
        e = parse_env("[a:*0][b:*0]*0")
        assert print_term(parse_term("[c:a]b", e), e) == "[x2:x0]x1"

    def test_env(self):
        assert print_env(parse_env("[a:*0](a)[b]<*1>[c=a]*2")) == "[x0:*0](x0)[x1]<*1>[x2=x0]*2"

    def test_dangling_reference_printed_distinctly(self):
        assert print_term(Ref(0)) == "^0"

    @given(terms(0))
    @settings(max_examples=300)
    def test_round_trip_closed(self, t):
        assert parse_term(print_term(t)) == t

    @given(terms(2))
    @settings(max_examples=300)
    def test_round_trip_in_env(self, t):
        e = parse_env("[x0:*0][x1=x0]*0")
        assert parse_term(print_term(t, e), e) == t

    @given(terms(0))
    @settings(max_examples=100)
    def test_round_trip_as_env(self, t):
        e = Env(((Item(ABST, Sort(0))),), 0)
        as_env = Bind(ABST, Sort(0), Sort(1))
        assert print_env(parse_env(print_env(e))) == print_env(e)
        assert is_env_shaped(as_env)


class TestFreeVars:
    def test_closed(self):
        assert free_vars(parse_term("[x:*0]x")) == frozenset()

    def test_ref(self):
        assert free_vars(Ref(2)) == {2}

    def test_abbr_of_outer(self):
        assert free_vars(parse_term("[x=y]x", parse_env("[y:*0]*0"))) == {0}
        assert occurs(0, parse_term("[x=y]x", parse_env("[y:*0]*0")))

    def test_void_body(self):
        assert free_vars(Bind(VOID, None, Ref(3))) == {2}


class TestEnvShape:
    @pytest.mark.parametrize("text,expected", [("*4", True), ("[x:*0]*1", True), ("[x:*0]x", False),
                                               ("(*0)[y]<*1>*2", True), ("(*0)x", False)])
    def test_examples(self, text, expected):
        assert is_env_shaped(parse_term(text, parse_env("[x:*0]*0"))) is expected

    def test_against_direct_oracle(self):
        def shaped(t):
            if isinstance(t, Sort):
                return True
            if isinstance(t, Ref):
                return False
            return shaped(t.body)
        for t in terms_upto(2, 1, (0,)):
            assert is_env_shaped(t) == shaped(t)


class TestLift:
    def test_examples(self):
        assert lift(2, 0, Ref(0)) == Ref(2)
        assert lift(1, 0, Bind(ABST, Ref(0), Ref(0))) == Bind(ABST, Ref(1), Ref(0))
        assert lift(1, 1, Bind(ABST, Ref(1), Ref(2))) == Bind(ABST, Ref(2), Ref(3))
        t = parse_term("[x:y](x)y", parse_env("[y:*0]*0"))
        assert lift(0, 5, t) == t

    def test_lift_many(self):
        t = parse_term("[a:*0]a")
        assert lift_many([], t) == t
        assert lift_many([(1, 0)], Ref(0)) == Ref(1)
        assert lift_many([(1, 0), (1, 0)], Ref(0)) == Ref(2)
        assert lift_many([(1, 0), (2, 1)], Ref(1)) == lift(1, 0, lift(2, 1, Ref(1)))

    @given(terms(3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    def test_composition(self, t, h1, h2, i):
        assert lift(h1, i, lift(h2, i, t)) == lift(h1 + h2, i, t)

    @given(terms(3), st.integers(0, 3), st.integers(0, 3))
    def test_free_vars(self, t, h, i):
        fv = free_vars(t)
        assert free_vars(lift(h, i, t)) == {j for j in fv if j < i} | {j + h for j in fv if j >= i}


class TestEnvLookup:
    def test_innermost(self):
        prefix, item = env_lookup(parse_env("[a:*0][b=a]*0"), 0)
        assert item == Item(ABBR, Ref(0)) and print_env(prefix) == "[x0:*0]*0"

    def test_outer(self):
        prefix, item = env_lookup(parse_env("[a:*0][b=a]*0"), 1)
        assert item == Item(ABST, Sort(0)) and print_env(prefix) == "*0"

    def test_dangling(self):
        with pytest.raises(DanglingReference):
            env_lookup(parse_env("*0"), 0)

    def test_skips_flat_items(self):
        e = parse_env("[a:*0](*1)[b:a]<*2>(b)[c:*1]*0")
        for i in range(e.depth):
            prefix, item = env_lookup(e, i)
            assert item.binds
            assert prefix.depth == e.depth - i - 1
