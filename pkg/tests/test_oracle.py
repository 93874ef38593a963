import pytest

from conftest import P
from lambdadelta.arity import LeqAnswer, Node, infer_arity, leq_dec
from lambdadelta.errors import TypeCheckError
from lambdadelta.legalize import csubt_dec
from lambdadelta.oracle import (ArityRelation, GenConfig, Ty3Relation, brute_leq, enumerate_envs,
                                enumerate_terms, pr0_holds, pr2_holds)
from lambdadelta.oracle.generate import sample_terms, terms_upto
from lambdadelta.oracle.suites import (SUITES, arity_props_suite, csubt_chains, eta_suite,
                                       mtt_corpus_suite, paper_examples_suite, subst_suite)
from lambdadelta.reduction import check_scope, conv_dec, pr0_enumerate, pr2_enumerate
from lambdadelta.syntax import Sort, parse_env, print_env
from lambdadelta.typecheck import G2, GZ, infer_type


def closed_form(d, n, s=2, void=True):
    """Number of terms of depth <= d over s sorts with n free indices."""
    if d == 0:
        return s + n
    here, under = closed_form(d - 1, n, s, void), closed_form(d - 1, n + 1, s, void)
    return s + n + 2 * here * under + (under if void else 0) + 2 * here * here


class TestGenerator:
    @pytest.mark.parametrize("d,n", [(0, 0), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2)])
    def test_counts_match_closed_form(self, d, n):
        assert len(terms_upto(d, n, (0, 1))) == closed_form(d, n)
        assert len(set(terms_upto(d, n, (0, 1)))) == closed_form(d, n)

    def test_default_config_count(self):
        # empty env, then one binder item of 5 kinds (abst/abbr over 2 sorts, void)
        assert closed_form(2, 0) == 3751 and closed_form(2, 1) == 12824
        assert sum(1 for _ in enumerate_terms(GenConfig())) == 3751 + 5 * 12824

    def test_depth_zero_single_sort(self):
        cfg = GenConfig(max_depth=0, sort_pool=(0,), max_binders=0)
        assert [(print_env(e), t) for e, t in enumerate_terms(cfg)] == [("*0", Sort(0))]

    def test_membership(self):
        cfg = GenConfig(max_depth=1, sort_pool=(0,), max_binders=0)
        assert (parse_env("*0"), P("<*0>*0")) in set(enumerate_terms(cfg))

    def test_envs(self):
        envs = list(enumerate_envs(GenConfig(max_binders=2, sort_pool=(0,))))
        # first item: abst/abbr *0 or void; second item may also use the first binder
        assert len(envs) == 1 + 3 + 3 * 5

    def test_deterministic_and_scoped(self):
        cfg = GenConfig(max_depth=2, max_binders=1)
        first = list(enumerate_terms(cfg))
        assert first == list(enumerate_terms(cfg))
        for env, t in first:
            check_scope(env, t)

    def test_sample_is_deterministic_distinct_and_scoped(self):
        cfg = GenConfig(max_depth=3, max_binders=2)
        a = list(sample_terms(cfg, 3, 500, seed=1))
        assert a == list(sample_terms(cfg, 3, 500, seed=1))
        assert len(set(a)) == 500
        for env, t in a:
            check_scope(env, t)


class TestPr0Relation:
    def test_examples(self):
        assert pr0_holds(P("<*1>*0"), Sort(0))
        assert pr0_holds(P("(*0)[x:*1]x"), P("[x=*0]x"))
        assert not pr0_holds(P("(*0)[x:*1]x"), Sort(0))
        assert pr0_holds(P("[x=*0](x)x"), P("[x=*0](*0)x"))   # delta on one occurrence

    def test_agrees_with_enumeration(self):
        candidates = set(terms_upto(1, 0, (0, 1)))
        sources = terms_upto(2, 0, (0, 1))[::7]
        for t in sources:
            reducts = pr0_enumerate(t)
            for u in candidates | reducts:
                assert pr0_holds(t, u) == (u in reducts), (t, u)

    def test_pr2_agrees_with_enumeration(self):
        env = parse_env("[a=*1]*0")
        for t in terms_upto(2, 1, (0, 1))[::11]:
            reducts = pr2_enumerate(env, t)
            for u in reducts:
                assert pr2_holds(env, t, u)
            assert not pr2_holds(env, t, Sort(7))


class TestTy3Relation:
    def test_examples(self):
        rel = Ty3Relation(GZ)
        env = parse_env("*0")
        assert rel.types(env, Sort(0)) == {Sort(1)}
        assert rel.types(env, P("[x:*0]x")) == {P("[x:*0]*0")}
        assert rel.types(env, P("(*0)*0")) == frozenset()
        ty3 = "[x0:*0][x1:*0][x2:x1]*0"
        assert rel.types(parse_env(ty3), P("(x2)[x3:x0]*0", ty3)) == frozenset()

    def test_engine_type_is_derivable_up_to_conversion(self):
        rel = Ty3Relation(GZ)
        for env, t in enumerate_terms(GenConfig(max_depth=1)):
            derived = rel.types(env, t)
            try:
                u = infer_type(GZ, env, t)
            except TypeCheckError:
                assert not derived
                continue
            assert derived and all(conv_dec(env, u, w) for w in derived)


class TestArityRelation:
    def test_brute_leq(self):
        assert brute_leq(GZ, Node(0, 1), Node(1, 2))
        assert not brute_leq(GZ, Node(0, 0), Node(0, 1))
        assert brute_leq(G2, Node(1, 2), Node(0, 0))

    def test_ty3_ex1(self):
        ty3 = "[x0:*0][x1:*0][x2:x1]*0"
        reps = ArityRelation(GZ).arities(parse_env(ty3), P("(x2)[x3:x0]*0", ty3))
        assert any(brute_leq(GZ, a, Node(0, 0)) for a in reps)

    def test_preimages_include_alternative_inverses(self):
        assert ArityRelation(G2).preimages(Node(0, 3)) == {Node(1, 3), Node(0, 1)}

    def test_canonical_arity_is_derivable(self):
        rel = ArityRelation(GZ)
        for env, t in enumerate_terms(GenConfig(max_depth=1)):
            reps = rel.arities(env, t)
            try:
                a = infer_arity(GZ, env, t)
            except TypeCheckError:
                assert not reps
                continue
            assert any(leq_dec(GZ, a, r) is LeqAnswer.YES for r in reps)


class TestSmallSuites:
    @pytest.mark.parametrize("make", [paper_examples_suite, mtt_corpus_suite, eta_suite,
                                      arity_props_suite, subst_suite])
    def test_clean(self, make):
        rep = make()
        assert rep.ok, str(rep)
        assert str(rep).startswith(f"OK {rep.suite} n=")

    def test_registry(self):
        assert {"diamond", "sred", "genlemma", "static", "leqz", "legalize", "csubt", "mtt"} <= set(SUITES)

    def test_failure_report_format(self):
        from lambdadelta.oracle import Report
        rep = Report("demo", count=3)
        rep.fail(parse_env("[a:*0]*0"), P("a", "[a:*0]*0"), "broken")
        assert str(rep).splitlines() == ["FAIL demo [x0:*0]*0 |- x0 broken",
                                         "FAILED demo n=3 failures=1"]


def test_csubt_is_transitive():
    """Domain refinement should compose.  It does not with excluded entries:
    [x0][x1:x0]*0 <= [x0=*1][x1:x0]*0 <= [x0=*1][x1=*0]*0, but the outer pair
    fails because the abbreviation clause must type *0 : x0 where x0 is excluded."""
    failures = [print_env(e1) + " / " + print_env(e3)
                for e1, e2, e3 in csubt_chains(GZ)
                if csubt_dec(GZ, e1, e2) and csubt_dec(GZ, e2, e3) and not csubt_dec(GZ, e1, e3)]
    assert failures == []
