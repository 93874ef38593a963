"""Executable property suites over bounded enumerations.

Every suite returns a :class:`Report`; a report with no failures is the
expected outcome on the shipped configurations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from ..arity import Impl, LeqAnswer, Node, aplus, apred, asucc, infer_arity, leq_dec
from ..errors import FuelExhausted, LambdaDeltaError, TypeCheckError
from ..legalize import csubt_dec, legalize_env
from ..reduction import (conv_dec, count_steps, env_step_enumerate, is_normal,
                         normal_form, pr0_enumerate, pr2_enumerate, reduce_once)
from ..subst import subst0_enumerate, subst_all
from ..syntax import (ABBR, ABST, APPL, CAST, VOID, Bind, Env, Flat, Item, Ref,
                      Sort, depth, env_lookup, free_vars, is_env_shaped, lift, parse_env,
                      parse_term, print_env, print_term, spine)
from ..typecheck import (G2, GZ, check_type, infer_type, is_typable,
                         static_type, static_type_iter)
from .generate import (GenConfig, enumerate_env_terms, enumerate_terms,
                       sample_env_terms, sample_terms, terms_upto)
from .relations import ArityRelation, Ty3Relation, brute_leq, pr0_holds, pr2_holds

DEFAULT_CFG = GenConfig(max_depth=2, sort_pool=(0, 1), max_binders=1, include_void=True)
SAMPLE_CFG = GenConfig(max_depth=3, sort_pool=(0, 1), max_binders=2, include_void=True)
WCPR0_CFG = GenConfig(max_depth=1, sort_pool=(0, 1), max_binders=1, include_void=True,
                      env_arg_depth=1)
SAMPLE_SIZE = 10_000
SN_FUEL = 10_000


def focal(env, t):
    return f"{print_env(env)} |- {print_term(t, env)}"


@dataclass
class Report:
    suite: str
    count: int = 0
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def fail(self, env, t, detail):
        self.failures.append((focal(env, t) if env is not None else str(t), detail))

    def check(self, ok, env, t, detail):
        if not ok:
            self.fail(env, t, detail)
        return ok

    @property
    def ok(self):
        return not self.failures

    def lines(self):
        out = [f"FAIL {self.suite} {where} {detail}" for where, detail in self.failures]
        extra = "".join(f" {k}={v}" for k, v in self.stats.items())
        if self.ok:
            out.append(f"OK {self.suite} n={self.count}{extra}")
        else:
            out.append(f"FAILED {self.suite} n={self.count} failures={len(self.failures)}{extra}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


# ----------------------------------------------------------------------------
# Shared instance tables

_typed_cache = {}


def _try_infer(g, env, t):
    try:
        return infer_type(g, env, t)
    except TypeCheckError:
        return None


def typed_instances(g, cfg):
    """``[(env, t, u)]`` for every enumerated typable term, in enumeration order."""
    key = (g, cfg)
    if key not in _typed_cache:
        out = []
        for env, t in enumerate_terms(cfg):
            u = _try_infer(g, env, t)
            if u is not None:
                out.append((env, t, u))
        _typed_cache[key] = out
    return _typed_cache[key]


def _conv(env, a, b):
    try:
        return conv_dec(env, a, b)
    except LambdaDeltaError:
        return False


def _type_conv(g, env, t, u):
    """``t`` is typable in ``env`` with a type convertible to ``u``."""
    v = _try_infer(g, env, t)
    return v is not None and _conv(env, v, u)


# ----------------------------------------------------------------------------
# Reduction

def diamond_suite(cfg=DEFAULT_CFG, sample_cfg=SAMPLE_CFG, sample=SAMPLE_SIZE, seed=0):
    """Every pair of one-step parallel reducts has a common parallel reduct."""
    rep = Report("diamond")
    seen = set()
    pairs = 0

    def run(env, t0):
        nonlocal pairs
        if t0 in seen:
            return
        seen.add(t0)
        rep.count += 1
        reducts = pr0_enumerate(t0)
        for t1 in reducts:
            rep.check(pr0_holds(t0, t1), env, t0,
                      f"enumerated reduct {print_term(t1, env)} is not a parallel step")
        for t1, t2 in combinations(sorted(reducts, key=repr), 2):
            pairs += 1
            common = pr0_enumerate(t1) & pr0_enumerate(t2)
            if not common:
                rep.fail(env, t0, f"reducts {print_term(t1, env)} and "
                                  f"{print_term(t2, env)} have no common reduct")

    focalized = 0
    for env, t in enumerate_terms(cfg):
        focalized += 1
        run(env, t)
    exhaustive = rep.count
    if sample:
        for env, t in sample_terms(sample_cfg, sample_cfg.max_depth, 4 * sample, seed):
            if rep.count - exhaustive >= sample:
                break
            run(env, t)
    rep.stats.update(focalized=focalized, exhaustive=exhaustive, sampled=rep.count - exhaustive,
                     pairs=pairs)
    return rep


def strategy_suite(g=GZ, cfg=DEFAULT_CFG):
    """Engine steps are pr2 steps and normalize agrees with a different strategy."""
    rep = Report("strategy")
    for env, t, _ in typed_instances(g, cfg):
        rep.count += 1
        step = reduce_once(env, t)
        if step is not None:
            after, info = step
            rep.check(pr2_holds(env, t, after), env, t,
                      f"{info.scheme.value} step to {print_term(after, env)} is not a pr2 step")
            if info.scheme.value == "upsilon":
                rep.check(free_vars(t) == free_vars(after), env, t, "upsilon changed free variables")
        rep.check(_alternative_nf(env, t) == normal_form(env, t), env, t,
                  "smallest-reduct strategy reaches a different normal form")
    return rep


def _alternative_nf(env, t, fuel=SN_FUEL):
    """Normalize by always taking the smallest proper pr2 reduct."""
    for _ in range(fuel):
        nxt = pr2_enumerate(env, t) - {t}
        if not nxt:
            return t
        t = min(nxt, key=lambda s: (len(repr(s)), repr(s)))
    raise FuelExhausted(fuel, "alternative strategy")


# ----------------------------------------------------------------------------
# Typing

def sred_suite(g=GZ, cfg=DEFAULT_CFG, env_cfg=WCPR0_CFG):
    """Subject reduction for pr2 and for wcpr0 environment steps with pr0 term steps."""
    rep = Report("sred")
    reducts = 0
    env_steps = 0
    for env, t, u in typed_instances(g, cfg):
        rep.count += 1
        for t2 in pr2_enumerate(env, t):
            if t2 == t:
                continue
            reducts += 1
            rep.check(pr2_holds(env, t, t2), env, t,
                      f"enumerated reduct {print_term(t2, env)} is not a pr2 step")
            rep.check(_type_conv(g, env, t2, u), env, t,
                      f"reduct {print_term(t2, env)} does not retype to {print_term(u, env)}")
    for env, t, u in typed_instances(g, env_cfg):
        rep.count += 1
        for env2 in env_step_enumerate(env):
            for t2 in pr0_enumerate(t):
                if env2 == env and t2 == t:
                    continue
                env_steps += 1
                rep.check(_type_conv(g, env2, t2, u), env, t,
                          f"after env step to {print_env(env2)} the reduct "
                          f"{print_term(t2, env2)} does not retype to {print_term(u, env)}")
    rep.stats.update(reducts=reducts, env_steps=env_steps)
    return rep


def genlemma_suite(g=GZ, cfg=DEFAULT_CFG):
    """The inferred type has the shape the generation lemmas prescribe."""
    rep = Report("genlemma")
    for env, t, u in typed_instances(g, cfg):
        rep.count += 1
        detail = _genlemma(g, env, t, u)
        if detail:
            rep.fail(env, t, detail)
    return rep


def _genlemma(g, env, t, u):
    if isinstance(t, Sort):
        return None if _conv(env, u, Sort(g.next(t.h))) else "sort typed by a non-successor"
    if isinstance(t, Ref):
        prefix, item = env_lookup(env, t.i)
        if item.kind is ABBR:
            w = _try_infer(g, prefix, item.arg)
            if w is None or not _conv(env, u, lift(t.i + 1, 0, w)):
                return "abbreviated variable not typed by its definiens' type"
        elif item.kind is ABST:
            if not is_typable(g, prefix, item.arg) or not _conv(env, u, lift(t.i + 1, 0, item.arg)):
                return "declared variable not typed by its declared type"
        else:
            return "excluded variable typed"
        return None
    if isinstance(t, Bind):
        if t.kind is not VOID and not is_typable(g, env, t.arg):
            return "binder argument not typable"
        body_type = _try_infer(g, env.push(Item(t.kind, t.arg)), t.body)
        if body_type is None or not _conv(env, u, Bind(t.kind, t.arg, body_type)):
            return "binder not typed by the binder over its body's type"
        return None
    if t.kind is APPL:
        w = _try_infer(g, env, t.arg)
        f = _try_infer(g, env, t.body)
        if w is None or f is None:
            return "component of an application not typable"
        n = normal_form(env, f)
        if not (isinstance(n, Bind) and n.kind is ABST):
            return "applied term's type does not convert to an abstraction"
        if not _conv(env, w, n.arg):
            return "argument type does not convert to the domain"
        if not _conv(env, u, Flat(APPL, t.arg, n)):
            return "application not typed by the applied abstraction type"
        return None
    if not (isinstance(u, Flat) and u.kind is CAST and u.body == t.arg):
        return f"cast typed by {print_term(u, env)}, not of the shape <V0>V"
    if not (is_typable(g, env, u.arg) and is_typable(g, env, u.body)):
        return "component of the cast type not typable"
    if not check_type(g, env, t.body, t.arg) or not check_type(g, env, t.arg, u.arg):
        return "cast components do not check"
    return None


def typing_props_suite(g=GZ, cfg=DEFAULT_CFG):
    """Correctness, uniqueness, typecheck via cast, predicativity, acyclicity, thinning."""
    rep = Report("typing_props")
    rel = Ty3Relation(g)
    derivations = 0
    for env, t in enumerate_terms(cfg):
        rep.count += 1
        u = _try_infer(g, env, t)
        alternatives = rel.types(env, t)
        if u is None:
            rep.check(not alternatives, env, t,
                      "the typing relation derives a type the algorithm rejects")
            continue
        rep.check(bool(alternatives), env, t, "the typing relation derives no type")
        for w in alternatives:
            derivations += 1
            rep.check(_conv(env, w, u), env, t,
                      f"derivable type {print_term(w, env)} does not convert to "
                      f"{print_term(u, env)}")
        rep.check(is_typable(g, env, u), env, t, f"type {print_term(u, env)} is not typable")
        rep.check(is_typable(g, env, Flat(CAST, u, t)), env, t, "<u>t is not typable")
        if isinstance(t, Bind) and t.kind is ABST:
            rep.check(not _conv(env, u, t.arg), env, t, "abstraction typed by its domain")
        rep.check(not _conv(env, u, t), env, t, "term typed by itself")
        for env2, t2, u2 in thinnings(env, t, u):
            rep.check(_type_conv(g, env2, t2, u2), env, t,
                      f"thinning to {print_env(env2)} breaks the type")
    rep.stats.update(derivations=derivations)
    return rep


def thinnings(env, t, u):
    """Insert an unused binder at every position of ``env``, relocating the rest."""
    items = env.items
    for m in range(len(items) + 1):
        for new in (Item(ABST, Sort(0)), Item(VOID)):
            out = list(items[:m]) + [new]
            passed = 0
            for it in items[m:]:
                if it.arg is not None:
                    it = Item(it.kind, lift(1, passed, it.arg))
                out.append(it)
                passed += 1 if it.binds else 0
            yield Env(tuple(out), env.head), lift(1, passed, t), lift(1, passed, u)


def static_suite(g=GZ, cfg=DEFAULT_CFG, max_iter=64):
    """Static types check natively; iterated static types reach an environment
    shape within ``depth(t) + 1`` iterations."""
    rep = Report("static")
    most = 0
    reached = 0
    for env, t, _ in typed_instances(g, cfg):
        rep.count += 1
        try:
            s = static_type(g, env, t)
        except TypeCheckError:
            continue
        rep.check(check_type(g, env, t, s), env, t,
                  f"static type {print_term(s, env)} does not check")
        try:
            shaped, n = static_type_iter(g, env, t, max_iter=max_iter)
        except LambdaDeltaError as exc:
            rep.fail(env, t, f"static iteration: {exc}")
            continue
        reached += 1
        most = max(most, n)
        rep.check(is_env_shaped(shaped), env, t, "iterate is not env-shaped")
        rep.check(n <= depth(t) + 1, env, t,
                  f"env shape needs {n} iterations, more than depth+1 = {depth(t) + 1}")
    rep.stats.update(reached=reached, max_iterations=most)
    return rep


def sn_suite(g=GZ, cfg=DEFAULT_CFG, fuel=SN_FUEL):
    """Typable terms (and their types) normalize within ``fuel`` steps."""
    rep = Report("sn")
    most = 0
    for env, t, u in typed_instances(g, cfg):
        rep.count += 1
        for s in (t, u):
            try:
                _, n = count_steps(env, s, fuel)
                most = max(most, n)
            except FuelExhausted:
                rep.fail(env, s, f"no normal form within {fuel} steps")
    rep.stats.update(max_steps=most)
    return rep


# ----------------------------------------------------------------------------
# Arity

def _arity(g, env, t):
    try:
        return infer_arity(g, env, t)
    except TypeCheckError:
        return None


def arity_rel_suite(g=GZ, cfg=DEFAULT_CFG):
    """Canonical arities agree with the relational rules; pr2 preserves arities."""
    rep = Report("arity_rel")
    rel = ArityRelation(g)
    derived = 0
    for env, t in enumerate_terms(cfg):
        rep.count += 1
        a = _arity(g, env, t)
        alts = rel.arities(env, t)
        if a is None:
            rep.check(not alts, env, t, "the arity relation derives an arity the algorithm rejects")
            continue
        rep.check(bool(alts), env, t, "the arity relation derives no arity")
        for b in alts:
            derived += 1
            rep.check(brute_leq(g, a, b), env, t, f"derivable arity {b} is not level-equal to {a}")
        for t2 in pr2_enumerate(env, t):
            if t2 != t:
                b = _arity(g, env, t2)
                rep.check(b is not None and leq_dec(g, a, b) is LeqAnswer.YES, env, t,
                          f"reduct {print_term(t2, env)} has arity {b}, not level-equal to {a}")
    rep.stats.update(derived=derived)
    return rep


def arity_bridge_suite(g=GZ, cfg=DEFAULT_CFG):
    """Typed terms and their types have arities related by one strict successor."""
    rep = Report("arity_bridge")
    for env, t, u in typed_instances(g, cfg):
        rep.count += 1
        a, b = _arity(g, env, t), _arity(g, env, u)
        if a is None or b is None:
            rep.fail(env, t, "term or type has no arity")
            continue
        rep.check(leq_dec(g, b, asucc(g, a)) is LeqAnswer.YES, env, t,
                  f"type arity {b} is not level-equal to the successor of {a}")
    return rep


def nf_class_suite(g=GZ, cfg=DEFAULT_CFG):
    """Normal terms with an arity are abstractions, sorts, or applied variables."""
    rep = Report("nf_class")
    for env, t in enumerate_terms(cfg):
        if not is_normal(env, t) or _arity(g, env, t) is None:
            continue
        rep.count += 1
        args, head = spine(t)
        if isinstance(t, Bind) and t.kind is ABST or isinstance(t, Sort):
            continue
        rep.check(isinstance(head, Ref) and is_normal(env, args), env, t,
                  "normal term with an arity outside the three classes")
    return rep


def arity_props_suite(g=GZ, bound=8):
    """Node-level algebra: inverse successor, equivalence, diagonal shift, inhabitation."""
    rep = Report("arity_props")
    nodes = [Node(k, h) for k in range(bound + 1) for h in range(bound + 1)]
    for n in nodes:
        rep.count += 1
        rep.check(asucc(g, apred(n)) == n, None, n, "asucc(apred) is not the identity")
        rep.check(leq_dec(g, n, n) is LeqAnswer.YES, None, n, "not reflexive")
        rep.check(leq_dec(g, n, Node(n.k + 1, g.next(n.h))) is LeqAnswer.YES, None, n,
                  "diagonal shift fails")
    yes = {n: {m for m in nodes if leq_dec(g, n, m) is LeqAnswer.YES} for n in nodes}
    for n in nodes:
        for m in yes[n]:
            rep.count += 1
            rep.check(n in yes[m], None, n, f"not symmetric with {m}")
            rep.check(yes[m] <= yes[n], None, n, f"not transitive through {m}")
    for k in range(5):
        for h in range(5):
            rep.count += 1
            env, t = node_witness(k, h)
            a = _arity(g, env, t)
            rep.check(a is not None and leq_dec(g, a, Node(k, h)) is LeqAnswer.YES, env, t,
                      f"witness for ({k},{h}) has arity {a}")
    return rep


def node_witness(k, h):
    """``x_k`` in ``[x1:*h][x2:x1]...[x_k:x_{k-1}]*0`` has arity ``(k,h)``."""
    if k == 0:
        return Env((), 0), Sort(h)
    items = [Item(ABST, Sort(h))] + [Item(ABST, Ref(0)) for _ in range(k - 1)]
    return Env(tuple(items), 0), Ref(0)


def leq_suite(bound=8, sample=SAMPLE_SIZE, seed=0):
    """Closed form, integer formula and brute-force search agree under gz."""
    rep = Report("leqz")
    nodes = [Node(k, h) for k in range(bound + 1) for h in range(bound + 1)]

    def agree(a1, a2):
        rep.count += 1
        closed = leq_dec(GZ, a1, a2) is LeqAnswer.YES
        formula = _leqz(a1, a2)
        brute = brute_leq(GZ, a1, a2)
        if not closed == formula == brute:
            rep.fail(None, f"{a1}~{a2}", f"closed={closed} leqz={formula} search={brute}")

    for a1 in nodes:
        for a2 in nodes:
            agree(a1, a2)
    rng = random.Random(seed)

    def arity(d):
        if d == 0 or rng.random() < 0.5:
            return rng.choice(nodes)
        return Impl(arity(d - 1), arity(d - 1))

    for _ in range(sample):
        agree(arity(2), arity(2))
    return rep


def _leqz(a1, a2):
    """The integer rules: nodes are equal iff ``k1 + h2 = k2 + h1``."""
    if isinstance(a1, Impl) or isinstance(a2, Impl):
        return (isinstance(a1, Impl) and isinstance(a2, Impl)
                and _leqz(a1.dom, a2.dom) and _leqz(a1.cod, a2.cod))
    return a1.k + a2.h == a2.k + a1.h


# ----------------------------------------------------------------------------
# Legalization

TERM_PROBE_DEPTH = 1


def legalize_suite(g=GZ, exhaustive_depth=2, sample=2000, seed=0):
    """Legalization is total, idempotent and preserves native types."""
    rep = Report("legalize")
    envs = list(enumerate_env_terms(exhaustive_depth))
    envs += list(sample_env_terms(4, 3, sample, seed=seed))
    preserved = 0
    for env in envs:
        rep.count += 1
        try:
            legal = legalize_env(g, env)
        except LambdaDeltaError as exc:
            rep.fail(None, print_env(env), f"legalization failed: {exc}")
            continue
        rep.check(legalize_env(g, legal) == legal, None, print_env(env), "not idempotent")
        rep.check(all(it.binds for it in legal.items), None, print_env(env), "flat item kept")
        rep.check(legal.depth == env.depth, None, print_env(env), "binder count changed")
        for t in _probes(env):
            u = _try_infer(g, env, t)
            if u is None:
                continue
            preserved += 1
            rep.check(_type_conv(g, legal, t, u), env, t,
                      f"type not preserved in {print_env(legal)}")
    rep.stats.update(envs=len(envs), preserved=preserved)
    return rep


def csubt_suite(g=GZ):
    """The domain preorder is reflexive and transitive, and typing is monotone along it."""
    rep = Report("csubt")
    for env in enumerate_env_terms(2):
        rep.count += 1
        rep.check(csubt_dec(g, env, env), None, print_env(env), "not reflexive")
    chains = csubt_chains(g)
    steps = set()
    for e1, e2, e3 in chains:
        rep.count += 1
        if csubt_dec(g, e1, e2) and csubt_dec(g, e2, e3):
            rep.check(csubt_dec(g, e1, e3), None, print_env(e1),
                      f"not transitive through {print_env(e2)} to {print_env(e3)}")
        steps.update(((e1, e2), (e2, e3)))
    monotone = 0
    for ea, eb in sorted(steps, key=repr):
        if not csubt_dec(g, ea, eb):
            continue
        for t in _probes(ea):
            u = _try_infer(g, ea, t)
            if u is not None:
                monotone += 1
                rep.check(_type_conv(g, eb, t, u), ea, t,
                          f"typing not monotone from {print_env(ea)} to {print_env(eb)}")
    rep.stats.update(chains=len(chains), monotone=monotone)
    return rep


def _probes(env):
    n = env.depth
    if n <= 2:
        return terms_upto(TERM_PROBE_DEPTH, n, (0, 1))
    return terms_upto(0, n, (0, 1))


_REFINE_ARGS = (Sort(0), Sort(1), Flat(CAST, Sort(1), Sort(0)))


def _refinements(env):
    """Environments obtained by refining one entry: exclusions become binders,
    declarations become abbreviations."""
    out = []
    for pos, it in enumerate(env.items):
        if it.kind is VOID:
            news = [Item(k, a) for k in (ABST, ABBR) for a in _REFINE_ARGS]
        elif it.kind is ABST:
            news = [Item(ABBR, a) for a in _REFINE_ARGS]
        else:
            continue
        for new in news:
            out.append(Env(env.items[:pos] + (new,) + env.items[pos + 1:], env.head))
    return out


def csubt_chains(g):
    """Triples ``e1, e2, e3`` where each step refines one entry."""
    seeds = [env for env in enumerate_env_terms(2)
             if all(it.binds for it in env.items) and len(env.items) == 2]
    chains = []
    for e1 in seeds:
        for e2 in _refinements(e1):
            for e3 in _refinements(e2) or [e2]:
                chains.append((e1, e2, e3))
    return chains


# ----------------------------------------------------------------------------
# Concrete corpora

TY3_EX1 = ("[x0:*0][x1:*0][x2:x1]*0", "(x2)[x3:x0]*0")
NF2_EX2 = ("*0", "(*0)*0")


def paper_examples_suite(g=GZ):
    """The concrete examples: an untypable term with an arity, a normal term
    without one, and the integer level-equality grid."""
    rep = Report("paper_examples")
    env = parse_env(TY3_EX1[0])
    t = parse_term(TY3_EX1[1], env)
    rep.count += 1
    rep.check(_arity(g, env, t) == Node(0, 0), env, t, "arity is not (0,0)")
    rep.count += 1
    rep.check(_try_infer(g, env, t) is None, env, t, "term is typable")
    env = parse_env(NF2_EX2[0])
    t = parse_term(NF2_EX2[1], env)
    rep.count += 1
    rep.check(is_normal(env, t), env, t, "term is not normal")
    rep.count += 1
    rep.check(_arity(g, env, t) is None, env, t, "term has an arity")
    grid = leq_suite(sample=0)
    rep.count += grid.count
    rep.failures += grid.failures
    return rep


MTT_GLOBAL = "[Prf:[p:*0]*1]"


def _mtt(env_text, term_text):
    env = parse_env(MTT_GLOBAL + env_text)
    return env, parse_term(term_text, env)


def mtt_corpus_suite():
    """Structural rules of a minimal type theory, modelled under ``g2`` with
    ``Prop := *0``, ``Set := *1`` and the coercion ``Prf : [p:Prop]Set``."""
    rep = Report("mtt")
    g = G2

    def expect(ok, env, t, detail):
        rep.count += 1
        rep.check(ok, env, t, detail)

    def has_type(env_text, term_text, type_text):
        env, t = _mtt(env_text, term_text)
        w = parse_term(type_text, env)
        try:
            ok = check_type(g, env, t, w)
        except TypeCheckError:
            ok = False
        expect(ok, env, t, f"does not have type {type_text}")

    def converts(env_text, a_text, b_text, want=True):
        env, a = _mtt(env_text, a_text)
        b = parse_term(b_text, env)
        expect(_conv(env, a, b) is want, env, a,
               f"conversion with {b_text} is not {want}")

    e0 = Env((), 0)
    expect(infer_type(g, e0, Sort(0)) == Sort(2), e0, Sort(0), "Prop not typed by *2")
    expect(infer_type(g, e0, Sort(1)) == Sort(3), e0, Sort(1), "Set not typed by *3")
    expect(leq_dec(g, Node(0, 0), Node(0, 1)) is LeqAnswer.NO, e0, Sort(0),
           "Prop and Set are connected under g2")
    # under gz one sort types the other and their positions are connected
    expect(infer_type(GZ, e0, Sort(0)) == Sort(1), e0, Sort(0), "under gz Prop is not typed by Set")
    expect(leq_dec(GZ, Node(1, 1), Node(0, 0)) is LeqAnswer.YES, e0, Sort(0),
           "under gz Prop and Set are disconnected")
    has_type("*1", "Prf", "[p:*0]*1")
    # ps: A : Prop gives Prf(A) : Set
    has_type("[A:*0]*1", "(A)Prf", "*1")
    env, t = _mtt("[A:*1]*1", "(A)Prf")
    expect(_try_infer(g, env, t) is None, env, t, "Prf applied to a set")
    # var: declared variables have their declared type, also past later entries
    has_type("[A:*1][x:A]*1", "x", "A")
    has_type("[A:*1][x:A][y:*0][z:y]*1", "x", "A")
    # seteq: the conversion rule
    has_type("[A:*1][x:A]*1", "x", "<*1>A")
    has_type("[A:*1][x:A]*1", "x", "[B=A]B")
    has_type("[A:*1][B=A][x:A]*1", "x", "B")
    # equality rules as conversion
    for a in ("[a:*1]a", "(x)[y:A]y", "[B=A]B"):
        converts("[A:*1][x:A]*1", a, a)
    converts("[A:*1][x:A]*1", "[B=A]B", "A")
    converts("[A:*1][x:A]*1", "A", "[B=A]B")
    converts("[A:*1][x:A]*1", "[B=A]B", "<*1>A")
    converts("[A:*1][x:A]*1", "<*1>A", "A")
    converts("[A:*1][x:A]*1", "A", "x", want=False)
    # introduction rules (abst)
    has_type("[A:*1][B:*1]*1", "[x:A]B", "[x:A]*1")
    has_type("[A:*1][P:*0]*1", "[x:A]P", "[x:A]*0")
    has_type("[A:*1][B:*1][b:B]*1", "[x:A]b", "[x:A]B")
    has_type("[A:*1]*1", "[x:A]x", "[x:A]A")
    converts("[A:*1][B:*1]*1", "[x:A][C=B]C", "[x:A]B")
    # elimination rules (appl)
    has_type("[A:*1][a:A][B:[x:A]*1]*1", "(a)B", "*1")
    has_type("[A:*1][a:A][P:[x:A]*0]*1", "(a)P", "*0")
    has_type("[A:*1][a:A][B:[x:A]*1][b:[x:A](x)B]*1", "(a)b", "(a)B")
    has_type("[A:*1][a:A][P:[x:A]*0]*1", "((a)P)Prf", "*1")
    converts("[A:*1][a:A][B:[x:A]*1]*1", "(a)[x:A](x)B", "(a)B")
    # derivable substitution rules
    converts("[A:*1][a:A]*1", "(a)[x:A]x", "a")
    has_type("[A:*1][a:A][B:[x:A]*1]*1", "[y=a](y)B", "*1")
    return rep


def eta_quadruples():
    """``(env, T, W, U, V)`` with ``T`` convertible to ``[x:W]U`` and ``V`` to ``W``."""
    out = []
    env = parse_env("[A:*1][B:[x:A]*1][a:A]*0")
    ws = ["*0", "*1", "A"]
    us = ["*0", "x", "A", "(x)B"]
    shapes = ["{f}", "[c=*0]{f}", "<[y:{w}]*2>{f}", "(*0)[d:*1]{f}"]
    vs = ["{w}", "[e={w}]e", "<*2>{w}"]
    for w in ws:
        for u in us:
            if u == "x" and w != "A" or u == "(x)B" and w != "A":
                continue
            f = f"[x:{w}]{u}"
            for shape in shapes:
                t_text = shape.format(f=f, w=w)
                for v in vs:
                    out.append((env, parse_term(t_text, env), parse_term(w, env),
                                parse_term(f"[x:{w}]{u}", env), parse_term(v.format(w=w), env)))
    return out


def eta_suite():
    """``[x:V](x)T`` converts to ``T`` whenever ``T ~ [x:W]U`` and ``V ~ W``."""
    rep = Report("eta")
    used = 0
    for env, t, w, f, v in eta_quadruples():
        if not (_conv(env, t, f) and _conv(env, v, w)):
            continue
        used += 1
        rep.count += 1
        eta = Bind(ABST, v, Flat(APPL, Ref(0), lift(1, 0, t)))
        rep.check(_conv(env, eta, t), env, eta, f"does not convert to {print_term(t, env)}")
    rep.stats.update(quadruples=used)
    return rep


def subst_suite(cfg=DEFAULT_CFG):
    """The deterministic substitution is an instance of the relation and removes
    the variable."""
    rep = Report("subst")
    seen = set()
    for env, t in enumerate_terms(cfg):
        if env.depth == 0 or t in seen:
            continue
        seen.add(t)
        w = Sort(0)
        rep.count += 1
        every = subst_all(0, w, t)
        some = subst0_enumerate(0, w, t)
        if every is None:
            rep.check(not some, env, t, "relation substitutes a missing variable")
            continue
        rep.check(every in some, env, t, "full substitution is not a relation instance")
        rep.check(0 not in free_vars(every), env, t, "variable survives substitution")
    return rep


SUITES = {
    "diamond": lambda g: diamond_suite(),
    "strategy": lambda g: strategy_suite(g),
    "sred": lambda g: sred_suite(g),
    "genlemma": lambda g: genlemma_suite(g),
    "typing_props": lambda g: typing_props_suite(g),
    "static": lambda g: static_suite(g),
    "sn": lambda g: sn_suite(g),
    "arity_rel": lambda g: arity_rel_suite(g),
    "arity_bridge": lambda g: arity_bridge_suite(g),
    "arity_props": lambda g: arity_props_suite(g),
    "nf_class": lambda g: nf_class_suite(g),
    "leqz": lambda g: leq_suite(),
    "legalize": lambda g: legalize_suite(g),
    "csubt": lambda g: csubt_suite(g),
    "paper_examples": lambda g: paper_examples_suite(g),
    "mtt": lambda g: mtt_corpus_suite(),
    "eta": lambda g: eta_suite(),
    "subst": lambda g: subst_suite(),
}
