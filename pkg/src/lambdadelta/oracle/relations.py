"""Relational checkers written straight from the inference rules.

Nothing here calls the engine's strategies (``reduce_once``, ``pr0_enumerate``,
``infer_type``, ``infer_arity``, ``leq_dec``).  The reduction relation is
decided as a membership predicate rather than enumerated; typing and arity
assignment are computed as the set of conclusions reachable by the rules.
Conversion inside the typing relation is the one judgment delegated to
``conv_dec``: the relation is a set of rule applications, conversion is the
side condition the rules are parameterized by.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..arity import Impl, Node
from ..reduction import conv_dec, normal_form
from ..errors import LambdaDeltaError
from ..syntax import (ABBR, ABST, APPL, CAST, VOID, Bind, Flat, Item, Ref, Sort,
                      env_lookup, free_vars, lift, lower)

# ----------------------------------------------------------------------------
# pr0 / pr2 as membership predicates
#
# ``_red(t1, t2, subs)`` decides: there is ``t'`` with ``t1 => t'`` (one
# parallel step) such that ``t2`` arises from ``t'`` by replacing zero or more
# occurrences of ``Ref(j)`` with ``subs[j]`` (replacements may themselves be
# partially substituted).  With ``subs`` empty this is exactly pr0.


def _up(subs):
    return tuple((j + 1, lift(1, 0, w)) for j, w in subs)


@lru_cache(maxsize=None)
def _inst(t2, t, subs):
    """``t2`` is ``t`` with some occurrences of substitutable refs replaced."""
    if t2 == t:
        return True
    if isinstance(t, Ref):
        return any(j == t.i and _inst(t2, w, subs) for j, w in subs)
    if isinstance(t, Sort) or type(t2) is not type(t) or t2.kind is not t.kind:
        return False
    if isinstance(t, Bind):
        return ((t.arg is None or _inst(t2.arg, t.arg, subs))
                and _inst(t2.body, t.body, _up(subs)))
    return _inst(t2.arg, t.arg, subs) and _inst(t2.body, t.body, subs)


@lru_cache(maxsize=None)
def _uninst(t2, subs):
    """Every ``t`` with ``_inst(t2, t, subs)``."""
    out = {t2}
    out.update(Ref(j) for j, w in subs if _inst(t2, w, subs))
    if isinstance(t2, Bind):
        args = (None,) if t2.arg is None else _uninst(t2.arg, subs)
        out.update(Bind(t2.kind, a, b) for a in args for b in _uninst(t2.body, _up(subs)))
    elif isinstance(t2, Flat):
        out.update(Flat(t2.kind, a, b)
                   for a in _uninst(t2.arg, subs) for b in _uninst(t2.body, subs))
    return frozenset(out)


def _lower_or_none(t):
    return None if 0 in free_vars(t) else lower(0, t)


@lru_cache(maxsize=None)
def _red(t1, t2, subs):
    # the reduct is a substitutable variable that got replaced
    for j, w in subs:
        if _inst(t2, w, subs) and _red(t1, Ref(j), ()):
            return True
    if isinstance(t1, (Sort, Ref)):
        return _inst(t2, t1, subs)
    up = _up(subs)
    if isinstance(t1, Bind):
        if isinstance(t2, Bind) and t2.kind is t1.kind:
            arg_ok = t1.arg is None or _red(t1.arg, t2.arg, subs)
            if arg_ok and _red(t1.body, t2.body, up):
                return True
            if t1.kind is ABBR:
                # delta: t2.arg is the (instantiated) reduct of the definiens
                for a in _uninst(t2.arg, subs):
                    if _red(t1.arg, a, ()) and _red(t1.body, t2.body,
                                                    up + ((0, lift(1, 0, a)),)):
                        return True
        if t1.kind is not ABST and 0 not in free_vars(t1.body):
            # zeta
            if _red(t1.body, lift(1, 0, t2), up):
                return True
        return False
    if t1.kind is CAST and _red(t1.body, t2, subs):
        return True  # tau
    if isinstance(t2, Flat) and t2.kind is t1.kind:
        if _red(t1.arg, t2.arg, subs) and _red(t1.body, t2.body, subs):
            return True
    inner = t1.body
    if t1.kind is APPL and isinstance(inner, Bind) and isinstance(t2, Bind):
        if inner.kind is ABST and t2.kind is ABBR:
            # beta
            return _red(t1.arg, t2.arg, subs) and _red(inner.body, t2.body, up)
        if inner.kind is t2.kind and inner.kind in (ABBR, VOID):
            # upsilon
            body = t2.body
            if not (isinstance(body, Flat) and body.kind is APPL):
                return False
            v = _lower_or_none(body.arg)
            if v is None:
                return False
            arg_ok = inner.arg is None or _red(inner.arg, t2.arg, subs)
            return arg_ok and _red(t1.arg, v, subs) and _red(inner.body, body.body, up)
    return False


def pr0_holds(t1, t2):
    """``t1 => t2`` in one environment-free parallel step."""
    return _red(t1, t2, ())


def pr2_holds(env, t1, t2):
    """``t1 => t2`` in one parallel step that may also expand one env abbreviation."""
    if _red(t1, t2, ()):
        return True
    for i in range(env.depth):
        _, item = env_lookup(env, i)
        if item.kind is ABBR and _red(t1, t2, ((i, lift(i + 1, 0, item.arg)),)):
            return True
    return False


# ----------------------------------------------------------------------------
# Native typing as a relation

TYPE_SET_CAP = 64


class Ty3Relation:
    """The set of types derivable for a term by the native typing rules.

    Each rule contributes its literal conclusion; the conversion rule is used
    only where a premise needs a particular shape (an abstraction in the
    application rule, the annotation in the cast rule), and is witnessed by
    both the literal type and its normal form.  Sets are capped at
    ``TYPE_SET_CAP`` to keep the product rules finite on small terms.
    """

    def __init__(self, g, fuel=None):
        self.g = g
        self.fuel = fuel
        self.memo = {}

    def conv(self, env, a, b):
        try:
            return conv_dec(env, a, b, self.fuel)
        except LambdaDeltaError:
            return False

    def _cap(self, s):
        return frozenset(sorted(s, key=repr)[:TYPE_SET_CAP]) if len(s) > TYPE_SET_CAP else frozenset(s)

    def types(self, env, t):
        key = (env, t)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._cap(self._types(env, t))
            self.memo[key] = hit
        return hit

    def _types(self, env, t):
        if isinstance(t, Sort):
            return {Sort(self.g.next(t.h))}
        if isinstance(t, Ref):
            if t.i >= env.depth:
                return set()
            prefix, item = env_lookup(env, t.i)
            if item.kind is VOID:
                return set()
            if item.kind is ABBR:
                return {lift(t.i + 1, 0, u) for u in self.types(prefix, item.arg)}
            if self.types(prefix, item.arg):
                return {lift(t.i + 1, 0, item.arg)}
            return set()
        if isinstance(t, Bind):
            if t.kind is not VOID and not self.types(env, t.arg):
                return set()
            inner = env.push(Item(t.kind, t.arg))
            return {Bind(t.kind, t.arg, u) for u in self.types(inner, t.body)}
        if t.kind is APPL:
            arg_types = self.types(env, t.arg)
            out = set()
            for u in self.types(env, t.body):
                shapes = {u}
                try:
                    shapes.add(normal_form(env, u, self.fuel))
                except LambdaDeltaError:
                    pass
                for a in shapes:
                    if isinstance(a, Bind) and a.kind is ABST:
                        if any(w == a.arg or self.conv(env, w, a.arg) for w in arg_types):
                            out.add(Flat(APPL, t.arg, a))
            return out
        annot_types = self.types(env, t.arg)
        if not annot_types:
            return set()
        if any(u == t.arg or self.conv(env, u, t.arg) for u in self.types(env, t.body)):
            return {Flat(CAST, w, t.arg) for w in annot_types}
        return set()


# ----------------------------------------------------------------------------
# Arity assignment as a relation
#
# The replacement rule closes every derived set under level equality.  Rather
# than materializing the (large) closure, a set is kept as representatives and
# membership "L in closure(S)" is decided by the bounded brute-force search
# ``brute_leq`` against each representative.

LEQ_SEARCH = 32


def _succ(g, a):
    if isinstance(a, Impl):
        return Impl(a.dom, _succ(g, a.cod))
    return Node(0, g.next(a.h)) if a.k == 0 else Node(a.k - 1, a.h)


def brute_leq(g, a1, a2, bound=LEQ_SEARCH):
    """Level equality by searching ``k <= bound`` successors on both sides."""
    if isinstance(a1, Impl) or isinstance(a2, Impl):
        return (isinstance(a1, Impl) and isinstance(a2, Impl)
                and brute_leq(g, a1.dom, a2.dom, bound) and brute_leq(g, a1.cod, a2.cod, bound))
    for _ in range(bound + 1):
        if a1 == a2:
            return True
        a1, a2 = _succ(g, a1), _succ(g, a2)
    return False


class ArityRelation:
    """Arities derivable by the arity rules, as representatives modulo the
    replacement rule (level equality decided by bounded search)."""

    def __init__(self, g, bound=LEQ_SEARCH):
        self.g = g
        self.bound = bound
        self.memo = {}

    def leq(self, a, b):
        return brute_leq(self.g, a, b, self.bound)

    def member(self, a, reps):
        return any(self.leq(a, r) for r in reps)

    def reduce(self, arities):
        out = []
        for a in sorted(arities, key=repr):
            if not self.member(a, out):
                out.append(a)
        return tuple(out)

    def preimages(self, a):
        """Every ``L`` with ``asucc L == a``."""
        if isinstance(a, Impl):
            return {Impl(a.dom, c) for c in self.preimages(a.cod)}
        out = {Node(a.k + 1, a.h)}
        if a.k == 0:
            out.update(Node(0, h) for h in range(a.h) if self.g.next(h) == a.h)
        return out

    def arities(self, env, t):
        key = (env, t)
        hit = self.memo.get(key)
        if hit is None:
            hit = self.reduce(self._arities(env, t))
            self.memo[key] = hit
        return hit

    def _arities(self, env, t):
        if isinstance(t, Sort):
            return {Node(0, t.h)}
        if isinstance(t, Ref):
            if t.i >= env.depth:
                return set()
            prefix, item = env_lookup(env, t.i)
            if item.kind is VOID:
                return set()
            decl = self.arities(prefix, item.arg)
            if item.kind is ABBR:
                return set(decl)
            return {p for a in decl for p in self.preimages(a)}
        if isinstance(t, Bind):
            inner = env.push(Item(t.kind, t.arg))
            if t.kind is VOID:
                return set(self.arities(inner, t.body))
            heads = self.arities(env, t.arg)
            if not heads:
                return set()
            body = self.arities(inner, t.body)
            if t.kind is ABBR:
                return set(body)
            doms = {p for a in heads for p in self.preimages(a)}
            return {Impl(d, c) for d, c in product(doms, body)}
        args = self.arities(env, t.arg)
        body = self.arities(env, t.body)
        if t.kind is APPL:
            return {a.cod for a in body if isinstance(a, Impl) and self.member(a.dom, args)}
        return {a for a in body if self.member(_succ(self.g, a), args)}
