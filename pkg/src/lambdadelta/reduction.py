"""Reduction, normal forms and conversion.

The engine (``reduce_once``/``normalize``) contracts the leftmost-outermost
redex, trying at each node tau, beta, upsilon, zeta, local delta and finally
delta through an abbreviation of the environment.  The enumerators
(``pr0_enumerate``, ``pr2_enumerate``, ``env_step_enumerate``) compute the
full one-step parallel relations and exist for cross-checking the engine.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product

from .errors import DanglingReference, FuelExhausted
from .subst import subst0_enumerate, subst_all
from .syntax import (ABBR, ABST, APPL, CAST, VOID, Bind, Env, Flat, Item, Ref,
                     Sort, env_lookup, free_vars, lift, lower, print_term)

DEFAULT_FUEL = 100_000


def default_fuel():
    env = os.environ.get("LD_FUEL")
    return int(env) if env else DEFAULT_FUEL


class Scheme(Enum):
    BETA = "beta"
    DELTA_LOCAL = "delta"
    DELTA_ENV = "delta-env"
    ZETA = "zeta"
    TAU = "tau"
    UPSILON = "upsilon"


@dataclass(frozen=True)
class ReductionStep:
    scheme: Scheme
    site: tuple
    before: object
    after: object

    def format(self, env=None):
        path = "/".join(self.site) or "."
        return (f"{self.scheme.value} @ {path} : "
                f"{print_term(self.before, env)} --> {print_term(self.after, env)}")


def _contract(env, t):
    """Contract ``t`` itself if it is a redex: ``(scheme, reductum)`` or ``None``."""
    if isinstance(t, Flat):
        if t.kind is CAST:
            return Scheme.TAU, t.body
        b = t.body
        if isinstance(b, Bind):
            if b.kind is ABST:
                return Scheme.BETA, Bind(ABBR, t.arg, b.body)
            return Scheme.UPSILON, Bind(b.kind, b.arg, Flat(APPL, lift(1, 0, t.arg), b.body))
        return None
    if isinstance(t, Bind) and t.kind is not ABST:
        if 0 not in free_vars(t.body):
            return Scheme.ZETA, lower(0, t.body)
        if t.kind is ABBR:
            return Scheme.DELTA_LOCAL, Bind(ABBR, t.arg, subst_all(0, lift(1, 0, t.arg), t.body))
        return None
    if isinstance(t, Ref):
        _, item = env_lookup(env, t.i)
        if item.kind is ABBR:
            return Scheme.DELTA_ENV, lift(t.i + 1, 0, item.arg)
    return None


def _find(env, t, path):
    hit = _contract(env, t)
    if hit is not None:
        return hit[0], path, hit[1]
    if isinstance(t, (Sort, Ref)):
        return None
    if t.arg is not None:
        found = _find(env, t.arg, path + ("arg",))
        if found is not None:
            return found
    inner = env.push(Item(t.kind, t.arg)) if isinstance(t, Bind) else env
    return _find(inner, t.body, path + ("body",))


def _rebuild(t, path, new):
    if not path:
        return new
    if path[0] == "arg":
        return type(t)(t.kind, _rebuild(t.arg, path[1:], new), t.body)
    return type(t)(t.kind, t.arg, _rebuild(t.body, path[1:], new))


def reduce_once(env, t):
    """One leftmost-outermost step: ``(term, step)``, or ``None`` when ``t`` is normal."""
    found = _find(env, t, ())
    if found is None:
        return None
    scheme, path, new = found
    after = _rebuild(t, path, new)
    return after, ReductionStep(scheme, path, t, after)


def normalize(env, t, fuel=None, trace=True):
    """Reduce to normal form; returns ``(normal_form, steps)``."""
    fuel = default_fuel() if fuel is None else fuel
    steps = []
    n = 0
    while True:
        found = _find(env, t, ())
        if found is None:
            return t, steps
        if n >= fuel:
            raise FuelExhausted(fuel)
        scheme, path, new = found
        after = _rebuild(t, path, new)
        if trace:
            steps.append(ReductionStep(scheme, path, t, after))
        t = after
        n += 1


def count_steps(env, t, fuel=None):
    fuel = default_fuel() if fuel is None else fuel
    n = 0
    while True:
        found = _find(env, t, ())
        if found is None:
            return t, n
        if n >= fuel:
            raise FuelExhausted(fuel)
        scheme, path, new = found
        t = _rebuild(t, path, new)
        n += 1


def is_normal(env, t):
    if isinstance(t, (list, tuple)):
        return all(is_normal(env, x) for x in t)
    return _find(env, t, ()) is None


_nf_cache = {}


def normal_form(env, t, fuel=None):
    key = (env, t)
    nf = _nf_cache.get(key)
    if nf is None:
        nf, _ = normalize(env, t, fuel, trace=False)
        if len(_nf_cache) > 200_000:
            _nf_cache.clear()
        _nf_cache[key] = nf
    return nf


def conv_dec(env, t1, t2, fuel=None):
    """Decide convertibility by comparing normal forms (complete on typable terms)."""
    if t1 == t2:
        return True
    return normal_form(env, t1, fuel) == normal_form(env, t2, fuel)


# ----------------------------------------------------------------------------
# Parallel reduction as relations

@lru_cache(maxsize=200_000)
def pr0_enumerate(t):
    """Every ``t2`` with ``t`` => ``t2`` in one environment-free parallel step."""
    if isinstance(t, (Sort, Ref)):
        return frozenset((t,))
    out = set()
    bodies = pr0_enumerate(t.body)
    if isinstance(t, Bind):
        if t.kind is VOID:
            out.update(Bind(VOID, None, b) for b in bodies)
            if 0 not in free_vars(t.body):
                out.update(lower(0, b) for b in bodies)
            return frozenset(out)
        args = pr0_enumerate(t.arg)
        out.update(Bind(t.kind, a, b) for a in args for b in bodies)
        if t.kind is ABBR:
            for a, b in product(args, bodies):
                out.update(Bind(ABBR, a, u) for u in subst0_enumerate(0, lift(1, 0, a), b))
            if 0 not in free_vars(t.body):
                out.update(lower(0, b) for b in bodies)
        return frozenset(out)
    args = pr0_enumerate(t.arg)
    out.update(Flat(t.kind, a, b) for a in args for b in bodies)
    if t.kind is CAST:
        out.update(bodies)
        return frozenset(out)
    inner = t.body
    if isinstance(inner, Bind):
        in_bodies = pr0_enumerate(inner.body)
        if inner.kind is ABST:
            out.update(Bind(ABBR, a, b) for a in args for b in in_bodies)
        elif inner.kind is ABBR:
            for a, v, b in product(args, pr0_enumerate(inner.arg), in_bodies):
                out.add(Bind(ABBR, v, Flat(APPL, lift(1, 0, a), b)))
        else:
            for a, b in product(args, in_bodies):
                out.add(Bind(VOID, None, Flat(APPL, lift(1, 0, a), b)))
    return frozenset(out)


def pr2_enumerate(env, t):
    """One environment-dependent parallel step: pr0 plus delta through ``env``."""
    free = pr0_enumerate(t)
    out = set(free)
    for i in range(env.depth):
        _, item = env_lookup(env, i)
        if item.kind is not ABBR:
            continue
        w = lift(i + 1, 0, item.arg)
        for t2 in free:
            out.update(subst0_enumerate(i, w, t2))
    return frozenset(out)


def env_step_enumerate(env):
    """Weak parallel reducts of ``env``: item arguments reduce, items stay put."""
    choices = []
    for it in env.items:
        if it.arg is None:
            choices.append((it,))
        else:
            choices.append(tuple(Item(it.kind, a) for a in pr0_enumerate(it.arg)))
    return frozenset(Env(items, env.head, env.names) for items in product(*choices))


def check_scope(env, t):
    """Raise ``DanglingReference`` unless every free index of ``t`` is bound by ``env``."""
    for i in free_vars(t):
        if i >= env.depth:
            raise DanglingReference(f"index {i} is not bound by the environment", (), t)
