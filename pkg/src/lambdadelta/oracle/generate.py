"""Bounded exhaustive generators of terms and environments."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from ..syntax import (ABBR, ABST, APPL, CAST, VOID, Bind, Env, Flat, Item, Ref,
                      Sort, env_from_term)


@dataclass(frozen=True)
class GenConfig:
    """Bounds for exhaustive generation.

    ``max_depth`` bounds the term; ``max_binders`` bounds the binder items of
    the ambient environment, whose arguments have depth ``<= env_arg_depth``.
    """

    max_depth: int = 2
    sort_pool: tuple = (0, 1)
    max_binders: int = 1
    include_void: bool = True
    env_arg_depth: int = 0


@lru_cache(maxsize=None)
def terms_upto(d, n, sorts, include_void=True):
    """All terms of depth ``<= d`` whose free indices are ``< n``, in a fixed order."""
    out = [Sort(h) for h in sorts] + [Ref(i) for i in range(n)]
    if d == 0:
        return tuple(out)
    here = terms_upto(d - 1, n, sorts, include_void)
    under = terms_upto(d - 1, n + 1, sorts, include_void)
    for kind in (ABST, ABBR):
        out.extend(Bind(kind, a, b) for a in here for b in under)
    if include_void:
        out.extend(Bind(VOID, None, b) for b in under)
    for kind in (APPL, CAST):
        out.extend(Flat(kind, a, b) for a in here for b in here)
    return tuple(out)


def terms_of_depth(d, n, sorts, include_void=True):
    if d == 0:
        return terms_upto(0, n, sorts, include_void)
    lower = set(terms_upto(d - 1, n, sorts, include_void))
    return tuple(t for t in terms_upto(d, n, sorts, include_void) if t not in lower)


def _binder_items(n, cfg):
    sorts = tuple(cfg.sort_pool)
    args = terms_upto(cfg.env_arg_depth, n, sorts, cfg.include_void)
    items = [Item(ABST, a) for a in args] + [Item(ABBR, a) for a in args]
    if cfg.include_void:
        items.append(Item(VOID))
    return items


def enumerate_envs(cfg):
    """Ambient environments: up to ``max_binders`` binder items, head ``min(sort_pool)``."""
    head = min(cfg.sort_pool)
    layer = [()]
    for m in range(cfg.max_binders + 1):
        for items in layer:
            yield Env(items, head)
        if m == cfg.max_binders:
            break
        layer = [items + (it,) for items in layer for it in _binder_items(m, cfg)]


def enumerate_terms(cfg):
    """Every well-scoped focalized term within ``cfg``, each once, in a fixed order."""
    sorts = tuple(cfg.sort_pool)
    for env in enumerate_envs(cfg):
        for t in terms_upto(cfg.max_depth, env.depth, sorts, cfg.include_void):
            yield env, t


def enumerate_env_terms(max_depth, sorts=(0, 1), include_void=True):
    """Environments whose term encoding has depth ``<= max_depth`` (flat items included)."""
    for t in env_terms_upto(max_depth, 0, tuple(sorts), include_void):
        yield env_from_term(t)


@lru_cache(maxsize=None)
def env_terms_upto(d, n, sorts, include_void=True):
    out = [Sort(h) for h in sorts]
    if d == 0:
        return tuple(out)
    args = terms_upto(d - 1, n, sorts, include_void)
    here = env_terms_upto(d - 1, n, sorts, include_void)
    under = env_terms_upto(d - 1, n + 1, sorts, include_void)
    for kind in (ABST, ABBR):
        out.extend(Bind(kind, a, b) for a in args for b in under)
    if include_void:
        out.extend(Bind(VOID, None, b) for b in under)
    for kind in (APPL, CAST):
        out.extend(Flat(kind, a, b) for a in args for b in here)
    return tuple(out)


def random_term(rng, d, n, sorts, include_void=True):
    """A term of depth exactly ``d`` drawn uniformly over constructors."""
    if d == 0:
        atoms = [Sort(h) for h in sorts] + [Ref(i) for i in range(n)]
        return rng.choice(atoms)
    kinds = [ABST, ABBR, APPL, CAST] + ([VOID] if include_void else [])
    kind = rng.choice(kinds)
    deep_arg = rng.random() < 0.5
    da, db = (d - 1, rng.randint(0, d - 1)) if deep_arg else (rng.randint(0, d - 1), d - 1)
    if kind is VOID:
        return Bind(VOID, None, random_term(rng, d - 1, n + 1, sorts, include_void))
    if kind in (ABST, ABBR):
        return Bind(kind, random_term(rng, da, n, sorts, include_void),
                    random_term(rng, db, n + 1, sorts, include_void))
    return Flat(kind, random_term(rng, da, n, sorts, include_void),
                random_term(rng, db, n, sorts, include_void))


def sample_terms(cfg, depth, count, seed=0):
    """A deterministic sample of distinct focalized terms of the given depth."""
    rng = random.Random(seed)
    envs = list(enumerate_envs(cfg))
    seen = set()
    tries = 0
    while len(seen) < count and tries < 50 * count:
        tries += 1
        env = envs[rng.randrange(len(envs))]
        t = random_term(rng, depth, env.depth, tuple(cfg.sort_pool), cfg.include_void)
        if (env, t) not in seen:
            seen.add((env, t))
            yield env, t


def sample_env_terms(max_items, arg_depth, count, sorts=(0, 1), seed=0):
    """A deterministic sample of environments, flat items included."""
    rng = random.Random(seed)
    seen = set()
    tries = 0
    while len(seen) < count and tries < 50 * count:
        tries += 1
        items = []
        n = 0
        for _ in range(rng.randint(1, max_items)):
            kind = rng.choice([ABST, ABBR, VOID, APPL, CAST])
            if kind is VOID:
                items.append(Item(VOID))
            else:
                items.append(Item(kind, random_term(rng, rng.randint(0, arg_depth), n, sorts)))
            if kind in (ABST, ABBR, VOID):
                n += 1
        env = Env(tuple(items), rng.choice(sorts))
        if env not in seen:
            seen.add(env)
            yield env
