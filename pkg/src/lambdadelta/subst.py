"""Strict substitution of a term for occurrences of a variable.

``subst_all`` is the deterministic instance used by the engine: it replaces
every occurrence.  ``subst0_enumerate`` produces the whole one-or-more
relation, one result per non-empty set of replaced occurrences.  Both return
"nothing" (``None`` or the empty set) when the variable does not occur, which
is where delta-expansion stops and zeta-contraction takes over.
"""

from functools import lru_cache

from .syntax import Bind, Env, Flat, Item, Ref, Sort, free_vars, lift, lower_by


def _check_pre(i, w):
    if i in free_vars(w):
        raise ValueError(f"replacement mentions the substituted index {i}")


@lru_cache(maxsize=100_000)
def _subst(i, w, t, d):
    if isinstance(t, Sort):
        return t
    if isinstance(t, Ref):
        return lift(d, 0, w) if t.i == i + d else t
    if isinstance(t, Bind):
        arg = None if t.arg is None else _subst(i, w, t.arg, d)
        return Bind(t.kind, arg, _subst(i, w, t.body, d + 1))
    return Flat(t.kind, _subst(i, w, t.arg, d), _subst(i, w, t.body, d))


def subst_all(i, w, t):
    """Replace every free ``Ref(i)`` in ``t`` by ``w``; ``None`` if there is none.

    ``w`` lives in the same scope as ``t`` and is relocated under binders.
    """
    _check_pre(i, w)
    if i not in free_vars(t):
        return None
    return _subst(i, w, t, 0)


@lru_cache(maxsize=100_000)
def _subsets(i, w, t, d):
    # every result of replacing any (possibly empty) set of occurrences
    if i + d not in free_vars(t):
        return frozenset((t,))
    if isinstance(t, Ref):
        return frozenset((t, lift(d, 0, w)))
    if isinstance(t, Bind):
        bodies = _subsets(i, w, t.body, d + 1)
        if t.arg is None:
            return frozenset(Bind(t.kind, None, b) for b in bodies)
        args = _subsets(i, w, t.arg, d)
        return frozenset(Bind(t.kind, a, b) for a in args for b in bodies)
    args = _subsets(i, w, t.arg, d)
    bodies = _subsets(i, w, t.body, d)
    return frozenset(Flat(t.kind, a, b) for a in args for b in bodies)


def subst0_enumerate(i, w, t):
    """All results of substituting ``w`` for one or more occurrences of ``Ref(i)``."""
    _check_pre(i, w)
    if i not in free_vars(t):
        return frozenset()
    return _subsets(i, w, t, 0) - {t}


def csubst_all(i, w, env):
    """Substitute in the item arguments that can see binder ``i`` of ``env``.

    ``i`` and ``w`` are relative to the end of ``env``; ``None`` when no item
    mentions the variable.
    """
    _check_pre(i, w)
    items = list(env.items)
    hit = False
    after = 0  # binders strictly after the current item
    for pos in range(len(items) - 1, -1, -1):
        it = items[pos]
        hidden = after + (1 if it.binds else 0)
        local = i - hidden
        if local < 0:
            if it.binds:
                after += 1
            continue
        if it.arg is not None and local in free_vars(it.arg):
            items[pos] = Item(it.kind, _subst(local, lower_by(hidden, w), it.arg, 0))
            hit = True
        if it.binds:
            after += 1
    if not hit:
        return None
    return Env(tuple(items), env.head, env.names)


def fsubst_all(i, w, env, t):
    """Substitute in both components of the focalized term ``(env, t)``."""
    e2 = csubst_all(i, w, env)
    t2 = subst_all(i, w, t)
    if e2 is None and t2 is None:
        return None
    return (env if e2 is None else e2), (t if t2 is None else t2)
