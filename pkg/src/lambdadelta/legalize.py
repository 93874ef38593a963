"""Environment legalization and the domain-based preorder on environments."""

from .errors import TypeCheckError
from .syntax import ABBR, ABST, VOID, Env, Item
from .typecheck import check_type, is_typable


def legalize_env(g, env, fuel=None):
    """Drop flat items and void every entry whose argument is untypable.

    Typability is judged in the original prefix, so the result keeps the
    binder count and no term needs relocating.
    """
    out = []
    prefix = Env((), env.head)
    for it in env.items:
        if not it.binds:
            prefix = prefix.push(it)
            continue
        if it.kind is VOID or is_typable(g, prefix, it.arg, fuel):
            out.append(it)
        else:
            out.append(Item(VOID))
        prefix = prefix.push(it)
    return Env(tuple(out), env.head)


def _checks(g, env, v, w, fuel):
    try:
        return check_type(g, env, v, w, fuel)
    except TypeCheckError:
        return False


def csubt_dec(g, e1, e2, fuel=None):
    """Whether every variable's domain in ``e2`` is contained in its domain in ``e1``."""
    if e1.head != e2.head or len(e1.items) != len(e2.items):
        return False
    p1 = Env((), e1.head)
    p2 = Env((), e2.head)
    for a, b in zip(e1.items, e2.items):
        if a.kind is VOID and b.binds:
            pass
        elif a == b:
            pass
        elif a.kind is ABST and b.kind is ABBR:
            if not (_checks(g, p2, b.arg, a.arg, fuel) and _checks(g, p1, b.arg, a.arg, fuel)):
                return False
        else:
            return False
        p1 = p1.push(a)
        p2 = p2.push(b)
    return True
