"""Sort hierarchies, native type inference, type checking and static types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import (CastMismatch, DanglingReference, DomainMismatch,
                     ExcludedVariable, FuelExhausted, IllTypedSubterm,
                     MonotonicityViolation, NotAFunction, TypeCheckError)
from .reduction import conv_dec, normal_form
from .syntax import (ABBR, ABST, APPL, CAST, VOID, Bind, Flat, Item, Ref, Sort,
                     env_lookup, is_env_shaped, lift, print_term)


@dataclass(frozen=True)
class Affine:
    """``g(h) = h + step``."""

    step: int = 1

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("affine sort hierarchy needs a step >= 1")

    def next(self, h):
        return h + self.step

    def __str__(self):
        return {1: "gz", 2: "g2"}.get(self.step, f"affine:{self.step}")


@dataclass(frozen=True)
class Custom:
    """A user supplied ``g``; monotonicity is checked each time it is used."""

    fn: Callable[[int], int]
    fuel: int = 64

    def next(self, h):
        n = self.fn(h)
        if not n > h:
            raise MonotonicityViolation(f"sort hierarchy maps {h} to {n}")
        return n

    def __str__(self):
        return f"custom:{getattr(self.fn, '__name__', 'fn')}"


GZ = Affine(1)
G2 = Affine(2)


def parse_hierarchy(text):
    if text == "gz":
        return GZ
    if text == "g2":
        return G2
    if text.startswith("affine:"):
        return Affine(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown sort hierarchy {text!r}")


# ----------------------------------------------------------------------------
# Native type inference

class _Infer:
    def __init__(self, g, fuel):
        self.g = g
        self.fuel = fuel

    def conv(self, env, a, b):
        return conv_dec(env, a, b, self.fuel)

    def ref(self, env, t, path):
        prefix, item = env_lookup_at(env, t, path)
        if item.kind is VOID:
            raise ExcludedVariable("reference to an excluded variable", path, t)
        try:
            u = self.infer(prefix, item.arg, path)
        except TypeCheckError as exc:
            what = "definiens" if item.kind is ABBR else "declared type"
            raise IllTypedSubterm(f"the {what} of the referenced variable is not typable "
                                  f"({exc.variant}: {exc.message})", path, t) from exc
        if item.kind is ABBR:
            return lift(t.i + 1, 0, u)
        return lift(t.i + 1, 0, item.arg)

    def infer(self, env, t, path=()):
        if isinstance(t, Sort):
            return Sort(self.g.next(t.h))
        if isinstance(t, Ref):
            return self.ref(env, t, path)
        if isinstance(t, Bind):
            if t.kind is not VOID:
                self.infer(env, t.arg, path + ("arg",))
            u = self.infer(env.push(Item(t.kind, t.arg)), t.body, path + ("body",))
            return Bind(t.kind, t.arg, u)
        if t.kind is APPL:
            w = self.infer(env, t.arg, path + ("arg",))
            u = self.infer(env, t.body, path + ("body",))
            n = normal_form(env, u, self.fuel)
            if not (isinstance(n, Bind) and n.kind is ABST):
                raise NotAFunction(
                    f"applied term has type {print_term(n, env)}, not an abstraction",
                    path + ("body",), t.body)
            if not self.conv(env, w, n.arg):
                raise DomainMismatch(
                    f"argument type {print_term(w, env)} does not convert to "
                    f"domain {print_term(n.arg, env)}", path + ("arg",), t.arg)
            return Flat(APPL, t.arg, n)
        u = self.infer(env, t.body, path + ("body",))
        v = self.infer(env, t.arg, path + ("arg",))
        if not self.conv(env, u, t.arg):
            raise CastMismatch(
                f"inferred type {print_term(u, env)} does not convert to "
                f"annotation {print_term(t.arg, env)}", path, t)
        return Flat(CAST, v, t.arg)


def env_lookup_at(env, t, path):
    try:
        return env_lookup(env, t.i)
    except DanglingReference as exc:
        raise DanglingReference(str(exc), path, t) from None


def infer_type(g, env, t, fuel=None):
    """A representative of the type of ``t`` in ``env``; raises ``TypeCheckError``."""
    return _Infer(g, fuel).infer(env, t)


def is_typable(g, env, t, fuel=None):
    try:
        infer_type(g, env, t, fuel)
        return True
    except TypeCheckError:
        return False


def check_type(g, env, t, w, fuel=None):
    """Whether ``t`` has type ``w``: that is, whether ``<w>t`` is typable."""
    try:
        infer_type(g, env, Flat(CAST, w, t), fuel)
    except CastMismatch as exc:
        if exc.path == ():
            return False
        raise
    return True


# ----------------------------------------------------------------------------
# Static type

def static_type(g, env, t, path=()):
    """The reduction-free syntax-directed type of ``t``."""
    if isinstance(t, Sort):
        return Sort(g.next(t.h))
    if isinstance(t, Ref):
        prefix, item = env_lookup_at(env, t, path)
        if item.kind is VOID:
            raise ExcludedVariable("reference to an excluded variable", path, t)
        try:
            u = static_type(g, prefix, item.arg)
        except TypeCheckError as exc:
            raise IllTypedSubterm(f"referenced entry has no static type ({exc.variant})",
                                  path, t) from exc
        return lift(t.i + 1, 0, u if item.kind is ABBR else item.arg)
    if isinstance(t, Bind):
        u = static_type(g, env.push(Item(t.kind, t.arg)), t.body, path + ("body",))
        return Bind(t.kind, t.arg, u)
    if t.kind is APPL:
        return Flat(APPL, t.arg, static_type(g, env, t.body, path + ("body",)))
    w = static_type(g, env, t.arg, path + ("arg",))
    return Flat(CAST, w, static_type(g, env, t.body, path + ("body",)))


def static_type_iter(g, env, t, max_iter=64):
    """Least iterate of the static type that is env-shaped: ``(term, iterations)``."""
    static_type(g, env, t)  # the first iterate must exist
    n = 0
    while not is_env_shaped(t):
        if n >= max_iter:
            raise FuelExhausted(max_iter, "static type iteration")
        t = static_type(g, env, t)
        n += 1
    return t, n
