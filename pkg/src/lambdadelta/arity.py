"""Arities: the functional skeleton of a term and its place in the sort hierarchy."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import DomainMismatch, ExcludedVariable, NotAFunction
from .syntax import ABBR, ABST, APPL, VOID, Bind, Item, Ref, Sort
from .typecheck import Affine, env_lookup_at


@dataclass(frozen=True, slots=True)
class Node:
    k: int
    h: int

    def __str__(self):
        return f"({self.k},{self.h})"


@dataclass(frozen=True, slots=True)
class Impl:
    dom: "Arity"
    cod: "Arity"

    def __str__(self):
        left = f"({self.dom})" if isinstance(self.dom, Impl) else str(self.dom)
        return f"{left} -> {self.cod}"


Arity = Union[Node, Impl]


class LeqAnswer(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def asucc(g, a):
    if isinstance(a, Impl):
        return Impl(a.dom, asucc(g, a.cod))
    if a.k == 0:
        return Node(0, g.next(a.h))
    return Node(a.k - 1, a.h)


def aplus(g, a, k):
    for _ in range(k):
        a = asucc(g, a)
    return a


def apred(a):
    if isinstance(a, Impl):
        return Impl(a.dom, apred(a.cod))
    return Node(a.k + 1, a.h)


def node_search(g, n1, n2, fuel):
    """Look for ``k`` with ``aplus(n1, k) == aplus(n2, k)``: ``(answer, fuel_spent)``."""
    start = max(n1.k, n2.k)
    a, b = aplus(g, n1, start), aplus(g, n2, start)
    for spent in range(fuel + 1):
        if a == b:
            return LeqAnswer.YES, spent
        a, b = asucc(g, a), asucc(g, b)
    return LeqAnswer.UNKNOWN, fuel


def leq_dec(g, a1, a2, fuel=64):
    """Level equality of two arities; ``UNKNOWN`` only for non-affine ``g``."""
    if isinstance(a1, Impl) and isinstance(a2, Impl):
        first = leq_dec(g, a1.dom, a2.dom, fuel)
        if first is LeqAnswer.NO:
            return first
        second = leq_dec(g, a1.cod, a2.cod, fuel)
        if second is LeqAnswer.YES:
            return first
        return second
    if isinstance(a1, Impl) or isinstance(a2, Impl):
        return LeqAnswer.NO
    if isinstance(g, Affine):
        c = g.step
        return LeqAnswer.YES if a1.h + a2.k * c == a2.h + a1.k * c else LeqAnswer.NO
    return node_search(g, a1, a2, fuel)[0]


def infer_arity(g, env, t, path=(), fuel=64):
    """The canonical arity of ``t`` in ``env``, correct up to level equality."""
    if isinstance(t, Sort):
        return Node(0, t.h)
    if isinstance(t, Ref):
        prefix, item = env_lookup_at(env, t, path)
        if item.kind is VOID:
            raise ExcludedVariable("reference to an excluded variable", path, t)
        a = infer_arity(g, prefix, item.arg, path, fuel)
        return a if item.kind is ABBR else apred(a)
    if isinstance(t, Bind):
        inner = env.push(Item(t.kind, t.arg))
        if t.kind is VOID:
            return infer_arity(g, inner, t.body, path + ("body",), fuel)
        a = infer_arity(g, env, t.arg, path + ("arg",), fuel)
        b = infer_arity(g, inner, t.body, path + ("body",), fuel)
        return Impl(apred(a), b) if t.kind is ABST else b
    a = infer_arity(g, env, t.arg, path + ("arg",), fuel)
    b = infer_arity(g, env, t.body, path + ("body",), fuel)
    if t.kind is APPL:
        if not isinstance(b, Impl):
            raise NotAFunction(f"applied term has arity {b}", path + ("body",), t.body)
        ans = leq_dec(g, a, b.dom, fuel)
        if ans is not LeqAnswer.YES:
            raise DomainMismatch(f"argument arity {a} vs domain {b.dom}: level equality "
                                 f"is {ans.value}", path + ("arg",), t.arg)
        return b.cod
    ans = leq_dec(g, a, asucc(g, b), fuel)
    if ans is not LeqAnswer.YES:
        raise DomainMismatch(f"annotation arity {a} vs successor of {b}: level equality "
                             f"is {ans.value}", path, t)
    return b
