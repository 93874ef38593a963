"""Terms, environments and the item-notation surface syntax.

Terms are nameless: ``Ref(i)`` points at the ``i``-th enclosing binder,
counting outwards and skipping applicators and annotators.  Names live only
in the concrete syntax::

    term := item* atom
    item := '[' IDENT ':' term ']'   abstraction
          | '[' IDENT '=' term ']'   abbreviation
          | '[' IDENT ']'            exclusion
          | '(' term ')'             applicator, (V)T applies T to V
          | '<' term '>'             type annotator
    atom := '*' NAT | IDENT
    env  := item* '*' NAT
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Union

from .errors import DanglingReference, MissingSortHead, TermSyntaxError, UnboundName


class BinderKind(Enum):
    ABST = "abst"
    ABBR = "abbr"
    VOID = "void"


class FlatKind(Enum):
    APPL = "appl"
    CAST = "cast"


ABST = BinderKind.ABST
ABBR = BinderKind.ABBR
VOID = BinderKind.VOID
APPL = FlatKind.APPL
CAST = FlatKind.CAST


@dataclass(frozen=True, slots=True)
class Sort:
    h: int

    def __post_init__(self):
        if self.h < 0:
            raise ValueError("sort index must be non-negative")


@dataclass(frozen=True, slots=True)
class Ref:
    i: int


@dataclass(frozen=True, slots=True)
class Bind:
    kind: BinderKind
    arg: Optional["Term"]
    body: "Term"

    def __post_init__(self):
        if (self.kind is VOID) != (self.arg is None):
            raise ValueError(f"{self.kind.value} binder arity mismatch")


@dataclass(frozen=True, slots=True)
class Flat:
    kind: FlatKind
    arg: "Term"
    body: "Term"


Term = Union[Sort, Ref, Bind, Flat]


def abst(w, t):
    return Bind(ABST, w, t)


def abbr(v, t):
    return Bind(ABBR, v, t)


def void(t):
    return Bind(VOID, None, t)


def appl(v, t):
    return Flat(APPL, v, t)


def cast(w, t):
    return Flat(CAST, w, t)


@dataclass(frozen=True, slots=True)
class Item:
    """One environment entry: a binder or a flat (applicator/annotator) item."""

    kind: Union[BinderKind, FlatKind]
    arg: Optional[Term] = None

    @property
    def binds(self):
        return isinstance(self.kind, BinderKind)


@dataclass(frozen=True)
class Env:
    """Items listed outermost first, closed by the head sort ``*head``."""

    items: tuple = ()
    head: int = 0
    names: tuple = field(default=(), compare=False, repr=False)

    def push(self, item, name=None):
        names = self.names + (name,) if item.binds else self.names
        return Env(self.items + (item,), self.head, names)

    def push_binder(self, bind, name=None):
        return self.push(Item(bind.kind, bind.arg), name)

    @property
    def depth(self):
        """Number of binder items, i.e. the number of visible variables."""
        return sum(1 for it in self.items if it.binds)

    def name_list(self):
        n = self.depth
        if len(self.names) == n:
            return list(self.names)
        return [f"x{k}" for k in range(n)]

    def as_term(self):
        t = Sort(self.head)
        for it in reversed(self.items):
            t = Bind(it.kind, it.arg, t) if it.binds else Flat(it.kind, it.arg, t)
        return t

    def __str__(self):
        return print_env(self)


FocalizedTerm = tuple  # (Env, Term)


def env_from_term(t):
    """Inverse of ``Env.as_term``; ``None`` when ``t`` is not env-shaped."""
    items = []
    while not isinstance(t, Sort):
        if isinstance(t, (Bind, Flat)):
            items.append(Item(t.kind, t.arg))
            t = t.body
        else:
            return None
    return Env(tuple(items), t.h)


def env_lookup(env, i):
    """Return ``(prefix, item)`` for the binder ``Ref(i)`` points at in ``env``."""
    if i < 0:
        raise DanglingReference(f"negative index {i}")
    k = i
    for pos in range(len(env.items) - 1, -1, -1):
        it = env.items[pos]
        if not it.binds:
            continue
        if k == 0:
            nb = sum(1 for x in env.items[:pos] if x.binds)
            return Env(env.items[:pos], env.head, env.names[:nb] if env.names else ()), it
        k -= 1
    raise DanglingReference(f"index {i} exceeds the {env.depth} binders of the environment")


# ----------------------------------------------------------------------------
# Free variables and relocation

@lru_cache(maxsize=200_000)
def free_vars(t):
    """De Bruijn indices occurring free in ``t``, as a frozenset."""
    if isinstance(t, Sort):
        return frozenset()
    if isinstance(t, Ref):
        return frozenset((t.i,))
    if isinstance(t, Bind):
        inner = frozenset(j - 1 for j in free_vars(t.body) if j > 0)
        return inner if t.arg is None else free_vars(t.arg) | inner
    return free_vars(t.arg) | free_vars(t.body)


def occurs(i, t):
    return i in free_vars(t)


def is_env_shaped(t):
    while isinstance(t, (Bind, Flat)):
        t = t.body
    return isinstance(t, Sort)


def _shift(t, d, cutoff):
    if d == 0:
        return t
    return _shift_rec(t, d, cutoff)


@lru_cache(maxsize=200_000)
def _shift_rec(t, d, c):
    if isinstance(t, Sort):
        return t
    if isinstance(t, Ref):
        if t.i < c:
            return t
        if t.i + d < 0:
            raise ValueError(f"relocation moves index {t.i} out of scope")
        return Ref(t.i + d)
    if isinstance(t, Bind):
        arg = None if t.arg is None else _shift_rec(t.arg, d, c)
        return Bind(t.kind, arg, _shift_rec(t.body, d, c + 1))
    return Flat(t.kind, _shift_rec(t.arg, d, c), _shift_rec(t.body, d, c))


def lift(h, i, t):
    """Add ``h`` to every free index ``>= i`` of ``t``."""
    if h < 0:
        raise ValueError("lift amount must be non-negative")
    return _shift(t, h, i)


def lift_many(pairs, t):
    for h, i in reversed(list(pairs)):
        t = lift(h, i, t)
    return t


def lower(i, t):
    """Remove the unused variable ``i``: indices above ``i`` drop by one."""
    if occurs(i, t):
        raise ValueError(f"index {i} occurs in the term")
    return _shift(t, -1, i + 1)


def lower_by(k, t):
    """Relocate ``t`` outwards past ``k`` binders it does not mention."""
    if any(j < k for j in free_vars(t)):
        raise ValueError(f"term mentions one of the {k} innermost binders")
    return _shift(t, -k, 0)


def depth(t):
    if isinstance(t, (Sort, Ref)):
        return 0
    sub = [t.body] if t.arg is None else [t.arg, t.body]
    return 1 + max(depth(s) for s in sub)


def size(t):
    if isinstance(t, (Sort, Ref)):
        return 1
    return 1 + size(t.body) + (0 if t.arg is None else size(t.arg))


def subterm_at(t, path):
    for sel in path:
        t = getattr(t, sel)
    return t


def replace_at(t, path, new):
    if not path:
        return new
    head, rest = path[0], path[1:]
    if head == "arg":
        return type(t)(t.kind, replace_at(t.arg, rest, new), t.body)
    return type(t)(t.kind, t.arg, replace_at(t.body, rest, new))


def spine(t):
    """Split ``(V1)...(Vn)H`` into ``([V1, ..., Vn], H)``."""
    args = []
    while isinstance(t, Flat) and t.kind is APPL:
        args.append(t.arg)
        t = t.body
    return args, t


# ----------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<sort>\*\s*(?P<nat>\d+))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[\[\]:=()<>])
    """,
    re.VERBOSE,
)


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "ws":
            pass
        elif m.group("sort") is not None:
            out.append(("sort", int(m.group("nat")), pos))
        elif m.group("ident") is not None:
            out.append(("ident", m.group("ident"), pos))
        else:
            out.append((m.group("punct"), m.group("punct"), pos))
        pos = m.end()
    out.append(("eof", None, len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, kind):
        tok = self.toks[self.k]
        if tok[0] != kind:
            shown = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise TermSyntaxError(f"expected {kind!r}, found {shown}", tok[2], expected=kind)
        self.k += 1
        return tok

    def resolve(self, names, name, pos):
        for j in range(len(names) - 1, -1, -1):
            if names[j] == name:
                return Ref(len(names) - 1 - j)
        raise UnboundName(name, pos)

    def item(self, names):
        """Parse one item; returns ``(kind, arg, name)`` or ``None`` at an atom."""
        kind, _, pos = self.peek()
        if kind == "[":
            self.k += 1
            name = self.take("ident")[1]
            nxt = self.peek()[0]
            if nxt == "]":
                self.k += 1
                return VOID, None, name
            if nxt not in (":", "="):
                tok = self.peek()
                raise TermSyntaxError("expected ':', '=' or ']'", tok[2], expected=":")
            self.k += 1
            arg = self.term(names)
            self.take("]")
            return (ABST if nxt == ":" else ABBR), arg, name
        if kind in ("(", "<"):
            self.k += 1
            arg = self.term(names)
            self.take(")" if kind == "(" else ">")
            return (APPL if kind == "(" else CAST), arg, None
        return None

    def term(self, names):
        stack = []
        names = list(names)
        pushed = 0
        while True:
            it = self.item(names)
            if it is None:
                break
            stack.append(it)
            if isinstance(it[0], BinderKind):
                names.append(it[2])
                pushed += 1
        kind, val, pos = self.peek()
        if kind == "sort":
            self.k += 1
            t = Sort(val)
        elif kind == "ident":
            self.k += 1
            t = self.resolve(names, val, pos)
        else:
            shown = "end of input" if kind == "eof" else repr(val)
            raise TermSyntaxError(f"expected a sort or a name, found {shown}", pos, expected="atom")
        for k, arg, _ in reversed(stack):
            t = Bind(k, arg, t) if isinstance(k, BinderKind) else Flat(k, arg, t)
        return t

    def env(self, names):
        items = []
        names = list(names)
        while True:
            it = self.item(names)
            if it is None:
                break
            k, arg, name = it
            items.append(Item(k, arg))
            if isinstance(k, BinderKind):
                names.append(name)
        kind, val, pos = self.peek()
        if kind != "sort":
            if kind == "ident":
                raise MissingSortHead(pos)
            shown = "end of input" if kind == "eof" else repr(val)
            raise TermSyntaxError(f"expected a sort, found {shown}", pos, expected="*NAT")
        self.k += 1
        return Env(tuple(items), val, tuple(names))

    def done(self):
        self.take("eof")


def parse_term(text, env=None, names=None):
    """Parse ``text`` as a term whose free names are bound by ``env``."""
    if names is None:
        names = env.name_list() if env is not None else []
    p = _Parser(text)
    t = p.term(names)
    p.done()
    return t


def parse_env(text):
    p = _Parser(text)
    e = p.env([])
    p.done()
    return e


# ----------------------------------------------------------------------------
# Printing

def _name(level, depth):
    return f"x{level}" if level >= 0 else f"^{-level - 1}"


def _print(t, depth, out):
    while True:
        if isinstance(t, Sort):
            out.append(f"*{t.h}")
            return
        if isinstance(t, Ref):
            out.append(_name(depth - 1 - t.i, depth))
            return
        if isinstance(t, Bind):
            if t.kind is VOID:
                out.append(f"[x{depth}]")
            else:
                out.append(f"[x{depth}{':' if t.kind is ABST else '='}")
                _print(t.arg, depth, out)
                out.append("]")
            depth += 1
        else:
            out.append("(" if t.kind is APPL else "<")
            _print(t.arg, depth, out)
            out.append(")" if t.kind is APPL else ">")
        t = t.body


def print_term(t, env=None, depth=None):
    """Canonical text; binders are named ``x<level>`` counting from the outermost."""
    if depth is None:
        depth = env.depth if env is not None else 0
    out = []
    _print(t, depth, out)
    return "".join(out)


def print_env(env):
    out = []
    d = 0
    for it in env.items:
        if it.kind is VOID:
            out.append(f"[x{d}]")
        elif it.binds:
            out.append(f"[x{d}{':' if it.kind is ABST else '='}")
            _print(it.arg, d, out)
            out.append("]")
        else:
            out.append("(" if it.kind is APPL else "<")
            _print(it.arg, d, out)
            out.append(")" if it.kind is APPL else ">")
        if it.binds:
            d += 1
    out.append(f"*{env.head}")
    return "".join(out)


def iter_subterms(t, path=()) -> Iterator[tuple]:
    yield path, t
    if isinstance(t, (Bind, Flat)):
        if t.arg is not None:
            yield from iter_subterms(t.arg, path + ("arg",))
        yield from iter_subterms(t.body, path + ("body",))
