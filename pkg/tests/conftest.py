import pytest
from hypothesis import strategies as st

from lambdadelta.syntax import ABBR, ABST, APPL, CAST, VOID, Bind, Flat, Ref, Sort, parse_env, parse_term


def P(text, env="*0"):
    """Parse ``text`` in the environment ``env`` (both in surface syntax)."""
    e = parse_env(env) if isinstance(env, str) else env
    return parse_term(text, e)


def terms(n=0, max_leaves=12):
    """Well-scoped terms with free indices below ``n``."""

    def build(n, budget):
        atoms = [st.builds(Sort, st.integers(0, 3))]
        if n:
            atoms.append(st.builds(Ref, st.integers(0, n - 1)))
        atom = st.one_of(atoms)
        if budget <= 1:
            return atom
        sub = build(n, budget // 2)
        under = build(n + 1, budget // 2)
        return st.one_of(
            atom,
            st.builds(lambda a, b: Bind(ABST, a, b), sub, under),
            st.builds(lambda a, b: Bind(ABBR, a, b), sub, under),
            st.builds(lambda b: Bind(VOID, None, b), under),
            st.builds(lambda a, b: Flat(APPL, a, b), sub, sub),
            st.builds(lambda a, b: Flat(CAST, a, b), sub, sub),
        )

    return build(n, max_leaves)


def pytest_terminal_summary(terminalreporter):
    from tests_support import ACCEPTANCE
    if ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
