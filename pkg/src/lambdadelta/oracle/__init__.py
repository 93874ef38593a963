"""Bounded enumerations, independent relational checkers and property suites."""

from .generate import GenConfig, enumerate_envs, enumerate_terms
from .relations import ArityRelation, Ty3Relation, brute_leq, pr0_holds, pr2_holds
from .suites import (SUITES, Report, arity_rel_suite, diamond_suite,
                     genlemma_suite, mtt_corpus_suite, paper_examples_suite,
                     sred_suite)

__all__ = [name for name in dir() if not name.startswith("_")]
