"""A kernel for the lambda-delta calculus and its exclusion-binder extension."""

from .arity import (Impl, LeqAnswer, Node, aplus, apred, asucc, infer_arity,
                    leq_dec)
from .errors import (CastMismatch, DanglingReference, DomainMismatch,
                     ExcludedVariable, FuelExhausted, IllTypedSubterm,
                     LambdaDeltaError, MissingSortHead, MonotonicityViolation,
                     NotAFunction, TermSyntaxError, TypeCheckError, UnboundName)
from .legalize import csubt_dec, legalize_env
from .reduction import (ReductionStep, Scheme, conv_dec, env_step_enumerate,
                        is_normal, normalize, pr0_enumerate, pr2_enumerate,
                        reduce_once)
from .subst import csubst_all, fsubst_all, subst0_enumerate, subst_all
from .syntax import (ABBR, ABST, APPL, CAST, VOID, Bind, Env, Flat, Item, Ref,
                     Sort, env_lookup, free_vars, is_env_shaped, lift, lift_many,
                     parse_env, parse_term, print_env, print_term)
from .typecheck import (G2, GZ, Affine, Custom, check_type, infer_type,
                        parse_hierarchy, static_type, static_type_iter)

__all__ = [name for name in dir() if not name.startswith("_")]
