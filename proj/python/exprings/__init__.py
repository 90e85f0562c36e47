"""Exact computations in free exponential polynomial rings."""

from ._core import (
    E,
    BudgetExceeded,
    DaggerFailure,
    DomainError,
    EPoly,
    ParseError,
    PartialityError,
    Tower,
    augmentation,
    dagger,
    demo,
    derive,
    eval_float,
    eval_series,
    intersect,
    jacobian,
    layers,
    member,
    ord,
    ord_reduce,
    partial,
    rabinowitsch,
    rank,
    saturate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
