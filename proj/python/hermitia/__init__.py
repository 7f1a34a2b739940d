"""Invariant Hermitian geometry on Lie algebras."""

from ._hermitia import (
    Hermitian,
    classify,
    corpus_build,
    corpus_list,
    integrate_pluriclosed,
    skt_feasibility,
    skt_residual,
    vaisman_f_ode,
)

__all__ = [
    "Hermitian",
    "classify",
    "corpus_build",
    "corpus_list",
    "integrate_pluriclosed",
    "skt_feasibility",
    "skt_residual",
    "vaisman_f_ode",
]
