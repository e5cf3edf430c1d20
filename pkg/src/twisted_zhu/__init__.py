"""Exact computation of the twisted Zhu type algebras ``A_{g,n}(V)``, the
twisted loop algebra ``V[g]`` and the subspaces ``Omega_n(M)`` of modules."""

from .exact import SubspaceBasis, binomial_series, fmt, kernel, rat, rat_binomial, reduce_mod, rref
from .lie import LoopAlgebra, project_to_algebra
from .modules import (FockTwisted, FockUntwisted, GradedModule, OmegaSubspace, VirasoroVerma, contraction,
                      o_operator, omega_extract, zero_mode)
from .voa import VOA, Heisenberg, Virasoro, make_voa
from .zhu import (AlgebraPresentation, LevelIndex, build_algebra, circle_product, delta, o_spanning_set,
                  star_product)

__version__ = "0.1.0"

__all__ = [
    "SubspaceBasis", "binomial_series", "fmt", "kernel", "rat", "rat_binomial", "reduce_mod", "rref",
    "LoopAlgebra", "project_to_algebra", "FockTwisted", "FockUntwisted", "GradedModule", "OmegaSubspace",
    "VirasoroVerma", "contraction", "o_operator", "omega_extract", "zero_mode", "VOA", "Heisenberg",
    "Virasoro", "make_voa", "AlgebraPresentation", "LevelIndex", "build_algebra", "circle_product", "delta",
    "o_spanning_set", "star_product",
]
