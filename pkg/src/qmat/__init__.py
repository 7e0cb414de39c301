"""q-matroids over finite fields, their lattice of cyclic flats, and the
rank-metric codes that represent them."""

from __future__ import annotations

from .crypto import (
    AxiomReport,
    check_family_axioms,
    check_rank_axioms,
    check_Z_axioms,
    convolution_matroid,
    roundtrip_verify,
)
from .cycflats import CyclicFlatLattice, cyclic_flats, detect_uniform, f_bounds, reconstruct_flats
from .errors import QMatError
from .gf import FiniteField, field
from .qmatroid import QMatroid, dual, from_code_matrix, from_rank_table, minor, uniform
from .qpoly import QPolymatroid, from_matrix_code, gap_scan, poly_cyc
from .rmcode import RankMetricCode, dual_code, minimal_codewords, new_code, support
from .subspace import Subspace, enumerate_subspaces, lattice, span

__all__ = [
    "AxiomReport",
    "CyclicFlatLattice",
    "FiniteField",
    "QMatError",
    "QMatroid",
    "QPolymatroid",
    "RankMetricCode",
    "Subspace",
    "check_Z_axioms",
    "check_family_axioms",
    "check_rank_axioms",
    "convolution_matroid",
    "cyclic_flats",
    "detect_uniform",
    "dual",
    "dual_code",
    "enumerate_subspaces",
    "f_bounds",
    "field",
    "from_code_matrix",
    "from_matrix_code",
    "from_rank_table",
    "gap_scan",
    "lattice",
    "minimal_codewords",
    "minor",
    "new_code",
    "poly_cyc",
    "reconstruct_flats",
    "roundtrip_verify",
    "span",
    "support",
    "uniform",
]

__version__ = "0.1.0"
