"""Bar-partition combinatorics, abacus decompositions, Galois sign actions,
and block bijections for double covers of symmetric and alternating groups."""

from .abacus import BarAbacus, FencedRunner, TwistedBarAbacus, reference_runner, render
from .blocks import (
    LabelMap,
    NonSpinBlockId,
    SpinBlockId,
    VerificationReport,
    equivariance_check,
    nonspin_block_members,
    nonspin_psi,
    phi_map,
    psi,
    spin_block_members,
    verify,
)
from .characters import (
    ATILDE,
    STILDE,
    CharLabel,
    ClassLabel,
    bar_hook_lengths,
    classify,
    degree_valuation,
    height_and_defect,
    is_split,
    label_tau,
)
from .galois import (
    GaloisElement,
    SurdValue,
    diff_value,
    jacobi,
    oracle_tau_sqrt,
    standard_generators,
    tau_i,
    tau_partition,
    tau_selfconjugate,
    tau_sqrt,
    tau_sqrt2,
)
from .humphreys import (
    G,
    GPLUS,
    GBlockId,
    GCharLabel,
    block_members,
    classify_g,
    g_degree_valuation,
    phi,
    phi_inverse,
    tau_g,
)
from .littlewood import (
    BarLittlewood,
    OrdinaryLittlewood,
    bar_cocore,
    bar_decompose,
    bar_reconstruct,
    ordinary_cocore,
    ordinary_decompose,
    ordinary_reconstruct,
    paired_parts,
    selfconjugate_paired_hooks,
)
from .partitions import (
    BarPartition,
    FrobeniusSymbol,
    Partition,
    enumerate_partitions,
    from_frobenius,
    parse_partition,
)

__version__ = "0.1.0"
