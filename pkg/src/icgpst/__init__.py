"""Integral circulant graphs: exact spectra and perfect state transfer."""

from .icg import (
    DivisorPartition,
    DivisorSet,
    DivisorSetError,
    IcgGraph,
    IntegerSpectrum,
    NonIntegral,
    adjacent,
    build_graph,
    gn_class,
    graph_distance,
    integrality_check,
    make_divisor_set,
    partition_divisors,
    spectrum_exact,
    spectrum_oracle,
)
from .fidelity import (
    FidelityTrace,
    fidelity_trace,
    transfer_amplitude,
    verify_periodicity,
    verify_pst_numeric,
)
from .pst import (
    MethodDisagreement,
    PstVerdict,
    TheoremViolation,
    count_bruteforce,
    count_formula_printed,
    count_formula_setbased,
    decide_pst,
    enumerate_pst,
    pst_abstract_form,
    pst_spectral,
    pst_structural,
    spectral_structure_check,
    swap_check,
)

__version__ = "0.1.0"
