"""Numerical workbench for symmetric stable densities, their harmonic
extension semigroup, a singular-integral multiplier operator and Monte
Carlo cross-checks."""

from .density import (
    AccuracyError,
    DensityEvalSpec,
    StableParams,
    density,
    density_partial,
    density_via_subordination,
    envelope,
    subordinator_density,
    unit_density,
    unit_density_partial,
)
from .extension import (
    exit_cdf,
    exit_density,
    extend,
    qt_kernel,
    qt_symbol,
    sample_qt_kernel,
)
from .grid import (
    GridSpec,
    SampledField,
    Spectrum,
    SymmetryError,
    apply_symbol,
    dft,
    grid_norm,
    idft,
    inner_product,
    translate,
)
from .mc import (
    ExitRecord,
    JumpRecord,
    MCEstimate,
    NonExitError,
    PathConfig,
    classify_jump,
    exit_positions,
    exit_times,
    green_functional,
    harmonic_check,
    jump_martingale_stats,
    sample_bm_increment,
    sample_stable_increment,
    simulate_until_exit,
)
from .multiplier import (
    MultiplierProfile,
    TQuadSpec,
    apply_T,
    constant_c,
    g_function,
    lp_probe,
    pairing_check,
    second_difference,
    symbol_m,
    symbol_m_truncated,
)

__version__ = "0.1.0"
