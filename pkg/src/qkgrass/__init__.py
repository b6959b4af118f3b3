"""Hook-class products in the quantum K-theory ring QK(Gr(m,n)),
closed-form structure constants, and independent combinatorial oracles."""

from .intcomb import binomial, kittens_identity_residual
from .shapes import (
    GrassContext,
    QuantumShape,
    ShapeError,
    ContextMismatchError,
    make_shape,
    is_classical,
    shift,
    classicalize,
    contains,
    skew_size,
    is_horizontal_strip,
    is_vertical_strip,
    is_rim,
    row_count,
    col_count,
    translate,
    quantum_corners,
    dual,
    corners,
    rho,
    hook_partition,
)
from .ring import (
    HookError,
    QLinearCombination,
    GradedTerm,
    pieri_row,
    pieri_col,
    hook_decomposition,
    multiply_by_hook,
    coefficient,
    normalize,
    verify_support,
    translation_covariance_check,
)
from .formulas import (
    c_double_sum,
    c_single_sum,
    c_positive,
    C_direct,
    C_reduced,
    f_aux,
    g_aux,
    ReductionState,
    reduce_step,
    reduce_fully,
)
from .tableaux import (
    SkewDiagram,
    star_shape,
    reading_word,
    is_reverse_lattice,
    content,
    count_lr_tableaux,
    lr_coefficient,
    marked_pair_count,
)
from .verify import VerificationReport, run_suite, SUITES

__version__ = "0.1.0"
