"""weyllab: Weyl transform and twisted convolution on finite abelian groups.

The package realizes, with exact finite sums, the transform theory of
algebra-valued functions on the phase space of a finite abelian group:
twisted translations and convolution, the Weyl transform and its
Schatten-norm inequalities, the dual and bidual products, and the
multiplier characterization run as an executable chain of equivalent
conditions.  The `weyllab` console script drives randomized verification
suites over all of it.
"""

from .algebras import (
    AlgebraElement,
    AlgebraSpec,
    DualFunctional,
    algebra_from_name,
    dual_numbers,
    load_algebra_file,
    pointwise_algebra,
    save_algebra_file,
    scalar_algebra,
)
from .errors import (
    FormatError,
    InvalidSpecError,
    SpecMismatchError,
    UnsupportedAlgebraError,
    WeyllabError,
)
from .groups import (
    Character,
    GroupElement,
    GroupSpec,
    fourier,
    haar_weights,
    inverse_fourier,
    make_group,
    pairing,
)
from .phase import (
    AtomicMeasure,
    PhaseFunction,
    as_point,
    conjugate_exponent,
    convolution_identity,
    delta,
    load_phase,
    measure_convolve,
    modulate_translate_dual,
    oplus,
    pair,
    save_phase,
    startimes,
    twisted_convolve,
    twisted_translate,
    weighted_delta_basis,
)
from .weyl import (
    WeylOperator,
    load_weyl,
    rho,
    save_weyl,
    schatten_norm,
    singular_values,
    weyl,
    weyl_inverse,
)
from .multipliers import (
    EquivalenceReport,
    OperatorOnL1,
    average_to_multiplier,
    check_convolution_property,
    check_convolution_representation,
    check_lambda_commutation,
    check_m_commutation,
    check_module_map,
    check_startimes_representation,
    check_translation_commutation,
    check_weyl_operator_factorization,
    check_weyl_symbol_factorization,
    conjugation_operator,
    from_measure,
    identity_operator,
    load_operator,
    operator_norm_l1_to_lp,
    random_operator,
    recover_operator_m,
    recover_symbol,
    save_operator,
    translation_operator,
    verify_equivalence_chain,
)

__version__ = "0.1.0"

from .suites import (
    SuiteConfig,
    SuiteReport,
    emit_defect_table,
    registered_suites,
    run_suite,
    trial_seed,
)
