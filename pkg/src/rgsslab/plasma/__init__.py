from .airy import (
    airy_ai,
    airy_ai_prime,
    airy_bi,
    airy_bi_prime,
    scorer_gi,
    scorer_gi_prime,
    oscillatory_pair,
    oscillatory_pair_extrapolated,
)
from .model import (
    PlasmaConfig,
    energy_invariant,
    field_sampler,
    fs_residual_r8,
    invert_parametric,
    parametric_solution,
    pde_residual,
    q_cold,
    q_cold_prime,
    q_hot,
    q_hot_prime,
    r8_field,
    x_mu,
)
