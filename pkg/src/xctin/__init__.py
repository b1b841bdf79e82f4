"""Achievability, converse bounds, and regime audits for the 3x2 Gaussian X
channel under treat-interference-as-noise scheduling."""

from .achievability import (AchievabilityResult, IcConfig, enumerate_ic_configs,
                            tdma_tin_gdof, tdma_tin_gdof_config, tdma_tin_rate,
                            tin_sum_rate)
from .bounds import (BoundResult, GenieParams, TxPermutation,
                     enumerate_permutations, gdof_ub, gdof_ub_case1,
                     gdof_ub_case2, gdof_ub_single, genie_params,
                     genie_params_from_gains, sum_capacity_ub,
                     sum_capacity_ub_single)
from .channel import (AlphaMatrix, ChannelScenario, alpha_from_gain,
                      effective_inr, load_scenario, rho_from_db,
                      scenario_from_dict, validate_scenario)
from .errors import (AuditFailure, CaseMismatch, DegenerateSnr, InvalidBeta,
                     NotApplicable, NotInterferenceLimited, SamplerExhausted,
                     UnsupportedFormat, ValidationError)
from .experiments import (ConvergenceRow, GapReport, SandwichReport,
                          SweepRecord, gap_audit, gdof_convergence_probe,
                          sandwich_audit, sweep_regime_plane)
from .regime import (AuxChannelPair, RegimeVerdict, classify,
                     entropy_gap_conditions_hold, genie_aux_pair,
                     genie_satisfies_entropy_gap, in_extended_regime,
                     in_gsj_regime, psi)

__version__ = "0.1.0"

__all__ = [
    "AchievabilityResult", "AlphaMatrix", "AuditFailure", "AuxChannelPair",
    "BoundResult", "CaseMismatch", "ChannelScenario", "ConvergenceRow",
    "DegenerateSnr", "GapReport", "GenieParams", "IcConfig", "InvalidBeta",
    "NotApplicable", "NotInterferenceLimited", "RegimeVerdict",
    "SamplerExhausted", "SandwichReport", "SweepRecord", "TxPermutation",
    "UnsupportedFormat", "ValidationError", "alpha_from_gain", "classify",
    "effective_inr", "entropy_gap_conditions_hold", "enumerate_ic_configs",
    "enumerate_permutations", "gap_audit", "gdof_convergence_probe",
    "gdof_ub", "gdof_ub_case1", "gdof_ub_case2", "gdof_ub_single",
    "genie_aux_pair", "genie_params", "genie_params_from_gains",
    "genie_satisfies_entropy_gap", "in_extended_regime", "in_gsj_regime",
    "load_scenario", "psi", "rho_from_db", "sandwich_audit",
    "scenario_from_dict", "sum_capacity_ub", "sum_capacity_ub_single",
    "sweep_regime_plane", "tdma_tin_gdof", "tdma_tin_gdof_config",
    "tdma_tin_rate", "tin_sum_rate", "validate_scenario",
]
