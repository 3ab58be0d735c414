"""Uplink rate formulas, rate-region metrics and Monte Carlo sweeps for a
macrocell/femtocell pair sharing a band over a limited backhaul."""

from ._core import (
    BackhaulCapacities,
    DecodingOrder,
    MaxMinCase,
    NetworkGeometry,
    PropagationParams,
    RatePoint,
    Scheme,
    SnrTriplet,
    SweepVariable,
    __version__,
    beta_eq,
    beta_wzq,
    capacity,
    df_rates,
    dfqsi_rates,
    max_min_oracle,
    max_min_region,
    max_min_two,
    max_sum_rate,
    qf_rates,
    run_sweep,
    run_verification,
    scheme_rates,
    snr_triplet,
    verify_wzq_identity,
)

__all__ = [
    "BackhaulCapacities",
    "DecodingOrder",
    "MaxMinCase",
    "NetworkGeometry",
    "PropagationParams",
    "RatePoint",
    "Scheme",
    "SnrTriplet",
    "SweepVariable",
    "__version__",
    "beta_eq",
    "beta_wzq",
    "capacity",
    "df_rates",
    "dfqsi_rates",
    "max_min_oracle",
    "max_min_region",
    "max_min_two",
    "max_sum_rate",
    "qf_rates",
    "run_sweep",
    "run_verification",
    "scheme_rates",
    "snr_triplet",
    "verify_wzq_identity",
]
