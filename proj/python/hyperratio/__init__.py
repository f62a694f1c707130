"""Bounds and rigorous enclosures for ratios of contiguous hypergeometric functions."""

from ._core import (  # noqa: F401
    Enclosure,
    HyperratioError,
    OracleResult,
    bessel,
    bessel_i_ratio,
    bessel_k_ratio,
    bound_ids,
    bound_info,
    confluent,
    cubic_nullcline_root,
    estimate_order,
    evaluate_bound,
    gauss,
    gauss_ratio,
    gauss_series,
    kummer_ratio,
    kummer_series,
    pcf,
    pcf_ratio,
    riccati_instances,
    run_riccati,
    verify_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
