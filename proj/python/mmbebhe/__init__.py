"""Integer-only brightness-preserving bi-histogram equalization."""

from ._mmbebhe import (
    Error,
    GrayImage,
    Histogram,
    PixelMap,
    SimulationResult,
    SmbeTable,
    StageReport,
    Threshold,
    VerifyResult,
    ambe,
    apply_map,
    brute_force_threshold,
    calculate_smbe,
    find_threshold,
    generate_hist,
    he_map,
    mmbebhe,
    read_map_file,
    read_pgm,
    simulate,
    smbe_closed_form,
    verify,
    write_map_file,
    write_pgm,
)

__all__ = [
    "Error",
    "GrayImage",
    "Histogram",
    "PixelMap",
    "SimulationResult",
    "SmbeTable",
    "StageReport",
    "Threshold",
    "VerifyResult",
    "ambe",
    "apply_map",
    "brute_force_threshold",
    "calculate_smbe",
    "find_threshold",
    "generate_hist",
    "he_map",
    "mmbebhe",
    "read_map_file",
    "read_pgm",
    "simulate",
    "smbe_closed_form",
    "verify",
    "write_map_file",
    "write_pgm",
]
