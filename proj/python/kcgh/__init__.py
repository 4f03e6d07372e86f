"""Layer-based holography: scene synthesis, propagation, generation,
evaluation, and phase-only encoding over numpy arrays."""

from ._kcgh import (
    Error,
    HologramSample,
    OpticalConfig,
    RgbdFrame,
    SceneParams,
    dpac_decode,
    dpac_encode,
    evaluate,
    focal_image_projection,
    generate,
    off_axis_ramp,
    propagate,
    psnr,
    read_container,
    read_pfm,
    reconstruct_at,
    ssim,
    synthesize_scene,
    write_container,
    write_pfm,
    z_max,
)

__all__ = [
    "Error",
    "HologramSample",
    "OpticalConfig",
    "RgbdFrame",
    "SceneParams",
    "dpac_decode",
    "dpac_encode",
    "evaluate",
    "focal_image_projection",
    "generate",
    "off_axis_ramp",
    "propagate",
    "psnr",
    "read_container",
    "read_pfm",
    "reconstruct_at",
    "ssim",
    "synthesize_scene",
    "write_container",
    "write_pfm",
    "z_max",
]
