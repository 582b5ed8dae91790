"""Exceptional-surface optomechanics: spectra, group delay and eigenvalues."""

from ._core import (
    EsomitError,
    Model,
    eigen_split,
    es_coupling,
    preset_info,
    preset_names,
)

__all__ = [
    "EsomitError",
    "Model",
    "eigen_split",
    "es_coupling",
    "preset_info",
    "preset_names",
]
