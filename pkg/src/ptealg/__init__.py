"""Exact sl_n central characters, Grassmannian cohomology and PTE search."""

from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
