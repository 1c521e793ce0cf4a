"""altring: exact analysis of finite nonassociative rings over Z/kZ."""

from .core import (
    Element,
    RingMismatchError,
    RingSpec,
    Submodule,
    associator,
    canonicalize,
    commutator,
    kernel_submodule,
)

__all__ = [
    "Element",
    "RingMismatchError",
    "RingSpec",
    "Submodule",
    "associator",
    "canonicalize",
    "commutator",
    "kernel_submodule",
]

__version__ = "0.1.0"
