"""Exact semantics for ideal-wire circuits and bond graphs."""

from .corelation import Corelation, compose, identity, tensor
from .linrel import LinearRelation, rel_compose, rel_tensor
from .terms import BOND, COREL_PORT, COREL_WIRE, Signature, get_signature

__all__ = [
    "BOND",
    "COREL_PORT",
    "COREL_WIRE",
    "Corelation",
    "LinearRelation",
    "Signature",
    "compose",
    "get_signature",
    "identity",
    "rel_compose",
    "rel_tensor",
    "tensor",
]

__version__ = "0.1.0"
