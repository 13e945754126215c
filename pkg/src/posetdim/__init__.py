"""Three-word realizers for tree and unicycle posets, with exact checks."""
from .classify import classify, decompose, graft
from .crown import crown_poset, crown_realizer
from .errors import PosetError
from .graft import realize_any, unicycle_realizer
from .poset import Poset, build_poset, realizes

__all__ = [
    "Poset",
    "PosetError",
    "build_poset",
    "classify",
    "crown_poset",
    "crown_realizer",
    "decompose",
    "graft",
    "realize_any",
    "realizes",
    "unicycle_realizer",
]
