"""Crystals, faces and canonical bases for level-r Fock spaces of affine type A."""

from .errors import DomainError, IntegrityError
from .qpoly import LaurentPoly, BinaryWord, gauss_binom, quantum_factorial, quantum_int
from .partitions import Multicharge, Multipartition, Node
from .weights import DominantWeight, WeightPoint
from .crystal import CrystalGraph, FaceSpec, build_crystal, face
from .fock import FockVector, eval_path
from .canonical import CanonicalElement, canonical_basis, shape, strip

__all__ = [
    "BinaryWord",
    "CanonicalElement",
    "CrystalGraph",
    "DomainError",
    "DominantWeight",
    "FaceSpec",
    "FockVector",
    "IntegrityError",
    "LaurentPoly",
    "Multicharge",
    "Multipartition",
    "Node",
    "WeightPoint",
    "build_crystal",
    "canonical_basis",
    "eval_path",
    "face",
    "gauss_binom",
    "quantum_factorial",
    "quantum_int",
    "shape",
    "strip",
]
