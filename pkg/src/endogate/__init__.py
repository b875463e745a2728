"""Certified trivial endomorphism rings for hyperelliptic Jacobians with big Galois group."""

__version__ = "0.1.0"

from .dichotomy import Verdict, check_dichotomy, classify, closed_algebra, run_trials
from .fieldreduce import reduce_even_degree
from .galois import Conclusion, Group, certify_big_galois, reverify, verdict
from .gf2linalg import BitMatrix, BitVector, SubspaceBasis, algebra_closure, commutant, echelonize
from .polynomial import IntPolynomial, discriminant, parse_polynomial, resultant
from .qspace import EvenSubset, LabelSet, Permutation, perm_matrix, verify_splitting
from .reptheory import GroupGenerators, standard_generators

__all__ = [
    "BitMatrix",
    "BitVector",
    "Conclusion",
    "EvenSubset",
    "Group",
    "GroupGenerators",
    "IntPolynomial",
    "LabelSet",
    "Permutation",
    "SubspaceBasis",
    "Verdict",
    "algebra_closure",
    "certify_big_galois",
    "check_dichotomy",
    "classify",
    "closed_algebra",
    "commutant",
    "discriminant",
    "echelonize",
    "parse_polynomial",
    "perm_matrix",
    "reduce_even_degree",
    "resultant",
    "reverify",
    "run_trials",
    "standard_generators",
    "verdict",
    "verify_splitting",
]
