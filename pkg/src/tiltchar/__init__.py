"""Graded characters of tilting modules for quantum groups at roots of unity.

Kazhdan-Lusztig polynomials for the (anti)spherical modules of the affine
Hecke algebra, the balanced t-polynomials built from them, and the
layer-balancing algorithm that reconstructs the same Loewy layers.
"""
from .affine_weyl import AlcoveElement, RootDatum, enumerate_wplus, parse_alcove
from .balance import ParityBlock, balance_from_alcove, balance_run
from .characters import tilting_layers, tilting_poly
from .errors import BalanceError, ConfigError, RangeError, TiltcharError
from .hecke import ModuleVector, Parity
from .kl import KLTable, TablePair
from .laurent import LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "AlcoveElement",
    "BalanceError",
    "ConfigError",
    "KLTable",
    "LaurentPoly",
    "ModuleVector",
    "Parity",
    "ParityBlock",
    "RangeError",
    "RootDatum",
    "TablePair",
    "TiltcharError",
    "balance_from_alcove",
    "balance_run",
    "enumerate_wplus",
    "parse_alcove",
    "tilting_layers",
    "tilting_poly",
]
