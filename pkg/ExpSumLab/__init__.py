"""
ExpSumLab: p-adic congruences for L-functions of exponential sums

Computes the p-density of an exponent set, Dwork's matrices over its
minimal support, exact L-functions of additive exponential sums over
finite fields, and checks the congruence between the two.

Sub-modules
-----------
ff
    Finite fields F_q and their extensions, sparse polynomials, point
    enumeration.
padic
    Unramified and ramified p-adic rings, the splitting function.
density
    Solutions of the modular equations, the support graph and the
    p-density as a minimum cycle mean.
dwork
    Dwork's matrices, characteristic polynomials and Fredholm
    determinants.
lfun
    Exponential sums, exact L-series and Artin-Schreier curves.
controller
    Configuration, verifiers, self-test and the command controller.
hpc
    Chunked parallel execution.
utils
    Constants, exceptions and logging setup.
"""

from . import ff
from . import padic
from . import density
from . import dwork
from . import lfun
from . import controller
from . import hpc
from . import utils

__version__ = "0.1.0"

__all__ = [
    "ff",
    "padic",
    "density",
    "dwork",
    "lfun",
    "controller",
    "hpc",
    "utils",
    "__version__",
]
