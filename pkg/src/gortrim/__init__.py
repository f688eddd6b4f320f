"""Exact pfaffian computations for grade 3 Gorenstein ideals and the
Tor-algebra classification of their trimmings."""

from .linalg import FieldMatrix, PolyMatrix, det, det_poly, rank, rref, submatrix
from .pfaffian import SkewMatrix, pfaffians, product_ee, resolution, sigma3, sigma5, sub_pfaffian, theta
from .polyring import GF2, QQ, ZZ, Poly, PrimeField, Ring, parse_poly
from .trimclass import TorClass, TrimReport, build_cbar, build_qbar, classify, conjugate_by_permutation

__version__ = "0.1.0"
