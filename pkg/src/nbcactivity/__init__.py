"""Activity of NBC sets of integral gain graphs, colored rooted trees and covering systems."""

from .covering import CoveringSystem, Verdict, verify_activity, verify_covering
from .forest import ColoredForest, ForestClass, classify, enumerate_forests, tree_statistic_vector
from .gaingraph import GainEdge, GainGraph, complete_interval
from .nbc import enumerate_nbc_sets, nbc_activity_vector, nbc_bases, region_counts
from .polycount import IntPolynomial, athanasiadis_bounded, rising_factorial_shifted

__all__ = [
    "ColoredForest",
    "CoveringSystem",
    "ForestClass",
    "GainEdge",
    "GainGraph",
    "IntPolynomial",
    "Verdict",
    "athanasiadis_bounded",
    "classify",
    "complete_interval",
    "enumerate_forests",
    "enumerate_nbc_sets",
    "nbc_activity_vector",
    "nbc_bases",
    "region_counts",
    "rising_factorial_shifted",
    "tree_statistic_vector",
    "verify_activity",
    "verify_covering",
]

__version__ = "0.1.0"
