"""Sorted collections, hypersimplex circuit triangulations, and exact
certification of minor arrangements on the positive Grassmannian.

Conventions shared with the command line tool:

* subsets are strings like ``"1,3,5"`` (1-based elements of ``[n]``),
* collections are strings like ``"1,2;1,3;1,4;2,4"``,
* rational numbers travel as ``"p/q"`` strings (use :func:`to_fraction`).
"""

from fractions import Fraction

from ._hypergrass import (
    HypergrassError,
    circuit,
    cubical_distance,
    dual_graph,
    empirical_poset,
    enumerate_maximal_sorted,
    eulerian_number,
    eval_matrix,
    infer_poset,
    interval_distance,
    is_sorted_collection,
    is_sorted_pair,
    normalize,
    run_experiment,
    sort_images,
    witness,
    young_grid,
)

__version__ = "1.0.0"

__all__ = [
    "HypergrassError",
    "circuit",
    "cubical_distance",
    "dual_graph",
    "empirical_poset",
    "enumerate_maximal_sorted",
    "eulerian_number",
    "eval_matrix",
    "infer_poset",
    "interval_distance",
    "is_sorted_collection",
    "is_sorted_pair",
    "normalize",
    "run_experiment",
    "sort_images",
    "to_fraction",
    "witness",
    "young_grid",
]


def to_fraction(text):
    """Convert a ``"p/q"`` string from any result payload to a Fraction."""
    return Fraction(text)
