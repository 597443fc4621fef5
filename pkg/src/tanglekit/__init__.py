"""Exact counting and uniform random sampling of tanglegrams,
inequivalent binary rooted trees, and tangled chains.

The package is organized around sums over binary partitions: partition
holds the partitions and their weights, counting the exact formulas and
recurrences, sample the uniform generators, asym the floating-point
approximations, oracle the brute-force cross-checks, and cli the
command-line front end.
"""

from .counting import (
    chain_count,
    chain_count_rec,
    double_coset_count,
    tanglegram_count,
    tanglegram_count_mu,
    tanglegram_count_rec,
    tree_count,
    tree_count_oracle,
)
from .sample import (
    Tanglegram,
    TangledChain,
    random_chain,
    random_tanglegram,
    random_tree,
)
from .tree import enumerate_trees

__version__ = "0.1.0"

__all__ = [
    "Tanglegram",
    "TangledChain",
    "chain_count",
    "chain_count_rec",
    "double_coset_count",
    "enumerate_trees",
    "random_chain",
    "random_tanglegram",
    "random_tree",
    "tanglegram_count",
    "tanglegram_count_mu",
    "tanglegram_count_rec",
    "tree_count",
    "tree_count_oracle",
    "__version__",
]
