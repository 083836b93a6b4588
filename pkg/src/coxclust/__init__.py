"""Exact combinatorics of reflection factorizations, adapted words and clusters.

Roots are integer tuples in the simple-root basis; letters, vertices and
word positions are 1-based.
"""

from __future__ import annotations

from .adapted import (
    AdaptedFrame,
    ar_quiver_from_word,
    build_frame,
    condition3,
    deleted_word,
    frame_for,
    is_reduced_w0,
    reflection_product_identity,
    long_word,
    projective_positions,
    rho,
)
from .braid import (
    Factorization,
    OrbitReport,
    enumerate_factorizations,
    hurwitz_orbit,
    reflection_length,
    sigma,
    sigma_inverse,
)
from .core import (
    CartanData,
    GroupElement,
    build_cartan,
    coxeter_element,
    dynkin,
    from_cartan,
    from_quiver,
    longest_element,
    parse_quiver_file,
    positive_roots,
    reduced_word,
    reflection,
    word_to_element,
)
from .errors import CoxclustError
from .mutation import ExchangeGraph, MutationStep, algebraic_mutate, exchange_graph, verify_unique_complement
from .reptheory import HomTable, Indec, hom_table, is_cluster_tilting, is_exceptional_sequence, knit_ar_quiver
from .schur import PrefixVerdict, is_real_root, prefix_set, prefix_test, prefix_to_generators

__version__ = "0.1.0"
