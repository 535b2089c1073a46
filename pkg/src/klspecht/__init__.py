"""
Specht modules of the symmetric group in the Kazhdan-Lusztig basis.

Exact (integer and Fraction) implementations of:

* partitions, standard Young tableaux, and the total index order
  (`tableaux`);
* jeu de taquin promotion and partial evacuation (`jdt`);
* row-insertion RSK with column superstandard recording tableaux
  (`rsk`);
* one-line symmetric group combinatorics, Bruhat order, and separable /
  descending permutations (`symgroup`);
* Kazhdan-Lusztig polynomials and mu coefficients, with an independent
  R-polynomial oracle (`hecke`);
* the Specht module action in the KL basis, its index filtration, and
  branching to S_{n-1} (`specht`);
* exact QR factorization and the theorem verifiers: the long cycle acts
  by promotion up to triangular correction, products of parabolic
  longest elements act by partial evacuation symmetries, and the
  nonseparable pattern 2413 admits no such factorization (`qrkit`);
* a command line front end (`cli`).
"""

# cli is not imported eagerly so `python -m klspecht.cli` stays warning-free
from . import hecke, jdt, qrkit, reports, rsk, specht, symgroup, tableaux
from .hecke import (
    check_rhoades_insertion,
    format_qpoly,
    kl_oracle,
    kl_polynomial,
    mu,
    mu_tableaux,
)
from .jdt import evacuate, inverse_promote, partial_evacuate, promote
from .qrkit import (
    IrrationalNormError,
    SingularMatrixError,
    as_signed_permutation,
    exact_qr,
    phi_connected,
    preorder_connected,
    search_ordering,
    verify_counterexample,
    verify_thm1,
    verify_thm4_chain,
)
from .reports import CheckReport
from .rsk import column_word, css, css_i, inverse_rsk
from .specht import (
    check_branching,
    check_filtration_invariance,
    generator_matrix,
    matrix_of,
    quotient_matrices,
    total_index_order,
)
from .symgroup import (
    bruhat_leq,
    descending_decomposition,
    is_separable,
    long_cycle,
    longest_element,
    separable_tree,
)
from .tableaux import (
    count_syt,
    delete_largest,
    descent_set,
    enumerate_syt,
    removable_boxes,
    tableau_index,
    total_index_cmp,
)

__version__ = '0.1.0'
