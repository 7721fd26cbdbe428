"""Exact workbench for coset-conjugacy conditions in finite permutation groups."""

from .catalog import CatalogEntry, builtin, builtin_catalog, parse_group_file
from .chartab import (
    CharacterTable,
    ClassFunction,
    character_table,
    decompose,
    dixon_prime,
    induce,
    inner_product,
    is_homogeneous_induction,
    kernel_of,
    restrict,
)
from .conditions import (
    ConditionVerdict,
    bs_hypothesis,
    derangements,
    equal_order_coset,
    is_camina_pair,
    is_equal_order_pair,
    satisfies_CI,
    satisfies_F,
    satisfies_Fpm,
    satisfies_O,
)
from .cyclotomic import Cyc, cyclotomic_polynomial
from .grouptable import CapExceeded, ElementSet, GroupTable, generate, left_coset
from .perm import Permutation, compose, conjugate, element_order, inverse
from .structure import (
    ConjClassPartition,
    SeriesChain,
    center,
    centralizer,
    class_product,
    commutator_subgroup,
    conjugacy_classes,
    core,
    derived_series,
    exponent,
    is_frobenius_with_kernel,
    is_nilpotent,
    is_solvable,
    normal_closure,
    o_lower_p,
    o_upper_p,
    p_decomposition,
    subgroups,
    sylow_subgroup,
    upper_central_series,
)
from .reports import (
    ReportRecord,
    cached_character_table,
    load_reports,
    persist_reports,
)
from .verify import (
    VerificationReport,
    summarize,
    sweep,
    verify_cor1,
    verify_cor2,
    verify_covering,
    verify_lemma_suite,
    verify_odd_order,
    verify_theorem1,
    verify_theorem2,
)

__version__ = "0.1.0"
