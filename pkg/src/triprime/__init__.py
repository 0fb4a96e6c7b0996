"""Graphs on finite permutation groups where two elements are adjacent when
they generate a subgroup whose order has at least k distinct prime divisors
(default k = 3), plus the machinery needed to study them: permutation
arithmetic, stabilizer chains, conjugacy classes, the prime graph on element
orders, and a verification harness."""

from .analysis import (
    LemmaOutcome,
    PrimeGraph,
    VerificationReport,
    check_fpf,
    check_higman,
    check_rdivides,
    is_path_on_three,
    omega_set,
    prime_graph,
    sigma_set,
    verify_theorem,
)
from .graph import (
    DistanceReport,
    DiameterResult,
    IsolatedVertexError,
    NonFGraph,
    adjacent,
    bfs,
    build_graph,
    diameter,
    distance,
    neighbor_order_profile,
)
from .groups import (
    ElementTable,
    OrderCapExceeded,
    PermutationGroup,
    StabilizerChain,
    catalog,
    centralizer_elements,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    enumerate_elements,
    is_solvable,
    load_group,
    normal_closure,
    parse_group_text,
    standard_catalog,
    two_generated_order,
)
from .perm import Permutation, format_cycles, from_cycles, identity, parse_cycles
from .primes import is_squarefree, prime_factors

__version__ = "0.1.0"
