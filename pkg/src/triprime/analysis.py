"""Prime-set analysis, the prime graph on element orders, and the verification harness.

The harness adjudicates, per group: connectivity and the diameter bound 5 of
the subgroup-prime-count graph, the dominating-element property, closeness of
multi-prime-order elements, the solvable-group properties, and the shape of
the prime graph whenever a solvable three-prime group with large diameter
shows up.
"""

from dataclasses import dataclass, field
from typing import Optional

from . import graph as graphmod
from .groups import is_solvable, two_generated_order
from .primes import is_squarefree, prime_factors


def sigma_set(table):
    """Indices of elements whose order has at least two distinct prime divisors."""
    return {i for i, ps in enumerate(table.primes_of) if len(ps) >= 2}


def omega_set(graph, n):
    """Non-isolated elements with order divisible by the squarefree n and
    prime support contained in the primes of n."""
    if not is_squarefree(n):
        raise ValueError(f"{n} is not squarefree")
    support = prime_factors(n)
    table = graph.table
    return {
        i
        for i in range(len(table.elements))
        if not graph.isolated[i]
        and table.order_of[i] % n == 0
        and table.primes_of[i] <= support
    }


@dataclass
class PrimeGraph:
    """Vertices: primes dividing |G|; edge {p,q} iff some element has order exactly p*q."""

    vertices: frozenset
    edges: set        # of frozenset pairs
    components: list  # of sets of primes


def prime_graph(table):
    vertices = prime_factors(len(table.elements))
    orders = set(table.order_of)
    primes = sorted(vertices)
    edges = set()
    for a in range(len(primes)):
        for b in range(a + 1, len(primes)):
            if primes[a] * primes[b] in orders:
                edges.add(frozenset((primes[a], primes[b])))
    parent = {p: p for p in primes}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for e in edges:
        a, b = sorted(e)
        parent[find(a)] = find(b)
    comps = {}
    for p in primes:
        comps.setdefault(find(p), set()).add(p)
    components = sorted(comps.values(), key=min)
    return PrimeGraph(vertices=vertices, edges=edges, components=components)


def is_path_on_three(pg):
    """If the prime graph is a two-edge path on three vertices, return the
    labeling (endpoint, center, endpoint); otherwise None."""
    if len(pg.vertices) != 3 or len(pg.edges) != 2:
        return None
    degree = {p: 0 for p in pg.vertices}
    for e in pg.edges:
        for p in e:
            degree[p] += 1
    centers = [p for p, d in degree.items() if d == 2]
    ends = sorted(p for p, d in degree.items() if d == 1)
    if len(centers) != 1 or len(ends) != 2:
        return None
    return ends[0], centers[0], ends[1]


@dataclass
class LemmaOutcome:
    name: str
    outcome: str  # "pass" | "fail" | "not-applicable"
    witness: Optional[object] = None

    def to_dict(self):
        d = {"name": self.name, "outcome": self.outcome}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def check_higman(group, table, graph):
    """For solvable groups: all prime-power orders forces at most two primes
    dividing |G|, and a non-empty vertex set forces a multi-prime element."""
    if not is_solvable(group):
        return LemmaOutcome("higman", "not-applicable")
    sigma = sigma_set(table)
    eppo = not sigma
    if eppo and len(prime_factors(len(table.elements))) > 2:
        return LemmaOutcome("higman", "fail", witness="all orders prime powers yet >2 primes")
    if len(graph.vertices) > 0 and not sigma:
        v = int(graph.vertices[0])
        return LemmaOutcome("higman", "fail", witness=f"vertex {v} exists but sigma empty")
    return LemmaOutcome("higman", "pass")


def _require_normal_prime_power(group, table, subset):
    """Validate a lemma input: subset must be closed under conjugation by the
    group's generators and have prime-power size > 1. Returns the prime."""
    for i in subset:
        p = table.elements[i]
        for g in group.generators:
            if table.index_of[p.conjugate(g)] not in subset:
                raise ValueError("subset is not normal in the group")
    size = len(subset)
    ps = prime_factors(size) if size > 1 else frozenset()
    if len(ps) != 1:
        raise ValueError(f"subset size {size} is not a nontrivial prime power")
    return next(iter(ps))


def check_rdivides(group, table, normal_indices, x1, x2):
    """Search translates of x1, x2 by the normal p-subgroup whose span has
    order divisible by p."""
    p = _require_normal_prime_power(group, table, normal_indices)
    e1 = table.elements[x1]
    e2 = table.elements[x2]
    for n1 in normal_indices:
        a = e1 * table.elements[n1]
        for n2 in normal_indices:
            b = e2 * table.elements[n2]
            if two_generated_order(a, b) % p == 0:
                return LemmaOutcome("translate_pair_divisible", "pass", witness=(n1, n2))
    return LemmaOutcome("translate_pair_divisible", "fail", witness=(x1, x2))


def check_fpf(group, table, normal_indices, x, y):
    """Fixed-point-free case: with C_N(x) trivial, some single translate of y
    spans with x a subgroup of order divisible by p."""
    from .groups import centralizer_elements

    p = _require_normal_prime_power(group, table, normal_indices)
    if centralizer_elements(table, normal_indices, x) != {0}:
        return LemmaOutcome("translate_single_divisible", "not-applicable", witness=x)
    ex = table.elements[x]
    ey = table.elements[y]
    for n in normal_indices:
        if two_generated_order(ex, ey * table.elements[n]) % p == 0:
            return LemmaOutcome("translate_single_divisible", "pass", witness=n)
    return LemmaOutcome("translate_single_divisible", "fail", witness=(x, y))


@dataclass
class VerificationReport:
    group: str
    order: int
    primes: list
    solvable: bool
    isolated_count: int
    status: str
    diameter: Optional[int]
    max_pi_tilde: int
    sigma_count: int
    prime_graph: dict
    lemmas: list = field(default_factory=list)

    @property
    def ok(self):
        return all(l.outcome != "fail" for l in self.lemmas)

    def to_dict(self):
        return {
            "group": self.group,
            "order": self.order,
            "primes": self.primes,
            "solvable": self.solvable,
            "isolated_count": self.isolated_count,
            "status": self.status,
            "diameter": self.diameter,
            "max_pi_tilde": self.max_pi_tilde,
            "sigma_count": self.sigma_count,
            "prime_graph": self.prime_graph,
            "lemmas": [l.to_dict() for l in self.lemmas],
        }


def _sigma_pair_check(graph, sigma):
    """Every conjugacy-representative sigma vertex must reach every sigma
    vertex within two hops (covers all pairs up to conjugation)."""
    table = graph.table
    sigma_vertices = [i for i in sorted(sigma) if not graph.isolated[i]]
    sigma_reps = [r for r in table.class_reps if r in sigma and not graph.isolated[r]]
    for r in sigma_reps:
        dist = graphmod._bfs_levels(graph, r)
        for t in sigma_vertices:
            if dist[t] < 0 or dist[t] > 2:
                return r, t
    return None


def _near_sigma_check(graph, sigma):
    """Every non-isolated class representative must be within two hops of a
    sigma element."""
    table = graph.table
    for r in table.class_reps:
        if graph.isolated[r]:
            continue
        dist = graphmod._bfs_levels(graph, r)
        if not any(0 <= dist[t] <= 2 for t in sigma if not graph.isolated[t]):
            return r
    return None


def verify_theorem(group, cap=100_000, jobs=1, name=None, table=None, graph=None):
    """Build the graph for the group and adjudicate every applicable claim.

    Returns a VerificationReport; a claim that fails carries a concrete
    witness (an element index or a pair).
    """
    if table is None:
        table = group.element_table(cap)
    if graph is None:
        graph = graphmod.build_graph(table, jobs=jobs)
    order = len(table.elements)
    primes = sorted(prime_factors(order))
    solvable = is_solvable(group)
    sigma = sigma_set(table)
    max_pi = max(len(ps) for ps in table.primes_of)
    pg = prime_graph(table)
    diam = graphmod.diameter(graph)
    lemmas = []

    def verdict(name_, applicable, passed, witness=None):
        if not applicable:
            lemmas.append(LemmaOutcome(name_, "not-applicable"))
        elif passed:
            lemmas.append(LemmaOutcome(name_, "pass"))
        else:
            lemmas.append(LemmaOutcome(name_, "fail", witness=witness))

    # main claim: nonempty graphs are connected with diameter at most 5
    verdict(
        "connected_diameter_le_5",
        diam.status != "empty",
        diam.status == "connected" and diam.value <= 5,
        witness=diam.witness if diam.status == "disconnected" else diam.value,
    )

    # an element with >= 3 prime divisors dominates: no isolated vertices, diameter <= 2
    verdict(
        "dominating_element",
        max_pi >= 3,
        max_pi < 3 or (graph.isolated.sum() == 0 and diam.status == "connected" and diam.value <= 2),
        witness=diam.value if diam.status == "connected" else diam.witness,
    )

    # elements with two-prime orders are pairwise within distance 2
    if len(primes) >= 3:
        bad = _sigma_pair_check(graph, sigma)
        verdict("sigma_pairs_within_2", True, bad is None, witness=bad)
    else:
        lemmas.append(LemmaOutcome("sigma_pairs_within_2", "not-applicable"))

    # solvable, some vertex: every vertex is within 2 of a sigma element
    if solvable and len(graph.vertices) > 0:
        bad = _near_sigma_check(graph, sigma)
        verdict("vertex_near_sigma", True, bad is None, witness=bad)
    else:
        lemmas.append(LemmaOutcome("vertex_near_sigma", "not-applicable"))

    lemmas.append(check_higman(group, table, graph))

    # solvable three-prime group with diameter > 4 forces a two-edge path prime graph
    applicable = solvable and len(primes) == 3 and diam.status == "connected" and diam.value > 4
    verdict(
        "large_diameter_prime_graph_path",
        applicable,
        (not applicable) or is_path_on_three(pg) is not None,
        witness=sorted(tuple(sorted(e)) for e in pg.edges),
    )

    # solvable with >= 4 primes: diameter at most 3
    applicable = solvable and len(primes) >= 4 and diam.status != "empty"
    verdict(
        "solvable_four_primes_diameter_le_3",
        applicable,
        (not applicable) or (diam.status == "connected" and diam.value <= 3),
        witness=diam.witness or diam.value,
    )

    # solvable with exactly 3 primes: diameter at most 5
    applicable = solvable and len(primes) == 3 and diam.status != "empty"
    verdict(
        "solvable_three_primes_diameter_le_5",
        applicable,
        (not applicable) or (diam.status == "connected" and diam.value <= 5),
        witness=diam.witness or diam.value,
    )

    return VerificationReport(
        group=name or group.name or f"degree-{group.degree} group",
        order=order,
        primes=primes,
        solvable=solvable,
        isolated_count=int(graph.isolated.sum()),
        status=diam.status,
        diameter=diam.value,
        max_pi_tilde=max_pi,
        sigma_count=len(sigma),
        prime_graph={
            "vertices": sorted(pg.vertices),
            "edges": sorted(sorted(e) for e in pg.edges),
            "components": [sorted(c) for c in pg.components],
        },
        lemmas=lemmas,
    )
