"""Finite permutation groups: stabilizer chains, element tables, catalog.

The stabilizer chain is a deterministic Schreier-Sims: base points are chosen
as the smallest point moved at each level, orbits are closed breadth-first in
generator order, so the chain (and everything derived from it) is reproducible
for a fixed generator sequence.
"""

from collections import deque
from dataclasses import dataclass, field

from .perm import Permutation, identity, parse_cycles
from .primes import prime_factors

DEFAULT_CAP = 100_000

_DERIVED_SERIES_LIMIT = 64


class OrderCapExceeded(RuntimeError):
    """Raised when a group is larger than the enumeration cap."""

    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds cap {cap}; raise the cap to proceed")
        self.order = order
        self.cap = cap


class StabilizerChain:
    """Base, basic orbits and transversals for a permutation group.

    Transversal entries are stored as (u, u_inverse) pairs with u mapping the
    base point of the level to the orbit point.
    """

    def __init__(self, generators, degree=None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("need a degree or at least one generator")
            degree = len(generators[0])
        for g in generators:
            if len(g) != degree:
                raise ValueError(f"degree mismatch: {len(g)} vs {degree}")
        self.degree = degree
        self.base = []
        self.strong_gens = []
        self.transversals = []
        seen = set()
        for g in generators:
            if not g.is_identity() and g not in seen:
                seen.add(g)
                self._install(g)
        self._close()

    # -- construction ------------------------------------------------------

    def _install(self, g):
        """Record a strong generator, extending the base so that g moves some base point."""
        self.strong_gens.append(g)
        if all(g[b] == b for b in self.base):
            b = next(i for i in range(len(g)) if g[i] != i)
            self.base.append(b)
            self.transversals.append(None)

    def _gens_at(self, level):
        prefix = self.base[:level]
        return [g for g in self.strong_gens if all(g[b] == b for b in prefix)]

    def _orbit(self, level, gens):
        b = self.base[level]
        e = identity(self.degree)
        trans = {b: (e, e)}
        queue = deque([b])
        while queue:
            p = queue.popleft()
            u = trans[p][0]
            for s in gens:
                q = s[p]
                if q not in trans:
                    v = u * s
                    trans[q] = (v, v.inverse())
                    queue.append(q)
        self.transversals[level] = trans

    def _close(self):
        """Work levels bottom-up until every Schreier generator sifts to the identity."""
        if not self.base:
            return
        for level in range(len(self.base)):
            self._orbit(level, self._gens_at(level))
        level = len(self.base) - 1
        while level >= 0:
            residue_level = self._check_level(level)
            if residue_level is None:
                level -= 1
            else:
                for l in range(level, len(self.base)):
                    self._orbit(l, self._gens_at(l))
                level = residue_level

    def _check_level(self, level):
        """Sift all Schreier generators of this level; install the first non-trivial residue.

        Returns the level the new strong generator belongs to, or None when
        the level is complete.
        """
        gens = self._gens_at(level)
        self._orbit(level, gens)
        trans = self.transversals[level]
        for p in sorted(trans):
            u = trans[p][0]
            for s in gens:
                sg = u * s * trans[s[p]][1]
                if sg.is_identity():
                    continue
                h, drop = self.sift(sg, level + 1)
                if not h.is_identity():
                    grew = drop == len(self.base)
                    self._install(h)
                    if grew:
                        self._orbit(drop, self._gens_at(drop))
                    return drop
        return None

    # -- queries -----------------------------------------------------------

    def sift(self, p, start=0):
        """Reduce p through the chain; returns (residue, level reached)."""
        for level in range(start, len(self.base)):
            x = p[self.base[level]]
            entry = self.transversals[level].get(x)
            if entry is None:
                return p, level
            p = p * entry[1]
        return p, len(self.base)

    def order(self):
        n = 1
        for trans in self.transversals:
            n *= len(trans)
        return n

    def contains(self, p):
        if len(p) != self.degree:
            raise ValueError(f"degree mismatch: {len(p)} vs {self.degree}")
        residue, _ = self.sift(p)
        return residue.is_identity()

    def add_generator(self, g):
        """Extend the chain with one more generator; no-op if already a member."""
        if self.contains(g):
            return False
        self._install(g)
        self._close()
        return True


def two_generated_order(x, y):
    """|<x, y>| computed from a fresh stabilizer chain on {x, y}."""
    if len(x) != len(y):
        raise ValueError(f"degree mismatch: {len(x)} vs {len(y)}")
    return StabilizerChain([x, y], degree=len(x)).order()


class PermutationGroup:
    """A finite permutation group given by generators; chain built lazily."""

    def __init__(self, generators, degree=None, name=None):
        generators = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not generators:
                raise ValueError("need a degree or at least one generator")
            degree = len(generators[0])
        for g in generators:
            if len(g) != degree:
                raise ValueError(f"all generators must have degree {degree}")
        if not generators:
            generators = [identity(degree)]
        self.degree = degree
        self.generators = generators
        self.name = name
        self._chain = None
        self._table = None

    @property
    def chain(self):
        if self._chain is None:
            self._chain = StabilizerChain(self.generators, self.degree)
        return self._chain

    def order(self):
        return self.chain.order()

    def contains(self, p):
        return self.chain.contains(p)

    def __contains__(self, p):
        return self.contains(p)

    def __repr__(self):
        label = self.name or f"degree-{self.degree} group"
        return f"<PermutationGroup {label}, {len(self.generators)} generators>"

    def element_table(self, cap=DEFAULT_CAP):
        if self._table is None or len(self._table.elements) > cap:
            self._table = enumerate_elements(self, cap)
        return self._table


@dataclass
class ElementTable:
    """Exhaustive indexed listing of a group's elements with cached invariants.

    Index 0 is the identity. conjugator[i] is an element h with
    elements[class_rep(class_of[i])] ^ h = elements[i].
    """

    degree: int
    generators: list
    elements: list
    index_of: dict
    order_of: list
    primes_of: list
    class_of: list = field(default_factory=list)
    class_reps: list = field(default_factory=list)
    conjugator: list = field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    def class_members(self, cid):
        return [i for i, c in enumerate(self.class_of) if c == cid]


def enumerate_elements(group, cap=DEFAULT_CAP):
    """Materialize all elements of the group, with orders, prime sets and classes.

    Enumeration is breadth-first closure of the generators under right
    multiplication, independent of the stabilizer chain (the two orders are
    cross-checked in the test suite).
    """
    order = group.order()
    if order > cap:
        raise OrderCapExceeded(order, cap)
    e = identity(group.degree)
    elements = [e]
    index_of = {e: 0}
    queue = deque([e])
    while queue:
        p = queue.popleft()
        for g in group.generators:
            q = p * g
            if q not in index_of:
                index_of[q] = len(elements)
                elements.append(q)
                queue.append(q)
    orders = [p.order() for p in elements]
    table = ElementTable(
        degree=group.degree,
        generators=list(group.generators),
        elements=elements,
        index_of=index_of,
        order_of=orders,
        primes_of=[prime_factors(o) if o > 1 else frozenset() for o in orders],
    )
    conjugacy_classes(table)
    return table


def conjugacy_classes(table):
    """Fill class ids, representatives and conjugators by orbit closure.

    Classes are the orbits of conjugation by the generators; the
    representative of each class is its least element index.
    """
    n = len(table.elements)
    class_of = [-1] * n
    conjugator = [None] * n
    reps = []
    e = identity(table.degree)
    gen_pairs = [(g.inverse(), g) for g in table.generators]
    for i in range(n):
        if class_of[i] >= 0:
            continue
        cid = len(reps)
        reps.append(i)
        class_of[i] = cid
        conjugator[i] = e
        queue = deque([i])
        while queue:
            x = queue.popleft()
            px = table.elements[x]
            hx = conjugator[x]
            for ginv, g in gen_pairs:
                y = table.index_of[ginv * px * g]
                if class_of[y] < 0:
                    class_of[y] = cid
                    conjugator[y] = hx * g
                    queue.append(y)
    table.class_of = class_of
    table.class_reps = reps
    table.conjugator = conjugator
    return table


def centralizer_elements(table, subset, x):
    """Indices n in `subset` with elements[n] * elements[x] = elements[x] * elements[n]."""
    px = table.elements[x]
    return {i for i in subset if table.elements[i] * px == px * table.elements[i]}


def normal_closure(group, seeds):
    """Smallest subgroup containing the seeds that is closed under conjugation
    by the group's generators."""
    seeds = list(seeds)
    for s in seeds:
        if not group.contains(s):
            raise ValueError(f"seed {s} is not an element of the group")
    gens = [s for s in seeds if not s.is_identity()]
    if not gens:
        return PermutationGroup([identity(group.degree)], degree=group.degree)
    chain = StabilizerChain(gens, group.degree)
    queue = deque(gens)
    closure_gens = list(gens)
    while queue:
        s = queue.popleft()
        for g in group.generators:
            c = s.conjugate(g)
            if chain.add_generator(c):
                closure_gens.append(c)
                queue.append(c)
    return PermutationGroup(closure_gens, degree=group.degree)


def derived_subgroup(group):
    """Normal closure of the commutators of the generator pairs."""
    comms = []
    gens = group.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            c = a.commutator(b)
            if not c.is_identity():
                comms.append(c)
    return normal_closure(group, comms)


def is_solvable(group):
    """Whether the derived series reaches the trivial group."""
    current = group
    order = current.order()
    for _ in range(_DERIVED_SERIES_LIMIT):
        if order == 1:
            return True
        current = derived_subgroup(current)
        next_order = current.order()
        if next_order == order:
            return False
        order = next_order
    raise RuntimeError("derived series did not terminate within the depth bound")


# -- catalog ---------------------------------------------------------------


def _cyclic(n):
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    if n == 1:
        return PermutationGroup([identity(1)], name="cyclic(1)")
    a = Permutation([(i + 1) % n for i in range(n)])
    return PermutationGroup([a], name=f"cyclic({n})")


def _dihedral(order):
    if order < 6 or order % 2:
        raise ValueError("dihedral group needs an even order >= 6")
    m = order // 2
    a = Permutation([(i + 1) % m for i in range(m)])
    b = Permutation([(-i) % m for i in range(m)])
    return PermutationGroup([a, b], name=f"dihedral({order})")


def _symmetric(n):
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if n == 1:
        return PermutationGroup([identity(1)], name="symmetric(1)")
    cycle = Permutation([(i + 1) % n for i in range(n)])
    swap = Permutation([1, 0] + list(range(2, n)))
    return PermutationGroup([swap, cycle], name=f"symmetric({n})")


def _alternating(n):
    if n < 3:
        return PermutationGroup([identity(max(n, 1))], name=f"alternating({n})")
    three = Permutation([1, 2, 0] + list(range(3, n)))
    if n % 2:
        cycle = Permutation([(i + 1) % n for i in range(n)])
    else:
        cycle = Permutation([0] + [1 + (i + 1) % (n - 1) for i in range(n - 1)])
    return PermutationGroup([three, cycle], name=f"alternating({n})")


def _frobenius21():
    # C7 : C3, the affine maps x -> ax + b on F7 with a in {1, 2, 4}
    shift = Permutation([(i + 1) % 7 for i in range(7)])
    double = Permutation([(2 * i) % 7 for i in range(7)])
    return PermutationGroup([shift, double], name="frobenius21")


def _psl27():
    # GL(3, 2) acting on the 7 nonzero vectors of F_2^3; vector (b0,b1,b2)
    # is encoded as the point b0 + 2*b1 + 4*b2 - 1.
    def mat_perm(m):
        images = []
        for v in range(1, 8):
            bits = [(v >> k) & 1 for k in range(3)]
            w = [sum(m[r][c] * bits[c] for c in range(3)) % 2 for r in range(3)]
            images.append(w[0] + 2 * w[1] + 4 * w[2] - 1)
        return Permutation(images)

    transvection = mat_perm([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    rotate = mat_perm([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    return PermutationGroup([transvection, rotate], name="psl27")


def _sl23_mats():
    s = [[0, 2], [1, 0]]
    t = [[1, 1], [0, 1]]
    return s, t


def _sl23():
    # SL(2, 3) acting on the 8 nonzero vectors of F_3^2; vector (x, y) is
    # encoded as the point x + 3*y - 1.
    def mat_perm(m):
        images = []
        for v in range(1, 9):
            x, y = v % 3, v // 3
            w = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)
            images.append(w[0] + 3 * w[1] - 1)
        return Permutation(images)

    s, t = _sl23_mats()
    return PermutationGroup([mat_perm(s), mat_perm(t)], name="sl23")


def _sl23_example():
    """(C3 x C3 x C7) : SL(2,3), order 1512, as a degree-16 group.

    Points 0-8 carry the affine plane F_3^2 (point x + 3*y) acted on by
    translations and by SL(2,3) linearly. Points 9-15 carry F_7 acted on by
    translation and, through the abelianization of SL(2,3), by x -> 2x.
    """

    def build(plane_mat, plane_shift, line_mult, line_shift):
        images = []
        for v in range(9):
            x, y = v % 3, v // 3
            nx = (plane_mat[0][0] * x + plane_mat[0][1] * y + plane_shift[0]) % 3
            ny = (plane_mat[1][0] * x + plane_mat[1][1] * y + plane_shift[1]) % 3
            images.append(nx + 3 * ny)
        for u in range(7):
            images.append(9 + (line_mult * u + line_shift) % 7)
        return Permutation(images)

    eye = [[1, 0], [0, 1]]
    s, t = _sl23_mats()
    gens = [
        build(eye, (1, 0), 1, 0),  # translation of the plane
        build(eye, (0, 1), 1, 0),  # translation of the plane
        build(eye, (0, 0), 1, 1),  # translation of the line
        build(s, (0, 0), 1, 0),    # order-4 matrix, trivial on the line
        build(t, (0, 0), 2, 0),    # order-3 matrix, doubling on the line
    ]
    return PermutationGroup(gens, name="sl23_example")


def direct_product(g, h, name=None):
    """Direct product acting on the disjoint union of the two point sets."""
    n, m = g.degree, h.degree
    gens = [Permutation(list(a) + list(range(n, n + m))) for a in g.generators]
    gens += [Permutation(list(range(n)) + [n + i for i in b]) for b in h.generators]
    if name is None:
        name = f"{g.name or 'G'} x {h.name or 'H'}"
    return PermutationGroup(gens, degree=n + m, name=name)


_PARAMETRIC = {
    "cyclic": _cyclic,
    "dihedral": _dihedral,
    "symmetric": _symmetric,
    "alternating": _alternating,
}

_FIXED = {
    "frobenius21": _frobenius21,
    "psl27": _psl27,
    "sl23": _sl23,
    "sl23_example": _sl23_example,
}


def catalog(name, n=None):
    """Construct a named catalog group; parametric families take n."""
    if name in _PARAMETRIC:
        if n is None:
            raise ValueError(f"catalog group {name!r} needs a parameter n")
        return _PARAMETRIC[name](n)
    if name in _FIXED:
        if n is not None:
            raise ValueError(f"catalog group {name!r} takes no parameter")
        return _FIXED[name]()
    known = sorted(_PARAMETRIC) + sorted(_FIXED)
    raise ValueError(f"unknown catalog group {name!r}; known: {', '.join(known)}")


def standard_catalog():
    """The groups swept by the verification harness, in a fixed order."""
    entries = [
        catalog("cyclic", 2),
        catalog("cyclic", 30),
        catalog("cyclic", 105),
        catalog("cyclic", 210),
        catalog("dihedral", 30),
        catalog("dihedral", 210),
        catalog("symmetric", 4),
        catalog("symmetric", 5),
        catalog("alternating", 5),
        catalog("frobenius21"),
        direct_product(catalog("frobenius21"), catalog("cyclic", 2)),
        direct_product(catalog("dihedral", 30), catalog("cyclic", 7)),
        direct_product(catalog("alternating", 5), catalog("cyclic", 7)),
        catalog("psl27"),
        catalog("sl23"),
        catalog("sl23_example"),
    ]
    return entries


# -- group files -----------------------------------------------------------


def parse_group_text(text, source="<string>"):
    """Parse the group file format: "degree: n" then "gen: <cycles>" lines."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"{source}:{lineno}: expected 'degree:' or 'gen:' line")
        key, _, value = line.partition(":")
        key = key.strip().lower()
        value = value.strip()
        if key == "degree":
            if degree is not None:
                raise ValueError(f"{source}:{lineno}: duplicate degree line")
            try:
                degree = int(value)
            except ValueError:
                raise ValueError(f"{source}:{lineno}: bad degree {value!r}") from None
            if degree < 1:
                raise ValueError(f"{source}:{lineno}: degree must be positive")
        elif key == "gen":
            if degree is None:
                raise ValueError(f"{source}:{lineno}: 'gen:' before 'degree:'")
            try:
                gens.append(parse_cycles(value, degree))
            except ValueError as exc:
                raise ValueError(f"{source}:{lineno}: {exc}") from None
        else:
            raise ValueError(f"{source}:{lineno}: unknown key {key!r}")
    if degree is None:
        raise ValueError(f"{source}: missing 'degree:' line")
    if not gens:
        raise ValueError(f"{source}: no generators")
    return PermutationGroup(gens, degree=degree, name=source)


def load_group(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_text(fh.read(), source=str(path))
