"""Finite semigroup structure: Cayley tables, ideals, kernel, embedded groups.

Elements are indices 0..n-1 into a label list.  Element subsets are bitmasks
wrapped in ElementSet.  All operations are exact table lookups; the only
numeric library involved is numpy, used for the O(n^3) associativity sweep
and for bulk product enumeration on large sets.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptyGenerators,
    EmptySet,
    IndexOutOfRange,
    MalformedInput,
    MismatchedParent,
    NonAssociative,
    NotAGroup,
    NotASubsemigroup,
    OrderCapExceeded,
    VerificationFailed,
)

DEFAULT_ORDER_CAP = 1024


class Semigroup:
    """A finite semigroup presented by a full Cayley table.

    table[a][b] is the index of the product a*b.  Construct through
    validate_cayley, which is the only path that checks associativity.
    """

    __slots__ = ("labels", "rows", "_index", "_np")

    def __init__(self, labels, rows):
        self.labels = tuple(labels)
        self.rows = tuple(tuple(r) for r in rows)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._np = None

    @property
    def order(self):
        return len(self.labels)

    def mul(self, a, b):
        return self.rows[a][b]

    def label(self, a):
        return self.labels[a]

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise MalformedInput(f"unknown element label: {label!r}") from None

    def table_array(self):
        if self._np is None:
            self._np = np.array(self.rows, dtype=np.int32)
        return self._np

    def carrier(self):
        return ElementSet(self, (1 << self.order) - 1)

    def empty(self):
        return ElementSet(self, 0)

    def singleton(self, a):
        if not 0 <= a < self.order:
            raise MalformedInput(f"element index out of range: {a}")
        return ElementSet(self, 1 << a)

    def subset(self, indices):
        mask = 0
        for a in indices:
            if not 0 <= a < self.order:
                raise MalformedInput(f"element index out of range: {a}")
            mask |= 1 << a
        return ElementSet(self, mask)

    def subset_of_labels(self, labels):
        return self.subset(self.index(lab) for lab in labels)

    def __repr__(self):
        shown = ",".join(self.labels[:6])
        if self.order > 6:
            shown += ",..."
        return f"Semigroup(order={self.order}, labels=[{shown}])"


@dataclass(frozen=True, eq=False)
class ElementSet:
    """Subset of a semigroup's carrier, stored as a bitmask over indices."""

    parent: Semigroup
    mask: int

    def elements(self):
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return tuple(out)

    def labels(self):
        return tuple(self.parent.labels[a] for a in self.elements())

    def least(self):
        if not self.mask:
            raise EmptySet("empty set has no least element")
        return (self.mask & -self.mask).bit_length() - 1

    def __contains__(self, a):
        return bool((self.mask >> a) & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.elements())

    def __bool__(self):
        return self.mask != 0

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def union(self, other):
        _check_parent(self, other)
        return ElementSet(self.parent, self.mask | other.mask)

    def intersection(self, other):
        _check_parent(self, other)
        return ElementSet(self.parent, self.mask & other.mask)

    def difference(self, other):
        _check_parent(self, other)
        return ElementSet(self.parent, self.mask & ~other.mask)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def issubset(self, other):
        _check_parent(self, other)
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return f"ElementSet({{{','.join(self.labels())}}})"


def _check_parent(first, second):
    if first.parent is not second.parent:
        raise MismatchedParent("element sets belong to different semigroups")


def _as_set(x):
    if isinstance(x, Semigroup):
        return x.carrier()
    if isinstance(x, ElementSet):
        return x
    raise TypeError(f"expected Semigroup or ElementSet, got {type(x).__name__}")


def validate_cayley(labels, table, order_cap=None):
    """Build a Semigroup from labels and a Cayley table, checking everything.

    Checks: distinct labels, square table, entries in range, associativity.
    The associativity witness, if any, is the lexicographically first
    triple (a, b, c) with (a*b)*c != a*(b*c).
    """
    cap = DEFAULT_ORDER_CAP if order_cap is None else order_cap
    labels = list(labels)
    n = len(labels)
    if n == 0:
        raise MalformedInput("no elements")
    if len(set(labels)) != n:
        raise MalformedInput("duplicate element labels")
    if n > cap:
        raise OrderCapExceeded(n, cap)
    if len(table) != n:
        raise MalformedInput(f"table has {len(table)} rows for {n} elements")
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedInput(f"table row {i} has {len(row)} entries for {n} elements")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise IndexOutOfRange(i, j, v)

    t = np.array(table, dtype=np.int32)
    # (a*b)*c vs a*(b*c), swept in chunks of a to bound memory at ~32MB.
    chunk = max(1, (1 << 21) // max(1, n * n))
    for a0 in range(0, n, chunk):
        rows = t[a0 : a0 + chunk]          # (m, n)
        left = t[rows]                     # left[i, b, c]  = t[t[a, b], c]
        right = rows[:, t]                 # right[i, b, c] = t[a, t[b, c]]
        bad = left != right
        if bad.any():
            i, b, c = np.argwhere(bad)[0]
            raise NonAssociative(a0 + int(i), int(b), int(c))
    return Semigroup(labels, table)


def product_sets(first, second):
    """{a*b : a in first, b in second}.  Empty factor gives the empty set."""
    _check_parent(first, second)
    sg = first.parent
    aa, bb = first.elements(), second.elements()
    if not aa or not bb:
        return sg.empty()
    if len(aa) * len(bb) > 4096:
        t = sg.table_array()
        mask = 0
        for z in np.unique(t[np.ix_(aa, bb)]).tolist():
            mask |= 1 << z
        return ElementSet(sg, mask)
    rows = sg.rows
    mask = 0
    for a in aa:
        row = rows[a]
        for b in bb:
            mask |= 1 << row[b]
    return ElementSet(sg, mask)


def idempotents(x):
    """Elements with a*a = a, within the given carrier or subset."""
    s = _as_set(x)
    rows = s.parent.rows
    mask = 0
    for a in s:
        if rows[a][a] == a:
            mask |= 1 << a
    return ElementSet(s.parent, mask)


def generated_subsemigroup(gens):
    """Least subsemigroup containing the generators (closure under products)."""
    if not gens:
        raise EmptyGenerators("cannot generate from the empty set")
    cur = gens
    while True:
        nxt = cur | product_sets(cur, cur)
        if nxt == cur:
            return cur
        cur = nxt


def left_quotient(a, target):
    """{x : a*x in target}."""
    sg = target.parent
    row = sg.rows[a]
    mask = 0
    for x in range(sg.order):
        if row[x] in target:
            mask |= 1 << x
    return ElementSet(sg, mask)


def right_quotient(a, target):
    """{x : x*a in target}."""
    sg = target.parent
    rows = sg.rows
    mask = 0
    for x in range(sg.order):
        if rows[x][a] in target:
            mask |= 1 << x
    return ElementSet(sg, mask)


def is_left_ideal(ideal, within=None):
    """Whether S*I is contained in I (I nonempty), S the ambient carrier."""
    amb = _as_set(within) if within is not None else ideal.parent.carrier()
    if not ideal:
        raise EmptySet("ideal test on the empty set")
    return product_sets(amb, ideal).issubset(ideal)


def is_right_ideal(ideal, within=None):
    amb = _as_set(within) if within is not None else ideal.parent.carrier()
    if not ideal:
        raise EmptySet("ideal test on the empty set")
    return product_sets(ideal, amb).issubset(ideal)


def is_ideal(ideal, within=None):
    return is_left_ideal(ideal, within) and is_right_ideal(ideal, within)


def _closure_witness(subset):
    """First pair (a, b) in subset with a*b outside it, or None if closed."""
    rows = subset.parent.rows
    els = subset.elements()
    for a in els:
        row = rows[a]
        for b in els:
            if row[b] not in subset:
                return (a, b)
    return None


def _require_subsemigroup(subset):
    if not subset:
        raise EmptySet("empty set is not a subsemigroup")
    w = _closure_witness(subset)
    if w is not None:
        raise NotASubsemigroup(*w)


def is_left_simple(subset):
    """Whether A*a = A for every a in A (A a subsemigroup)."""
    _require_subsemigroup(subset)
    for a in subset:
        if product_sets(subset, subset.parent.singleton(a)) != subset:
            return False
    return True


def is_right_simple(subset):
    _require_subsemigroup(subset)
    for a in subset:
        if product_sets(subset.parent.singleton(a), subset) != subset:
            return False
    return True


def is_simple(subset):
    """Whether A*a*A = A for every a in A (no proper two-sided ideals)."""
    w = _simplicity_witness(subset)
    return w is None


def _simplicity_witness(subset):
    _require_subsemigroup(subset)
    for a in subset:
        if product_sets(product_sets(subset, subset.parent.singleton(a)), subset) != subset:
            return a
    return None


def principal_left_ideal(x, a):
    """S*a together with a itself."""
    s = _as_set(x)
    return product_sets(s, s.parent.singleton(a)) | s.parent.singleton(a)


def principal_right_ideal(x, a):
    s = _as_set(x)
    return product_sets(s.parent.singleton(a), s) | s.parent.singleton(a)


def minimal_left_ideals(x):
    """Inclusion-minimal principal left ideals, sorted by least member.

    These are exactly the minimal left ideals: any left ideal contains the
    principal ideal of each of its members.  Each returned I is verified to
    satisfy S*a = I for every a in I.
    """
    s = _as_set(x)
    return _minimal_principal(s, principal_left_ideal, left=True)


def minimal_right_ideals(x):
    s = _as_set(x)
    return _minimal_principal(s, principal_right_ideal, left=False)


def _minimal_principal(s, principal, left):
    seen = {}
    for a in s:
        ideal = principal(s, a)
        seen[ideal.mask] = ideal
    ideals = list(seen.values())
    minimal = [
        i
        for i in ideals
        if not any(j.mask != i.mask and j.issubset(i) for j in ideals)
    ]
    for ideal in minimal:
        for a in ideal:
            single = s.parent.singleton(a)
            swept = product_sets(s, single) if left else product_sets(single, s)
            if swept != ideal:
                raise VerificationFailed(
                    "minimal ideal criterion",
                    f"ideal {ideal.labels()} not regenerated by element {s.parent.label(a)}",
                )
    minimal.sort(key=lambda i: i.least())
    return minimal


def kernel(x):
    """The least two-sided ideal: union of the minimal left ideals.

    Verified to be an ideal with S*z*S = K for every z in K, which pins it
    as the unique inclusion-minimal ideal.
    """
    s = _as_set(x)
    parts = minimal_left_ideals(s)
    k = s.parent.empty()
    for part in parts:
        k = k | part
    if not is_ideal(k, s):
        raise VerificationFailed("kernel ideal", "union of minimal left ideals is not an ideal")
    # S*z*S = (S*z)*S = A*S for the minimal left ideal A containing z, so
    # one sweep per part covers every z.
    for part in parts:
        if product_sets(part, s) != k:
            raise VerificationFailed(
                "kernel product identity",
                f"S*z*S != K for z in {part.labels()}",
            )
    return k


def group_structure(subset):
    """Check that a subset is a group under the ambient product and extract
    its identity and inverse map.

    A finite subsemigroup is a group exactly when x*A = A = A*x for every x;
    that test is run first and its witness reported on failure.
    """
    _require_subsemigroup(subset)
    sg = subset.parent
    for a in subset:
        single = sg.singleton(a)
        if product_sets(single, subset) != subset:
            raise NotAGroup("left translation is not onto", sg.label(a))
        if product_sets(subset, single) != subset:
            raise NotAGroup("right translation is not onto", sg.label(a))
    els = subset.elements()
    anchor = els[0]
    identity = None
    for e in els:
        if sg.mul(e, anchor) == anchor:
            identity = e
            break
    if identity is None:
        raise VerificationFailed("group identity", "no left identity on anchor element")
    for a in els:
        if sg.mul(identity, a) != a or sg.mul(a, identity) != a:
            raise VerificationFailed("group identity", f"not two-sided at {sg.label(a)}")
    inverses = {}
    for a in els:
        inv = next((b for b in els if sg.mul(a, b) == identity), None)
        if inv is None or sg.mul(inv, a) != identity:
            raise VerificationFailed("group inverses", f"no two-sided inverse for {sg.label(a)}")
        inverses[a] = inv
    return GroupStructure(carrier=subset, identity=identity, inverses=inverses)


@dataclass(frozen=True, eq=False)
class GroupStructure:
    """A subset verified to be a group, with identity and inverse map."""

    carrier: ElementSet
    identity: int
    inverses: dict = field(repr=False)

    @property
    def parent(self):
        return self.carrier.parent

    @property
    def order(self):
        return len(self.carrier)

    def inv(self, a):
        return self.inverses[a]

    def __contains__(self, a):
        return a in self.carrier

    def __iter__(self):
        return iter(self.carrier)

    def __eq__(self, other):
        if not isinstance(other, GroupStructure):
            return NotImplemented
        return self.carrier == other.carrier and self.identity == other.identity

    def __hash__(self):
        return hash((self.carrier, self.identity))

    def __repr__(self):
        return (
            f"GroupStructure(order={self.order}, "
            f"identity={self.parent.label(self.identity)})"
        )
