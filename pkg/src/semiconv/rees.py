"""Product decomposition of completely simple semigroups.

A simple finite semigroup S with an idempotent e splits as S = L*G*R with
L = E(Se), G = eSe (a group with identity e), R = E(eS), and the product
map psi(x, g, y) = x*g*y a bijection L x G x R -> S.  The inverse has the
closed form psi_inv(z) = (z*e*(e*z*e)^-1, e*z*e, (e*z*e)^-1*e*z).

Also builds the converse construction: the semigroup on I x G x J with
product (i, g, k)(j, h, l) = (i, g*P[k][j]*h, l) for a sandwich matrix P.
"""

from dataclasses import dataclass

from .core import (
    ElementSet,
    GroupStructure,
    _as_set,
    _simplicity_witness,
    group_structure,
    idempotents,
    product_sets,
    validate_cayley,
)
from .errors import (
    InvalidSandwichEntry,
    NotIdempotent,
    NotInFactor,
    NotPrimitive,
    NotSimple,
    ParameterOutOfRange,
    VerificationFailed,
)


@dataclass(frozen=True, eq=False)
class ReesDecomposition:
    """S = left * group * right, anchored at the idempotent base."""

    carrier: ElementSet
    base: int
    left: ElementSet
    group: GroupStructure
    right: ElementSet

    @property
    def parent(self):
        return self.carrier.parent

    def __repr__(self):
        return (
            f"ReesDecomposition(base={self.parent.label(self.base)}, "
            f"|L|={len(self.left)}, |G|={self.group.order}, |R|={len(self.right)})"
        )


def is_primitive_idempotent(x, e):
    """Whether no other idempotent f satisfies e*f = f*e = f."""
    s = _as_set(x)
    rows = s.parent.rows
    if rows[e][e] != e or e not in s:
        raise NotIdempotent(s.parent.label(e) if 0 <= e < s.parent.order else e)
    for f in idempotents(s):
        if f != e and rows[e][f] == f and rows[f][e] == f:
            return False
    return True


def rees_decompose(x, at=None):
    """Decompose a completely simple (sub)semigroup at an idempotent.

    With at=None the anchor is the least-index idempotent.  Every clause of
    the decomposition is verified on the concrete table before returning;
    a failure raises VerificationFailed naming the clause.
    """
    s = _as_set(x)
    sg = s.parent
    w = _simplicity_witness(s)
    if w is not None:
        raise NotSimple(sg.label(w))
    ids = idempotents(s)
    if not ids:
        raise VerificationFailed("idempotent existence", "no idempotent in a finite semigroup")
    if at is None:
        e = ids.least()
    else:
        e = at
        if e not in ids:
            raise NotIdempotent(sg.label(e) if 0 <= e < sg.order else e)
    if not is_primitive_idempotent(s, e):
        below = next(
            f for f in ids if f != e and sg.mul(e, f) == f and sg.mul(f, e) == f
        )
        raise NotPrimitive(sg.label(e), sg.label(below))

    single_e = sg.singleton(e)
    se = product_sets(s, single_e)
    es = product_sets(single_e, s)
    left = idempotents(se)
    right = idempotents(es)
    g_set = product_sets(single_e, se)
    group = group_structure(g_set)
    if group.identity != e:
        raise VerificationFailed("group", "identity of e*S*e differs from e")

    dec = ReesDecomposition(carrier=s, base=e, left=left, group=group, right=right)
    _verify_decomposition(dec, se, es)
    return dec


def _verify_decomposition(dec, se, es):
    g_set = dec.group.carrier
    lg = product_sets(dec.left, g_set)
    gr = product_sets(g_set, dec.right)
    if lg != se or len(dec.left) * len(g_set) != len(se):
        raise VerificationFailed("left group", "S*e does not split as L x G")
    if gr != es or len(g_set) * len(dec.right) != len(es):
        raise VerificationFailed("right group", "e*S does not split as G x R")
    single_e = dec.parent.singleton(dec.base)
    if not product_sets(dec.right, dec.left).issubset(g_set):
        raise VerificationFailed("interface", "R*L not contained in G")
    if product_sets(single_e, dec.left) != single_e:
        raise VerificationFailed("interface", "e*L != {e}")
    if product_sets(dec.right, single_e) != single_e:
        raise VerificationFailed("interface", "R*e != {e}")
    full = product_sets(lg, dec.right)
    if full != dec.carrier:
        raise VerificationFailed("bijection", "L*G*R does not cover the carrier")
    if len(dec.left) * len(g_set) * len(dec.right) != len(dec.carrier):
        raise VerificationFailed("bijection", "factor sizes do not multiply to the order")
    for z in dec.carrier:
        if psi(dec, *psi_inv(dec, z)) != z:
            raise VerificationFailed("bijection", f"round trip failed at {dec.parent.label(z)}")


def psi(dec, x, g, y):
    """Product map (x, g, y) -> x*g*y."""
    if x not in dec.left:
        raise NotInFactor("left", dec.parent.label(x) if 0 <= x < dec.parent.order else x)
    if g not in dec.group.carrier:
        raise NotInFactor("group", dec.parent.label(g) if 0 <= g < dec.parent.order else g)
    if y not in dec.right:
        raise NotInFactor("right", dec.parent.label(y) if 0 <= y < dec.parent.order else y)
    sg = dec.parent
    return sg.mul(sg.mul(x, g), y)


def psi_inv(dec, z):
    """Coordinates (x, g, y) of z: closed form, then checked by multiplying back."""
    if z not in dec.carrier:
        raise NotInFactor("carrier", dec.parent.label(z) if 0 <= z < dec.parent.order else z)
    sg = dec.parent
    e = dec.base
    ze = sg.mul(z, e)
    eze = sg.mul(e, ze)
    g_inv = dec.group.inv(eze)
    x = sg.mul(ze, g_inv)
    y = sg.mul(g_inv, sg.mul(e, z))
    if x not in dec.left or eze not in dec.group.carrier or y not in dec.right:
        raise VerificationFailed("coordinates", f"inverse image of {sg.label(z)} left the factors")
    if sg.mul(sg.mul(x, eze), y) != z:
        raise VerificationFailed("coordinates", f"x*g*y != z at {sg.label(z)}")
    return (x, eze, y)


def idempotent_criterion(dec, x, y):
    """The unique idempotent with coordinates (x, *, y): g = (y*x)^-1."""
    if x not in dec.left:
        raise NotInFactor("left", dec.parent.label(x) if 0 <= x < dec.parent.order else x)
    if y not in dec.right:
        raise NotInFactor("right", dec.parent.label(y) if 0 <= y < dec.parent.order else y)
    sg = dec.parent
    yx = sg.mul(y, x)
    z = psi(dec, x, dec.group.inv(yx), y)
    if sg.mul(z, z) != z:
        raise VerificationFailed("idempotent criterion", f"x*(y*x)^-1*y not idempotent at ({x},{y})")
    return z


def rebase(dec, new_base):
    """Redecompose at another idempotent e' and verify the translation laws.

    With (a, g0, b) = psi_inv(e'): L'G' = L*G*b, G' = a*G*b, G'R' = a*G*R.
    """
    sg = dec.parent
    if new_base not in dec.carrier or sg.mul(new_base, new_base) != new_base:
        raise NotIdempotent(sg.label(new_base) if 0 <= new_base < sg.order else new_base)
    a, _, b = psi_inv(dec, new_base)
    fresh = rees_decompose(dec.carrier, at=new_base)

    g_old = dec.group.carrier
    g_new = fresh.group.carrier
    sa, sb = sg.singleton(a), sg.singleton(b)
    lg_old = product_sets(dec.left, g_old)
    if product_sets(fresh.left, g_new) != product_sets(lg_old, sb):
        raise VerificationFailed("rebase left", "L'G' != L*G*b")
    if g_new != product_sets(sa, product_sets(g_old, sb)):
        raise VerificationFailed("rebase group", "G' != a*G*b")
    if product_sets(g_new, fresh.right) != product_sets(sa, product_sets(g_old, dec.right)):
        raise VerificationFailed("rebase right", "G'R' != a*G*R")
    return fresh


def rees_matrix_semigroup(group_table, rows, cols, sandwich):
    """Semigroup on {0..rows-1} x G x {0..cols-1} with a sandwich matrix.

    group_table must be the Cayley table of a group; sandwich is cols x rows
    with entries indexing group elements.  Product:
    (i, g, k) * (j, h, l) = (i, g * sandwich[k][j] * h, l).
    Labels are "(i,glabel,k)".  The result is revalidated through
    validate_cayley before returning.
    """
    if rows < 1 or cols < 1:
        raise ParameterOutOfRange(f"need at least one row and column, got {rows}x{cols}")
    group_structure(group_table.carrier())  # raises NotAGroup on a non-group table
    n_g = group_table.order
    if len(sandwich) != cols:
        raise ParameterOutOfRange(f"sandwich has {len(sandwich)} rows, expected {cols}")
    for k, srow in enumerate(sandwich):
        if len(srow) != rows:
            raise ParameterOutOfRange(f"sandwich row {k} has {len(srow)} entries, expected {rows}")
        for j, v in enumerate(srow):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n_g:
                raise InvalidSandwichEntry(k, j, v)

    def enc(i, g, k):
        return (i * n_g + g) * cols + k

    labels = [
        f"({i},{group_table.label(g)},{k})"
        for i in range(rows)
        for g in range(n_g)
        for k in range(cols)
    ]
    order = rows * n_g * cols
    table = [[0] * order for _ in range(order)]
    for i in range(rows):
        for g in range(n_g):
            for k in range(cols):
                row = table[enc(i, g, k)]
                for j in range(rows):
                    gp = group_table.mul(g, sandwich[k][j])
                    for h in range(n_g):
                        v = group_table.mul(gp, h)
                        for l in range(cols):
                            row[enc(j, h, l)] = enc(i, v, l)
    return validate_cayley(labels, table)
