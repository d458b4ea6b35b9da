"""Convolution powers, exact Cesaro limits, and the cluster-group analysis.

The anchor result: for any exact-rational mu on a finite semigroup, the
Cesaro averages of the convolution powers converge to an idempotent,
mu-invariant nu whose support is the kernel of the subsemigroup generated
by supp(mu).  The power sequence mu^n itself clusters to a finite cyclic
group of measures {eta, mu*eta, ..., mu^(p-1)*eta} whose structure mirrors
a quotient G/H read off the product decomposition of supp(nu);
analyze_limit computes the whole picture and proof-checks every clause on
the concrete instance.

Everything here is exact; the only floating point is the optional shadow
iteration, which is diagnostic.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._rat import ONE, RAT, ZERO
from .core import (
    ElementSet,
    GroupStructure,
    Semigroup,
    generated_subsemigroup,
    group_structure,
    kernel,
    product_sets,
)
from .errors import (
    Cancelled,
    MalformedInput,
    MismatchedParent,
    NotAGroup,
    NotSimple,
    OrderCapExceeded,
    SemiconvError,
    SingularDecomposition,
    TheoremViolation,
    VerificationFailed,
)
from .linalg import nullspace, solve, transpose
from .measure import Dist, convolve, haar_uniform, marginals, support, translate
from .rees import ReesDecomposition, rees_decompose

DEFAULT_EXACT_CAP = 300


def _check_cancel(cancel):
    if cancel is None:
        return
    fired = cancel.is_set() if hasattr(cancel, "is_set") else cancel()
    if fired:
        raise Cancelled("analysis cancelled")


def _check_cap(sg, order_cap):
    cap = DEFAULT_EXACT_CAP if order_cap is None else order_cap
    if sg.order > cap:
        raise OrderCapExceeded(sg.order, cap)


@dataclass(frozen=True, eq=False)
class ConvolutionOperator:
    """Row-stochastic matrix of z -> z*s transitions weighted by mu(s)."""

    parent: Semigroup
    matrix: tuple

    def apply(self, dist):
        if dist.parent is not self.parent:
            raise MismatchedParent("distribution and operator on different semigroups")
        n = self.parent.order
        out = [ZERO] * n
        for z, p in dist.items():
            row = self.matrix[z]
            for w in range(n):
                if row[w]:
                    out[w] += p * row[w]
        return Dist(self.parent, out)


def convolution_operator(mu):
    sg = mu.parent
    n = sg.order
    items = mu.items()
    rows_out = []
    for z in range(n):
        row = [ZERO] * n
        zr = sg.rows[z]
        for s, p in items:
            row[zr[s]] += p
        if sum(row, ZERO) != ONE:
            raise VerificationFailed("operator stochastic", f"row {z} does not sum to 1")
        rows_out.append(tuple(row))
    return ConvolutionOperator(parent=sg, matrix=tuple(rows_out))


def power(mu, n):
    """Exact n-fold convolution of mu with itself, by repeated squaring."""
    if n < 1:
        raise MalformedInput(f"power exponent must be >= 1, got {n}")
    result = None
    base = mu
    while n:
        if n & 1:
            result = base if result is None else convolve(result, base)
        n >>= 1
        if n:
            base = convolve(base, base)
    return result


def cesaro_average(mu, n):
    """(1/n) * (mu + mu^2 + ... + mu^n), exact."""
    if n < 1:
        raise MalformedInput(f"average length must be >= 1, got {n}")
    acc = list(mu.probs)
    cur = mu
    for _ in range(n - 1):
        cur = convolve(cur, mu)
        for i, p in cur.items():
            acc[i] += p
    inv = RAT(1, n)
    return Dist(mu.parent, [a * inv for a in acc])


def tv_distance(mu, nu):
    """Half the l1 distance between the probability vectors."""
    if mu.parent is not nu.parent:
        raise MismatchedParent("distributions on different semigroups")
    return variation_norm(mu, nu) / 2


def variation_norm(mu, nu):
    """Unhalved l1 distance; the norm in which the 2j/n bound is tight."""
    if mu.parent is not nu.parent:
        raise MismatchedParent("distributions on different semigroups")
    total = ZERO
    for p, q in zip(mu.probs, nu.probs):
        total += abs(p - q)
    return total


def _reachable_states(mu):
    """States hit by some power: closure of supp(mu) under right steps."""
    sg = mu.parent
    gens = support(mu).elements()
    rows = sg.rows
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for z in frontier:
            row = rows[z]
            for s in gens:
                w = row[s]
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def cesaro_limit(mu, order_cap=None, cancel=None):
    """Exact limit of the Cesaro averages of mu, mu^2, mu^3, ...

    Decomposes mu = nu + w with nu in the fixed row space of the transition
    matrix M (nu*M = nu) and w in the row-range of (M - I), by solving one
    linear system over the states reachable from supp(mu).  That is the
    spectral projection onto the eigenvalue-1 eigenspace along its
    complement, restricted to the part of the space the walk can see.
    The result is verified idempotent and mu-invariant before returning.
    """
    _check_cap(mu.parent, order_cap)
    sg = mu.parent
    states = _reachable_states(mu)
    pos = {z: i for i, z in enumerate(states)}
    k = len(states)
    items = mu.items()
    rows = sg.rows
    # N = M - I restricted to reachable states (closed under the walk).
    n_rows = []
    for z in states:
        row = [ZERO] * k
        zr = rows[z]
        for s, p in items:
            row[pos[zr[s]]] += p
        row[pos[z]] -= ONE
        n_rows.append(row)
    _check_cancel(cancel)
    nt = transpose(n_rows)
    left_kernel = nullspace(nt)
    if not left_kernel:
        raise SingularDecomposition("fixed space of the transition matrix is empty")
    _check_cancel(cancel)
    # Columns: left-kernel basis vectors, then columns of N^T (= rows of N).
    stacked = [
        [vec[i] for vec in left_kernel] + nt[i]
        for i in range(k)
    ]
    mu_restricted = [mu.probs[z] for z in states]
    coeffs = solve(stacked, mu_restricted)
    if coeffs is None:
        raise SingularDecomposition("kernel and range of (M - I) do not span")
    probs = [ZERO] * sg.order
    for j, vec in enumerate(left_kernel):
        c = coeffs[j]
        if c:
            for i, z in enumerate(states):
                if vec[i]:
                    probs[z] += c * vec[i]
    nu = Dist(sg, probs)
    if convolve(nu, nu) != nu:
        raise VerificationFailed("limit idempotent", "nu * nu != nu")
    if convolve(mu, nu) != nu or convolve(nu, mu) != nu:
        raise VerificationFailed("limit invariance", "mu * nu != nu or nu * mu != nu")
    return nu


def support_period(mu):
    """Least (q, p) with supp(mu^(q+p)) = supp(mu^q).

    Exact cycle detection with a first-occurrence map over the bitmask
    sequence A_(n+1) = A_n * A_1; the first repeat of a deterministic
    sequence lands exactly at the preperiod.
    """
    base = support(mu)
    seen = {}
    cur = base
    step = 1
    while cur.mask not in seen:
        seen[cur.mask] = step
        cur = product_sets(cur, base)
        step += 1
    q = seen[cur.mask]
    return q, step - q


def _transition_period(mu):
    """lcm of the periods of the terminal strongly connected components of
    the walk graph; mu^(n*d) converges as n grows, so d is a multiple of
    the cluster period."""
    sg = mu.parent
    gens = support(mu).elements()
    states = _reachable_states(mu)
    rows = sg.rows
    succ = {z: sorted({rows[z][s] for s in gens}) for z in states}
    comp = _strongly_connected(states, succ)
    comp_of = {}
    for idx, comp_states in enumerate(comp):
        for z in comp_states:
            comp_of[z] = idx
    terminal = []
    for idx, comp_states in enumerate(comp):
        if all(comp_of[w] == idx for z in comp_states for w in succ[z]):
            terminal.append(comp_states)
    d = 1
    for comp_states in terminal:
        d = math.lcm(d, _component_period(comp_states, succ))
    return d


def _strongly_connected(states, succ):
    """Tarjan's algorithm, iterative."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = [0]

    for root in states:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp_states = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp_states.append(w)
                    if w == node:
                        break
                comps.append(sorted(comp_states))
    return comps


def _component_period(comp_states, succ):
    """gcd of cycle lengths within one strongly connected component."""
    inside = set(comp_states)
    root = comp_states[0]
    level = {root: 0}
    frontier = [root]
    g = 0
    while frontier:
        nxt = []
        for z in frontier:
            for w in succ[z]:
                if w not in inside:
                    continue
                if w in level:
                    g = math.gcd(g, level[z] + 1 - level[w])
                else:
                    level[w] = level[z] + 1
                    nxt.append(w)
        frontier = nxt
    return abs(g) if g else 1


@dataclass(frozen=True, eq=False)
class PowerCluster:
    """Cycle structure of the powers of a single element."""

    q: int
    p: int
    cluster: ElementSet
    idempotent: int


def element_power_cluster(sg, a):
    """Least q, p with a^(q+p) = a^q, the power cycle C, and its identity.

    Verifies that C is a cyclic group with identity e = a^(rp) for the
    unique r with q <= rp <= q+p-1, and that C = {e, ae, ..., a^(p-1)e}.
    """
    seen = {}
    powers = [None]
    cur = a
    step = 1
    while cur not in seen:
        seen[cur] = step
        powers.append(cur)
        cur = sg.mul(cur, a)
        step += 1
    q = seen[cur]
    p = step - q
    cluster = sg.subset(powers[q : q + p])
    r = -(-q // p)  # ceil(q / p): unique r with q <= rp <= q + p - 1
    if not q <= r * p <= q + p - 1:
        raise VerificationFailed("power cycle", f"no valid r for q={q}, p={p}")
    e = powers[r * p]
    if sg.mul(e, e) != e:
        raise VerificationFailed("power cycle", "a^(rp) is not idempotent")
    grp = group_structure(cluster)
    if grp.identity != e:
        raise VerificationFailed("power cycle", "group identity differs from a^(rp)")
    b = sg.mul(a, e)
    orbit = [e]
    x = b
    while x != e:
        orbit.append(x)
        x = sg.mul(x, b)
    if sg.subset(orbit) != cluster or len(orbit) != p:
        raise VerificationFailed("power cycle", "cycle is not generated by a*e")
    return PowerCluster(q=q, p=p, cluster=cluster, idempotent=e)


@dataclass(frozen=True, eq=False)
class LimitReport:
    """Everything the limit theorem asserts about one walk, checked."""

    nu: Dist
    q: int
    p: int
    eta: Dist
    cluster: tuple
    rees: ReesDecomposition
    H: GroupStructure
    gamma: int
    checks: dict


def analyze_limit(mu, order_cap=None, cancel=None):
    """Full limit analysis of the convolution powers of mu.

    Computes the Cesaro limit nu, the cluster identity eta, the cluster
    cycle [eta, mu*eta, ..., mu^(p-1)*eta], the product decomposition of
    supp(nu) with subgroup H and coset generator gamma, and verifies every
    structural clause exactly.  A failed clause raises TheoremViolation;
    the returned report's check map is therefore all-True.
    """
    _check_cap(mu.parent, order_cap)
    sg = mu.parent
    checks = {}

    def record(name, ok, detail=""):
        checks[name] = bool(ok)
        if not ok:
            raise TheoremViolation(name, detail)

    nu = cesaro_limit(mu, order_cap=order_cap, cancel=cancel)
    record("nu_idempotent", convolve(nu, nu) == nu)
    record("nu_invariant", convolve(mu, nu) == nu and convolve(nu, mu) == nu)

    generated = generated_subsemigroup(support(mu))
    walk_kernel = kernel(generated)
    record(
        "support_nu_is_kernel",
        support(nu) == walk_kernel,
        f"supp(nu)={support(nu).labels()}, kernel={walk_kernel.labels()}",
    )
    _check_cancel(cancel)

    try:
        dec = rees_decompose(walk_kernel)
    except NotSimple as exc:
        raise TheoremViolation("kernel completely simple", str(exc)) from exc
    e = dec.base
    g_carrier = dec.group.carrier
    record(
        "support_nu_product",
        support(nu) == product_sets(product_sets(dec.left, g_carrier), dec.right),
    )

    q, _support_p = support_period(mu)

    d = _transition_period(mu)
    eta = nu if d == 1 else cesaro_limit(power(mu, d), order_cap=order_cap, cancel=cancel)
    record("eta_idempotent", convolve(eta, eta) == eta)
    _check_cancel(cancel)

    single_e = sg.singleton(e)
    h_set = product_sets(single_e, product_sets(support(eta), single_e))
    record("subgroup_in_group", h_set.issubset(g_carrier))
    try:
        subgroup = group_structure(h_set)
    except (NotAGroup, SemiconvError) as exc:
        raise TheoremViolation("subgroup_structure", str(exc)) from exc
    record(
        "eta_support_product",
        support(eta) == product_sets(product_sets(dec.left, h_set), dec.right),
    )

    normal = all(
        product_sets(
            sg.singleton(g), product_sets(h_set, sg.singleton(dec.group.inv(g)))
        )
        == h_set
        for g in g_carrier
    )
    record("subgroup_normal", normal)

    mu_eta = convolve(mu, eta)
    gamma_set = product_sets(single_e, product_sets(support(mu_eta), single_e))
    gamma = gamma_set.least()
    gamma_coset = product_sets(sg.singleton(gamma), h_set)
    record("gamma_coset", gamma_set == gamma_coset)
    record(
        "gamma_representative_independent",
        all(product_sets(sg.singleton(z), h_set) == gamma_coset for z in gamma_set),
    )

    # Cluster cycle: iterate mu^k * eta until it returns to eta.
    cluster = [eta]
    cur = mu_eta
    while cur != eta:
        cluster.append(cur)
        cur = convolve(mu, cur)
        if len(cluster) > sg.order:
            raise TheoremViolation("cluster_cycle", "mu^k * eta never returned to eta")
        _check_cancel(cancel)
    p = len(cluster)
    record(
        "period_matches_quotient",
        p * subgroup.order == dec.group.order,
        f"p={p}, |G|={dec.group.order}, |H|={subgroup.order}",
    )
    mu_p = power(mu, p)
    record(
        "eta_power_invariant",
        convolve(mu_p, eta) == eta and convolve(eta, mu_p) == eta,
    )

    gamma_pows = [e]
    for _ in range(2 * p):
        gamma_pows.append(sg.mul(gamma_pows[-1], gamma))
    cosets = [product_sets(sg.singleton(gamma_pows[k]), h_set) for k in range(p)]
    union = sg.empty()
    for cos in cosets:
        union = union | cos
    record(
        "coset_powers_exhaust",
        len({cos.mask for cos in cosets}) == p and union == g_carrier,
    )
    record("gamma_power_in_subgroup", gamma_pows[p] in h_set)

    record("cluster_distinct", len(set(cluster)) == p)
    closed = all(
        convolve(cluster[i], cluster[j]) == cluster[(i + j) % p]
        for i in range(p)
        for j in range(p)
    )
    record("cluster_closed_cyclic", closed)
    record(
        "cluster_supports_cosets",
        all(
            support(cluster[k])
            == product_sets(product_sets(dec.left, cosets[k]), dec.right)
            for k in range(p)
        ),
    )
    _check_cancel(cancel)

    eta_left, _eta_mid, eta_right = marginals(eta, dec)
    haar_h = haar_uniform(subgroup)
    factor_ok = True
    lam = eta
    for k in range(2 * p + 1):
        coset_uniform = translate(haar_h, gamma_pows[k], "left")
        if convolve(convolve(eta_left, coset_uniform), eta_right) != lam:
            factor_ok = False
            break
        lam = convolve(mu, lam)
    record("cluster_factorization", factor_ok)
    record(
        "nu_factorization",
        convolve(convolve(eta_left, haar_uniform(dec.group)), eta_right) == nu,
    )
    record("eta_factorization", convolve(convolve(eta_left, haar_h), eta_right) == eta)

    dec_eta = rees_decompose(support(eta), at=e)
    record(
        "marginal_readings_agree",
        marginals(eta, dec_eta) == (eta_left, _eta_mid, eta_right),
    )

    return LimitReport(
        nu=nu,
        q=q,
        p=p,
        eta=eta,
        cluster=tuple(cluster),
        rees=dec,
        H=subgroup,
        gamma=gamma,
        checks=checks,
    )


@dataclass(frozen=True)
class CesaroDiagnostic:
    """Exact deviation series for the bound |mu_n - mu * mu_n| <= 2/n."""

    deviations: tuple
    limit_gaps: tuple


def cesaro_diagnostic(mu, n_max, order_cap=None):
    """Verify the 2/n bound for n <= n_max and report the decay to nu.

    Norms are unhalved total variation, the norm in which the bound is
    stated and attained.
    """
    if n_max < 1:
        raise MalformedInput(f"n_max must be >= 1, got {n_max}")
    nu = cesaro_limit(mu, order_cap=order_cap)
    deviations = []
    gaps = []
    acc = list(mu.probs)
    cur = mu
    for n in range(1, n_max + 1):
        if n > 1:
            cur = convolve(cur, mu)
            for i, p in cur.items():
                acc[i] += p
        inv = RAT(1, n)
        avg = Dist(mu.parent, [a * inv for a in acc])
        dev = variation_norm(avg, convolve(mu, avg))
        if dev > RAT(2, n):
            raise VerificationFailed("cesaro bound", f"deviation {dev} > 2/{n}")
        deviations.append(dev)
        gaps.append(variation_norm(avg, nu))
    return CesaroDiagnostic(deviations=tuple(deviations), limit_gaps=tuple(gaps))


def cesaro_deviation(mu, n, j):
    """Exact |mu_n - mu^j * mu_n| in unhalved total variation."""
    avg = cesaro_average(mu, n)
    return variation_norm(avg, convolve(power(mu, j), avg))


@dataclass(frozen=True)
class ShadowReport:
    """Float-64 sanity iteration |mu^(np) - eta|; diagnostic only."""

    gaps: tuple
    non_increasing: bool
    iterations_to_tolerance: int
    converged: bool


def float_shadow(mu, eta, step, tolerance=1e-9, max_iterations=4096):
    """Iterate the float transition matrix p steps at a time toward eta.

    Checks that the l1 gap never increases (up to float jitter) and finds
    the first iterate below tolerance.  Exact checks remain authoritative.
    """
    sg = mu.parent
    n = sg.order
    items = mu.items()
    m = np.zeros((n, n))
    for z in range(n):
        zr = sg.rows[z]
        for s, p in items:
            m[z, zr[s]] += float(p)
    m_step = np.linalg.matrix_power(m, step)
    target = np.array([float(p) for p in eta.probs])
    # Start at mu^step: the gap to eta is non-increasing under M^step.
    v = np.array([float(p) for p in mu.probs]) @ np.linalg.matrix_power(m, step - 1)
    gaps = []
    non_increasing = True
    hit = -1
    for it in range(max_iterations):
        gap = float(np.abs(v - target).sum())
        if gaps and gap > gaps[-1] + 1e-12:
            non_increasing = False
        gaps.append(gap)
        if gap < tolerance and hit < 0:
            hit = it
            break
        v = v @ m_step
    return ShadowReport(
        gaps=tuple(gaps),
        non_increasing=non_increasing,
        iterations_to_tolerance=hit,
        converged=hit >= 0,
    )
