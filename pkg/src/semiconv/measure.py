"""Exact probability distributions on a finite semigroup and their convolution.

Probabilities are exact rationals.  Key facts implemented and verified here:
an idempotent distribution (mu*mu = mu) is supported on a completely simple
subsemigroup and factors as (left marginal) * (uniform on the group factor)
* (right marginal); conversely such a product is idempotent whenever the
right-times-left support folds into the group.
"""

from dataclasses import dataclass

from ._rat import ONE, RAT, ZERO, as_rat
from .core import ElementSet, GroupStructure, Semigroup
from .errors import (
    EmptySet,
    HypothesisViolated,
    InvalidDistribution,
    MalformedInput,
    NotSimple,
    PreconditionViolated,
    SupportOutsideDecomposition,
    TheoremViolation,
)
from .rees import ReesDecomposition, psi_inv, rees_decompose


@dataclass(frozen=True, eq=False)
class Dist:
    """Probability vector over the elements of a semigroup."""

    parent: Semigroup
    probs: tuple

    def __post_init__(self):
        probs = tuple(as_rat(p) for p in self.probs)
        if len(probs) != self.parent.order:
            raise InvalidDistribution(
                f"{len(probs)} probabilities for {self.parent.order} elements"
            )
        total = ZERO
        for i, p in enumerate(probs):
            if p < 0:
                raise InvalidDistribution(f"negative probability at {self.parent.label(i)}")
            total += p
        if total != ONE:
            raise InvalidDistribution(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "probs", probs)

    def prob(self, a):
        return self.probs[a]

    def items(self):
        """(element, probability) pairs over the support, in index order."""
        return [(i, p) for i, p in enumerate(self.probs) if p]

    def support(self):
        mask = 0
        for i, p in enumerate(self.probs):
            if p:
                mask |= 1 << i
        return ElementSet(self.parent, mask)

    def __eq__(self, other):
        if not isinstance(other, Dist):
            return NotImplemented
        return self.parent is other.parent and self.probs == other.probs

    def __hash__(self):
        return hash((id(self.parent), self.probs))

    def __repr__(self):
        inside = ", ".join(f"{self.parent.label(i)}: {p}" for i, p in self.items())
        return f"Dist({{{inside}}})"

    @classmethod
    def from_mapping(cls, sg, mapping):
        probs = [ZERO] * sg.order
        for key, value in mapping.items():
            i = sg.index(key) if isinstance(key, str) else key
            if not 0 <= i < sg.order:
                raise MalformedInput(f"element index out of range: {key}")
            probs[i] += as_rat(value)
        return cls(sg, probs)


def dirac(sg, a):
    probs = [ZERO] * sg.order
    probs[a] = ONE
    return Dist(sg, probs)


def support(mu):
    return mu.support()


def convolve(mu, nu):
    """(mu*nu)(z) = sum of mu(x)nu(y) over factorizations z = x*y."""
    if mu.parent is not nu.parent:
        raise MalformedInput("distributions live on different semigroups")
    rows = mu.parent.rows
    out = [ZERO] * mu.parent.order
    for x, p in mu.items():
        row = rows[x]
        for y, q in nu.items():
            out[row[y]] += p * q
    return Dist(mu.parent, out)


def convolve_many(first, *rest):
    acc = first
    for nxt in rest:
        acc = convolve(acc, nxt)
    return acc


def translate(mu, a, side):
    """Dirac convolution on the chosen side: 'left' is delta_a * mu."""
    if side == "left":
        return convolve(dirac(mu.parent, a), mu)
    if side == "right":
        return convolve(mu, dirac(mu.parent, a))
    raise MalformedInput(f"side must be 'left' or 'right', got {side!r}")


def haar_uniform(group):
    """Uniform distribution on a verified group carrier."""
    if not isinstance(group, GroupStructure):
        raise MalformedInput("haar_uniform expects a GroupStructure")
    n = group.order
    probs = [ZERO] * group.parent.order
    for a in group.carrier:
        probs[a] = RAT(1, n)
    return Dist(group.parent, probs)


def uniform_on(subset):
    if not subset:
        raise EmptySet("uniform distribution on the empty set")
    n = len(subset)
    probs = [ZERO] * subset.parent.order
    for a in subset:
        probs[a] = RAT(1, n)
    return Dist(subset.parent, probs)


def marginals(mu, dec):
    """Pushforwards of mu onto the three product coordinates of dec.

    Every support point must lie inside the decomposed carrier.  The three
    returned distributions live on the same ambient semigroup, concentrated
    on the left factor, the group, and the right factor respectively.
    """
    sg = mu.parent
    left = [ZERO] * sg.order
    mid = [ZERO] * sg.order
    right = [ZERO] * sg.order
    for z, p in mu.items():
        if z not in dec.carrier:
            raise SupportOutsideDecomposition(sg.label(z))
        x, g, y = psi_inv(dec, z)
        left[x] += p
        mid[g] += p
        right[y] += p
    return Dist(sg, left), Dist(sg, mid), Dist(sg, right)


def is_idempotent_measure(mu):
    return convolve(mu, mu) == mu


@dataclass(frozen=True, eq=False)
class IdempotentFactorization:
    """mu = left * haar * right over the decomposition of mu's support."""

    decomposition: ReesDecomposition
    left: Dist
    haar: Dist
    right: Dist

    def recompose(self):
        return convolve(convolve(self.left, self.haar), self.right)


def factorize_idempotent(mu):
    """Split an idempotent distribution into its product form and verify it.

    The support must form a completely simple subsemigroup, the group
    marginal must be uniform, and the three-factor convolution must
    reproduce mu exactly; violations raise TheoremViolation.
    """
    if not is_idempotent_measure(mu):
        raise PreconditionViolated("mu * mu = mu")
    supp = mu.support()
    try:
        dec = rees_decompose(supp)
    except NotSimple as exc:
        raise TheoremViolation(
            "support completely simple", f"support is not simple: {exc}"
        ) from exc
    left, mid, right = marginals(mu, dec)
    if mid != haar_uniform(dec.group):
        raise TheoremViolation("group marginal uniform")
    rebuilt = convolve_many(left, mid, right)
    if rebuilt != mu:
        raise TheoremViolation("product form", "left * haar * right != mu")
    return IdempotentFactorization(decomposition=dec, left=left, haar=mid, right=right)


def compose_idempotent(mu_left, mu_right, group):
    """Build mu_left * (uniform on group) * mu_right and verify idempotence.

    Requires the support of mu_right * mu_left to fold into the group;
    the first escaping element is reported as the precondition witness.
    """
    fold = convolve(mu_right, mu_left)
    for z, _ in fold.items():
        if z not in group.carrier:
            raise PreconditionViolated(
                "support of mu_right * mu_left inside the group",
                fold.parent.label(z),
            )
    built = convolve_many(mu_left, haar_uniform(group), mu_right)
    if not is_idempotent_measure(built):
        raise TheoremViolation("composition idempotent")
    return built


@dataclass(frozen=True)
class TranslationInvariance:
    """Dirac-translation invariance of a distribution, by side and scope.

    'support' scope quantifies translators over the support of mu,
    'carrier' scope over the whole semigroup.
    """

    left_on_support: bool
    right_on_support: bool
    left_on_carrier: bool
    right_on_carrier: bool

    @property
    def biinvariant_on_support(self):
        return self.left_on_support and self.right_on_support

    @property
    def biinvariant_on_carrier(self):
        return self.left_on_carrier and self.right_on_carrier


def classify_translation_invariance(mu):
    supp = mu.support().elements()
    carrier = range(mu.parent.order)

    def invariant(side, translators):
        return all(translate(mu, a, side) == mu for a in translators)

    return TranslationInvariance(
        left_on_support=invariant("left", supp),
        right_on_support=invariant("right", supp),
        left_on_carrier=invariant("left", carrier),
        right_on_carrier=invariant("right", carrier),
    )


@dataclass(frozen=True)
class ConvolutionInvariance:
    """Count of verified identities nu*d_(xa) = nu*d_a and d_(ax)*nu = d_a*nu."""

    pairs_checked: int


def check_convolution_invariance(mu, nu):
    """For nu = mu*nu = nu*mu, verify the translation identities of nu
    over all x in supp(mu) and a in supp(nu)."""
    if convolve(mu, nu) != nu:
        raise HypothesisViolated("nu = mu * nu")
    if convolve(nu, mu) != nu:
        raise HypothesisViolated("nu = nu * mu")
    sg = mu.parent
    pairs = 0
    for x in support(mu):
        for a in support(nu):
            xa = sg.mul(x, a)
            ax = sg.mul(a, x)
            if translate(nu, xa, "right") != translate(nu, a, "right"):
                raise TheoremViolation(
                    "right translation identity",
                    f"x={sg.label(x)}, a={sg.label(a)}",
                )
            if translate(nu, ax, "left") != translate(nu, a, "left"):
                raise TheoremViolation(
                    "left translation identity",
                    f"x={sg.label(x)}, a={sg.label(a)}",
                )
            pairs += 1
    return ConvolutionInvariance(pairs_checked=pairs)
