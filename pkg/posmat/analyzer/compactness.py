"""Compactness of K: an Archimedean witness, or a ray escaping to infinity."""

import itertools
import logging
import math

import sympy

from ..MPoly import MPoly, RationalPoint
from ..sampling import points_in_set
from ..SearchBudget import SearchBudget
from ..sos import MATRIX_MODULE, SCALAR_MODULE, SCALAR_PREORDER, archimedean_check

logger = logging.getLogger(__name__)

COMPACT = "compact"
UNBOUNDED = "unbounded"
INCONCLUSIVE = "inconclusive"


class Ray:
    """The half line {base + t*direction : t >= 0}."""

    def __init__(self, base, direction):
        self.base = base
        self.direction = tuple(direction)

    def point(self, t):
        return RationalPoint(
            self.base.vars,
            [b + t * v for b, v in zip(self.base.coords, self.direction)],
        )

    def restrict(self, f):
        """f(base + t*direction) as a polynomial in the single variable t."""
        images = [
            MPoly.constant(("t",), b) + MPoly.variable(("t",), 0).scale(v)
            for b, v in zip(self.base.coords, self.direction)
        ]
        return f.substitute(images, ("t",))

    def to_json(self):
        return {
            "base": self.base.to_json(),
            "direction": [str(v) for v in self.direction],
        }

    def __repr__(self):
        return "Ray(%s + t*%s)" % (self.base, list(map(str, self.direction)))


def nonnegative_beyond(g):
    """Smallest integer T >= 0 with g(t) >= 0 for all t >= T, for a
    univariate MPoly g; None when g is eventually negative.

    Exact: the real roots are isolated in rational intervals.
    """
    if g.is_zero():
        return 0
    if g.leading_term()[1] < 0:
        return None
    intervals = g.to_sympy().intervals()
    if not intervals:
        return 0
    largest = max(sympy.Rational(upper) for (lower, upper), _ in intervals)
    return max(0, math.ceil(largest))


def _candidate_directions(d):
    yield (1,) * d
    for i in range(d):
        for sign in (1, -1):
            yield tuple(sign * int(k == i) for k in range(d))
    for i, j in itertools.combinations(range(d), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            yield tuple(si * int(k == i) + sj * int(k == j) for k in range(d))


def find_unbounded_ray(gens, seed=0, bases=3):
    """A ray lying in K from its base point on, or None.

    Base points are the origin and a few sample points of K; along each
    candidate direction every scalar generator must be eventually
    non-negative, and the base is then moved past the last real root.
    """
    d = len(gens.vars)
    if d == 0:
        return None
    origin = RationalPoint(gens.vars, [0] * d)
    candidates = [origin] + [
        p for p in points_in_set(gens, bases, seed=seed, strict=False) if p != origin
    ]
    for base in candidates:
        for direction in _candidate_directions(d):
            ray = Ray(base, direction)
            offsets = [nonnegative_beyond(ray.restrict(g)) for g in gens.scalar_gens]
            if any(T is None for T in offsets):
                continue
            shifted = Ray(ray.point(max(offsets, default=0)), direction)
            if gens.contains(shifted.base):
                logger.info("K contains the ray %s", shifted)
                return shifted
    return None


class CompactnessResult:
    """Outcome of :func:`compactness_probe`.

    ``status`` is ``"compact"`` (with ``witness``, an ArchimedeanWitness of
    the preordering), ``"unbounded"`` (with ``ray``) or ``"inconclusive"``.
    """

    def __init__(self, status, witness=None, ray=None, module_witness=None, notes=()):
        self.status = status
        self.witness = witness
        self.ray = ray
        self.module_witness = module_witness
        self.notes = list(notes)

    @property
    def r(self):
        return None if self.witness is None else self.witness.r

    def to_json(self):
        data = {"status": self.status, "notes": self.notes}
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        if self.module_witness is not None:
            data["module_witness"] = self.module_witness.to_json()
        if self.ray is not None:
            data["ray"] = self.ray.to_json()
        return data

    def __repr__(self):
        return "CompactnessResult(%s)" % self.status


def compactness_probe(gens, budget=None):
    """Decide compactness of K when the budget allows it.

    K is compact iff the preordering is Archimedean, so a certificate of
    r - sum x_i^2 in the preordering proves compactness, and a ray in K
    proves the contrary. In one variable the module itself is Archimedean
    as soon as K is compact, and its witness is searched too.
    """
    budget = budget or SearchBudget()
    ray = find_unbounded_ray(gens, seed=budget.seed)
    if ray is not None:
        return CompactnessResult(UNBOUNDED, ray=ray)
    result = archimedean_check(gens, SCALAR_PREORDER, budget)
    if not result:
        logger.info("compactness undecided within %s", budget)
        return CompactnessResult(INCONCLUSIVE)
    notes, module_witness = [], None
    if len(gens.vars) == 1:
        notes.append(
            "one variable: a compact K makes the quadratic module itself Archimedean"
        )
        mode = MATRIX_MODULE if gens.n > 1 else SCALAR_MODULE
        module = archimedean_check(gens, mode, budget)
        if module:
            module_witness = module.certificate
        else:
            notes.append("no module witness within the budget")
    return CompactnessResult(
        COMPACT, witness=result.certificate, module_witness=module_witness, notes=notes
    )
