import copy
import logging
import os

logger = logging.getLogger(__name__)


class SearchBudget:
    """Limits of a bounded-degree certificate search.

    Every field left to ``None`` takes the value of the matching
    ``default_*`` class attribute, so project-wide defaults can be changed
    by subclassing or by assigning to the class.

    Parameters
    ----------

    max_sos_degree
      Largest total degree of any polynomial identity searched (even).

    max_product_order
      Largest number of generators multiplied together in preordering
      products g^sigma.

    max_iterations
      Iteration cap of the interior-point solver.

    denominator_bound
      Largest denominator tried when rounding the numeric Gram matrices.

    r_ladder
      Values of r tried by the Archimedean searches, in order.

    tolerance_escalations
      How many times a failed rational recovery is retried with a tighter
      solver tolerance.

    seed
      Seed of every random choice made under this budget.

    jobs
      Number of worker processes for independent sub-searches.

    Attributes
    ----------

    degree_ceiling_variable
      Name of the environment variable capping ``max_sos_degree``.
    """

    default_max_sos_degree = 4
    default_max_product_order = 2
    default_max_iterations = 80
    default_denominator_bound = 10 ** 6
    default_r_ladder = tuple(2 ** k for k in range(11))
    default_tolerance_escalations = 3
    default_seed = 0
    default_jobs = 1
    degree_ceiling_variable = "POSMAT_MAX_DEGREE"

    def __init__(
        self,
        max_sos_degree=None,
        max_product_order=None,
        max_iterations=None,
        denominator_bound=None,
        r_ladder=None,
        tolerance_escalations=None,
        seed=None,
        jobs=None,
    ):
        def pick(value, default):
            return default if value is None else value

        self.max_sos_degree = pick(max_sos_degree, self.default_max_sos_degree)
        self.max_product_order = pick(
            max_product_order, self.default_max_product_order
        )
        self.max_iterations = pick(max_iterations, self.default_max_iterations)
        self.denominator_bound = pick(
            denominator_bound, self.default_denominator_bound
        )
        self.r_ladder = tuple(pick(r_ladder, self.default_r_ladder))
        self.tolerance_escalations = pick(
            tolerance_escalations, self.default_tolerance_escalations
        )
        self.seed = pick(seed, self.default_seed)
        self.jobs = pick(jobs, self.default_jobs)
        self._validate()

    def _validate(self):
        for name in ("max_iterations", "denominator_bound", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError("%s must be positive" % name)
        if self.max_sos_degree < 0 or self.max_product_order < 0:
            raise ValueError("degrees and product orders must be non-negative")
        if self.tolerance_escalations < 0:
            raise ValueError("tolerance_escalations must be non-negative")
        if not self.r_ladder or any(r <= 0 for r in self.r_ladder):
            raise ValueError("the r ladder needs positive values")

    @classmethod
    def from_environment(cls, environ=None, **kwargs):
        """Build a budget and cap its degree by POSMAT_MAX_DEGREE if set."""
        budget = cls(**kwargs)
        return budget.capped_by_environment(environ)

    def capped_by_environment(self, environ=None):
        environ = os.environ if environ is None else environ
        raw = environ.get(self.degree_ceiling_variable)
        if raw in (None, ""):
            return self
        try:
            ceiling = int(raw)
        except ValueError:
            raise ValueError(
                "%s must be an integer, got %r" % (self.degree_ceiling_variable, raw)
            )
        if self.max_sos_degree > ceiling:
            logger.info(
                "max_sos_degree %d capped to %d by %s",
                self.max_sos_degree,
                ceiling,
                self.degree_ceiling_variable,
            )
            return self.updated(max_sos_degree=ceiling)
        return self

    def updated(self, **changes):
        """Return a copy with some fields replaced."""
        new = copy.copy(self)
        for key, value in changes.items():
            if not hasattr(new, key):
                raise AttributeError("SearchBudget has no field %r" % key)
            setattr(new, key, value)
        new._validate()
        return new

    def with_degree(self, degree):
        return self.updated(max_sos_degree=degree)

    def degree_ladder(self, start=0):
        """Even degrees start, start+2, ... up to max_sos_degree."""
        start += start % 2
        return list(range(start, self.max_sos_degree + 1, 2))

    def to_json(self):
        return {
            "max_sos_degree": self.max_sos_degree,
            "max_product_order": self.max_product_order,
            "max_iterations": self.max_iterations,
            "denominator_bound": self.denominator_bound,
            "r_ladder": [str(r) for r in self.r_ladder],
            "tolerance_escalations": self.tolerance_escalations,
            "seed": self.seed,
        }

    def __repr__(self):
        return "SearchBudget(%s)" % ", ".join(
            "%s=%r" % item for item in self.to_json().items()
        )
