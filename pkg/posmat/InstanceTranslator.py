import json
import logging

from .errors import ParseError, SchemaError
from .GeneratorSet import GeneratorSet, scalarize
from .MPoly import MPoly, RationalPoint
from .PolyMatrix import PolyMatrix, SymPolyMatrix
from .SearchBudget import SearchBudget

logger = logging.getLogger(__name__)

INSTANCE_VERSION = 1


class Instance:
    """A parsed instance file.

    Parameters
    ----------

    identifier
      Name of the instance (``id`` key, or the file name).

    variables
      Tuple of variable names.

    generator_set
      Scalarized GeneratorSet (or the scalar override of the file).

    target
      The polynomial f (MPoly) or matrix F (SymPolyMatrix), or None.

    options
      Budget fields given by the file (``max_sos_degree``,
      ``max_product_order``, ``seed``).

    candidates
      Candidate zeros listed in the file.
    """

    def __init__(self, identifier, variables, generator_set, target=None,
                 options=None, candidates=()):
        self.identifier = identifier
        self.vars = tuple(variables)
        self.generator_set = generator_set
        self.target = target
        self.options = dict(options or {})
        self.candidates = list(candidates)

    @property
    def n(self):
        return self.generator_set.n

    @property
    def target_matrix(self):
        """The target as a matrix (a polynomial f becomes [f])."""
        if self.target is None:
            raise ParseError("instance %s has no target" % self.identifier)
        if isinstance(self.target, MPoly):
            return SymPolyMatrix([[self.target]], self.vars)
        return self.target

    @property
    def target_scalar(self):
        """The target as a polynomial (1 x 1 matrices are unwrapped)."""
        target = self.target
        if isinstance(target, PolyMatrix):
            if target.n != 1:
                raise ParseError("instance %s has a %dx%d target, not a polynomial"
                                 % (self.identifier, target.n, target.n))
            target = target[0, 0]
        if target is None:
            raise ParseError("instance %s has no target" % self.identifier)
        return target

    def budget(self, **overrides):
        """SearchBudget from the file options, with the non-None keyword
        arguments taking precedence and POSMAT_MAX_DEGREE as a ceiling."""
        fields = dict(self.options)
        fields.update({k: v for k, v in overrides.items() if v is not None})
        return SearchBudget.from_environment(**fields)

    def __repr__(self):
        return "Instance(%s, vars=%s, n=%d)" % (self.identifier, self.vars, self.n)


class InstanceTranslator:
    """Translator from JSON instance files to :class:`Instance` objects.

    This class is meant to be customized by subclassing and changing the
    ``compute_*`` methods (e.g. to accept another matrix notation).

    An instance file looks like::

        {"instance_version": 1, "id": "disk", "vars": ["x", "y"],
         "generators": [[["1-x^2-y^2", "0"], ["0", "1-x^2-y^2"]]],
         "target": [["x^2+y^2", "0"], ["0", "1"]],
         "options": {"max_degree": 4, "product_cap": 2, "seed": 0}}

    ``target`` is a matrix (list of rows) or a polynomial string;
    ``scalar_generators`` optionally replaces the scalarization of the
    matrix generators; ``candidates`` lists candidate zeros.

    Attributes
    ----------

    option_fields
      Mapping from option names of the files to SearchBudget fields.
    """

    option_fields = {
        "max_degree": "max_sos_degree",
        "product_cap": "max_product_order",
        "seed": "seed",
    }

    @staticmethod
    def read_json(source):
        """JSON content of a path, or ``source`` itself if already parsed."""
        if isinstance(source, (dict, list)):
            return source
        try:
            with open(source, "r") as f:
                return json.load(f)
        except json.JSONDecodeError as err:
            raise ParseError("%s is not valid JSON: %s" % (source, err))

    def compute_variables(self, data):
        variables = data.get("vars")
        if not isinstance(variables, list) or not all(
            isinstance(v, str) for v in variables
        ):
            raise SchemaError("'vars' must be a list of variable names")
        return tuple(variables)

    def compute_matrix(self, data, variables):
        return SymPolyMatrix.from_json(data, variables)

    def compute_target(self, data, variables):
        target = data.get("target")
        if target is None:
            return None
        if isinstance(target, (str, int)):
            return MPoly.coerce(str(target), variables)
        return PolyMatrix.from_json(target, variables)

    def compute_size(self, data, matrix_gens, target):
        if "n" in data:
            return int(data["n"])
        if matrix_gens:
            return matrix_gens[0].n
        if isinstance(target, PolyMatrix):
            return target.n
        return 1

    def compute_generator_set(self, data, variables, target):
        matrix_gens = [
            self.compute_matrix(G, variables) for G in data.get("generators", [])
        ]
        n = self.compute_size(data, matrix_gens, target)
        if "scalar_generators" in data:
            scalars = [MPoly.coerce(str(g), variables) for g in data["scalar_generators"]]
            return GeneratorSet(variables, n, matrix_gens, scalars)
        return scalarize(matrix_gens, variables, n)

    def compute_options(self, data):
        options = {}
        for key, value in data.get("options", {}).items():
            if key not in self.option_fields:
                logger.warning("ignoring unknown instance option %r", key)
                continue
            options[self.option_fields[key]] = int(value)
        return options

    def compute_points(self, data, variables):
        if isinstance(data, dict):
            data = data.get("points", [])
        return [RationalPoint(variables, coords) for coords in data]

    def translate_instance(self, source, identifier=None):
        """Create an Instance from a path or an already parsed dict."""
        data = self.read_json(source)
        if not isinstance(data, dict):
            raise SchemaError("an instance file must be a JSON object")
        version = data.get("instance_version")
        if version != INSTANCE_VERSION:
            raise SchemaError(
                "unsupported instance_version %r (expected %d)"
                % (version, INSTANCE_VERSION)
            )
        variables = self.compute_variables(data)
        target = self.compute_target(data, variables)
        if identifier is None:
            identifier = data.get("id", source if isinstance(source, str) else "instance")
        return Instance(
            identifier,
            variables,
            self.compute_generator_set(data, variables, target),
            target=target,
            options=self.compute_options(data),
            candidates=self.compute_points(data.get("candidates", []), variables),
        )

    def translate_points(self, source, variables):
        """Candidate points from a file: a list of coordinate lists, or
        ``{"points": [...]}``."""
        return self.compute_points(self.read_json(source), variables)

    def translate_attestations(self, source):
        """User claims for the analyzer (see AnalysisContext)."""
        data = self.read_json(source)
        if not isinstance(data, dict):
            raise SchemaError("an attestation file must be a JSON object")
        return data
