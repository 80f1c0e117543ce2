from ..errors import ParseError
from ..MPoly import MPoly


class JsonMatrixMixin:
    """Conversion of polynomial matrices to and from JSON-ready dicts.

    The format is ``{"n": 2, "vars": ["x", "y"],
    "entries": [["1", "x"], ["x", "x^2"]]}`` with entries written in the
    polynomial text grammar.
    """

    def to_json(self):
        return {
            "n": self.n,
            "vars": list(self.vars),
            "entries": [[str(entry) for entry in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data, variables=None):
        """Build a matrix from its JSON dict.

        ``variables`` overrides the ``vars`` key (instance files declare the
        variables once for all matrices).
        """
        if not isinstance(data, dict):
            if isinstance(data, list) and variables is not None:
                data = {"entries": data}
            else:
                raise ParseError("a matrix must be a JSON object")
        if variables is None:
            if "vars" not in data:
                raise ParseError("matrix without 'vars'")
            variables = data["vars"]
        if "entries" not in data:
            raise ParseError("matrix without 'entries'")
        rows = data["entries"]
        n = data.get("n", len(rows))
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ParseError("matrix entries do not form a %dx%d array" % (n, n))
        entries = [[MPoly.coerce(value, variables) for value in row] for row in rows]
        return cls(entries, variables)
