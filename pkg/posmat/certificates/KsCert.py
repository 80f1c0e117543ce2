from ..errors import ParseError
from ..PolyMatrix import PolyMatrix
from .ConeCert import ScalarConeCert

STRICT = "strict"
PSD_FORM = "psd"
ZERO = "zero"
EMPTY = "empty"
KS_FORMS = (STRICT, PSD_FORM, ZERO, EMPTY)


class KsCert:
    """Krivine-Stengle certificate for a symmetric matrix F, written on its
    congruence-diagonalized form Dm = Xminus * F * Xminus^T.

    Parameters
    ----------

    form
      ``"strict"``: S*Dm = I + T (F positive definite on K).
      ``"psd"``: S*Dm = Dm^(2m) + T (F positive semidefinite on K).
      ``"zero"``: T = -Dm^(2m) (F vanishes on K).
      ``"empty"``: T = -I (K is empty).

    S, T
      Diagonal entries, as preordering certificates over the scalar
      generators (S is empty for the forms "zero" and "empty").

    m
      The exponent of the "psd" and "zero" forms.

    Xminus
      The transformation matrix (identity for diagonal F).
    """

    def __init__(self, form, S, T, m, Xminus):
        if form not in KS_FORMS:
            raise ValueError("unknown Krivine-Stengle form %r" % form)
        self.form = form
        self.S = list(S)
        self.T = list(T)
        self.m = int(m)
        if self.m < 0:
            raise ValueError("the exponent m must be non-negative")
        self.Xminus = Xminus

    @property
    def n(self):
        return self.Xminus.n

    @property
    def vars(self):
        return self.Xminus.vars

    def diagonal_values(self, which, generators):
        certs = self.S if which == "S" else self.T
        return [cert.expand(generators) for cert in certs]

    def to_json(self):
        return {
            "type": "ks",
            "form": self.form,
            "m": self.m,
            "vars": list(self.vars),
            "n": self.n,
            "Xminus": self.Xminus.to_json(),
            "S": [cert.to_json() for cert in self.S],
            "T": [cert.to_json() for cert in self.T],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                data["form"],
                [ScalarConeCert.from_json(c) for c in data["S"]],
                [ScalarConeCert.from_json(c) for c in data["T"]],
                data.get("m", 0),
                PolyMatrix.from_json(data["Xminus"], data["vars"]),
            )
        except (KeyError, TypeError) as err:
            raise ParseError("malformed Krivine-Stengle certificate: %s" % err)

    def __repr__(self):
        return "KsCert(form=%s, m=%d, n=%d)" % (self.form, self.m, self.n)
