CERTIFIED = "certified"
INFEASIBLE_AT_BUDGET = "infeasible_at_budget"
INCONCLUSIVE = "inconclusive"
COUNTEREXAMPLE = "counterexample"
SEARCH_STATUSES = (CERTIFIED, INFEASIBLE_AT_BUDGET, INCONCLUSIVE, COUNTEREXAMPLE)


class SearchResult:
    """Outcome of a certificate search. Only ``certified`` carries a
    certificate; ``infeasible_at_budget`` carries a verified witness and
    ``counterexample`` a point.

    Parameters
    ----------

    status
      One of ``certified``, ``infeasible_at_budget``, ``inconclusive``,
      ``counterexample``.

    certificate
      The certificate (any certificate class, already verified).

    witness
      Dual witness, counterexample point or Archimedean witness.

    budget
      The SearchBudget the search ran under (reported as the budget reached
      when nothing was found).

    details
      Free dictionary of JSON-friendly extras.
    """

    def __init__(self, status, certificate=None, witness=None, budget=None,
                 details=None):
        if status not in SEARCH_STATUSES:
            raise ValueError("unknown search status %r" % status)
        self.status = status
        self.certificate = certificate
        self.witness = witness
        self.budget = budget
        self.details = dict(details or {})

    @classmethod
    def certified(cls, certificate, budget=None, **details):
        return cls(CERTIFIED, certificate=certificate, budget=budget, details=details)

    @classmethod
    def inconclusive(cls, budget=None, **details):
        return cls(INCONCLUSIVE, budget=budget, details=details)

    def __bool__(self):
        return self.status == CERTIFIED

    def to_json(self):
        data = {"status": self.status}
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_json()
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        if self.budget is not None and self.status != CERTIFIED:
            data["budget_reached"] = self.budget.to_json()
        data.update(self.details)
        return data

    def __repr__(self):
        return "SearchResult(%s)" % self.status
