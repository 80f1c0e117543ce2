"""Structured verdicts on which positivity theorems apply to an instance."""

VERIFIED = "verified"
REFUTED = "refuted"
USER_ATTESTED = "user_attested"
UNCHECKED = "unchecked"
HYPOTHESIS_STATUSES = (VERIFIED, REFUTED, USER_ATTESTED, UNCHECKED)


class Hypothesis:
    """One hypothesis of a theorem, with the evidence behind its status.

    Parameters
    ----------

    name
      Short description, e.g. ``"F positive definite on K"``.

    status
      ``"verified"`` (exact computation), ``"refuted"`` (exact witness),
      ``"user_attested"`` or ``"unchecked"``.

    evidence
      JSON-friendly dictionary (points, certificates, radii...).
    """

    def __init__(self, name, status, evidence=None):
        if status not in HYPOTHESIS_STATUSES:
            raise ValueError("unknown hypothesis status %r" % status)
        self.name = name
        self.status = status
        self.evidence = dict(evidence or {})

    def to_json(self):
        data = {"name": self.name, "status": self.status}
        if self.evidence:
            data["evidence"] = self.evidence
        return data

    def __repr__(self):
        return "Hypothesis(%r, %s)" % (self.name, self.status)


class TheoremEntry:
    """The hypotheses of one theorem route and its conclusion.

    The conclusion is only reported when every hypothesis is verified or
    user-attested.

    Parameters
    ----------

    tag
      Identifier of the route, e.g. ``"krivine_stengle_strict"``.

    conclusion
      Statement of what follows when the route applies.
    """

    def __init__(self, tag, conclusion, hypotheses=None):
        self.tag = tag
        self.conclusion = conclusion
        self.hypotheses = list(hypotheses or [])
        self.certificate = None

    def add(self, name, status, **evidence):
        hypothesis = Hypothesis(name, status, evidence)
        self.hypotheses.append(hypothesis)
        return hypothesis

    @property
    def applicable(self):
        return bool(self.hypotheses) and all(
            h.status in (VERIFIED, USER_ATTESTED) for h in self.hypotheses
        )

    @property
    def refuted(self):
        return any(h.status == REFUTED for h in self.hypotheses)

    @property
    def verdict(self):
        if self.applicable:
            return "applicable"
        if self.refuted:
            return "not_applicable"
        return "undecided"

    def to_json(self):
        data = {
            "theorem": self.tag,
            "verdict": self.verdict,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "conclusion": self.conclusion if self.applicable else None,
        }
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_json()
        return data

    def __repr__(self):
        return "TheoremEntry(%s, %s)" % (self.tag, self.verdict)


class ApplicabilityReport:
    """Per-instance collection of theorem entries, in insertion order.

    Parameters
    ----------

    instance_id
      Name of the analyzed instance.

    details
      Extra JSON-friendly information (diagonalization, compactness...).
    """

    def __init__(self, instance_id="instance", details=None):
        self.instance_id = instance_id
        self.entries = []
        self.details = dict(details or {})

    def add_entry(self, entry):
        self.entries.append(entry)
        return entry

    def entry(self, tag):
        for entry in self.entries:
            if entry.tag == tag:
                return entry
        raise KeyError(tag)

    def applicable_routes(self):
        return [e.tag for e in self.entries if e.applicable]

    def to_json(self):
        return {
            "instance": self.instance_id,
            "details": self.details,
            "entries": [entry.to_json() for entry in self.entries],
            "applicable": self.applicable_routes(),
        }

    def to_text(self):
        lines = ["Applicability report for %s" % self.instance_id]
        for entry in self.entries:
            lines.append("")
            lines.append("%s: %s" % (entry.tag, entry.verdict))
            for h in entry.hypotheses:
                lines.append("  [%s] %s" % (h.status, h.name))
            if entry.applicable:
                lines.append("  => " + entry.conclusion)
        return "\n".join(lines)

    def __repr__(self):
        return "ApplicabilityReport(%s, %d entries)" % (
            self.instance_id,
            len(self.entries),
        )
