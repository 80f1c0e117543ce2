"""One TheoremEntry builder per positivity theorem route.

Every builder reads from an :class:`AnalysisContext`, which computes the
shared facts (diagonalization, sample points of K, Krivine-Stengle searches,
compactness, zero analyses) once and on demand.
"""

import logging
from functools import cached_property

from ..certificates import MODULE, PREORDER, PSD_FORM, STRICT, embed_diagonal
from ..Diagonalization import diagonalize
from ..MPoly import MPoly, as_fraction
from ..PolyMatrix import PolyMatrix
from ..psd_witness import psd_witness
from ..sampling import points_in_set
from ..SearchBudget import SearchBudget
from ..sos import SCALAR_MODULE, archimedean_check, cone_search, ks_search
from .ApplicabilityReport import REFUTED, UNCHECKED, USER_ATTESTED, VERIFIED, TheoremEntry
from .bhc import bhc_check
from .compactness import COMPACT, UNBOUNDED, compactness_probe
from .zeros import diagonal_directions, matrix_zero_analysis, prescan_zeros, quadratic_form

logger = logging.getLogger(__name__)


class AnalysisContext:
    """Facts about an instance (F, gens), shared by the record builders.

    Parameters
    ----------

    F
      Symmetric PolyMatrix.

    gens
      Scalarized GeneratorSet of the instance.

    budget
      SearchBudget for every certificate search.

    candidates
      User-supplied candidate zeros (RationalPoint).

    directions
      Extra rational vectors x for the analyses of x^T F x, added to the
      diagonalization directions.

    attestations
      Dictionary of user claims: ``asymptotic_values`` (list of rationals),
      ``bounded`` (bool), ``uniformizers`` (list of
      ``{"point": [...], "generators": [...], "k": int}``).

    prescan
      Whether to add the advisory numeric pre-scan zeros to the candidates.
    """

    default_sample_count = 40

    def __init__(self, F, gens, budget=None, candidates=(), directions=(),
                 attestations=None, prescan=True, sample_count=None):
        self.F = F
        self.gens = gens
        self.budget = budget or SearchBudget()
        self.user_candidates = list(candidates)
        self.extra_directions = [list(v) for v in directions]
        self.attestations = dict(attestations or {})
        self.prescan = prescan
        self.sample_count = sample_count or self.default_sample_count

    @cached_property
    def diagonalization(self):
        return diagonalize(self.F)

    @cached_property
    def directions(self):
        return diagonal_directions(self.F) + self.extra_directions

    @cached_property
    def sample_points(self):
        return points_in_set(
            self.gens, self.sample_count, seed=self.budget.seed, strict=False
        )

    def _first_sample(self, bad_classes):
        for point in self.sample_points:
            if self.F.eval_psd(point) in bad_classes:
                return point
        return None

    @cached_property
    def not_pd_point(self):
        return self._first_sample(("PSD", "indefinite", "negative"))

    @cached_property
    def not_psd_point(self):
        return self._first_sample(("indefinite", "negative"))

    @cached_property
    def ks_strict(self):
        if self.not_pd_point is not None:
            return None
        return ks_search(self.F, self.gens, STRICT, self.budget)

    @cached_property
    def ks_psd(self):
        if self.not_psd_point is not None:
            return None
        return ks_search(self.F, self.gens, PSD_FORM, self.budget)

    @cached_property
    def global_psd(self):
        return psd_witness(self.F, self.budget)

    @cached_property
    def compactness(self):
        return compactness_probe(self.gens, self.budget)

    @cached_property
    def module_archimedean(self):
        if self.compactness.status == UNBOUNDED:
            return None
        return archimedean_check(self.gens, SCALAR_MODULE, self.budget)

    @cached_property
    def prescan_candidates(self):
        if not self.prescan:
            return []
        found = []
        for direction in self.directions:
            form = quadratic_form(self.F, direction)
            for point in prescan_zeros(form, self.gens, seed=self.budget.seed):
                if point not in found and point not in self.user_candidates:
                    found.append(point)
        return found

    @property
    def candidates(self):
        return self.user_candidates + self.prescan_candidates

    @cached_property
    def zero_analyses(self):
        return matrix_zero_analysis(
            self.F, self.gens, self.directions, self.candidates
        )

    def zeros_in_K(self):
        """``(direction analysis, zero record)`` for every listed zero."""
        return [
            (analysis, record)
            for analysis in self.zero_analyses
            for record in analysis.zeros_in_K()
        ]

    def attested_uniformizers(self, point):
        for item in self.attestations.get("uniformizers", ()):
            if [as_fraction(c) for c in item["point"]] == list(point.coords):
                return item
        return None


# SHARED HYPOTHESES


def _add_compact(entry, ctx):
    result = ctx.compactness
    name = "K is compact"
    if result.status == COMPACT:
        entry.add(name, VERIFIED, r=str(result.r), via="Archimedean preordering witness")
    elif result.status == UNBOUNDED:
        entry.add(name, REFUTED, ray=result.ray.to_json())
    else:
        entry.add(name, UNCHECKED)


def _add_module_archimedean(entry, ctx):
    name = "the quadratic module M_G is Archimedean"
    if ctx.compactness.status == UNBOUNDED:
        entry.add(name, REFUTED, ray=ctx.compactness.ray.to_json())
        return
    result = ctx.module_archimedean
    if result:
        entry.add(name, VERIFIED, r=str(result.certificate.r))
    else:
        entry.add(name, UNCHECKED)


def _add_psd_on_K(entry, ctx):
    name = "F is positive semidefinite on K"
    if ctx.not_psd_point is not None:
        entry.add(name, REFUTED, point=ctx.not_psd_point.to_json())
    elif ctx.ks_psd and ctx.diagonalization.b.is_constant():
        entry.add(name, VERIFIED, via="Krivine-Stengle psd certificate, constant b")
    elif ctx.global_psd:
        entry.add(name, VERIFIED, via="hermitian squares certificate on R^d")
    else:
        entry.add(name, UNCHECKED)


def _add_finitely_many_zeros(entry, ctx):
    name = "every x^T F x (x != 0) has finitely many zeros in K, all listed"
    checked = [a.to_json()["direction"] for a in ctx.zero_analyses]
    for analysis in ctx.zero_analyses:
        if analysis.degenerate and len(ctx.sample_points) > 1:
            entry.add(name, REFUTED, direction=[str(v) for v in analysis.direction],
                      reason="x^T F x vanishes identically")
            return
    entry.add(name, USER_ATTESTED, directions=checked,
              candidates=[p.to_json() for p in ctx.candidates])


def _local_condition(ctx, analysis, record, allow_boundary):
    """``(status, evidence)`` of the local membership at one listed zero,
    through the Hessian conditions or (``allow_boundary``) the BHC."""
    evidence = {"direction": [str(v) for v in analysis.direction],
                "point": record.point.to_json()}
    if record.hessian_condition:
        return VERIFIED, dict(evidence, via="interior zero, positive definite Hessian")
    if not allow_boundary:
        if not record.interior:
            return UNCHECKED, dict(evidence, reason="not a strict-inequality interior point")
        return REFUTED, dict(evidence, hessian=record.hessian_class)
    item = ctx.attested_uniformizers(record.point)
    if item is None:
        return UNCHECKED, dict(evidence, reason="no uniformizers attested")
    try:
        bhc = bhc_check(analysis.polynomial, ctx.gens, record.point,
                        item.get("generators", ()), item.get("k"))
    except ValueError as err:
        return UNCHECKED, dict(evidence, reason=str(err))
    status = VERIFIED if bhc.verdict else UNCHECKED
    return status, dict(evidence, bhc=bhc.to_json())


def _add_local_conditions(entry, ctx, name, allow_boundary):
    statuses, evidence = [], []
    for analysis, record in ctx.zeros_in_K():
        status, item = _local_condition(ctx, analysis, record, allow_boundary)
        statuses.append(status)
        evidence.append(item)
    if REFUTED in statuses:
        status = REFUTED
    elif UNCHECKED in statuses:
        status = UNCHECKED
    else:
        status = VERIFIED
    entry.add(name, status, zeros=evidence)
    if allow_boundary and any("bhc" in item for item in evidence):
        entry.add("the selected generators are part of uniformizing parameters",
                  USER_ATTESTED)


def _attach_diagonal_certificate(entry, ctx, cone):
    """Certificate of Xminus*F*Xminus^T in (M_G)^n or (T_G)^n when the route
    applies and the budget finds one."""
    if not entry.applicable:
        return
    decomposition = ctx.diagonalization
    certs = []
    for d in decomposition.diag:
        result = cone_search(d, ctx.gens, cone, ctx.budget)
        if not result:
            logger.info("%s applies but no certificate of %s was found", entry.tag, d)
            return
        certs.append(result.certificate)
    entry.certificate = embed_diagonal(certs, ctx.F.n, ctx.gens)


# THEOREM ROUTES


def krivine_stengle_records(ctx):
    """Strict and psd Krivine-Stengle entries."""
    strict = TheoremEntry(
        "krivine_stengle_strict",
        "S*(Xminus F Xminus^T) = I_n + T with S, T in the preordering",
    )
    name = "Xminus F Xminus^T is positive definite on K"
    if ctx.not_pd_point is not None:
        strict.add(name, REFUTED, point=ctx.not_pd_point.to_json())
    elif ctx.ks_strict:
        strict.add(name, VERIFIED, via="strict certificate")
        strict.certificate = ctx.ks_strict.certificate
    else:
        strict.add(name, UNCHECKED)
    psd = TheoremEntry(
        "krivine_stengle_psd",
        "S*(Xminus F Xminus^T) = (Xminus F Xminus^T)^(2m) + T with S, T in the preordering",
    )
    name = "Xminus F Xminus^T is positive semidefinite on K"
    if ctx.not_psd_point is not None:
        psd.add(name, REFUTED, point=ctx.not_psd_point.to_json())
    elif ctx.ks_psd:
        psd.add(name, VERIFIED, via="psd certificate")
        psd.certificate = ctx.ks_psd.certificate
    else:
        psd.add(name, UNCHECKED)
    return [strict, psd]


def schweighofer_entry(ctx):
    """Positive, bounded F with finitely many positive asymptotic values."""
    entry = TheoremEntry(
        "schweighofer",
        "there is a non-zero polynomial b with b^2*F in (T_G)^n",
    )
    name = "F is positive definite on K"
    if ctx.not_pd_point is not None:
        entry.add(name, REFUTED, point=ctx.not_pd_point.to_json())
    elif ctx.ks_strict:
        entry.add(name, VERIFIED, via="strict Krivine-Stengle certificate")
    else:
        entry.add(name, UNCHECKED)

    name = "F is bounded on K"
    F = ctx.F
    compactness = ctx.compactness
    if all(F[i, j].is_constant() for i in range(F.n) for j in range(F.n)):
        entry.add(name, VERIFIED, via="constant matrix")
    elif compactness.status == COMPACT:
        entry.add(name, VERIFIED, via="K is compact", r=str(compactness.r))
    elif compactness.status == UNBOUNDED and any(
        not compactness.ray.restrict(F[i, j]).is_constant()
        for i in range(F.n) for j in range(F.n)
    ):
        entry.add(name, REFUTED, ray=compactness.ray.to_json())
    elif ctx.attestations.get("bounded"):
        entry.add(name, USER_ATTESTED)
    else:
        entry.add(name, UNCHECKED)

    name = "asymptotic values of every x^T F x on K form a finite subset of R_+"
    values = ctx.attestations.get("asymptotic_values")
    if values is not None:
        values = [as_fraction(v) for v in values]
        bad = [str(v) for v in values if v <= 0]
        status = REFUTED if bad else USER_ATTESTED
        entry.add(name, status, values=[str(v) for v in values], non_positive=bad)
    elif compactness.status == COMPACT:
        entry.add(name, VERIFIED, via="K is compact, no asymptotic values")
    else:
        entry.add(name, UNCHECKED)
    if entry.applicable:
        entry.add("the checked directions stand for every x != 0", USER_ATTESTED,
                  directions=[a.to_json()["direction"] for a in ctx.zero_analyses])
    return entry


def schweighofer_record(f_or_F, gens, attested_asymptotics=None, budget=None):
    """Schweighofer entry for a polynomial or a symmetric matrix, without
    the zero pre-scan."""
    F = f_or_F
    if isinstance(F, MPoly):
        F = PolyMatrix([[F]], F.vars)
    attestations = {}
    if attested_asymptotics is not None:
        attestations["asymptotic_values"] = list(attested_asymptotics)
    ctx = AnalysisContext(F, gens, budget=budget, attestations=attestations, prescan=False)
    return schweighofer_entry(ctx)


def compactness_records(ctx):
    """Compact K makes the preordering Archimedean, and in one variable the
    quadratic module too."""
    result = ctx.compactness
    entry = TheoremEntry("compactness_archimedean", "the preordering T_G is Archimedean")
    _add_compact(entry, ctx)
    if result.witness is not None:
        entry.certificate = result.witness
    entries = [entry]
    if len(ctx.gens.vars) == 1:
        module = TheoremEntry(
            "compactness_univariate_module", "the quadratic module M_G is Archimedean"
        )
        _add_compact(module, ctx)
        module.add("one variable", VERIFIED)
        if result.module_witness is not None:
            module.certificate = result.module_witness
        entries.append(module)
    return entries


def local_global_record(ctx):
    entry = TheoremEntry(
        "local_global",
        "Xminus F Xminus^T in (T_G)^n, and b^2*F in (T_G)^n for a non-zero b",
    )
    _add_compact(entry, ctx)
    _add_psd_on_K(entry, ctx)
    _add_finitely_many_zeros(entry, ctx)
    _add_local_conditions(
        entry, ctx, "x^T F x lies in the completed preordering at each zero",
        allow_boundary=True,
    )
    _attach_diagonal_certificate(entry, ctx, PREORDER)
    return entry


def hessian_records(ctx):
    """Hessian criterion, preordering and quadratic module variants."""
    entries = []
    for tag, cone in (("hessian_preorder", PREORDER), ("hessian_module", MODULE)):
        target = "(T_G)^n" if cone == PREORDER else "(M_G)^n"
        entry = TheoremEntry(
            tag,
            "Xminus F Xminus^T in %s, and b^2*F in %s for a non-zero b" % (target, target),
        )
        if cone == PREORDER:
            _add_compact(entry, ctx)
        else:
            _add_module_archimedean(entry, ctx)
        _add_psd_on_K(entry, ctx)
        _add_finitely_many_zeros(entry, ctx)
        _add_local_conditions(
            entry, ctx, "each listed zero is interior with a positive definite Hessian",
            allow_boundary=False,
        )
        _attach_diagonal_certificate(entry, ctx, cone)
        entries.append(entry)
    return entries


def bhc_record(ctx):
    entry = TheoremEntry(
        "boundary_hessian",
        "Xminus F Xminus^T in (M_G)^n, and b^2*F in (M_G)^n for a non-zero b",
    )
    _add_module_archimedean(entry, ctx)
    _add_psd_on_K(entry, ctx)
    _add_finitely_many_zeros(entry, ctx)
    _add_local_conditions(
        entry, ctx, "x^T F x satisfies the boundary Hessian conditions at each zero",
        allow_boundary=True,
    )
    _attach_diagonal_certificate(entry, ctx, MODULE)
    return entry


def global_psd_record(ctx):
    entry = TheoremEntry(
        "global_psd_denominator",
        "b^2*F is a sum of hermitian squares for a non-zero polynomial b",
    )
    name = "F is positive semidefinite on R^d"
    result = ctx.global_psd
    if result:
        entry.add(name, VERIFIED, b=result.details["b"])
        entry.certificate = result.certificate
    elif result.witness is not None:
        entry.add(name, REFUTED, point=result.witness.to_json())
    else:
        entry.add(name, UNCHECKED)
    return entry
