import logging

from .ApplicabilityReport import ApplicabilityReport
from .records import (
    AnalysisContext,
    bhc_record,
    compactness_records,
    global_psd_record,
    hessian_records,
    krivine_stengle_records,
    local_global_record,
    schweighofer_entry,
)

logger = logging.getLogger(__name__)

default_routes = (
    compactness_records,
    krivine_stengle_records,
    schweighofer_entry,
    local_global_record,
    hessian_records,
    bhc_record,
    global_psd_record,
)


def full_report(F, gens, budget=None, instance_id="instance", routes=default_routes,
                **options):
    """Check the hypotheses of every theorem route for (F, gens).

    Parameters
    ----------

    F
      Symmetric PolyMatrix.

    gens
      Scalarized GeneratorSet (see ``scalarize``).

    budget
      SearchBudget shared by all searches.

    instance_id
      Name reported in the output.

    routes
      Record builders, run in this order. Each takes an AnalysisContext and
      returns a TheoremEntry or a list of them.

    options
      ``candidates``, ``directions``, ``attestations`` and ``prescan``, as
      in :class:`AnalysisContext`.

    Returns
    -------

    An ApplicabilityReport; a conclusion is only stated for routes whose
    hypotheses are all verified or user-attested.
    """
    ctx = AnalysisContext(F, gens, budget=budget, **options)
    report = ApplicabilityReport(instance_id)
    for route in routes:
        logger.info("checking %s", route.__name__)
        entries = route(ctx)
        for entry in entries if isinstance(entries, list) else [entries]:
            report.add_entry(entry)
    report.details.update(
        {
            "vars": list(F.vars),
            "n": F.n,
            "scalar_generators": [str(g) for g in gens.scalar_gens],
            "diagonalization": ctx.diagonalization.to_json(),
            "compactness": ctx.compactness.to_json(),
            "candidates": [p.to_json() for p in ctx.user_candidates],
            "prescan_candidates": {
                "advisory": True,
                "points": [p.to_json() for p in ctx.prescan_candidates],
            },
            "zero_analysis": [a.to_json() for a in ctx.zero_analyses],
            "budget": ctx.budget.to_json(),
        }
    )
    return report
