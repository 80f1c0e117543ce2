"""Command line interface: ``posmat <subcommand> ...``.

Exit codes: 0 success (including inconclusive searches), 2 parse or usage
error, 3 verification failure, 4 internal invariant breach.
"""

import argparse
import json
import logging
import sys

from .analyzer import compactness_probe, full_report
from .certificates import (
    CERT_VERSION,
    EMPTY,
    KS_FORMS,
    MODULE,
    PREORDER,
    DenominatorCert,
    KsCert,
    MatrixConeCert,
    ScalarConeCert,
    SosCert,
    certificate_from_document,
    certificate_to_document,
    verify_any,
)
from .Diagonalization import diagonalize
from .errors import CertificateError, InvariantBreach
from .GeneratorSet import preorder_generators
from .InstanceTranslator import InstanceTranslator
from .MPoly import MPoly
from .selftest import format_table, run_selftest
from .sos import (
    ARCHIMEDEAN_MODES,
    SCALAR_MODULE,
    archimedean_check,
    artin_search,
    bounded_element_check,
    cone_search,
    ks_search,
    sos_decompose,
)
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFICATION = 3
EXIT_BUG = 4

CERTIFICATE_CLASSES = (SosCert, DenominatorCert, ScalarConeCert, MatrixConeCert, KsCert)


# OUTPUT


def write_json(path, data):
    with open(path, "w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")


def emit(args, data, text):
    """Text (or JSON with ``--format json``) to stdout; ``data`` to the
    ``--out`` file if one was given."""
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)
    if args.out:
        write_json(args.out, data)
        logger.info("wrote %s", args.out)


def target_to_json(target):
    if target is None:
        return None
    if isinstance(target, MPoly):
        return str(target)
    return target.to_json()


def result_document(result, target):
    """A certified plain certificate becomes a certificate document that
    ``posmat verify`` reads back; anything else is the result itself."""
    if isinstance(result.certificate, CERTIFICATE_CLASSES):
        return certificate_to_document(
            result.certificate, target=target_to_json(target), status=result.status,
            **result.details
        )
    data = {"cert_version": CERT_VERSION, "target": target_to_json(target)}
    data.update(result.to_json())
    return data


def summarize_result(result):
    lines = ["status: %s" % result.status]
    if result.certificate is not None:
        lines.append("certificate: %r" % (result.certificate,))
    if result.witness is not None:
        lines.append("witness: %r" % (result.witness,))
    if not result and result.budget is not None:
        lines.append("budget reached: %r" % (result.budget,))
    return "\n".join(lines)


# SUBCOMMANDS


def load_instance(args):
    return InstanceTranslator().translate_instance(args.instance)


def instance_budget(args, instance):
    return instance.budget(
        max_sos_degree=args.max_degree,
        max_product_order=args.product_cap,
        seed=args.seed,
        jobs=args.jobs,
    )


def run_diag(args):
    instance = load_instance(args)
    decomposition = diagonalize(instance.target_matrix)
    data = decomposition.to_json()
    if not data["verified"]:
        raise InvariantBreach(
            "diagonalization identities fail: %s" % decomposition.failed_identities()
        )
    degrees = decomposition.degrees()
    text = "b = %s\nD = diag(%s)\nrank = %d\ndegrees: b %d, X+ %d, X- %d" % (
        decomposition.b,
        ", ".join(str(d) for d in decomposition.diag),
        decomposition.rank,
        degrees["b"],
        degrees["Xplus"],
        degrees["Xminus"],
    )
    emit(args, data, text)
    return EXIT_OK


def run_scalarize(args):
    instance = load_instance(args)
    gens = instance.generator_set
    data = gens.to_json()
    if args.product_cap is not None:
        data["preorder_generators"] = [
            G.to_json() for G in preorder_generators(gens, args.product_cap)
        ]
    text = "\n".join("g%d = %s" % (i, g) for i, g in enumerate(gens.scalar_gens, 1))
    emit(args, data, text or "no scalar generators")
    return EXIT_OK


def run_verify(args):
    instance = load_instance(args)
    document = InstanceTranslator.read_json(args.certificate)
    cert = certificate_from_document(document)
    result = verify_any(instance.target, cert, instance.generator_set)
    data = result.to_json()
    if result:
        emit(args, data, "PASS")
        return EXIT_OK
    text = "FAIL: %s" % result.reason
    if "residual" in data:
        text += "\nresidual: %s" % json.dumps(data["residual"])
    emit(args, data, text)
    return EXIT_VERIFICATION


def _search(args, search):
    instance = load_instance(args)
    budget = instance_budget(args, instance)
    result, target = search(instance, budget)
    emit(args, result_document(result, target), summarize_result(result))
    return EXIT_OK


def run_sos(args):
    def search(instance, budget):
        f = instance.target_scalar
        return sos_decompose(f, budget), f

    return _search(args, search)


def run_artin(args):
    def search(instance, budget):
        f = instance.target_scalar
        return artin_search(f, budget), f

    return _search(args, search)


def run_cone(args):
    def search(instance, budget):
        f = instance.target_scalar
        return cone_search(f, instance.generator_set, args.cone, budget), f

    return _search(args, search)


def run_ks(args):
    def search(instance, budget):
        F = None if args.form == EMPTY else instance.target_matrix
        return ks_search(F, instance.generator_set, args.form, budget), F

    return _search(args, search)


def run_arch(args):
    def search(instance, budget):
        result = archimedean_check(instance.generator_set, args.mode, budget)
        target = result.certificate.target if result else None
        return result, target

    return _search(args, search)


def run_bounded(args):
    def search(instance, budget):
        A = instance.target_matrix
        return bounded_element_check(A, instance.generator_set, budget), A

    return _search(args, search)


def run_analyze(args):
    translator = InstanceTranslator()
    instance = translator.translate_instance(args.instance)
    candidates = instance.candidates
    if args.candidates:
        candidates = translator.translate_points(args.candidates, instance.vars)
    attestations = {}
    if args.attest:
        attestations = translator.translate_attestations(args.attest)
    report = full_report(
        instance.target_matrix,
        instance.generator_set,
        budget=instance_budget(args, instance),
        instance_id=instance.identifier,
        candidates=candidates,
        attestations=attestations,
        prescan=not args.no_prescan,
    )
    data = report.to_json()
    if args.report:
        write_json(args.report, data)
    emit(args, data, report.to_text())
    return EXIT_OK


def run_compactness(args):
    instance = load_instance(args)
    result = compactness_probe(instance.generator_set, instance_budget(args, instance))
    text = "status: %s" % result.status
    if result.r is not None:
        text += "\nr = %s" % result.r
    if result.ray is not None:
        text += "\nray: %s" % json.dumps(result.ray.to_json())
    for note in result.notes:
        text += "\nnote: %s" % note
    emit(args, result.to_json(), text)
    return EXIT_OK


def run_selftest_command(args):
    outcomes = run_selftest(quick=args.quick)
    data = {"passed": all(o.passed for o in outcomes),
            "checks": [o.to_json() for o in outcomes]}
    emit(args, data, format_table(outcomes))
    return EXIT_OK if data["passed"] else EXIT_VERIFICATION


# PARSER


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text",
                        help="format of the standard output")
    common.add_argument("--out", default=None,
                        help="write the JSON artifact to this file")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debugging output")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-degree", type=int, default=None,
                        help="maximal degree of the sums of squares")
    budget.add_argument("--product-cap", type=int, default=None,
                        help="maximal number of generators in preordering products")
    budget.add_argument("--seed", type=int, default=None,
                        help="seed of every random choice (default 0)")
    budget.add_argument("--jobs", type=int, default=None,
                        help="number of parallel search workers")

    parser = argparse.ArgumentParser(
        prog="posmat",
        description="Certificates of positivity for polynomial matrices.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    def add(name, function, help_text, with_budget=True, instance=True):
        parents = [common, budget] if with_budget else [common]
        sub = subparsers.add_parser(name, parents=parents, help=help_text)
        if instance:
            sub.add_argument("instance", help="instance JSON file")
        sub.set_defaults(function=function)
        return sub

    add("diag", run_diag, "diagonalize the target matrix", with_budget=False)
    scalarize = add("scalarize", run_scalarize, "scalar generators of the set",
                    with_budget=False)
    scalarize.add_argument("--product-cap", type=int, default=None,
                           help="also list preordering generators up to this order")
    verify = add("verify", run_verify, "check a certificate exactly", with_budget=False)
    verify.add_argument("certificate", help="certificate JSON file")
    add("sos", run_sos, "sum of squares decomposition of the target")
    add("artin", run_artin, "q^2*f = sum of squares")
    cone = add("cone", run_cone, "certificate in the module or preordering")
    cone.add_argument("--cone", choices=[MODULE, PREORDER], default=MODULE)
    ks = add("ks", run_ks, "Krivine-Stengle certificate of the target matrix")
    ks.add_argument("--form", choices=list(KS_FORMS), default="strict")
    arch = add("arch", run_arch, "Archimedean witness of the generators")
    arch.add_argument("--mode", choices=list(ARCHIMEDEAN_MODES), default=SCALAR_MODULE)
    add("bounded", run_bounded, "bound r with r^2*I - A^T*A in the matrix module")
    analyze = add("analyze", run_analyze, "applicability report of the theorems")
    analyze.add_argument("--candidates", default=None, help="candidate zeros (JSON)")
    analyze.add_argument("--attest", default=None, help="user attestations (JSON)")
    analyze.add_argument("--report", default=None, help="write the report here")
    analyze.add_argument("--no-prescan", action="store_true",
                         help="skip the numeric search for zeros")
    add("compactness", run_compactness, "is the set compact, Archimedean or unbounded")
    selftest = add("selftest", run_selftest_command, "run the bundled checks",
                   with_budget=False, instance=False)
    selftest.add_argument("--quick", action="store_true", help="smaller loops")
    return parser


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK
    configure_logging(args.verbose)
    try:
        return args.function(args)
    except InvariantBreach as err:
        logger.error("internal error: %s", err)
        return EXIT_BUG
    except CertificateError as err:
        logger.error("%s", err)
        return EXIT_VERIFICATION
    except (ValueError, OSError) as err:
        logger.error("%s", err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
