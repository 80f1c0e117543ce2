"""Bundled checks run by ``posmat selftest``.

Every check returns ``(passed, detail)``; ``quick`` shrinks the seeded loops
and skips the slowest searches.
"""

import copy
import logging
import os
import time
from fractions import Fraction

import numpy as np

from .analyzer import (
    COMPACT,
    UNBOUNDED,
    bhc_check,
    compactness_probe,
    full_report,
    zero_analysis,
)
from .certificates import (
    LINEAR_TO_SQUARE,
    MODULE,
    PREORDER,
    SQUARE_TO_LINEAR,
    STRICT,
    ball_polynomial,
    certificate_from_document,
    embed_diagonal,
    bounded_transform,
    over_preorder_generators,
    trace_down,
    verify_any,
    verify_denominator_cert,
    verify_ks,
    verify_matrix_cert,
    verify_scalar_cert,
)
from .Diagonalization import diagonalize
from .GeneratorSet import GeneratorSet, preorder_generators
from .InstanceTranslator import InstanceTranslator
from .MPoly import MPoly, RationalPoint
from .PolyMatrix import PolyMatrix, SymPolyMatrix
from .psd_witness import psd_witness
from .sampling import points_in_set, random_points
from .SearchBudget import SearchBudget
from .sos import (
    INFEASIBLE_AT_BUDGET,
    MATRIX_MODULE,
    SCALAR_MODULE,
    archimedean_check,
    artin_search,
    cone_search,
    ks_search,
    sos_decompose,
)

logger = logging.getLogger(__name__)

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")

MOTZKIN = "x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1"


def fixture_path(name):
    return os.path.join(FIXTURES_DIR, name)


def load_fixture(name):
    return InstanceTranslator().translate_instance(fixture_path(name))


def load_certificate(name):
    return certificate_from_document(InstanceTranslator.read_json(fixture_path(name)))


class SelftestOutcome:
    def __init__(self, name, passed, detail="", seconds=0.0):
        self.name = name
        self.passed = passed
        self.detail = detail
        self.seconds = seconds

    def to_json(self):
        return {
            "check": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


# RANDOM DATA


def random_polynomial(rng, variables, degree, density=0.5, coefficient_range=3):
    terms = {}
    for e in MPoly.monomials(len(variables), degree):
        if rng.random() < density:
            c = int(rng.integers(-coefficient_range, coefficient_range + 1))
            if c:
                terms[e] = Fraction(c)
    return MPoly(variables, terms)


def random_symmetric_matrix(rng, n, variables, degree=2):
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = random_polynomial(rng, variables, degree)
    return SymPolyMatrix(rows, variables)


def perturb_document(document, rng):
    """Copy of a certificate document with one coefficient of one
    polynomial string changed by a non-zero rational."""
    document = copy.deepcopy(document)
    variables = document["certificate"]["vars"]
    leaves = []

    def collect(node, parent, key):
        if isinstance(node, dict):
            for k, v in node.items():
                if k not in ("type", "cone", "form", "vars"):
                    collect(v, node, k)
        elif isinstance(node, list):
            for i, v in enumerate(node):
                collect(v, node, i)
        elif isinstance(node, str):
            leaves.append((parent, key))

    collect(document["certificate"], None, None)
    parent, key = leaves[int(rng.integers(len(leaves)))]
    poly = MPoly.from_string(parent[key], variables)
    exponents = sorted(poly.terms) or [(0,) * len(variables)]
    e = exponents[int(rng.integers(len(exponents)))]
    old = poly.coefficient(e)
    delta = 0
    # c -> -c keeps squares and congruences A*G*A^T unchanged
    while delta == 0 or delta == -2 * old:
        delta = Fraction(int(rng.integers(1, 5)), int(rng.integers(1, 4)))
        if rng.random() < 0.5:
            delta = -delta
    parent[key] = str(poly + MPoly.monomial(variables, e, delta))
    return document


# CHECKS


def check_diagonalization_fuzz(quick):
    rng = np.random.default_rng(0)
    variables = ("x", "y")
    count, points_per_matrix = (20, 5) if quick else (200, 20)
    for k in range(count):
        n = int(rng.integers(1, 4 if quick else 5))
        A = random_symmetric_matrix(rng, n, variables)
        decomposition = diagonalize(A)
        failures = decomposition.failed_identities()
        if failures:
            return False, "matrix %d: %s" % (k, failures)
        # det(Xplus)*det(Xminus) = b^n, so b(p) != 0 makes both invertible
        for point in random_points(variables, points_per_matrix, seed=k):
            if decomposition.b.evaluate(point) == 0:
                continue
            if A.inertia_at(point) != decomposition.D.inertia_at(point):
                return False, "matrix %d: inertia differs at %s" % (k, point)
    return True, "%d matrices" % count


def check_scalarization(quick):
    names = ["box.json", "disk.json", "empty_set.json", "identity_interval.json",
             "ks_interval.json", "unit_interval.json", "quadrant.json"]
    count = 20 if quick else 100
    for name in names:
        gens = load_fixture(name).generator_set
        for point in random_points(gens.vars, count, seed=1, scale=1, denominator=4):
            if gens.matrices_psd_at(point) != gens.contains(point):
                return False, "%s disagrees at %s" % (name, point)
    box = load_fixture("box.json").generator_set
    expected = [MPoly.from_string(g, box.vars)
                for g in ("2 - x^2 - y^2", "(1 - x^2)*(1 - y^2)")]
    if box.scalar_gens != expected:
        return False, "box scalarization: %s" % box.scalar_gens
    return True, "%d generator sets" % len(names)


def check_mutations(quick):
    pairs = [("id.json", "id_cert.json"), ("ks_interval.json", "ks_interval_cert.json"),
             ("ks_interval.json", "interval_cert.json")]
    rng = np.random.default_rng(2)
    count = 10 if quick else 50
    for instance_name, cert_name in pairs:
        instance = load_fixture(instance_name)
        document = InstanceTranslator.read_json(fixture_path(cert_name))
        cert = certificate_from_document(document)
        if not verify_any(instance.target, cert, instance.generator_set):
            return False, "%s does not verify" % cert_name
        for _ in range(count):
            mutated = certificate_from_document(perturb_document(document, rng))
            if verify_any(instance.target, mutated, instance.generator_set):
                return False, "a mutation of %s still verifies" % cert_name
    return True, "%d mutations per certificate" % count


def check_sos_engine(quick):
    budget = SearchBudget()
    for text, variables in (("(x - 1)^2", ("x",)), ("1 + x^2", ("x",)),
                            ("2*x^4 + 5", ("x",)),
                            ("(x + y)^4 + (x - y)^2", ("x", "y"))):
        f = MPoly.from_string(text, variables)
        result = sos_decompose(f, budget)
        if not result or result.certificate.expand() != f:
            return False, "no exact decomposition of %s" % text
    if quick:
        return True, "4 decompositions"
    motzkin = MPoly.from_string(MOTZKIN, ("x", "y"))
    result = sos_decompose(motzkin, budget.with_degree(6))
    if result.status != INFEASIBLE_AT_BUDGET or result.witness is None:
        return False, "Motzkin: %s" % result.status
    result = artin_search(motzkin, budget.with_degree(8))
    if not result or not verify_denominator_cert(motzkin, result.certificate, None):
        return False, "no denominator certificate of the Motzkin polynomial"
    return True, "4 decompositions, Motzkin dual witness and denominator"


def check_krivine_stengle(quick):
    instance = load_fixture("ks_interval.json")
    F, gens = instance.target_matrix, instance.generator_set
    result = ks_search(F, gens, STRICT)
    if not result or not verify_ks(F, result.certificate, gens):
        return False, "no strict certificate of [3 - x]"
    if not verify_ks(F, load_certificate("ks_interval_cert.json"), gens):
        return False, "fixture certificate fails"
    return True, "search and fixture certificates pass"


def check_preorder_generators(quick):
    variables = ("x",)
    gens = GeneratorSet.from_scalars(variables, ["x", "1 - x"])
    f = MPoly.from_string("x - x^2", variables)
    result = cone_search(f, gens, PREORDER)
    if not result:
        return False, "no preordering certificate of x - x^2"
    gens2 = gens.with_n(2)
    cert = embed_diagonal([result.certificate] * 2, 2, gens2)
    rewritten = over_preorder_generators(cert, gens2)
    check = verify_matrix_cert(PolyMatrix.identity(2, variables, scale=f), rewritten, gens2)
    if not check:
        return False, "rewritten certificate fails: %s" % check.reason
    for G in preorder_generators(gens2):
        for point in points_in_set(gens2, 5 if quick else 20):
            if G.eval_psd(point) not in ("PD", "PSD"):
                return False, "%s is not PSD at %s" % (G, point)
    return True, "%d terms over %d generators" % (len(rewritten.terms),
                                                   len(rewritten.generators))


def check_archimedean(quick):
    variables = ("x", "y")
    disk = GeneratorSet.from_scalars(variables, ["1 - x^2 - y^2"])
    budget = SearchBudget(max_sos_degree=2)
    result = archimedean_check(disk, SCALAR_MODULE, budget)
    if not result or result.certificate.r != 1:
        return False, "disk: no witness at r = 1"
    lifted = archimedean_check(disk.with_n(2), MATRIX_MODULE, budget)
    if not lifted or not lifted.certificate.verify():
        return False, "disk: matrix lift fails"
    witness = lifted.certificate
    scalar = trace_down(witness.matrix_cert, witness.target, witness.generator_set)
    if not verify_scalar_cert(witness.target, scalar, witness.generator_set):
        return False, "trace_down of the lift fails"
    empty = GeneratorSet.from_scalars(("x",), [])
    degree = 4 if quick else 8
    if archimedean_check(empty, SCALAR_MODULE, SearchBudget(max_sos_degree=degree)):
        return False, "empty generator set reported Archimedean"
    return True, "r = 1, lift and trace_down verified"


def bounded_pairs(count):
    """(A, r) with A = diag(c1*x, c2), |c1|, |c2| <= r."""
    for k in range(count):
        r = Fraction(1 + k % 3)
        c1 = r * Fraction(k % 5 - 2, 2)
        c2 = r * Fraction(k % 3 - 1, 2)
        x = MPoly.variable(("x",), 0)
        yield PolyMatrix.diagonal([x.scale(c1), c2], ("x",)), r


def check_bounded_transforms(quick):
    gens = GeneratorSet.from_scalars(("x",), ["1 - x^2"]).with_n(2)
    count = 5 if quick else 20
    for A, r in bounded_pairs(count):
        linear = []
        for sign in (1, -1):
            certs = []
            for i in range(2):
                result = cone_search(A[i, i].scale(sign) + r, gens, MODULE)
                if not result:
                    return False, "no certificate of %s" % (A[i, i].scale(sign) + r)
                certs.append(result.certificate)
            linear.append(embed_diagonal(certs, 2, gens))
        square = bounded_transform(LINEAR_TO_SQUARE, A, r, linear, gens)
        bounded_transform(SQUARE_TO_LINEAR, A, r, square, gens)
    return True, "%d round trips" % count


def check_analyzer(quick):
    disk = GeneratorSet.from_scalars(("x", "y"), ["1 - x^2 - y^2"])
    f = MPoly.from_string("x^2 + y^2", ("x", "y"))
    (record,) = zero_analysis(f, disk, [RationalPoint(("x", "y"), [0, 0])])
    if not (record.is_zero and record.interior and record.hessian_class == "PD"):
        return False, "disk zero analysis: %r" % record
    interval = GeneratorSet.from_scalars(("x",), ["x", "1 - x"])
    x = MPoly.variable(("x",), 0)
    linear = bhc_check(x, interval, [0], uniformizers=[1])
    if not linear.verdict or linear.coefficients != [1]:
        return False, "BHC of x at 0: %s" % linear.reasons
    if bhc_check(x * x, interval, [0], uniformizers=[1]).verdict:
        return False, "BHC of x^2 at 0 accepted"
    budget = SearchBudget(max_sos_degree=2)
    compact = compactness_probe(disk, budget)
    if compact.status != COMPACT or compact.r != 1:
        return False, "disk compactness: %r" % compact
    quadrant = GeneratorSet.from_scalars(("x", "y"), ["x", "y"])
    unbounded = compactness_probe(quadrant, budget)
    if unbounded.status != UNBOUNDED:
        return False, "quadrant compactness: %r" % unbounded
    return True, "zeros, BHC and compactness"


def check_examples(quick):
    hyperbolic = diagonalize(load_fixture("hyperbolic.json").target_matrix)
    if hyperbolic.b != MPoly.constant(("x",), 2):
        return False, "hyperbolic: b = %s" % hyperbolic.b
    instance = load_fixture("id.json")
    if not verify_any(instance.target, load_certificate("id_cert.json"),
                      instance.generator_set):
        return False, "id certificate fails"
    x = MPoly.variable(("x",), 0)
    refuted = psd_witness(PolyMatrix([[x]], ("x",)))
    if refuted.witness != RationalPoint(("x",), [-1]):
        return False, "diag(x): %r" % refuted
    if not psd_witness(PolyMatrix.identity(3, ("x",))):
        return False, "I_3 not certified"
    if not psd_witness(load_fixture("psd_line.json").target_matrix):
        return False, "[[1, x], [x, x^2]] not certified"
    negative = load_fixture("negative_identity.json")
    report = full_report(negative.target_matrix, negative.generator_set,
                         instance_id=negative.identifier, prescan=False)
    if report.applicable_routes():
        return False, "-I: conclusions %s" % report.applicable_routes()
    return True, "diagonalization, verification, psd and report examples"


default_checks = (
    ("diagonalization_fuzz", check_diagonalization_fuzz),
    ("scalarization", check_scalarization),
    ("verifier_mutations", check_mutations),
    ("sos_engine", check_sos_engine),
    ("krivine_stengle", check_krivine_stengle),
    ("preorder_generators", check_preorder_generators),
    ("archimedean", check_archimedean),
    ("bounded_transforms", check_bounded_transforms),
    ("analyzer", check_analyzer),
    ("examples", check_examples),
)


def run_selftest(quick=False, checks=default_checks):
    """Run every check, catching errors; returns a list of SelftestOutcome."""
    outcomes = []
    for name, check in checks:
        start = time.perf_counter()
        try:
            passed, detail = check(quick)
        except Exception as err:
            logger.exception("check %s raised", name)
            passed, detail = False, "%s: %s" % (type(err).__name__, err)
        outcomes.append(SelftestOutcome(name, passed, detail, time.perf_counter() - start))
        logger.info("%s: %s", name, "PASS" if passed else "FAIL")
    return outcomes


def format_table(outcomes):
    width = max(len(o.name) for o in outcomes)
    lines = []
    for o in outcomes:
        lines.append("%-4s  %-*s  %7.2fs  %s" % (
            "PASS" if o.passed else "FAIL", width, o.name, o.seconds, o.detail))
    return "\n".join(lines)
