import numpy as np
import pytest
from posmat import GeneratorSet, MPoly, PolyMatrix
from posmat.certificates import (
    LINEAR_TO_SQUARE,
    MATRIX_GENERATORS,
    MODULE,
    PREORDER,
    PSD_FORM,
    SQUARE_TO_LINEAR,
    ZERO,
    DenominatorCert,
    GeneratorTerm,
    KsCert,
    MatrixConeCert,
    ScalarConeCert,
    SosCert,
    certificate_from_document,
    certificate_to_document,
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
from posmat.errors import CertificateError, SchemaError
from posmat.InstanceTranslator import InstanceTranslator
from posmat.selftest import fixture_path, load_certificate, load_fixture, perturb_document

X = ("x",)


def poly(text, variables=X):
    return MPoly.from_string(text, variables)


def interval():
    return GeneratorSet.from_scalars(X, ["1 - x^2"])


@pytest.mark.parametrize(
    "instance_name, cert_name",
    [
        ("id.json", "id_cert.json"),
        ("ks_interval.json", "ks_interval_cert.json"),
        ("ks_interval.json", "interval_cert.json"),
    ],
)
def test_fixture_certificates(instance_name, cert_name):
    instance = load_fixture(instance_name)
    cert = load_certificate(cert_name)
    assert verify_any(instance.target, cert, instance.generator_set)
    document = InstanceTranslator.read_json(fixture_path(cert_name))
    rng = np.random.default_rng(0)
    for _ in range(10):
        mutated = certificate_from_document(perturb_document(document, rng))
        assert not verify_any(instance.target, mutated, instance.generator_set)


def test_module_certificate_by_hand():
    # 2 - x = 1 + 1/2 (x - 1)^2 + 1/2 (1 - x^2)
    cert = ScalarConeCert(
        X,
        MODULE,
        [
            (0, SosCert(X, ["1", "x - 1"], [1, "1/2"])),
            (1, SosCert(X, ["1"], ["1/2"])),
        ],
    )
    assert verify_scalar_cert(poly("2 - x"), cert, interval())
    result = verify_scalar_cert(poly("3 - x"), cert, interval())
    assert not result
    assert result.residual == -1


def test_negative_weights_fail():
    cert = ScalarConeCert.sos(SosCert(X, ["x", "1"], [1, -1]))
    assert not verify_scalar_cert(poly("x^2 - 1"), cert, None)


def test_preorder_selectors_are_checked():
    gens = GeneratorSet.from_scalars(X, ["x", "1 - x"])
    product = ScalarConeCert(X, PREORDER, [((1, 1), SosCert.unit(X))])
    assert verify_scalar_cert(poly("x - x^2"), product, gens)
    wrong_length = ScalarConeCert(X, PREORDER, [((1,), SosCert.unit(X))])
    assert not verify_scalar_cert(poly("x"), wrong_length, gens)


def test_denominator_certificate():
    cert = DenominatorCert(SosCert(X, ["x", "1"]), SosCert(X, ["x", "1"]))
    assert verify_denominator_cert(poly("1"), cert, None)
    assert not verify_denominator_cert(poly("2"), cert, None)
    zero = DenominatorCert(SosCert(X), SosCert(X))
    assert not verify_denominator_cert(poly("0"), zero, None)


def test_documents():
    cert = ScalarConeCert.sos(SosCert(X, ["x - 1"]))
    document = certificate_to_document(cert, target="x^2 - 2*x + 1")
    assert document["cert_version"] == 1
    assert certificate_from_document(document).to_json() == cert.to_json()
    with pytest.raises(SchemaError):
        certificate_from_document(dict(document, cert_version=2))
    with pytest.raises(SchemaError):
        certificate_from_document({"cert_version": 1, "certificate": {"type": "?"}})


def interval_certificate(f):
    """Module certificate of a linear c + a*x with |a| <= c on [-1, 1]."""
    c, a = f.constant_term(), f.coefficient((1,))
    if a == 0:
        return ScalarConeCert.sos(SosCert.constant(X, c))
    # c + a x = (|a|/2)(1 + s x)^2 + (|a|/2)(1 - x^2) + (c - |a|)
    s = 1 if a > 0 else -1
    half = abs(a) / 2
    terms = [(0, SosCert(X, [poly("1 + %d*x" % s)], [half])), (1, SosCert(X, ["1"], [half]))]
    if c > abs(a):
        terms.append((0, SosCert.constant(X, c - abs(a))))
    return ScalarConeCert(X, MODULE, terms)


def test_diagonal_embedding_and_trace_down():
    gens = interval().with_n(2)
    f = poly("2 - x")
    cert = embed_diagonal([interval_certificate(f)] * 2, 2, gens)
    assert verify_any(PolyMatrix.identity(2, X, scale=f), cert, gens)
    scalar = trace_down(cert, f, gens)
    assert verify_scalar_cert(f, scalar, gens)
    with pytest.raises(CertificateError):
        trace_down(cert, poly("3 - x"), gens)


def test_bounded_transforms_round_trip():
    gens = interval().with_n(2)
    x = poly("x")
    A = PolyMatrix.diagonal([x, "1/2"], X)
    r = 1
    linear = []
    for sign in (1, -1):
        certs = [interval_certificate(A[i, i].scale(sign) + r) for i in range(2)]
        linear.append(embed_diagonal(certs, 2, gens))
    square = bounded_transform(LINEAR_TO_SQUARE, A, r, linear, gens)
    target = PolyMatrix.identity(2, X) - PolyMatrix.diagonal([x * x, "1/4"], X)
    assert verify_any(target, square, gens)
    plus, minus = bounded_transform(SQUARE_TO_LINEAR, A, r, square, gens)
    assert verify_any(PolyMatrix.identity(2, X) + A, plus, gens)
    assert verify_any(PolyMatrix.identity(2, X) - A, minus, gens)
    with pytest.raises(CertificateError):
        bounded_transform(SQUARE_TO_LINEAR, A, 2, square, gens)
    with pytest.raises(ValueError):
        bounded_transform(SQUARE_TO_LINEAR, A, 0, square, gens)


def test_embedded_generators_must_come_from_the_set():
    gens = interval().with_n(2)
    identity = PolyMatrix.identity(2, X)
    minus_identity = PolyMatrix.identity(2, X, scale=-1)
    forged = MatrixConeCert(
        X, 2, MATRIX_GENERATORS, [GeneratorTerm(1, identity)], generators=[minus_identity]
    )
    assert not verify_matrix_cert(minus_identity, forged, gens)
    reloaded = certificate_from_document(certificate_to_document(forged))
    assert reloaded.generators == [minus_identity]
    assert not verify_any(minus_identity, reloaded, gens)
    assert not verify_matrix_cert(minus_identity, forged, None)
    # (1 - x^2)^2 * I_2 is a product of two generator forms
    square = PolyMatrix.identity(2, X, scale=poly("(1 - x^2)^2"))
    admissible = MatrixConeCert(
        X, 2, MATRIX_GENERATORS, [GeneratorTerm(1, identity)], generators=[square]
    )
    assert verify_matrix_cert(square, admissible, gens)
    hermitian = MatrixConeCert(
        X, 2, MATRIX_GENERATORS, [GeneratorTerm(0, identity.scale(poly("x")))], generators=[]
    )
    assert verify_matrix_cert(PolyMatrix.identity(2, X, scale=poly("x^2")), hermitian, gens)


def test_ks_certificates_need_an_invertible_xminus():
    gens = interval()
    F = PolyMatrix([["-1 - x^2"]], X)
    nothing = ScalarConeCert.zero(X, PREORDER)
    singular = PolyMatrix.zeros(1, X)
    assert not verify_ks(F, KsCert(PSD_FORM, [nothing], [nothing], 1, singular), gens)
    assert not verify_ks(F, KsCert(ZERO, [], [nothing], 1, singular), gens)
    assert not verify_ks(F, KsCert(ZERO, [], [nothing], 0, singular), gens)
    # [x] vanishes on K = {0}: -x^2 is the generator itself
    point = GeneratorSet.from_scalars(X, ["-x^2"])
    generator = ScalarConeCert(X, PREORDER, [((1,), SosCert.unit(X))])
    vanishing = KsCert(ZERO, [], [generator], 1, PolyMatrix.identity(1, X))
    assert verify_ks(PolyMatrix([["x"]], X), vanishing, point)
    assert not verify_ks(PolyMatrix([["1 + x"]], X), vanishing, point)


def test_rewrite_over_preorder_generators():
    gens = GeneratorSet.from_scalars(X, ["x", "1 - x"]).with_n(2)
    f = poly("x - x^2")
    product = ScalarConeCert(X, PREORDER, [((1, 1), SosCert.unit(X))])
    linear = ScalarConeCert(X, MODULE, [(1, SosCert(X, ["x"], [2]))])
    cert = embed_diagonal([product, linear], 2, gens)
    target = PolyMatrix.diagonal([f, poly("2*x^3")], X)
    rewritten = over_preorder_generators(cert, gens)
    assert rewritten.cone == MATRIX_GENERATORS
    assert verify_matrix_cert(target, rewritten, gens)
    assert PolyMatrix.identity(2, X, scale=f) in rewritten.generators
    with pytest.raises(ValueError):
        over_preorder_generators(rewritten, gens)
