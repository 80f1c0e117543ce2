"""Versioned JSON documents for certificates."""

from ..errors import SchemaError
from .ConeCert import MatrixConeCert, ScalarConeCert
from .KsCert import KsCert
from .SosCert import DenominatorCert, SosCert

CERT_VERSION = 1

CERTIFICATE_TYPES = {
    "sos": SosCert,
    "scalar_cone": ScalarConeCert,
    "matrix_cone": MatrixConeCert,
    "ks": KsCert,
    "denominator": DenominatorCert,
}


def certificate_to_document(cert, **extra):
    """JSON-ready dict of a certificate, tagged with ``cert_version``.

    Extra keyword arguments (e.g. ``target``) are stored alongside.
    """
    document = {"cert_version": CERT_VERSION}
    document.update(extra)
    document["certificate"] = cert.to_json()
    return document


def certificate_from_document(document):
    """Inverse of :func:`certificate_to_document`.

    A bare certificate dict (no envelope) is accepted when it carries a
    ``cert_version`` of its own.
    """
    if not isinstance(document, dict):
        raise SchemaError("a certificate document must be a JSON object")
    version = document.get("cert_version")
    if version != CERT_VERSION:
        raise SchemaError(
            "unsupported cert_version %r (expected %d)" % (version, CERT_VERSION)
        )
    data = document.get("certificate", document)
    kind = data.get("type")
    if kind not in CERTIFICATE_TYPES:
        raise SchemaError("unknown certificate type %r" % kind)
    return CERTIFICATE_TYPES[kind].from_json(data)
