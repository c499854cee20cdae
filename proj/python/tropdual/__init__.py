"""Exact tropical quadric duality.

Matrices are given by their size and row-major upper triangle. Entries may be
int, str ("p/q" or "-inf"), Fraction, or None / float('-inf') for the
tropical zero. Results come back as Fraction, or float('-inf').
"""

from fractions import Fraction

from . import _tropdual
from ._tropdual import InputError, UnsupportedShape

__all__ = [
    "InputError",
    "UnsupportedShape",
    "trop_det",
    "dual_quadric",
    "distortion_matrix",
    "is_regular",
    "classify_by_distortion",
    "node_classification",
    "appearing_nodes",
    "curve_counts",
    "render_svg",
    "oracle_check",
    "canonical_document",
]

NEG_INF = float("-inf")


def _encode(value):
    if value is None:
        return "-inf"
    if isinstance(value, float):
        if value == NEG_INF:
            return "-inf"
        raise TypeError("floats other than -inf are not exact; pass a Fraction or a string")
    if isinstance(value, (int, Fraction)):
        f = Fraction(value)
        return f"{f.numerator}/{f.denominator}"
    if isinstance(value, str):
        return value
    raise TypeError(f"unsupported tropical value {value!r}")


def _decode(text):
    return NEG_INF if text == "-inf" else Fraction(text)


def _upper(upper):
    return [_encode(v) for v in upper]


def _terms(terms):
    items = terms.items() if isinstance(terms, dict) else terms
    return [(list(exp), _encode(coef)) for exp, coef in items]


def trop_det(n, upper):
    value, achievers, degenerate = _tropdual.trop_det(n, _upper(upper))
    return _decode(value), achievers, degenerate


def dual_quadric(n, upper):
    return [_decode(v) for v in _tropdual.dual_quadric(n, _upper(upper))]


def distortion_matrix(n, upper):
    return [_decode(v) for v in _tropdual.distortion_matrix(n, _upper(upper))]


def is_regular(n, upper):
    status, lam, witness = _tropdual.is_regular(n, _upper(upper))
    return status, (None if lam is None else _decode(lam)), witness


def classify_by_distortion(n, upper):
    return _tropdual.classify_by_distortion(n, _upper(upper))


def node_classification(nvars, terms, sign="examples"):
    return _tropdual.node_classification(nvars, _terms(terms), sign)


def appearing_nodes(nvars, terms, sign="examples"):
    return [tuple(e) for e in _tropdual.appearing_nodes(nvars, _terms(terms), sign)]


def curve_counts(nvars, terms, sign="examples"):
    return _tropdual.curve_counts(nvars, _terms(terms), sign)


def render_svg(nvars, terms, sign="examples"):
    return _tropdual.render_svg(nvars, _terms(terms), sign)


def oracle_check(n, upper):
    return _tropdual.oracle_check(n, _upper(upper))


def canonical_document(text):
    return _tropdual.parse_document(text)
