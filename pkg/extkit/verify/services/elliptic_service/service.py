from ._service import _elliptic_f


def elliptic_f(phi: float, k2: float) -> float:
    """Incomplete elliptic integral of the first kind, parameter k2 = k^2.

    Computed by adaptive quadrature, so any k2 <= 0 is accepted as well as
    positive k2 with k2 sin^2(phi) < 1.
    """
    return _elliptic_f(phi=float(phi), k2=float(k2))
