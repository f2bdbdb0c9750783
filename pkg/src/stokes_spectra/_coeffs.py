"""Constants shared by the compiled and pure-Python Faddeeva kernels.

Both backends read their tables from here so that they evaluate the
same formulas term for term.
"""

import math

import numpy as np

SQRT_PI = math.sqrt(math.pi)

# |z| below this: Maclaurin series of w(z)
SERIES_RADIUS = 0.5
SERIES_TERMS = 40
# |z| at or above this: Laplace continued fraction
CF_RADIUS = 8.0
CF_DEPTH = 20
# between the two: Weideman's rational expansion with this many terms
WEIDEMAN_N = 40


def _series_coefficients(n):
    # w(z) = sum_k (iz)^k / Gamma(k/2 + 1)
    return tuple(1.0 / math.gamma(k / 2.0 + 1.0) for k in range(n))


def _weideman_coefficients(n):
    """Polynomial coefficients (highest degree first) and scale ``L``.

    J.A.C. Weideman, SIAM J. Numer. Anal. 31 (1994) 1497-1518.
    """
    m = 2 * n
    m2 = 2 * m
    k = np.arange(-m + 1, m)
    scale = math.sqrt(n / math.sqrt(2.0))
    t = scale * np.tan(k * math.pi / (2.0 * m))
    f = np.concatenate(([0.0], np.exp(-t * t) * (scale * scale + t * t)))
    a = np.real(np.fft.fft(np.fft.fftshift(f))) / m2
    a = a[1 : n + 1][::-1]
    return scale, tuple(float(c) for c in a)


SERIES = _series_coefficients(SERIES_TERMS)
WEIDEMAN_L, WEIDEMAN = _weideman_coefficients(WEIDEMAN_N)
