"""Frozen reference values.

Produced once with mpmath at 30 digits, independently of the package:
lambda0 from ``1 + i sqrt(pi) z exp(-z^2) erfc(-iz)`` (reflected to the
upper half plane), lambda0_real by quadrature of
``1 - 2 mu^2 integral_0^1 exp(-mu^2 (1 - t^2)) dt``, roots by
``mpmath.findroot``. Do not regenerate from the package under test.
"""

LAMBDA0 = {
    1 + 1j: complex(0.09079650100217769, 0.17108658129968914),
    0.7 + 0.3j: complex(0.25479116118899641, 0.44458111193454005),
    0.2 + 0.05j: complex(0.8478219609166841, 0.30504207206342713),
    -1.5 + 2j: complex(0.032919270078077976, -0.064527383384591497),
    3 + 0.5j: complex(-0.059066785974887358, 0.026386911329134542),
    5 + 5j: complex(0.00029896019854817776, 0.0099850931818079245),
    0.01 + 0.02j: complex(0.96514728804693011, 0.016943719111398213),
    2 - 1j: complex(-0.036294321581686167, -0.10327330431424889),
    10j: complex(0.0049268121755302526, 0.0),
    9 + 0.1j: complex(-0.0062884043263430623, 0.00014246722630892275),
}

LAMBDA0_REAL = {
    0.5: 0.5755636164979777,
    1.0: -0.076159013825536838,
    2.0: -0.20536155569516786,
    3.5: -0.047351151565295393,
    5.0: -0.021340744242768354,
}

MU0 = 0.92413887300459177
S_MU0 = 0.69728529263900903
ARGMAX_MU = 0.79943556091039265
OMEGA1_STAR = 0.73275871000140884

Y1_ROOTS = {
    0.0: (0.44735693460531413, 1.4931749998479766),
    0.5: (0.54308173915702348, 1.1582683083553292),
}

ETA0 = {
    0.01: complex(5.0740206289534225, 4.9241117129043689),
    0.1: complex(1.7854153020495608, 1.329568621195593),
    0.3: complex(1.1933183882963196, 0.486379774400502),
    0.5: complex(1.016668054671346, 0.17937200120576437),
    0.69: complex(0.92683247595603495, 0.0054482838079233012),
}
