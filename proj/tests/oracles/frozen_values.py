"""High-precision reference values frozen into the C++ unit tests.

Every number here is computed independently of the C++ implementation:
mpmath at 50 digits, plain bisection, and direct enumeration where noted.
Run with `python3 tests/oracles/frozen_values.py`.
"""
import itertools

from mpmath import mp, mpf, atanh, cosh, log, sqrt, tanh

mp.dps = 50


def f(h, t):
    return atanh(t * tanh(h))


def a(x, beta, J):
    return -(1 / (2 * beta)) * log(4 * cosh(x + beta * J) * cosh(x - beta * J))


def bisect(fn, lo, hi, iters=400):
    flo = fn(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = fn(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def alt_positive(k, q, t):
    h2 = bisect(lambda u: k * f(q * f(u, t), t) - u, mpf("1e-40"), k * atanh(t))
    return q * f(h2, t), h2


def show(name, value):
    print(f"{name} = {mp.nstr(value, 17)}")


show("tanh(1)", tanh(1))
show("f_theta(1, 0.6)", f(1, mpf("0.6")))
show("atanh(0.5)", atanh(mpf("0.5")))
show("-ln(2 cosh 1)", -log(2 * cosh(1)))
show("0.5 ln(4 cosh 2)", log(4 * cosh(2)) / 2)
show("1/sqrt(6)", 1 / sqrt(6))
show("atanh(1/sqrt2)", atanh(1 / sqrt(2)))

for theta in ["0.75", "0.8", "0.9", "0.95"]:
    h1, h2 = alt_positive(2, 1, mpf(theta))
    show(f"alt k=2 q=1 theta={theta} h1", h1)
    show(f"alt k=2 q=1 theta={theta} h2", h2)

h1, h2 = alt_positive(3, 1, tanh(mpf("1.5")))
show("alt k=3 q=1 beta=1.5 h1", h1)
show("alt k=3 q=1 beta=1.5 h2", h2)

# TI h* for k=2, beta=J=1, B=0 (largest root of h = 2 f(h)).
t = tanh(1)
hstar = bisect(lambda h: h - 2 * f(h, t), mpf("0.1"), 2 * atanh(t))
show("TI k=2 beta=J=1 h*", hstar)

# Spinodals k=2, beta=1, |J|=1 (|theta| form).
k = 2
x1 = sqrt((k * t - 1) / (k / t - 1))
x2 = sqrt((k - 1 / t) / (k - t))
show("B^F k=2 beta=J=1", k * atanh(x1) - atanh(x2))
show("B^AF k=2 beta=1 J=-1", k * atanh(x1) + atanh(x2))

# Direct enumeration: half tree k=2 depth 1, fields (h, h) on W_1, B = 0.
h, beta, J = mpf("0.7"), mpf("0.9"), mpf("1.0")
Z = mpf(0)
for s0, s1, s2 in itertools.product([-1, 1], repeat=3):
    Z += mp.exp(beta * J * s0 * (s1 + s2) + h * (s1 + s2))
show("ln Z1 half k=2 h=0.7 beta=0.9 J=1 (enumeration)", log(Z))
tele = 2 * log(4 * cosh(h + beta * J) * cosh(h - beta * J)) / 2 + log(2 * cosh(2 * f(h, tanh(beta * J))))
show("ln Z1 same, telescoped", tele)

# Residual entropy of the alternating branch: beta (F - F_inf) with F_inf = -4/3 (even).
for beta in [5, 10, 20, 40]:
    b = mpf(beta)
    h1, h2 = alt_positive(2, 1, tanh(b))
    Fe = (a(0, b, 1) + a(h1, b, 1) + a(h2, b, 1)) / 3
    show(f"alt even beta*(F+4/3) beta={beta}", b * (Fe + mpf(4) / 3))
show("ln2/6", log(2) / 6)
