"""Independent oracles for the frozen expected values used in the C++ tests.

Everything here uses numpy/scipy/mpmath directly and shares no code with the
library. Run: python3 tests/oracles/frozen_values.py
"""
import math

import mpmath as mp
import numpy as np
from scipy import integrate, optimize, stats


def trig_eval():
    theta = math.pi / 2
    return 1 + 2 * (0.3 * math.cos(theta) - 0.1 * math.cos(2 * theta))


def ar1_lags(a, var=1.0, n=3):
    # closed form, cross-checked by brute-force quadrature of the density
    closed = [var * a**k / (1 - a * a) for k in range(n + 1)]
    quad = [
        integrate.quad(
            lambda t: math.cos(k * t) * var / abs(1 - a * np.exp(1j * t)) ** 2,
            -math.pi, math.pi, limit=200)[0] / (2 * math.pi)
        for k in range(n + 1)
    ]
    assert np.allclose(closed, quad, atol=1e-12)
    return closed


def ar1_cepstrum(a, n=4):
    quad = [
        integrate.quad(
            lambda t: math.cos(k * t) * math.log(1 / abs(1 - a * np.exp(1j * t)) ** 2),
            -math.pi, math.pi, limit=200)[0] / (2 * math.pi)
        for k in range(n + 1)
    ]
    return quad


def entropy_one_plus_cos():
    # the integrand vanishes at the endpoints (0 log 0 = 0); stay off them
    def f(t):
        x = 1 + mp.cos(t)
        return -x * mp.log(x) if x > 0 else mp.mpf(0)

    eps = mp.mpf("1e-25")
    value = mp.quad(f, [-mp.pi + eps, 0, mp.pi - eps])
    assert abs(value + 2 * mp.pi * (1 - mp.log(2))) < 1e-14
    return float(value)


def tv_from_kl(kl):
    return 3 * math.sqrt(-1 + math.sqrt(1 + 4 * kl / 9))


def toeplitz_eigs(lags):
    n = len(lags)
    t = np.array([[lags[abs(i - j)] for j in range(n)] for i in range(n)])
    return np.linalg.eigvalsh(t)


def chi2_median_case():
    med = stats.chi2.ppf(0.5, 1)
    return med, 1 - 0.5**10


def cantelli_case():
    tail = 1 / (1 + 4)
    return 1 - 2 * tail**5


def maxent_entropy(lags, m=4096):
    """Shannon-entropy maximiser exp(-1-l0-2 sum lk cos k t) via scipy BFGS on the dual."""
    t = -math.pi + 2 * math.pi * np.arange(m) / m
    n = len(lags) - 1
    basis = np.array([np.cos(k * t) for k in range(n + 1)])
    mult = np.array([1.0] + [2.0] * n)
    r = np.array(lags)

    def dual(lam):
        expo = -1 - (mult * lam) @ basis
        phi = np.exp(expo)
        val = phi.mean() + np.dot(mult * lam, r)
        grad = mult * (r - basis @ phi / m)
        return val, grad

    lam0 = np.zeros(n + 1)
    lam0[0] = -1 - math.log(r[0])
    res = optimize.minimize(dual, lam0, jac=True, method="BFGS",
                            options={"gtol": 1e-13, "maxiter": 10000})
    phi = np.exp(-1 - (mult * res.x) @ basis)
    h = -(2 * math.pi / m) * np.sum(phi * np.log(phi))
    return h, res.x


def ar1_entropy(a, var=1.0):
    # H = -int phi log phi, closed form through the cepstrum/Parseval
    r0 = var / (1 - a * a)
    return -2 * math.pi * (r0 * math.log(var)) - 4 * math.pi / (1 - a * a) * var * (-math.log(1 - a * a))


def box_grid_oracle():
    best = -math.inf
    arg = None
    for r0 in np.linspace(0.9, 1.1, 21):
        for r1 in np.linspace(-0.1, 0.1, 21):
            h, _ = maxent_entropy([r0, r1], m=1024)
            if h > best:
                best, arg = h, (r0, r1)
    return best, arg


if __name__ == "__main__":
    mp.mp.dps = 30
    print("trig eval (1,0.3,-0.1) at pi/2:", repr(trig_eval()))
    print("ar1 lags a=0.5:", ar1_lags(0.5))
    print("ar1 cepstrum a=0.5:", ar1_cepstrum(0.5))
    print("H[1+cos]:", repr(entropy_one_plus_cos()))
    print("tv_from_kl(1):", repr(tv_from_kl(1.0)))
    print("tv_from_kl(1.044225):", repr(tv_from_kl(1.044225)), 3 * math.sqrt(0.21))
    print("toeplitz eig (1,.5,.25):", toeplitz_eigs([1, .5, .25]))
    print("chi2 median case:", chi2_median_case())
    print("cantelli case:", repr(cantelli_case()))
    print("H[AR1 a=.5]:", repr(ar1_entropy(0.5)))
    print("maxent (4/3,2/3):", maxent_entropy([4 / 3, 2 / 3]))
    print("maxent (4/3,2/3,1/3):", maxent_entropy([4 / 3, 2 / 3, 1 / 3]))
    print("box oracle:", box_grid_oracle(), "flat 0.9:", -2 * math.pi * 0.9 * math.log(0.9))
    a = 0.5
    r = ar1_lags(a, n=2)
    mu = [r[0], 2 * r[1], 2 * r[2]]
    b = [rk + 0.05 * r[0] for rk in r]
    print("KL lower bound AR1 n=2 delta=0.05:", -sum(m * bb for m, bb in zip(mu, b)) - ar1_entropy(a))
