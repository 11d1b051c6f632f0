# Copyright 2026 The gaussdisc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Test-only generator for the frozen reference values used in the C++ unit
# tests. Evaluates each closed form in 50-digit arithmetic with mpmath,
# independently of the C++ code paths. Run: python3 frozen_values.py
import mpmath as mp

mp.mp.dps = 50


def h(x):
    x = mp.mpf(x)
    a, b = (x + 1) / 2, (x - 1) / 2
    return a * mp.log(a, 2) - (0 if b == 0 else b * mp.log(b, 2))


def H(p):
    p = mp.mpf(p)
    return -p * mp.log(p, 2) - (1 - p) * mp.log(1 - p, 2)


def G(s, x):
    return mp.power(2, s) / (mp.power(x + 1, s) - mp.power(x - 1, s))


def Lam(s, x):
    a, b = mp.power(x + 1, s), mp.power(x - 1, s)
    return (a + b) / (a - b)


def q_global(mu, s):
    mu, s = mp.mpf(mu), mp.mpf(s)
    nup = 2 * mu - 1
    pi = 4 * G(s, mu) ** 2 * G(1 - s, 1) * G(1 - s, nup)
    return pi / ((Lam(s, mu) + Lam(1 - s, 1)) * (Lam(s, mu) + Lam(1 - s, nup)))


def eps(mu):
    return 2 * (mp.mpf(mu) - 1) / (mp.mpf(mu) + 1)


def q_het(mu, s):
    mu, s = mp.mpf(mu), mp.mpf(s)
    e = eps(mu)
    return 2 * G(s, mu) * G(1 - s, 1 + e) / (Lam(s, mu) + Lam(1 - s, 1 + e) + (mu - 1) * e / 2)


def f_het_outcome(mu, r2):
    mu = mp.mpf(mu)
    e = eps(mu)
    den = 1 + mu * (1 + e) - 2 * (mu - 1) * mp.sqrt(2 * mu / (mu + 1))
    return 2 * mp.exp(-e * e * r2 / (4 * (mu + 1 + e))) / den


def p_lower_local(mu):
    # Displacement d ~ N(0, v I) in vacuum units; outcome x = sqrt(2) d / eps.
    mu = mp.mpf(mu)
    e = eps(mu)
    v = mu - 1 - e
    f = lambda r: r / v * mp.exp(-r * r / (2 * v)) * (
        1 - mp.sqrt(1 - f_het_outcome(mu, 2 * r * r / (e * e)))) / 2
    return mp.quad(f, [0, mp.inf])


def show(name, val):
    print(f"{name:40s} {mp.nstr(val, 17)}")


show("h(2)", h(2))
show("binary_entropy(0.25)", H(0.25))
show("1-H(0.25)", 1 - H(0.25))
show("1-H(0.1)", 1 - H(0.1))
show("delta_c(3)", h(3) - h(2))
show("delta_d(3)", h(3) - h(5) + h(2))
show("G_0.5(3)", G(0.5, 3))
show("G_0.5(2)", G(0.5, 2))
show("Lambda_0.5(2)", Lam(0.5, 2))
show("Lambda_0.5(3)", Lam(0.5, 3))
show("Q_global(2, 0.5)", q_global(2, 0.5))
B = q_global(2, 0.5)
show("P_minus_global(2)", (1 - mp.sqrt(1 - B * B)) / 2)
show("Q_global(1.5, 0.5)", q_global(1.5, 0.5))
show("Q_global(2, 0.3)", q_global(2, 0.3))
show("Q_global(2, 0.7)", q_global(2, 0.7))
show("Q_het(2, 0.5)", q_het(2, 0.5))
show("F_het(2, 0)", f_het_outcome(2, 0))
show("F_het(2, |x|^2=1)", f_het_outcome(2, 1))
show("P_minus_local(2)", p_lower_local(2))
show("P_minus_local(5)", p_lower_local(5))
