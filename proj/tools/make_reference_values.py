#!/usr/bin/env python3
# Copyright 2026 The shufflecount Authors
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
"""Independent high-precision evaluation of the closed-form quantities used in tests.

The C++ test suites pin expected values for the amplification accounting and the
variance/bias bound calculators. Those values are frozen from this script (mpmath,
50 significant digits) so the C++ implementations are checked against an independent
evaluation rather than against themselves. Run from anywhere:

    python3 tools/make_reference_values.py
"""

import mpmath as mp

mp.mp.dps = 50


def el_cap(n, delta):
    """Largest local budget for which the amplification bound is valid."""
    return mp.log(n / (16 * mp.log(2 / delta)))


def amplification_eps(n, eps_local, delta):
    """Central epsilon after shuffling n reports randomized at eps_local."""
    a = mp.e**eps_local
    x1 = (a - 1) / (a + 1)
    x2 = 8 * mp.sqrt(a * mp.log(4 / delta)) / mp.sqrt(n)
    x3 = 8 * a / n
    return mp.log(1 + x1 * (x2 + x3))


def local_budget(n, eps, delta):
    """Inverse of amplification_eps in eps_local, clamped to el_cap."""
    cap = el_cap(n, delta)
    if amplification_eps(n, cap, delta) <= eps:
        return cap
    return mp.findroot(lambda el: amplification_eps(n, el, delta) - eps, [mp.mpf("1e-6"), cap], solver="bisect", tol=mp.mpf("1e-40"))


def flip_prob(eps):
    return 1 / (mp.e**eps + 1)


def err_wsle(n, d_max, q, q_l):
    return (n * q_l + q * (1 - 2 * q_l) ** 2 * d_max**2) / ((1 - 2 * q) ** 2 * (1 - 2 * q_l) ** 2)


def triangle_mse_bound(n, d_max, t, q, q_l):
    return n**4 / (36 * t) * err_wsle(n, d_max, q, q_l) + n**3 / (36 * t) * d_max**3


def vr_bias_bound(n, d_avg, c, alpha, eps1):
    return n * c**2 * d_avg**2 / 3 + 4 * n**alpha / (3 * eps1**2)


def vr_variance_bound(n, d_max, t, alpha, err):
    return n**2 * d_max**4 / 9 + 2 * n ** (2 + 2 * alpha) / (9 * t) * err + n ** (2 + alpha) * d_max**3 / (36 * t)


def fourcycle_mse_bound(n, d_max, t, q_l):
    return 9 * n**5 * q_l * (d_max + n * q_l) ** 2 / (16 * t * (1 - 2 * q_l) ** 4) + n**3 * d_max**6 / (64 * t)


def show(label, value):
    print(f"{label:<58s} {mp.nstr(value, 20)}")


def main():
    e = mp.e
    show("el_cap(1e5, 1e-8)", el_cap(mp.mpf(10) ** 5, mp.mpf(10) ** -8))
    show("el_cap(1e6, 1e-8)", el_cap(mp.mpf(10) ** 6, mp.mpf(10) ** -8))
    show("el_cap(400, 1e-8)", el_cap(400, mp.mpf(10) ** -8))
    show("el_cap(99998, 1e-8)", el_cap(99998, mp.mpf(10) ** -8))

    show("amplification_eps(1000, 2, 1e-6)", amplification_eps(1000, 2, mp.mpf(10) ** -6))
    show("amplification_eps(1e5, 5.44, 1e-8)", amplification_eps(mp.mpf(10) ** 5, mp.mpf("5.44"), mp.mpf(10) ** -8))
    show("amplification_eps(4998, 1.5, 1e-8)", amplification_eps(4998, mp.mpf("1.5"), mp.mpf(10) ** -8))

    b = local_budget(mp.mpf(10) ** 5, 1, mp.mpf(10) ** -8)
    show("local_budget(1e5, 1, 1e-8)", b)
    show("flip_prob(local_budget(1e5, 1, 1e-8))", flip_prob(b))
    show("local_budget(400, 5, 1e-8)   [clamped to cap]", local_budget(400, 5, mp.mpf(10) ** -8))
    show("local_budget(4998, 1, 1e-8)", local_budget(4998, 1, mp.mpf(10) ** -8))

    q1 = flip_prob(1)
    ql544 = flip_prob(mp.mpf("5.44"))
    ql3 = flip_prob(3)
    show("err_wsle(1e5, 100, q(1), q(5.44))", err_wsle(mp.mpf(10) ** 5, 100, q1, ql544))
    show("err_wsle(40, 19, q(1), q(3))", err_wsle(40, 19, q1, ql3))

    show("triangle_mse_bound(1e5, 100, 5e4, q(1), q(5.44))", triangle_mse_bound(mp.mpf(10) ** 5, 100, 5 * mp.mpf(10) ** 4, q1, ql544))
    show("triangle_mse_bound(40, 19, 20, q(1), q(3))", triangle_mse_bound(40, 19, 20, q1, ql3))
    show("triangle_mse_bound(1000, 50, 100, q(2), q(4))", triangle_mse_bound(1000, 50, 100, flip_prob(2), flip_prob(4)))

    show("vr_bias_bound(2000, 39.6, 1, 0.8, 0.1)", vr_bias_bound(2000, mp.mpf("39.6"), 1, mp.mpf("0.8"), mp.mpf("0.1")))
    show("vr_bias_bound(n=1, c=0, alpha=0, eps1=2)", vr_bias_bound(1, 1, 0, 0, 2))

    show("vr_variance_bound(2000, 200, 1000, 0.8, 465.4)", vr_variance_bound(2000, 200, 1000, mp.mpf("0.8"), mp.mpf("465.4")))
    show("vr_variance_bound(50, 10, 25, 0.5, 12.0)", vr_variance_bound(50, 10, 25, mp.mpf("0.5"), 12))

    show("fourcycle_mse_bound(40, 19, 20, q(3))", fourcycle_mse_bound(40, 19, 20, ql3))
    show("fourcycle_mse_bound(1e5, 100, 5e4, q(5.44))", fourcycle_mse_bound(mp.mpf(10) ** 5, 100, 5 * mp.mpf(10) ** 4, ql544))

    # Sample statistics pinned by the summary tests: ten 0s and ten 1s.
    show("stderr of ten 0s and ten 1s (ddof=1)", mp.sqrt(mp.mpf(5) / 19) / mp.sqrt(20))

    # Flip probabilities pinned by the randomized-response calibration test.
    for eps in ("0", "0.5", "1", "2", "5", "5.44", "50"):
        show(f"flip_prob({eps})", flip_prob(mp.mpf(eps)))


if __name__ == "__main__":
    main()
