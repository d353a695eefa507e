"""Scratch: compute independent oracle values to freeze into tests.

Independent routes only: mpmath high precision for angles/roots, exhaustive
enumeration for the classical baseline, bisection for the stationarity root.
"""
import itertools
import math
from fractions import Fraction

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def angles_mp(n, ell):
    theta = mp.atan2(2 * mp.sqrt(mp.mpf(ell) * (n - ell)), n - 2 * ell)
    alpha = mp.acos(mp.sqrt(mp.mpf(ell) / n))
    return theta, alpha


# --- angles (1000, 1) and (100, 4) ---
for (n, ell) in [(1000, 1), (100, 4), (2**20, 1), (10**6, 100), (2, 1), (4, 1)]:
    th, al = angles_mp(n, ell)
    print(f"(n={n}, ell={ell}): theta={mp.nstr(th, 20)} alpha={mp.nstr(al, 20)}  alpha^2={mp.nstr(al**2, 12)}")

# --- P_3 at (100, 4) ---
th, al = angles_mp(100, 4)
p3 = mp.cos(3 * th - al) ** 2
print("P_3(100,4) =", mp.nstr(p3, 20))
p4 = mp.cos(4 * th - al) ** 2
print("P_4(100,4) =", mp.nstr(p4, 20))

# --- first-order seed and bisection root at (1000, 1) ---
th, al = angles_mp(1000, 1)
seed = (al + mp.sqrt(al**2 - 2)) / (2 * th)
print("seed(1000,1) =", mp.nstr(seed, 20))


def residual(j, th, al):
    x = j * th - al
    return 2 * j * th + mp.cos(x) / mp.sin(x)


def bisect_root(th, al):
    lo = al / (2 * th)
    hi = (al - mp.mpf("1e-9")) / th
    assert residual(lo, th, al) > 0, residual(lo, th, al)
    assert residual(hi, th, al) < 0
    for _ in range(200):
        mid = (lo + hi) / 2
        if residual(mid, th, al) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


root = bisect_root(th, al)
print("root(1000,1) =", mp.nstr(root, 20))
print("residual at seed 16.968:", mp.nstr(residual(mp.mpf("16.968"), th, al), 12))
print("seed within 10% of root:", abs(float(seed - root)) / float(root))

# E at integers 16..19
for j in (16, 17, 18, 19):
    E = j / mp.cos(j * th - al) ** 2
    print(f"E({j}) = {mp.nstr(E, 15)}")
print("p per trial at 18:", mp.nstr(mp.cos(18 * th - al) ** 2, 15))

# BBHT-form residual at root: 4*(th/2)*j - tan((2j+1)*th/2)
vt = th / 2
print("BBHT residual at root:", mp.nstr(4 * vt * root - mp.tan((2 * root + 1) * vt), 8))

# --- (2^20, 1) root, alpha/theta ---
th, al = angles_mp(2**20, 1)
print("alpha/theta(2^20,1) =", mp.nstr(al / th, 15))
root20 = bisect_root(th, al)
print("root(2^20,1) =", mp.nstr(root20, 15))
print("m=804 prob:", mp.nstr(mp.cos(804 * th - al) ** 2, 15))
print("asymptotic(2^20,1):", mp.nstr(mp.pi / 4 * mp.sqrt(mp.mpf(2**20)), 15))

# --- (10^6, 100): m_opt candidates ---
th, al = angles_mp(10**6, 100)
print("alpha/theta(1e6,100) =", mp.nstr(al / th, 12))
for m in (78, 79):
    print(f"P_{m}(1e6,100) =", mp.nstr(mp.cos(m * th - al) ** 2, 12))

# --- classical baseline (6, 2) by enumeration ---
def brute_classical(n, ell):
    total = Fraction(0)
    count = 0
    for subset in itertools.combinations(range(n), ell):
        total += min(subset) + 1
        count += 1
    return total / count

print("brute (6,2):", brute_classical(6, 2), "=", float(brute_classical(6, 2)))
for n in range(2, 13):
    for ell in range(1, n + 1):
        assert brute_classical(n, ell) == Fraction(n + 1, ell + 1), (n, ell)
print("classical matches Fraction(n+1, ell+1) for all n <= 12")

# --- hypergeometric collision prob for (100, 4) pairs ---
c = math.comb(100, 4)
print("C(100,4) =", c, " collision prob ~", 1 / c)

# --- sweep slope, ell=1, N = 2^10..2^20 ---
import grover_lab as gl
xs, ys = [], []
for k in range(10, 21):
    n = 2**k
    a = gl.spectral_angles(n, 1)
    m, _ = gl.optimal_iterations(a)
    xs.append(math.sqrt(n))
    ys.append(m)
slope, intercept = np.polyfit(xs, ys, 1)
print("slope =", slope, " target pi/4 =", math.pi / 4, " rel err =", abs(slope / (math.pi / 4) - 1))

# --- fullsim (100,4,3) final entry vs closed form ---
tr = gl.evolve(gl.new_instance(100, [7, 23, 41, 77]), 3)
print("fullsim P_3(100,4) =", repr(tr.probabilities[3]))

# --- grover-lab solver vs bisection root ---
plan = gl.integer_stop_point(gl.spectral_angles(1000, 1))
print("plan(1000,1):", plan)
th, al = angles_mp(1000, 1)
print("|j_cont - bisect root| =", abs(plan.j_continuous - float(bisect_root(th, al))))

plan20 = gl.integer_stop_point(gl.spectral_angles(2**20, 1))
print("plan(2^20,1): j_cont =", plan20.j_continuous, " j_int =", plan20.j_integer,
      " E =", plan20.expected_cost, " alpha/theta =", float(al / th))

plan41 = gl.integer_stop_point(gl.spectral_angles(4, 1))
print("plan(4,1):", plan41)

# --- MC checks with candidate seeds ---
inst21 = gl.new_instance(2, [0])
rep = gl.simulate_restarts(inst21, 1, 100_000, seed=7)
sigma = math.sqrt(0.5 / 0.25 / 100_000)
print("MC(2,1,j=1) mean trials:", rep.mean_trials_to_success, " |dev|/sigma =",
      abs(rep.mean_trials_to_success - 2.0) / sigma)

inst1000 = gl.random_instance(1000, 1, seed=42)
rep2 = gl.simulate_restarts(inst1000, plan.j_integer, 100_000, seed=7)
p = gl.success_probability(gl.spectral_angles(1000, 1), plan.j_integer)
sig_tot = plan.j_integer * math.sqrt((1 - p) / p**2 / 100_000)
print("MC(1000,1,j*) mean total:", rep2.mean_total_iterations, " E:", plan.expected_cost,
      " |dev|/sigma:", abs(rep2.mean_total_iterations - plan.expected_cost) / sig_tot)
print("empirical rate:", rep2.empirical_success_rate, " p:", p,
      " 3sig band:", 3 * p * math.sqrt(1 - p) / math.sqrt(100_000))

# --- uniform sampling frequencies, n=4, 1e5 draws ---
st = gl.uniform_state(4)
draws = gl.sample_measurement(st, seed=11, count=100_000)
freq = np.bincount(draws, minlength=4) / 100_000
sig = math.sqrt(0.25 * 0.75 / 100_000)
print("freqs:", freq, " max|dev|/sigma:", float(np.abs(freq - 0.25).max() / sig))

# --- seed-pair distinctness over 100 pairs ---
differ = 0
for s in range(100):
    a = gl.random_instance(100, 4, seed=s)
    b = gl.random_instance(100, 4, seed=10_000 + s)
    differ += int(not np.array_equal(a.marked, b.marked))
print("distinct pairs:", differ, "/100")

# --- CSV text of (8,[3,5]) trace ---
tr8 = gl.evolve(gl.new_instance(8, [3, 5]), 1)
print("CSV:", tr8.to_csv_text().splitlines())
