"""Reference Welch t-test values computed with SciPy.

Run once to regenerate the constants frozen in stats_test.cc.
"""
from scipy import stats

a = [0.1, 0.2, 0.3]
b = [0.4, 0.5, 0.6]
r = stats.ttest_ind(a, b, equal_var=False)
n = len(a)
va, vb = stats.tvar(a) / n, stats.tvar(b) / n
df = (va + vb) ** 2 / (va ** 2 / (n - 1) + vb ** 2 / (n - 1))
print(f"t = {r.statistic:.12f}")
print(f"df = {df:.12f}")
print(f"p = {r.pvalue:.12f}")

# Unequal sizes and variances.
c = [0.05, 0.40, 0.22, 0.31, 0.18]
d = [0.50, 0.52, 0.49]
r = stats.ttest_ind(c, d, equal_var=False)
print(f"t2 = {r.statistic:.12f}")
print(f"p2 = {r.pvalue:.12f}")
print(f"cdf(1.5, 3.7) = {stats.t.cdf(1.5, 3.7):.12f}")
print(f"I_0.3(2.5, 0.5) = {stats.beta.cdf(0.3, 2.5, 0.5):.12f}")
