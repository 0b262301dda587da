"""
Closed-form solvers for the slice derivative operator
=====================================================

D_lambda f = f' - f*lambda.  This script exercises the right inverses
S_lambda (on polynomials) and E_lambda (vanishing at 0), the generalized
exponentials E_Lambda annihilated by a chain of such operators, the
kernel basis of the chain, and the initial-value solver built from them.
"""

import math
import random

from slicealg import (
    CoeffBoundCert,
    E_lambda_op,
    PowerSeries,
    Quaternion,
    I,
    J,
    K,
    S_lambda,
    apply_D,
    exp_series,
    f_mu_lambda,
    gen_exp,
    kernel_basis,
    solve_with_initial,
)


def max_coeff(s, upto):
    return max(s.coeff(n).norm() for n in range(upto))


# exp_lambda spans the kernel of D_lambda
lam = Quaternion(0.5, 1.0, -2.0, 0.0)
print("|D_lam exp_lam| = %.3e" % max_coeff(apply_D(lam, exp_series(lam, 40)), 30))

# S_lambda inverts D_lambda on polynomials (exact coefficients)
p = PowerSeries([Quaternion(1, 0, 0, 0), I, J, K], exact=True)
s = S_lambda(lam, p)
print("|D_lam S_lam p - p| = %.3e" % max_coeff(apply_D(lam, s) - p, 10))

# E_lambda does the same for entire right-hand sides, provided we certify
# a growth bound on the coefficients first
h = exp_series(I, 40)
cert = CoeffBoundCert.fit(h, 0, I)
u = E_lambda_op(J, h, 40, cert=cert)
print("|D_j E_j h - h|     = %.3e" % max_coeff(apply_D(J, u) - h, 30))
print("E_j h vanishes at 0:", u.coeff(0))

# %% generalized exponentials

# E_Lambda for a tuple Lambda = (l1, ..., lm) is the specific solution of
# D_lm ... D_l1 f = 0 with a telescoping property: applying D_lm peels
# off the last eigenvalue.
g = gen_exp([I, J], 40)
print("\nE_(i,j) coefficients 0..2:",
      [str(g.coeff(n)) for n in range(3)])

peeled = apply_D(J, g)
print("|D_j E_(i,j) - E_(i)| = %.3e"
      % max_coeff(peeled - gen_exp([I], 40), 30))

# at a real point the value has the closed form
# E_(i,j)(x) = (sin x + x cos x)/2 + ... ; compare numerically
x = 1.2
val = g(Quaternion(x, 0, 0, 0))
w = 0.5 * (math.sin(x) + x * math.cos(x))
print("E_(i,j)(1.2) real part: %.15f  expected %.15f" % (val.w, w))

# a repeated eigenvalue gives x^{m-1}/(m-1)! * exp_lambda
rep = gen_exp([lam, lam, lam], 40)
mono = PowerSeries.monomial(2, Quaternion(0.5, 0, 0, 0)) * exp_series(lam, 40)
print("|E_(l,l,l) - x^2/2 exp_l| = %.3e" % max_coeff(rep - mono, 30))

# %% kernel bases and initial value problems

lams = [I, J, Quaternion(0.2, 0.3, -0.1, 0.4)]
basis = kernel_basis(lams, 40)
for idx, b in enumerate(basis):
    cur = b
    for l in reversed(lams[idx:]):
        cur = apply_D(l, cur)
    print("basis[%d] annihilated by its suffix chain: %.3e" % (idx, max_coeff(cur, 25)))

# prescribe f(0), (D_l3 f)(0), (D_l2 D_l3 f)(0)
rng = random.Random(14)
initial = [Quaternion(rng.uniform(-1, 1), rng.uniform(-1, 1),
                      rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
f = solve_with_initial(lams, initial, 40)
cur = f
zero = Quaternion(0, 0, 0, 0)
got = []
for l in reversed(lams):
    got.append(cur(zero))
    cur = apply_D(l, cur)
print("\nprescribed :", [str(v) for v in initial])
print("reproduced :", [str(v) for v in got])

# %% eigenvector-style solutions f' - f*lam = f*mu

# for 0 < |mu| < |lam| there is a solution with f(0) = (mu - lam)^{-1};
# when mu and lam commute it collapses to exp_mu * (mu - lam)^{-1}
mu_q = I * 0.4
lam_q = I * 1.4
fml = f_mu_lambda(mu_q, lam_q, 40)
want = exp_series(mu_q, 40) * (mu_q - lam_q).inverse()
print("\n|f_mu_lambda - exp_mu (mu-lam)^{-1}| = %.3e" % max_coeff(fml - want, 30))
