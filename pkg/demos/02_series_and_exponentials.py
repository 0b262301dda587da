"""
Truncated power series and the exponential exp_lambda
=====================================================

Slice-regular entire functions are represented by their Taylor
coefficients at the origin, f(x) = sum_n x^n a_n, with the coefficients
on the *right* because multiplication is noncommutative.  The algebra
product is the Cauchy convolution of coefficients (the "slice product"),
and truncation bounds propagate through arithmetic.
"""

from slicealg import (
    PowerSeries,
    Quaternion,
    I,
    J,
    exp_series,
    exp_tail_bound,
    exp_truncation,
    slice_derivative,
    slice_product,
)

# (1 + x*i) * (j + 2x) -- coefficients convolve, they do not commute
p = PowerSeries([Quaternion(1, 0, 0, 0), I], exact=True)
q = PowerSeries([J, Quaternion(2, 0, 0, 0)], exact=True)
print("p*q coefficients:", [str(c) for c in (p * q).coeffs])
print("q*p coefficients:", [str(c) for c in (q * p).coeffs])

# exact series keep every convolution term; truncated ones track the
# degree up to which coefficients are trustworthy
a = PowerSeries([Quaternion(1, 0, 0, 0)] * 5, exact=True)
b = PowerSeries([Quaternion(1, 0, 0, 0)] * 9, exact=False)
print("\nexact(4) * exact(4)  -> degree", (a * a).degree_bound, "exact:", (a * a).exact)
print("exact(4) * trunc(8)  -> degree", (a * b).degree_bound, "exact:", (a * b).exact)

# evaluation is left evaluation: f(x) = sum x^n a_n
f = PowerSeries([Quaternion(0, 0, 0, 0), J], exact=True)   # f(x) = x * j
print("\nf(i) = i*j =", f(I))

# %% the eigenfunction exp_lambda

# exp_lambda solves f' - f*lambda = 0, f(0) = 1.  Its coefficients obey
# c_{n+1} = c_n * lambda / (n+1); for lambda in a slice this is the usual
# exponential of that slice.
lam = I
e = exp_series(lam, 30)
print("\nfirst exp_i coefficients:", [str(e.coeff(n)) for n in range(4)])

# exp_j(x) = cos(x) + sin(x) j on the real axis
import math
x = 0.7
val = exp_series(J, 30)(Quaternion(x, 0, 0, 0))
print("exp_j(0.7)        =", val)
print("cos(0.7)+sin(0.7)j= %.15f+%.15fj" % (math.cos(x), math.sin(x)))

# the group law survives truncation up to the tracked degree
lam = Quaternion(0.3, 1.0, -0.5, 0.2)
prod = slice_product(exp_series(lam, 40), exp_series(-lam, 40))
print("\nexp_lam * exp_(-lam): coeff 0 =", prod.coeff(0))
print("                      max |coeff 1..20| = %.3e"
      % max(prod.coeff(n).norm() for n in range(1, 21)))

# choose the truncation from the a-priori tail bound
n = exp_truncation(radius=2.0, lam_norm=lam.norm(), tol=1e-14)
print("\ndegree needed for |x|<=2, tol 1e-14:", n)
print("tail bound at that degree: %.3e" % exp_tail_bound(2.0, lam.norm(), n))

# slice derivative acts coefficientwise: (x^n a)' = n x^{n-1} a
d = slice_derivative(exp_series(lam, 40))
resid = d - slice_product(exp_series(lam, 40), PowerSeries([lam], exact=True))
print("\n|exp' - exp*lam| over tracked degrees: %.3e"
      % max(resid.coeff(n).norm() for n in range(30)))
