"""
One-variable Hahn polynomials, exactly
======================================

Everything on this tour is rational arithmetic: the weight, the polynomial
values, the norms, and the orthogonality sums.  Floating point only shows
up at the very end, as a convenience view of the same numbers.
"""
from hahnkit.hahn_uni import UniParams, hahn_eval, hahn_norm, hahn_weight, verify_uni
from hahnkit.numeric import Rat, format_rational

# A family lives on the grid {0, ..., N} and carries two parameters > -1.
p = UniParams(Rat(1, 2), Rat(-1, 2), 5)
print("parameters:", p.echo())

# The weight is a probability distribution; its mass sums to one exactly.
weights = [hahn_weight(x, p) for x in range(p.N + 1)]
print("\nweight on the grid:")
for x, w in enumerate(weights):
    print(f"  rho({x}) = {format_rational(w)}")
print("  total =", format_rational(sum(weights)))

# Polynomial values are exact rationals in every degree and point.
print("\nvalue table h_n(x), degrees 0..2:")
for n in range(3):
    row = [format_rational(hahn_eval(n, x, p)) for x in range(p.N + 1)]
    print(f"  n={n}:", row)

# Norms close the orthogonality relation: sum rho h_n h_m = lambda_n delta.
print("\nnorms lambda_n:")
for n in range(p.N + 1):
    print(f"  lambda_{n} =", format_rational(hahn_norm(n, p)))

acc = sum(w * hahn_eval(1, x, p) * hahn_eval(2, x, p) for x, w in enumerate(weights))
print("cross term <h_1, h_2> =", format_rational(acc), "(literally zero)")

# The verification entry point re-runs the full Gram matrix and both
# generating function identities as exact polynomial statements.
for check in ("orthogonality", "genfun", "dual-genfun"):
    report = verify_uni(check, p)
    print(f"verify {check}: {'pass' if report.passed else 'FAIL'}")

# Float view, if a downstream consumer wants numbers.
print("\nfloat view of h_2 on the grid:", [float(hahn_eval(2, x, p)) for x in range(6)])
