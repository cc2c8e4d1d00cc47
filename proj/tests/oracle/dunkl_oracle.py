"""Independent oracle for operator actions.

Rebuilds the Dunkl operators from their rational-function definition in
sympy and compares the images with `bi_verify apply` on a fixed set of
expressions and polynomials.
"""

import subprocess
import sys

import sympy as sp

x1, x2, x3 = X = sp.symbols("x1 x2 x3")
a, b = sp.symbols("a b")
mu = sp.symbols("mu1 mu2 mu3")


def substitute(f, images):
    return sp.expand(f.subs(list(zip(X, images)), simultaneous=True))


def refl(i):
    return lambda f: substitute(f, [-x if k == i else x for k, x in enumerate(X)])


def transp(i, j):
    def act(f):
        images = list(X)
        images[i], images[j] = X[j], X[i]
        return substitute(f, images)

    return act


def dunkl_b(i):
    def act(f):
        out = sp.diff(f, X[i]) + b * (f - refl(i)(f)) / X[i]
        for j in range(3):
            if j == i:
                continue
            swapped = transp(i, j)(f)
            out += a * (f - swapped) / (X[i] - X[j])
            out += a * (f - refl(i)(refl(j)(swapped))) / (X[i] + X[j])
        return sp.expand(sp.cancel(sp.together(out)))

    return act


def dunkl_z2(i):
    return lambda f: sp.expand(sp.cancel(sp.diff(f, X[i]) + mu[i] * (f - refl(i)(f)) / X[i]))


def mul(i):
    return lambda f: sp.expand(X[i] * f)


def compose(*ops):
    def act(f):
        for op in reversed(ops):
            f = op(f)
        return f

    return act


def add(*terms):
    return lambda f: sp.expand(sum((c * op(f) for c, op in terms), sp.Integer(0)))


def comm(p, q):
    return add((1, compose(p, q)), (-1, compose(q, p)))


def anti(p, q):
    return add((1, compose(p, q)), (1, compose(q, p)))


def operators(dunkl):
    D = [dunkl(i) for i in range(3)]
    x = [mul(i) for i in range(3)]
    R = [refl(i) for i in range(3)]
    a_minus = add((1, compose(D[0], R[1], R[2])), (1, compose(D[1], R[2])), (1, D[2]))
    a_plus = add((1, compose(x[0], R[1], R[2])), (1, compose(x[1], R[2])), (1, x[2]))
    a_zero = add(*[(sp.Rational(1, 2), anti(x[i], D[i])) for i in range(3)])
    return D, x, R, a_minus, a_plus, a_zero


def b3_cases():
    D, x, R, am, ap, a0 = operators(dunkl_b)
    pi12 = transp(0, 1)
    q12 = add(*[(sp.Rational(1, 2), compose(g, pi12)) for g in (lambda f: f, R[0], R[1])],
              (sp.Rational(-1, 2), compose(R[0], R[1], pi12)))
    return [
        ("D_1", "x1", D[0]),
        ("D_1", "1", D[0]),
        ("D_2", "x1^2*x2", D[1]),
        ("D_3", "x1*x2*x3^2 - 2*x3^3", D[2]),
        ("D_1*D_2", "x1^2*x2^2 + x3^4", compose(D[0], D[1])),
        ("S_12", "x1", comm(D[0], x[1])),
        ("S_11", "1", comm(D[0], x[0])),
        ("S_23", "x1*x2 + x3^2", comm(D[1], x[2])),
        ("M_12", "x1", add((1, compose(x[0], D[1])), (-1, compose(x[1], D[0])))),
        ("M_13", "x1^2*x3 + x2", add((1, compose(x[0], D[2])), (-1, compose(x[2], D[0])))),
        ("A_0", "1", a0),
        ("A_0", "x1*x2", a0),
        ("A_plus", "1", ap),
        ("A_minus", "x1^2*x2*x3", am),
        ("[A_minus, A_plus]", "1", comm(am, ap)),
        ("[A_minus, A_plus]", "x2*x3^2", comm(am, ap)),
        ("R_1*R_2*pi_12", "x1", compose(R[0], R[1], pi12)),
        ("Q_12", "x1^2*x2 + x3", q12),
        ("Q_12 + Q_13", "1", None),
    ]


def z2_cases():
    D, x, R, am, ap, a0 = operators(dunkl_z2)
    return [
        ("D_1", "x1^3", D[0]),
        ("D_2", "x1*x2^2", D[1]),
        ("[D_1, x_2]", "x1*x2*x3", comm(D[0], x[1])),
        ("[A_minus, A_plus]", "x1*x3", comm(am, ap)),
        ("A_0", "x1^2*x3", a0),
    ]


def run_cli(binary, realization, expr, poly):
    proc = subprocess.run([binary, "apply", "--realization", realization, expr, poly],
                          capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        raise RuntimeError(f"bi_verify failed on {expr} / {poly}: {proc.stderr}")
    return proc.stdout.strip()


def main():
    binary = sys.argv[1]
    names = {str(s): s for s in (*X, a, b, *mu)}
    failures = 0
    checked = 0
    for realization, cases in (("b3-scalar", b3_cases()), ("z2-scalar", z2_cases())):
        for expr, poly, op in cases:
            got = sp.sympify(run_cli(binary, realization, expr, poly), locals=names)
            f = sp.sympify(poly, locals=names)
            want = sp.Integer(2) if op is None else op(f)
            checked += 1
            if sp.expand(got - want) != 0:
                failures += 1
                print(f"MISMATCH {realization} {expr} on {poly}: cli={got} oracle={want}")
            else:
                print(f"ok {realization} {expr} on {poly} = {sp.expand(want)}")
    print(f"{checked - failures}/{checked} oracle checks agree")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
