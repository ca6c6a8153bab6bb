"""Independent sympy derivations of the constants frozen in the C++ tests.

Run:  python3 tests/oracles/sympy_expected.py
"""
import sympy as sp

t, x = sp.symbols("t x", positive=True)
U = sp.Function("u")(t, x)


def jet(n):
    return sp.Symbol(f"u{n}")


def on_jets(expr, order=8):
    """Replace derivatives of u(t, x) in x by jet symbols u0..u{order}."""
    subs = {sp.Derivative(U, (x, k)): jet(k) for k in range(order, 0, -1)}
    return expr.subs(subs).subs(U, jet(0))


def Dx(e, order=8):
    out = sp.diff(e, x)
    for k in range(order):
        out += jet(k + 1) * sp.diff(e, jet(k))
    return out


def section(title):
    print(f"\n== {title}")


# sl2 equation / operator -----------------------------------------------------
u0, u1, u2, u3 = (jet(k) for k in range(4))
H6 = (u0 * u2 - sp.Rational(5, 6) * u1**2 + x**2 * u1) / x**2
eta6 = x**3 * u3 - 12 * x**2 * u2 + 60 * x * u1 - 120 * u0 + 12 * x**3
section("sl2 canonical right-hand side")
etacheck6 = sp.solve(sp.Eq(eta6, 0), u3)[0]
print(sp.simplify(etacheck6))

section("sl2 reduction")
p4, p5, p6 = sp.symbols("phi4 phi5 phi6")
F = 2 * x**3 + p4 * x**4 + p5 * x**5 + p6 * x**6
Phi = sp.Matrix([[sp.diff(sp.diff(F, x, a), p) for p in (p4, p5, p6)] for a in range(3)])
print("det Phi =", sp.factor(Phi.det()))
Htilde = H6.subs({u0: F, u1: sp.diff(F, x), u2: sp.diff(F, x, 2)})
R = sp.simplify(Htilde - sp.diff(F, t))
G = sp.simplify(Phi.inv() * sp.Matrix([R, sp.diff(R, x), sp.diff(R, x, 2)]))
for g in G:
    print("G =", sp.expand(g))

section("sl2 corrupted ansatz: first dG/dx")
Fc = 3 * x**3 + p4 * x**4 + p5 * x**5 + p6 * x**6
Phic = sp.Matrix([[sp.diff(sp.diff(Fc, x, a), p) for p in (p4, p5, p6)] for a in range(3)])
Rc = H6.subs({u0: Fc, u1: sp.diff(Fc, x), u2: sp.diff(Fc, x, 2)}) - sp.diff(Fc, t)
Gc = Phic.inv() * sp.Matrix([Rc, sp.diff(Rc, x), sp.diff(Rc, x, 2)])
print("dG1/dx =", sp.simplify(sp.diff(Gc[0], x)))

# w equation ------------------------------------------------------------------
section("w equation: H^ with etacheck = (3 x w1 - 3 w)/x^3")
Hw = 3 * u2 + 3 * u1 / x - 3 * u0 / x**2
etaw = (3 * x * u1 - 3 * u0) / x**3
print("H^ =", sp.simplify(Hw.subs(u2, u2)))  # rho = 3 > r: unchanged
print("3*etaw + 3 w1/x - 3 w/x^2 =", sp.simplify(3 * etaw + 3 * u1 / x - 3 * u0 / x**2))

section("w ansatz")
q0, q1, q2 = sp.symbols("psi0 psi1 psi2")
Fw = q0 * x**3 + q1 * x + q2 / x
Phiw = sp.Matrix([[sp.diff(sp.diff(Fw, x, a), p) for p in (q0, q1, q2)] for a in range(3)])
print("det Phi =", sp.simplify(Phiw.det()))
Rw = Hw.subs({u0: Fw, u1: sp.diff(Fw, x), u2: sp.diff(Fw, x, 2)}) - sp.diff(Fw, t)
Gw = sp.simplify(Phiw.inv() * sp.Matrix([Rw, sp.diff(Rw, x), sp.diff(Rw, x, 2)]))
print("G =", list(Gw))
c0, c1, c2 = sp.symbols("c0 c1 c2")
fw = c0 * x**3 + (24 * c0 * t + c1) * x + c2 / x
M = sp.Matrix([[sp.diff(sp.diff(fw, x, a), c) for c in (c0, c1, c2)] for a in range(3)])
print("family essentiality det =", sp.simplify(M.det()))
psi = sp.Matrix([c0, 24 * c0 * t + c1, c2])
print("det d(psi)/d(c) =", sp.Matrix([[sp.diff(p, c) for c in (c0, c1, c2)] for p in psi]).det())

# v equation ------------------------------------------------------------------
section("v equation: generalized characteristic of the usual operator")
Hv = u2 - u0**3 / x**3 + sp.Rational(9, 4) * u0 / x**2
s2 = sp.sqrt(2)
xi = 3 * s2 / 2 * u0 / x ** sp.Rational(3, 2) - 3 / x
eta = -sp.Rational(3, 2) * (u0**3 / x**3 - 3 * s2 / 2 * u0**2 / x ** sp.Rational(5, 2) - u0 / x**2
                           + 2 * s2 / x ** sp.Rational(3, 2))
etahat = sp.expand(eta - Hv - xi * u1)
print("eta^ =", etahat)
expected = (-u2 - 3 * s2 / 2 * u0 * u1 / x ** sp.Rational(3, 2) + 3 / x * u1 + 9 * s2 / 4 * u0**2 / x ** sp.Rational(5, 2)
           - u0**3 / (2 * x**3) - sp.Rational(3, 4) * u0 / x**2 - 3 * s2 / x ** sp.Rational(3, 2))
print("eta^ - expected =", sp.simplify(etahat - expected))

section("v solution families")
c1, c2 = sp.symbols("c1 c2", positive=True)
for f in (sp.sqrt(2 * x) * (3 * x**4 + (24 * t + c1) * x**2 - c2) / (x**4 + (24 * t + c1) * x**2 + c2),
          sp.sqrt(2 * x) * (c1 * x**2 - c2) / (c1 * x**2 + c2)):
    res = sp.diff(f, t) - Hv.subs({u0: f, u1: sp.diff(f, x), u2: sp.diff(f, x, 2)})
    print("residual =", sp.simplify(res))
f = sp.sqrt(2 * x) * (3 * x**4 + (24 * t + c1) * x**2 - c2) / (x**4 + (24 * t + c1) * x**2 + c2)
E = sp.Matrix([[sp.diff(sp.diff(f, x, a), c) for c in (c1, c2)] for a in range(2)])
print("essentiality det =", sp.factor(sp.simplify(E.det())))

# Burgers ---------------------------------------------------------------------
section("Burgers: reduced D_t of u_1")
Hb = u2 + u0 * u1
print(sp.expand(Dx(Hb)))

section("forced heat: restricted residual for eta = u_1")
print("D^_t 0 - D^_x(H^) with H^ = H(t, x, u, 0, 0) =", -sp.diff((u2 + x).subs({u1: 0, u2: 0}), x))

# RK4 -------------------------------------------------------------------------
section("RK4 on psi' = (0, 24 psi0, 0) from (1, 0, 1), h = 1e-3, 50 steps")
y = [sp.Integer(1), sp.Integer(0), sp.Integer(1)]
h = sp.Rational(1, 1000)
g = lambda s: [0, 24 * s[0], 0]
for _ in range(50):
    k1 = g(y)
    k2 = g([a + h / 2 * b for a, b in zip(y, k1)])
    k3 = g([a + h / 2 * b for a, b in zip(y, k2)])
    k4 = g([a + h * b for a, b in zip(y, k3)])
    y = [a + h / 6 * (b + 2 * c + 2 * d + e) for a, b, c, d, e in zip(y, k1, k2, k3, k4)]
print(y, "exact psi1(0.05) =", 24 * sp.Rational(5, 100))

section("RK4 on phi' = phi from 1 over [0, 1]")
for n in (10, 20, 40):
    yy = sp.Float(1, 50)
    hh = sp.Float(1, 50) / n
    for _ in range(n):
        k1 = yy
        k2 = yy + hh / 2 * k1
        k3 = yy + hh / 2 * k2
        k4 = yy + hh * k3
        yy = yy + hh / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    print(n, "error =", sp.N(sp.E - yy, 12))
