"""Independent high-precision reference values frozen into the C++ tests.

Everything here uses mpmath quadrature directly on the defining integrals,
never the C++ code paths.  Run: python3 tests/oracles/oracle_values.py
"""
from mpmath import mp, mpf, quad, fabs, sqrt

mp.dps = 30


def br(x):
    return 1 + fabs(x)


def lemma1_G(A, p, q):
    return lambda t, r: A / (br(t + r) ** p * br(t - r) ** q)


def lemma2_G(A, p, q, lam):
    return lambda t, r: A / (br(r) ** lam * br(t + r) ** p * br(t - r) ** q)


def H(G):
    return lambda u, v: (u - v) / 2 * G((u + v) / 2, (u - v) / 2)


def du_psi(G, u, v):
    h = H(G)
    pts = [-u, 0, v] if v > 0 else [-u, v]
    return quad(lambda vp: h(u, vp), pts) / 4


def phi_axis(G, t):
    # retarded integral for a radial source at the origin
    pts = [0, mpf(t) / 2, t]
    return quad(lambda rho: rho * G(t - rho, rho), pts)


def phi_point(G, t, r):
    t, r = mpf(t), mpf(r)
    u, v = t + r, t - r
    h = H(G)

    def inner(up):
        pts = [-up, 0, v] if v > 0 else [-up, v]
        return quad(lambda vp: h(up, vp), pts)

    outer_pts = [fabs(v), u]
    return quad(inner, outer_pts) / 4 / r


if __name__ == "__main__":
    G132 = lemma1_G(1, 3, 2)
    print("du_psi lemma1(1,3,2) at (1,1):", du_psi(G132, mpf(1), mpf(1)))
    print("phi lemma1(1,3,2) at (4,0):", phi_axis(G132, mpf(4)))
    print("phi lemma1(1,3,2) at (2,1):", phi_point(G132, 2, 1))
    print("phi lemma1(1,3,2) at (2,1) via axis-free 3D shell formula check:")
    # 3D retarded integral for radial source, reduced to (rho, mu)
    t, x = mpf(2), mpf(1)
    def shell(rho):
        if rho == 0:
            return mpf(0)
        f = lambda mu: G132(t - rho, sqrt(x * x + rho * rho + 2 * rho * x * mu))
        mus = ((t - rho) ** 2 - x * x - rho * rho) / (2 * rho * x)
        pts = [-1, mus, 1] if -1 < mus < 1 else [-1, 1]
        return rho * quad(f, pts) / 2
    print("   ", quad(shell, [0, (t - x) / 2, x, (t + x) / 2, t]))
    print("I1 lemma1 (u=5,v=-2,q=3):", quad(lambda w: br(w) ** -3, [-5, -2]))
    print("I2 lemma1 (u=10,v=-2,q=4):", quad(lambda w: w / br(w) ** 4, [2, 10]))
    print("I2 lemma2 (u=10,v=10,q=3,l=3):",
          quad(lambda w: 1 / (br(10 - w) ** 2 * br(w) ** 3), [0, 10]))
    print("I1 lemma2 (u=100,q=3,l=3):",
          quad(lambda w: 1 / (br(100 + w) ** 2 * br(w) ** 3), [0, 100]))
    G2 = lemma2_G(1, 1, 3, 3)
    print("phi lemma2(1,1,3,3) at (4,0):", phi_axis(G2, mpf(4)))
    print("phi lemma2(1,1,3,3) at (3,1.5):", phi_point(G2, 3, 1.5))
