"""High-precision reference values frozen into the C++ unit tests.

Run with: python3 tests/oracles/reference_values.py
Everything here uses mpmath at 40 digits and is independent of the C++ code.
"""
import mpmath as mp

mp.mp.dps = 40


def aux_contour(s, crossing=mp.mpf("0.5")):
    """R(s) = int over the line crossing the real axis at `crossing` with slope 1,
    traversed downward, of x^-s e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}),
    plus the residues n^-s for the integers 1 <= n < crossing."""
    d = mp.exp(1j * mp.pi / 4)

    def g(u):
        x = crossing + u * d
        return x ** (-s) * mp.exp(1j * mp.pi * x * x) / (mp.exp(1j * mp.pi * x) - mp.exp(-1j * mp.pi * x))

    U = 12 + mp.sqrt(abs(mp.im(s)) / mp.pi)
    val = -d * mp.quad(g, mp.linspace(-U, U, 40))
    n = 1
    while n < crossing:
        val += mp.power(n, -s)
        n += 1
    return val


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


if __name__ == "__main__":
    show("zeta(3)", mp.zeta(3))
    show("zeta(0.5)", mp.zeta(0.5))
    show("zeta(-2.5)", mp.zeta(-2.5))
    show("zeta(2+3i)", mp.zeta(mp.mpc(2, 3)))
    show("zeta(0.5+30i)", mp.zeta(mp.mpc(0.5, 30)))
    show("zeta(-1.5+10i)", mp.zeta(mp.mpc(-1.5, 10)))
    show("theta(100)", mp.siegeltheta(100))
    show("theta(10)", mp.siegeltheta(10))
    show("theta(1000)", mp.siegeltheta(1000))
    show("loggamma(3+4i)", mp.loggamma(mp.mpc(3, 4)))
    show("loggamma(0.25+50i)", mp.loggamma(mp.mpc(0.25, 50)))
    show("gamma(-2.5)", mp.gamma(-2.5))
    show("gamma(0.1)", mp.gamma(0.1))
    show("H10", mp.harmonic(10))
    show("log10+gamma", mp.log(10) + mp.euler)
    # main_sum(0, 8 pi) = 1 + 2^{-8 pi i}
    show("main_sum(0,8pi)", 1 + mp.power(2, -8j * mp.pi))
    # int_1^2 t cos(10 t) dt by parts
    f = lambda t: t * mp.sin(10 * t) / 10 + mp.cos(10 * t) / 100
    show("osc(1,2,1,10)", f(2) - f(1))
    show("osc(1,4,2,5)", mp.quad(lambda t: t**2 * mp.cos(5 * t), mp.linspace(1, 4, 20)))
    show("exp_poly(1.5,0.1)", mp.quad(lambda t: t**1.5 * mp.exp(-0.1 * t), [1, 50, 100, 400, mp.inf]))
    show("exp_poly(0.5,0.05)", mp.quad(lambda t: t**0.5 * mp.exp(-0.05 * t), [1, 50, 100, 400, mp.inf]))
    # auxiliary function at a few points, from the defining line and a shifted line
    for (sig, t) in [(0.5, 20), (2, 5), (0, 30), (-1, 10), (0.5, 14.134725141734693790)]:
        s = mp.mpc(sig, t)
        a = aux_contour(s)
        b = aux_contour(s, crossing=mp.mpf(int(mp.floor(mp.sqrt(t / (2 * mp.pi))))) + mp.mpf("0.5"))
        show(f"R({sig}+{t}i) def", a)
        show(f"R({sig}+{t}i) shifted", b)
    # critical-line identity zeta = R + chi conj(R) at t=20
    s = mp.mpc(0.5, 20)
    R = aux_contour(s)
    Z = mp.siegelz(20)
    show("Z(20)", Z)
    show("2Re(e^{i theta}R(1/2+20i))", 2 * mp.re(mp.exp(1j * mp.siegeltheta(20)) * R))
    # Lemma 3 at x=2, sigma=0.7
    show("lemma3(x=2,s=0.7)", mp.power(2, -0.7) / mp.log(2))
    # sum_{n<=100} n^2 log(100/n) times 4 pi
    show("s1_weighted(-1, 2pi 1e4)", 4 * mp.pi * mp.fsum(n * n * mp.log(mp.mpf(100) / n) for n in range(1, 101)))
