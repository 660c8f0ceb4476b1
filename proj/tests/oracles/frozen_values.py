"""Independent high-precision oracles for the frozen constants used in the C++ tests.

Run: python3 tests/oracles/frozen_values.py
"""
import mpmath as mp

mp.mp.dps = 40


def params(p):
    a = mp.mp.mpf(2) / (p - 1)
    m = mp.mp.mpf(p - 1) / 2
    sp = mp.mp.mpf(3) / 2 - a
    return a, m, sp


def contraction(p):
    a, _, _ = params(p)
    v = (mp.mp.mpf(3) / 2) ** (1 - a) / 2 + (mp.mp.mpf(1) / 2) ** (1 - a) / 2
    return v, (1 - v) / 2


def iterate(p, beta0, n):
    a, _, _ = params(p)
    out = [mp.mp.mpf(beta0)]
    for _ in range(n):
        b = out[-1]
        g = (1 - a) / (1 - a + b * (p - 1))
        out.append(g * b * p)
    return out


def main():
    for p in (5, 7):
        a, m, sp = params(p)
        print(f"p={p}: a={a} m={m} s_p={sp}")
    print("c_p(p=5) =", mp.mp.mpf(3) / 4 ** mp.mp.mpf(1) * 0 + (mp.mp.mpf(3) / 4) ** (mp.mp.mpf(1) / 4))
    for p in (5, 7, 1000):
        v, th = contraction(p)
        print(f"contraction p={p}: value={v} theta={th}")
    seq = iterate(7, mp.mp.mpf("0.1"), 3)
    print("p=7 beta0=0.1 ->", [mp.nstr(x, 15) for x in seq])
    seq = iterate(7, mp.mp.mpf("0.1"), 200)
    print("p=7 limit gap after 200:", seq[-1] - mp.mp.mpf(2) / 3)

    # unit Gaussian Hdot^beta squared norms
    for beta in (mp.mpf(0), mp.mpf(1) / 2, mp.mpf(1), mp.mpf("1.16667"), mp.mpf(7) / 6):
        print(f"gauss H^{beta}: {2 * mp.pi * mp.gamma(mp.mp.mpf(beta) + mp.mp.mpf(3) / 2)}")

    # energy of Gaussian, p=7 defocusing
    grad = 4 * mp.pi * mp.quad(lambda r: (r * mp.e ** (-r * r / 2)) ** 2 * r * r, [0, mp.inf]) / 2
    pot = 4 * mp.pi * mp.quad(lambda r: mp.e ** (-4 * r * r) * r * r, [0, mp.inf]) / 8
    print("gauss energy p=7: grad part", grad, " pot part", pot, " total", grad + pot,
          " pot closed", (mp.pi / 4) ** 1.5 / 8)

    # W profile
    W = lambda r: (1 + r * r / 3) ** mp.mp.mpf(-0.5)
    dW = lambda r: -(r / 3) * (1 + r * r / 3) ** mp.mp.mpf(-1.5)
    print("||grad W||^2 =", 4 * mp.pi * mp.quad(lambda r: dW(r) ** 2 * r * r, [0, mp.inf]))
    print("4pi int W^8 r^2 =", 4 * mp.pi * mp.quad(lambda r: W(r) ** 8 * r * r, [0, mp.inf]))
    print("S_5([0,1]) for W =", (4 * mp.pi * mp.quad(lambda r: W(r) ** 8 * r * r, [0, mp.inf])) ** (mp.mp.mpf(1) / 8))
    rmax = mp.findroot(lambda r: mp.diff(lambda s: mp.sqrt(s) * W(s), r), 1.5)
    print("argmax r^1/2 W =", rmax, " value", mp.sqrt(rmax) * W(rmax))
    print("3^(1/4)/sqrt2 =", mp.mp.mpf(3) ** 0.25 / mp.sqrt(2))


if __name__ == "__main__":
    main()
