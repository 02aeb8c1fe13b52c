"""Independent brute-force oracles used to freeze test fixtures.

Run with `python3 tests/oracles/oracle.py`; prints the values the C++ tests pin.
"""
from fractions import Fraction
from math import isqrt
import cmath, math


def is_prime(n):
    return n > 1 and all(n % d for d in range(2, isqrt(n) + 1))


def sigma1(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def zeta_siegel(D):
    return Fraction(sum(sigma1((D - b * b) // 4) for b in range(-isqrt(D), isqrt(D) + 1)
                        if b % 2 and b * b < D), 60)


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any((x * x - a) % p == 0 for x in range(1, p)) else -1


def zeta_bernoulli(D):
    return Fraction(sum(legendre(a, D) * a * a for a in range(1, D)), 24 * D)


def class_number_forms(D):
    # proper classes of primitive forms (a,b,c), b^2-4ac = D, by brute-force
    # SL2(Z) equivalence through reduced-form cycles (Gauss reduction).
    s = math.sqrt(D)
    red = set()
    for b in range(1, isqrt(D) + 1):
        if (b - D) % 2:
            continue
        for a in range(-isqrt(D) - 1, isqrt(D) + 2):
            if a == 0 or (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if s - b < 2 * abs(a) < s + b:
                red.add((a, b, c))

    def rho(f):
        a, b, c = f
        ac = abs(c)
        # b' = -b mod 2|c|, in (s - 2|c|, s)
        bb = -b
        k = math.floor((s - bb) / (2 * ac))
        bb += 2 * ac * k
        if bb >= s:
            bb -= 2 * ac
        return (c, bb, (bb * bb - D) // (4 * c))

    seen, cycles = set(), 0
    for f in sorted(red):
        if f in seen:
            continue
        cycles += 1
        g = f
        while g not in seen:
            seen.add(g)
            g = rho(g)
    return cycles


def hj_cycle(D):
    s = math.sqrt(D)
    P, Q = 1, 2
    seen = {}
    seq = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(seq)
        w = (P + s) / Q
        b = math.floor(w) + 1
        seq.append(b)
        Pn = b * Q - P
        Qn = (Pn * Pn - D) // Q
        P, Q = Pn, Qn
    per = seq[seen[(P, Q)]:]
    rots = [tuple(per[i:] + per[:i]) for i in range(len(per))]
    return min(rots)


def minors(b):
    import itertools
    n = len(b)
    M = [[0] * n for _ in range(n)]
    if n == 1:
        M[0][0] = -b[0] + 2
    elif n == 2:
        M = [[-b[0], 2], [2, -b[1]]]
    else:
        for i in range(n):
            M[i][i] = -b[i]
            M[i][(i + 1) % n] = M[(i + 1) % n][i] = 1

    def det(A):
        if not A:
            return 1
        return sum((-1) ** j * A[0][j] * det([r[:j] + r[j + 1:] for r in A[1:]]) for j in range(len(A)))
    return [det([r[:k] for r in M[:k]]) for k in range(1, n + 1)]


def fundamental_unit(D):
    # brute force: smallest b >= 1 with a + b*omega a unit of norm +-1, a >= 0
    b = 1
    while True:
        # norm(a + b w) = a^2 + a b + b^2 (1-D)/4
        for a in range(0, 10 ** 6):
            N = a * a + a * b + b * b * (1 - D) // 4
            if N in (1, -1):
                return a, b, N
            if N > 1:
                break
        b += 1


if __name__ == "__main__":
    for D in (5, 13, 17, 29, 37, 41):
        print(D, "zeta", zeta_siegel(D), zeta_bernoulli(D), "h", class_number_forms(D),
              "cycle", hj_cycle(D), "minors", minors(hj_cycle(D)), "unit", fundamental_unit(D))
    print("h(229) =", class_number_forms(229))
    adm = [D for D in range(5, 1000) if is_prime(D) and D % 4 == 1 and class_number_forms(D) == 1]
    print("admissible<1000:", len(adm), adm[:20])
    print("non-h1 primes<1000:", [D for D in range(5, 1000) if is_prime(D) and D % 4 == 1 and class_number_forms(D) != 1])
    # Galois worked instance
    p, l = 29, 7
    r = min(x for x in range(p) if x * x % p == 5)
    inv2 = pow(2, -1, p)
    eps = (3 + r) * inv2 % p
    epsf = (3 + (p - r)) * inv2 % p
    g = next(g for g in range(2, p) if all(pow(g, 28 // f, p) != 1 for f in (2, 7)))
    z = pow(g, 28 // 7, p)
    dl = lambda y: next(t for t in range(7) if pow(z, t, p) == y)
    te, tef = dl(pow(eps, 4, p)), dl(pow(epsf, 4, p))
    q = -15 % 7
    print("root", r, "eps", eps, "flip", epsf, "g", g, "zeta", z, "tau_eps", te, "tau_tilde", q * te % 7,
          "flip tau_tilde", q * tef % 7, "Frob^2", q * dl(pow(eps, (p * p - 1) // 7, p)) % 7)
    print("order-4 root mod 29:", pow(g, 7, p))
    for D in (5, 13):
        e0 = (1 + math.sqrt(5)) / 2 if D == 5 else (3 + math.sqrt(13)) / 2
        print("hodge", D, -1 / (2 * float(zeta_siegel(D))) * 2 * math.log(e0))
    for D in (5, 13, 17):
        G = sum(legendre(a, D) * cmath.exp(2j * math.pi * a / D) for a in range(1, D))
        print("gauss", D, G, math.sqrt(D))
    print("zeta 29", zeta_siegel(29), "q 17", -1 / (2 * zeta_siegel(17)))
