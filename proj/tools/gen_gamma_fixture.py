#!/usr/bin/env python3
"""Generates the golden fixture for Morita's p-adic Gamma function.

Independent oracle for the C++ implementation: computes
Gamma_p(x) mod p^k by the definitional product with N = x mod p^k, N >= 1:
(-1)^N * prod_{0 < j < N, p !| j} j  (mod p^k).

Usage: python3 tools/gen_gamma_fixture.py > tests/fixtures/padic_gamma_golden.txt
"""

from fractions import Fraction


def padic_gamma(x: Fraction, p: int, k: int) -> int:
    M = p**k
    if x.denominator % p == 0:
        raise ValueError("not a p-adic integer")
    N = (x.numerator * pow(x.denominator, -1, M)) % M
    if N == 0:
        N = M
    acc = 1
    for j in range(1, N):
        if j % p:
            acc = acc * j % M
    if N % 2:
        acc = -acc % M
    return acc


ENTRIES = [
    (5, 4, Fraction(1)),
    (5, 4, Fraction(2)),
    (7, 3, Fraction(1, 2)),
    (7, 4, Fraction(1, 3)),
    (13, 4, Fraction(1, 3)),
    (19, 4, Fraction(1, 3)),
    (7, 6, Fraction(1, 3)),
    (13, 6, Fraction(1, 3)),
]


def main() -> None:
    print("# p k x_num x_den residue  (Gamma_p(x) mod p^k)")
    print("# generated by: python3 tools/gen_gamma_fixture.py")
    for p, k, x in ENTRIES:
        print(p, k, x.numerator, x.denominator, padic_gamma(x, p, k))


if __name__ == "__main__":
    main()
