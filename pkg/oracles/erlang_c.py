"""Mean queue wait of an M/M/2 queue, computed two independent ways.

Run: python3 oracles/erlang_c.py
"""

from fractions import Fraction
from math import factorial


def wait_erlang_c(lam, mu, c):
    a = lam / mu
    top = a**c / factorial(c) * c / (c - a)
    prob_wait = top / (sum(a**k / factorial(k) for k in range(c)) + top)
    return prob_wait / (c * mu - lam)


def wait_two_servers(lam, mu):
    # birth-death chain with two servers, solved symbolically
    return lam**2 / (mu * (4 * mu**2 - lam**2))


if __name__ == "__main__":
    lam, mu = Fraction(1), Fraction(3, 4)
    exact = wait_two_servers(lam, mu)
    assert wait_erlang_c(lam, mu, 2) == exact
    print(f"Wq = {exact} = {float(exact)!r}")
