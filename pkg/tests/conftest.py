"""Shared test helpers: character enumeration and random multiplicative maps."""

from __future__ import annotations

import random

from mockchar import (
    ArithmeticFunction,
    DirichletCharacter,
    MINUS_ONE,
    ONE,
    UnitValue,
    ZERO,
    character_from_symbols,
    character_from_table,
    factor,
)


def _order(g: int, m: int) -> int:
    x = g % m
    for t in range(1, m + 1):
        if x == 1:
            return t
        x = (x * g) % m
    return 0


def characters_mod_prime_power(p: int, r: int) -> list[DirichletCharacter]:
    """All Dirichlet characters of modulus p**r (small moduli, brute force)."""
    m = p**r
    if m == 1:
        return [character_from_table(1, [ONE])]
    if p == 2:
        if r == 1:
            return [character_from_symbols(2, [0, 1])]
        if r == 2:
            return [
                character_from_symbols(4, [0, 1, 0, 1]),
                character_from_symbols(4, [0, 1, 0, -1]),
            ]
        if r == 3:
            chars = []
            for e7 in (1, -1):
                for e5 in (1, -1):
                    table = [ZERO] * 8
                    for s in (0, 1):
                        for t in (0, 1):
                            n = (pow(7, s, 8) * pow(5, t, 8)) % 8
                            table[n] = UnitValue.from_symbol((e7**s) * (e5**t))
                    chars.append(character_from_table(8, table))
            return chars
        raise NotImplementedError("2-power moduli beyond 8 not needed here")
    phi = m // p * (p - 1)
    g = next(g for g in range(2, m) if _order(g, m) == phi)
    chars = []
    for j in range(phi):
        table = [ZERO] * m
        x = 1
        for t in range(phi):
            table[x] = UnitValue.root(j * t, phi)
            x = (x * g) % m
        chars.append(character_from_table(m, table))
    return chars


def random_cm_pm1(seed: int) -> ArithmeticFunction:
    """Seeded completely multiplicative function with f(p) uniform in {-1, +1}."""
    rng = random.Random(seed)
    prime_signs: dict[int, int] = {}

    def at_prime(p: int) -> int:
        s = prime_signs.get(p)
        if s is None:
            s = rng.choice((1, -1))
            prime_signs[p] = s
        return s

    def ev(n: int) -> UnitValue:
        if n == 0:
            return ZERO
        if n < 0:
            n = -n
        s = 1
        for p, e in factor(n).factors:
            if at_prime(p) < 0 and e & 1:
                s = -s
        return ONE if s > 0 else MINUS_ONE

    return ArithmeticFunction(ev, f"random-cm({seed})")
