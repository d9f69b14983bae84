#!/usr/bin/env python3
"""Regenerate the vendored b-file fixtures under src/mockchar/data/bfiles/.

Deliberately standalone: nothing here imports the mockchar package, so the
fixtures stay an independent cross-check of it.

  b034947.txt  the regular paperfolding signs, from the fold recursion
               v(2n) = v(n), v(4m+1) = +1, v(4m+3) = -1
  b091338.txt  (3|n)  via trial-division factoring + exhaustive-square
  b089509.txt  (7|n)       Legendre symbols at odd primes, the mod-8 rule
  b226162.txt  (-5|n)      at 2, and sign(a) at -1

Each file holds terms n = 1..1000, one "n value" line per term.
"""

from pathlib import Path

TERMS = 1000
OUT = Path(__file__).resolve().parent.parent / "src" / "mockchar" / "data" / "bfiles"


def paperfold(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return 1 if n % 4 == 1 else -1


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def legendre_by_squares(a: int, p: int) -> int:
    r = a % p
    if r == 0:
        return 0
    squares = {(x * x) % p for x in range(1, p)}
    return 1 if r in squares else -1


def symbol_mod8(a: int) -> int:
    return 1 if a % 8 in (1, 7) else -1


def kron(a: int, n: int) -> int:
    from math import gcd

    if a == 0 or n == 0:
        return 0
    if gcd(abs(a), abs(n)) > 1:
        return 0
    res = 1
    if n < 0:
        n = -n
        if a < 0:
            res = -res
    for p, e in factorize(n):
        s = symbol_mod8(a) if p == 2 else legendre_by_squares(a, p)
        if s < 0 and e % 2:
            res = -res
    return res


def write(name: str, values, comment: str) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    lines = [f"# {comment}", "# generated by tools/generate_bfiles.py"]
    lines += [f"{n} {v}" for n, v in values]
    (OUT / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {name} ({len(lines) - 2} terms)")


def main() -> None:
    write(
        "b034947.txt",
        [(n, paperfold(n)) for n in range(1, TERMS + 1)],
        "A034947: paperfolding signs, a(n) = (-1|n)",
    )
    for a, name, label in [
        (3, "b091338.txt", "A091338: a(n) = (3|n)"),
        (7, "b089509.txt", "A089509: a(n) = (7|n)"),
        (-5, "b226162.txt", "A226162: a(n) = (-5|n)"),
    ]:
        write(name, [(n, kron(a, n)) for n in range(1, TERMS + 1)], label)


if __name__ == "__main__":
    main()
