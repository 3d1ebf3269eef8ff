"""Integer polynomial kernel: the fast paths behind UniPoly.

Polynomials are little-endian lists of Python ints with no trailing zeros;
the zero polynomial is the empty list.  Everything here exists so that the
gcd-heavy operations (reduction of rational functions, squarefree
decomposition) stay fast on degree-30..60 inputs: gcds are computed by the
small-prime modular method (Brown), with a single mod-p image proving
coprimality in the common case and CRT lifting plus exact trial division
otherwise.
"""

from __future__ import annotations

from math import gcd as _igcd

# Primes just below 2**62; enough CRT room for any gcd this package meets.
_PRIMES = (
    4611686018427387847, 4611686018427387817, 4611686018427387787,
    4611686018427387761, 4611686018427387751, 4611686018427387737,
    4611686018427387733, 4611686018427387709, 4611686018427387701,
    4611686018427387631, 4611686018427387617, 4611686018427387587,
    4611686018427387461, 4611686018427387421, 4611686018427387409,
    4611686018427387329, 4611686018427387323, 4611686018427387301,
    4611686018427387271, 4611686018427387241, 4611686018427387139,
    4611686018427387131, 4611686018427387127, 4611686018427387113,
)


def strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def content(c: list[int]) -> int:
    g = 0
    for x in c:
        g = _igcd(g, x)
        if g == 1:
            return 1
    return g


def primitive(c: list[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    if not c:
        return []
    g = content(c)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def _gfp_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd of the mod-p images.  Assumes p divides neither leading coeff."""
    f = strip([x % p for x in f])
    g = strip([x % p for x in g])
    while g:
        dg = len(g) - 1
        inv = pow(g[-1], p - 2, p)
        r = list(f)
        for k in range(len(r) - 1, dg - 1, -1):
            c = (r[k] * inv) % p
            if c:
                for i in range(dg):
                    r[k - dg + i] = (r[k - dg + i] - c * g[i]) % p
                r[k] = 0
        f, g = g, strip(r[:dg] if dg > 0 else [])
    inv = pow(f[-1], p - 2, p)
    return [(x * inv) % p for x in f]


def _divides(d: list[int], f: list[int]) -> bool:
    """Exact divisibility over Z for primitive d (Gauss: Q-divisibility agrees)."""
    if not f:
        return True
    if not d or len(d) > len(f):
        return False
    lc = d[-1]
    r = list(f)
    for k in range(len(r) - 1, len(d) - 2, -1):
        c = r[k]
        if c == 0:
            continue
        if c % lc:
            return False
        q = c // lc
        off = k - (len(d) - 1)
        for i in range(len(d)):
            r[off + i] -= q * d[i]
    return not any(r[: len(d) - 1])


def gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd over Z, positive leading coefficient."""
    if not f:
        return primitive(list(g))
    if not g:
        return primitive(list(f))
    f = primitive(list(f))
    g = primitive(list(g))
    if len(f) == 1 or len(g) == 1:
        return [1]
    gamma = _igcd(f[-1], g[-1])
    acc: list[int] = []
    modulus = 0
    best_deg = -1
    last = None
    for p in _PRIMES:
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        hp = _gfp_gcd(f, g, p)
        d = len(hp) - 1
        if d == 0:
            return [1]
        scaled = [(gamma * c) % p for c in hp]
        if best_deg < 0 or d < best_deg:
            best_deg, acc, modulus, last = d, scaled, p, None
        elif d > best_deg:
            continue  # unlucky prime
        else:
            inv = pow(modulus % p, p - 2, p)
            acc = [
                a + modulus * (((s - a) * inv) % p)
                for a, s in zip(acc, scaled)
            ]
            modulus *= p
        half = modulus // 2
        cand = primitive([x - modulus if x > half else x for x in acc])
        if cand == last and _divides(cand, f) and _divides(cand, g):
            return cand
        last = cand
    # Unreachable for inputs in this package's range; fail loudly if not.
    raise ArithmeticError("modular gcd did not stabilize")
