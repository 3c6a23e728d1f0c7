"""Factorization of univariate polynomials over Q.

Pipeline: content/primitive split, Yun squarefree decomposition, modular
factorization by Cantor-Zassenhaus at a good prime, quadratic Hensel
lifting to above the Mignotte bound, then subset recombination.  Desk
scale only (degrees up to a few dozen), which is all the eigenvalue
fields here require.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from functools import lru_cache

from .poly import UniPoly

# ---------------------------------------------------------------------------
# arithmetic for dense integer polynomials modulo m (lowest degree first)
# ---------------------------------------------------------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_add(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
                  for i in range(n)])


def _mod_sub(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
                  for i in range(n)])


def _mod_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % m for c in out])


def _mod_divmod(a, b, m):
    """Divide a by b mod m; leading coefficient of b must be a unit."""
    b = _trim(list(b))
    a = list(a)
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, m)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = (a[i + db] * inv) % m
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % m
    return _trim(q), _trim(a[:db])


def _mod_gcd(a, b, m):
    """Monic gcd mod a prime m."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _mod_divmod(a, b, m)[1]
    if a:
        inv = pow(a[-1], -1, m)
        a = [(c * inv) % m for c in a]
    return a


def _mod_pow(a, n, mod_poly, m):
    result = [1]
    base = _mod_divmod(a, mod_poly, m)[1]
    while n:
        if n & 1:
            result = _mod_divmod(_mod_mul(result, base, m), mod_poly, m)[1]
        base = _mod_divmod(_mod_mul(base, base, m), mod_poly, m)[1]
        n >>= 1
    return result


def _mod_monic(a, m):
    a = _trim(list(a))
    if not a:
        return a
    inv = pow(a[-1], -1, m)
    return [(c * inv) % m for c in a]


# ---------------------------------------------------------------------------
# factorization over F_p (distinct degree + equal degree splitting)
# ---------------------------------------------------------------------------


def _ddf(f, p):
    """Distinct-degree factorization of a squarefree monic f mod p."""
    out = []
    x = [0, 1]
    h = x[:]
    v = f[:]
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _mod_pow(h, p, v, p)
        g = _mod_gcd(_mod_sub(h, x, p), v, p)
        if len(g) > 1:
            out.append((g, d))
            v = _mod_divmod(v, g, p)[0]
            h = _mod_divmod(h, v, p)[1]
    if len(v) > 1:
        out.append((v, len(v) - 1))
    return out


def _edf(f, d, p, rng):
    """Equal-degree splitting: f monic squarefree, all factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _trim(a)
        if len(a) < 2:
            continue
        g = _mod_gcd(a, f, p)
        if len(g) > 1 and len(g) <= n:
            break
        if p == 2:
            b = a[:]
            for _ in range(d - 1):
                b = _mod_add(_mod_mul(b, b, p), a, p)
                b = _mod_divmod(b, f, p)[1]
            g = _mod_gcd(b, f, p)
        else:
            b = _mod_pow(a, (p ** d - 1) // 2, f, p)
            g = _mod_gcd(_mod_sub(b, [1], p), f, p)
        if 1 < len(g) <= n:
            break
    g = _mod_monic(g, p)
    rest = _mod_divmod(f, g, p)[0]
    return _edf(g, d, p, rng) + _edf(rest, d, p, rng)


def _factor_mod_p(f, p, rng):
    """Factor a squarefree monic integer polynomial mod p into monic irreducibles."""
    out = []
    for g, d in _ddf(f, p):
        out.extend(_edf(_mod_monic(g, p), d, p, rng))
    out.sort(key=lambda h: (len(h), h))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------


def _hensel_pair(f, g, h, p, k):
    """Lift f = g*h (mod p) to mod p^(2^k-ish), returning (g', h') mod p^target.

    f, g, h integer coefficient lists with f monic mod target, g*h = f mod p,
    g, h monic, gcd(g, h) = 1 mod p.  Standard quadratic lifting.
    """
    # s*g + t*h = 1 mod p
    s, t = _poly_xgcd_modp(g, h, p)
    m = p
    while m < k:
        m2 = m * m
        e = _mod_sub(f, _mod_mul(g, h, m2), m2)
        q, r = _mod_divmod(_mod_mul(s, e, m2), h, m2)
        g1 = _mod_add(g, _mod_add(_mod_mul(t, e, m2), _mod_mul(q, g, m2), m2), m2)
        h1 = _mod_add(h, r, m2)
        e2 = _mod_sub(_mod_sub([1], _mod_mul(s, g1, m2), m2), _mod_mul(t, h1, m2), m2)
        q2, r2 = _mod_divmod(_mod_mul(s, e2, m2), h1, m2)
        s = _mod_add(s, r2, m2)
        t = _mod_add(t, _mod_add(_mod_mul(t, e2, m2), _mod_mul(q2, g1, m2), m2), m2)
        g, h, m = g1, h1, m2
    return g, h, m


def _poly_xgcd_modp(g, h, p):
    """s, t with s*g + t*h = 1 mod p (g, h coprime mod p)."""
    r0, r1 = _trim([c % p for c in g]), _trim([c % p for c in h])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _mod_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mod_sub(s0, _mod_mul(q, s1, p), p)
        t0, t1 = t1, _mod_sub(t0, _mod_mul(q, t1, p), p)
    assert len(r0) == 1, "inputs not coprime mod p"
    inv = pow(r0[0], -1, p)
    return [(c * inv) % p for c in s0], [(c * inv) % p for c in t0]


def _hensel_tree(f, factors, p, bound):
    """Lift the full modular factorization of monic f to modulus >= bound."""
    if len(factors) == 1:
        m = p
        while m < bound:
            m *= m
        return [_mod_monic(f, m)], m
    mid = len(factors) // 2
    g = [1]
    for fac in factors[:mid]:
        g = _mod_mul(g, fac, p)
    h = [1]
    for fac in factors[mid:]:
        h = _mod_mul(h, fac, p)
    g, h, m = _hensel_pair(f, g, h, p, bound)
    left, ml = _hensel_tree(g, factors[:mid], p, bound)
    right, mr = _hensel_tree(h, factors[mid:], p, bound)
    mm = min(m, ml, mr)
    left = [[c % mm for c in fac] for fac in left]
    right = [[c % mm for c in fac] for fac in right]
    return left + right, mm


# ---------------------------------------------------------------------------
# squarefree decomposition and the main driver
# ---------------------------------------------------------------------------


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: return [(g_i, i)] with p = lc * prod g_i^i, g_i squarefree monic."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    f = p.monic()
    out = []
    d = f.derivative()
    a = f.gcd(d)
    b = f // a
    c = d // a
    i = 1
    while b.degree > 0:
        w = b.gcd(c - b.derivative())
        if w.degree > 0:
            out.append((w.monic(), i))
        b2 = b // w
        c = (c - b.derivative()) // w
        b = b2
        i += 1
    return out


def _mignotte_bound(f: list[int]) -> int:
    """Bound on |coefficients| of any monic factor of monic integer f."""
    n = len(f) - 1
    norm = math.isqrt(sum(c * c for c in f)) + 1
    return (2 ** n) * norm


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _factor_squarefree(f: UniPoly) -> list[UniPoly]:
    """Factor a squarefree monic rational polynomial into monic irreducibles."""
    if f.degree <= 1:
        return [f.monic()]
    # scale to monic integral: substitute x -> x/lc trick via primitive part
    fi = f.primitive()
    ci = fi.int_coeffs()
    lc = ci[-1]
    if lc != 1:
        # work with the monic integer polynomial lc^(n-1) f(x/lc)
        n = len(ci) - 1
        ci = [c * lc ** (n - 1 - i) for i, c in enumerate(ci)]
        ci[-1] = 1
    rng = random.Random(20121)
    p = 1
    while True:
        p = _next_prime(p)
        if ci[-1] % p == 0:
            continue
        fp = [c % p for c in ci]
        dfp = _trim([(i * c) % p for i, c in enumerate(fp)][1:])
        if len(_mod_gcd(fp, dfp, p)) == 1:
            break
    modular = _factor_mod_p(_mod_monic(fp, p), p, rng)
    if len(modular) == 1:
        return [f.monic()]
    bound = 2 * _mignotte_bound(ci) + 1
    lifted, m = _hensel_tree(ci, modular, p, bound)

    # subset recombination
    remaining = list(range(len(lifted)))
    current = ci[:]
    found: list[list[int]] = []
    r = 1
    while 2 * r <= len(remaining):
        hit = False
        for combo in itertools.combinations(remaining, r):
            prod = [1]
            for i in combo:
                prod = _mod_mul(prod, lifted[i], m)
            cand = [_symmetric(c, m) for c in prod]
            q, rem = _int_divmod(current, cand)
            if q is not None and not rem:
                found.append(cand)
                remaining = [i for i in remaining if i not in combo]
                current = q
                hit = True
                break
        if not hit:
            r += 1
    if len(current) > 1:
        found.append(current)
    out = []
    for g in found:
        gp = UniPoly(g)
        if lc != 1:
            # undo the x -> x/lc substitution: h(x) = g(lc*x)/lc^deg(g)
            d = gp.degree
            gp = UniPoly([c * Fraction(lc) ** (i - d) for i, c in enumerate(gp.coeffs)])
        out.append(gp.monic())
    out.sort(key=lambda h: (h.degree, h.coeffs))
    return out


def _int_divmod(a: list[int], b: list[int]):
    """Exact division of integer polys; (None, None) if not exact over Z."""
    if not b:
        return None, None
    if b[-1] not in (1, -1):
        # candidate factors here are monic, so this branch is defensive
        return None, None
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return None, a
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] * b[-1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    rem = _trim(a[:db])
    return q, rem


def _next_prime(p: int) -> int:
    q = p + 1
    while True:
        if all(q % r for r in range(2, math.isqrt(q) + 1)):
            return q
        q += 1


def factor_rational_poly(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Factor p over Q into monic irreducibles with multiplicities.

    The product of the factors (with multiplicity) equals p up to a
    rational scalar.  Raises ValueError on the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return []
    out = []
    for g, mult in squarefree_decomposition(p):
        for h in _factor_squarefree(g):
            out.append((h, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def is_irreducible(p: UniPoly) -> bool:
    if p.degree <= 0:
        return False
    facs = factor_rational_poly(p)
    return len(facs) == 1 and facs[0][1] == 1


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    num = UniPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num // cyclotomic_polynomial(d)
    return num
