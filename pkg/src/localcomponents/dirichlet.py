"""Dirichlet characters with exact cyclotomic values.

Values are stored as exponents of a fixed root of unity (never floats),
so character arithmetic is integer-only.  A character mod m is given by
its images on the canonical generators of (Z/m)^x, CRT-decomposed into
cyclic factors.  The adelic conventions at p (the unit part of omega_p
is the *inverse* of the p-part of the nebentypus, and omega_p at p picks
up the prime-to-p part) are fixed here once; everything downstream
consumes them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactalg import NumberField, QQ, UniPoly, cyclotomic_polynomial, roots_in_field


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def _primitive_root(q: int, p: int) -> int:
    """Primitive root mod q = p^a, p odd."""
    phi = euler_phi(q)
    factors = [f for f, _ in factorize(phi)]
    for g in range(2, q):
        if gcd(g, q) != 1:
            continue
        if all(pow(g, phi // f, q) != 1 for f in factors):
            return g
    raise AssertionError(f"no primitive root mod {q}")


def crt(residues: list[int], moduli: list[int]) -> int:
    x, m = 0, 1
    for r, q in zip(residues, moduli):
        t = ((r - x) * pow(m, -1, q)) % q
        x += m * t
        m *= q
    return x % m


class UnitGroup:
    """(Z/m)^x with canonical cyclic decomposition and discrete logs."""

    def __init__(self, modulus: int):
        assert modulus >= 1
        self.modulus = modulus
        gens: list[int] = []
        orders: list[int] = []
        pieces = factorize(modulus)
        for p, a in pieces:
            q = p ** a
            rest = modulus // q
            if p == 2:
                if a == 1:
                    continue
                if a == 2:
                    gens.append(crt([q - 1, 1], [q, rest]) if rest > 1 else q - 1)
                    orders.append(2)
                else:
                    gens.append(crt([q - 1, 1], [q, rest]) if rest > 1 else q - 1)
                    orders.append(2)
                    gens.append(crt([5, 1], [q, rest]) if rest > 1 else 5 % q)
                    orders.append(q // 4)
            else:
                g = _primitive_root(q, p)
                gens.append(crt([g, 1], [q, rest]) if rest > 1 else g)
                orders.append(euler_phi(q))
        self.generators = gens
        self.orders = orders
        self.exponent = 1
        for n in orders:
            self.exponent = _lcm(self.exponent, n)
        self._dlog: dict[int, tuple[int, ...]] = {}
        self._build_dlog()

    def _build_dlog(self):
        table = {1 % self.modulus: tuple([0] * len(self.generators))}
        frontier = [(1 % self.modulus, tuple([0] * len(self.generators)))]
        for i, (g, n) in enumerate(zip(self.generators, self.orders)):
            new_frontier = list(frontier)
            for u, exps in frontier:
                acc = u
                for k in range(1, n):
                    acc = (acc * g) % self.modulus
                    e2 = list(exps)
                    e2[i] = k
                    table[acc] = tuple(e2)
                    new_frontier.append((acc, tuple(e2)))
            frontier = new_frontier
        self._dlog = table

    def dlog(self, u: int) -> tuple[int, ...]:
        u %= self.modulus
        if gcd(u, self.modulus) != 1:
            raise ValueError(f"{u} is not a unit mod {self.modulus}")
        return self._dlog[u]

    def units(self):
        return sorted(self._dlog.keys())


@lru_cache(maxsize=None)
def unit_group(modulus: int) -> UnitGroup:
    return UnitGroup(modulus)


class RootOfUnity:
    """zeta_order^exponent, stored exactly."""

    __slots__ = ("order", "exponent")

    def __init__(self, order: int, exponent: int):
        g = gcd(exponent % order if order > 1 else 0, order)
        if g and order // g < order:
            # reduce to the exact order
            exponent = (exponent % order) // g
            order = order // g
        else:
            exponent %= max(order, 1)
        if order == 0:
            order = 1
        self.order = order
        self.exponent = exponent % order if order > 1 else 0

    @staticmethod
    def one() -> "RootOfUnity":
        return RootOfUnity(1, 0)

    def is_one(self) -> bool:
        return self.order == 1

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = _lcm(self.order, other.order)
        return RootOfUnity(n, self.exponent * (n // self.order)
                           + other.exponent * (n // other.order))

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * (k % self.order))

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def __eq__(self, other):
        return (isinstance(other, RootOfUnity)
                and (self.order, self.exponent) == (other.order, other.exponent))

    def __hash__(self):
        return hash((self.order, self.exponent))

    def as_rational(self) -> Fraction:
        if self.order == 1:
            return Fraction(1)
        if self.order == 2:
            return Fraction(-1)
        raise ValueError(f"zeta_{self.order}^{self.exponent} is not rational")

    def in_field(self, zeta, field):
        """Value as a field element, given a primitive order-th root zeta in field."""
        if self.order == 1:
            return field.one
        return zeta ** self.exponent

    def __repr__(self):
        if self.order == 1:
            return "1"
        if self.order == 2:
            return "-1"
        return f"zeta{self.order}^{self.exponent}"


class DirichletCharacter:
    """Character of (Z/modulus)^x given by generator exponents.

    chi(generators[i]) = zeta_e^exps[i] where e = zeta_order.
    """

    def __init__(self, modulus: int, zeta_order: int, exps: list[int]):
        self.modulus = modulus
        self.group = unit_group(modulus)
        assert len(exps) == len(self.group.generators)
        for k, n in zip(exps, self.group.orders):
            assert (k * n) % zeta_order == 0, "exponent incompatible with generator order"
        self.zeta_order = zeta_order
        self.exps = [k % zeta_order for k in exps]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def trivial(modulus: int) -> "DirichletCharacter":
        g = unit_group(modulus)
        return DirichletCharacter(modulus, 1, [0] * len(g.generators))

    @staticmethod
    def from_order_exponents(modulus: int, pairs) -> "DirichletCharacter":
        """Build from explicit values chi(g_i) = zeta_{n_i}^{k_i}."""
        g = unit_group(modulus)
        e = 1
        for n, _ in pairs:
            e = _lcm(e, n)
        exps = [k * (e // n) for n, k in pairs]
        return DirichletCharacter(modulus, e, exps)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, u: int) -> RootOfUnity:
        exps = self.group.dlog(u)
        k = sum(a * b for a, b in zip(exps, self.exps)) % self.zeta_order
        return RootOfUnity(self.zeta_order, k)

    def is_defined_at(self, u: int) -> bool:
        return gcd(u, self.modulus) == 1

    # -- structure ------------------------------------------------------------

    def order(self) -> int:
        n = 1
        for k in self.exps:
            n = _lcm(n, RootOfUnity(self.zeta_order, k).order)
        return n

    def is_trivial(self) -> bool:
        return all(k == 0 for k in self.exps)

    def parity(self) -> int:
        """chi(-1) as +1 or -1."""
        if self.modulus <= 2:
            return 1
        v = self(-1 % self.modulus)
        return 1 if v.is_one() else -1

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        assert self.modulus == other.modulus, "use inflate() first"
        e = _lcm(self.zeta_order, other.zeta_order)
        exps = [a * (e // self.zeta_order) + b * (e // other.zeta_order)
                for a, b in zip(self.exps, other.exps)]
        return DirichletCharacter(self.modulus, e, exps)

    def inverse(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, self.zeta_order,
                                  [-k for k in self.exps])

    def __pow__(self, n: int) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, self.zeta_order,
                                  [k * n for k in self.exps])

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        return all(self(g) == other(g) for g in self.group.generators)

    def __hash__(self):
        return hash((self.modulus, tuple((self(g).order, self(g).exponent)
                                         for g in self.group.generators)))

    def conductor(self) -> int:
        """Smallest M | modulus such that chi factors through (Z/M)^x."""
        m = self.modulus
        divisors = sorted(d for d in range(1, m + 1) if m % d == 0)
        for M in divisors:
            # trivial on every unit congruent to 1 mod M
            if all(self(u).is_one() for u in self.group.units() if u % M == 1 % M):
                return M
        return m

    def restrict(self, M: int) -> "DirichletCharacter":
        """The character mod M inducing this one; conductor must divide M | modulus."""
        assert self.modulus % M == 0 and M % self.conductor() == 0
        g = unit_group(M)
        rest = self.modulus // M
        pairs = []
        for gen in g.generators:
            # lift to a unit mod modulus congruent to gen mod M and 1 mod the rest
            lift = _unit_lift(gen, M, self.modulus)
            v = self(lift)
            pairs.append((v.order, v.exponent))
        return DirichletCharacter.from_order_exponents(M, pairs)

    def inflate(self, M: int) -> "DirichletCharacter":
        """The character mod M (a multiple of modulus) with the same values."""
        assert M % self.modulus == 0
        g = unit_group(M)
        pairs = []
        for gen in g.generators:
            v = self(gen % self.modulus)
            pairs.append((v.order, v.exponent))
        return DirichletCharacter.from_order_exponents(M, pairs)

    def primitive(self) -> "DirichletCharacter":
        return self.restrict(self.conductor())

    def galois_orbit_exponents(self) -> list[int]:
        n = self.order()
        return sorted(t for t in range(1, n + 1) if gcd(t, n) == 1)

    def value_in_field(self, u: int, zeta, field):
        return self(u).in_field(zeta, field)

    def descriptor(self) -> dict:
        """Serializable form: modulus plus (generator, exponent, value_order)."""
        return {
            "modulus": self.modulus,
            "images": [{"generator": g, "value_order": self(g).order,
                        "exponent": self(g).exponent}
                       for g in self.group.generators],
        }

    def __repr__(self):
        if self.is_trivial():
            return f"chi_{self.modulus}(trivial)"
        imgs = ",".join(f"{g}->{self(g)!r}" for g in self.group.generators)
        return f"chi_{self.modulus}({imgs})"


def _unit_lift(u: int, M: int, modulus: int) -> int:
    """A unit mod modulus congruent to u mod M and to 1 modulo the coprime part."""
    for t in range(modulus // M):
        cand = u + M * t
        if gcd(cand, modulus) == 1:
            # among valid lifts, prefer one trivial on the complementary part
            pass
    # CRT on coprime parts of modulus relative to M
    parts = factorize(modulus)
    residues, moduli = [], []
    for p, a in parts:
        q = p ** a
        aM = 0
        mm = M
        while mm % p == 0:
            mm //= p
            aM += 1
        if aM > 0:
            residues.append(u % (p ** aM) if aM == a else _unit_lift_pp(u, p, aM, a))
            moduli.append(q)
        else:
            residues.append(1)
            moduli.append(q)
    return crt(residues, moduli)


def _unit_lift_pp(u: int, p: int, a_small: int, a_big: int) -> int:
    """Lift a unit mod p^a_small to p^a_big, congruent mod p^a_small."""
    return u % (p ** a_big) if u % p != 0 else (u + p ** a_small) % (p ** a_big)


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor()


def enumerate_characters(modulus: int) -> list[DirichletCharacter]:
    """All characters of (Z/modulus)^x, lexicographic in generator exponents."""
    g = unit_group(modulus)
    out = []

    def rec(i, acc):
        if i == len(g.orders):
            out.append(DirichletCharacter.from_order_exponents(
                modulus, [(g.orders[j], acc[j]) for j in range(len(acc))]))
            return
        for k in range(g.orders[i]):
            rec(i + 1, acc + [k])

    rec(0, [])
    return out


def split_at_p(eps: DirichletCharacter, p: int):
    """Write eps mod N*p^r as (eps_N mod N, eps_p mod p^r)."""
    m = eps.modulus
    r = 0
    mm = m
    while mm % p == 0:
        mm //= p
        r += 1
    N = mm
    if N % p == 0:
        raise ValueError("p^2 divides the prime-to-p part: malformed input")
    q = p ** r
    eps_N = _project(eps, N)
    eps_p = _project(eps, q)
    return eps_N, eps_p


def _project(eps: DirichletCharacter, M: int) -> DirichletCharacter:
    """Component of eps modulo M (M a unitary divisor of the modulus)."""
    g = unit_group(M)
    pairs = []
    for gen in g.generators:
        lift = crt([gen % M, 1], [M, eps.modulus // M]) if eps.modulus // M > 1 else gen % M
        v = eps(lift if lift != 0 else gen)
        pairs.append((v.order, v.exponent))
    return DirichletCharacter.from_order_exponents(M, pairs)


class LocalCharacterData:
    """The local character omega_p of Q_p^x attached to a nebentypus.

    unit_part describes omega_p restricted to Z_p^x (as a character of
    (Z/p^r)^x); value_at_p is omega_p at the uniformizer, a root of unity
    here (h = 0 for finite-order characters).
    """

    def __init__(self, p: int, unit_part: DirichletCharacter,
                 value_at_p: RootOfUnity, half_integer_exponent: Fraction = Fraction(0)):
        self.p = p
        self.unit_part = unit_part
        self.value_at_p = value_at_p
        self.half_integer_exponent = half_integer_exponent

    def conductor_exponent(self) -> int:
        c = self.unit_part.conductor()
        e = 0
        while c % self.p == 0:
            c //= self.p
            e += 1
        return e

    def __repr__(self):
        return (f"LocalCharacterData(p={self.p}, unit_part={self.unit_part!r}, "
                f"value_at_p={self.value_at_p!r}, h={self.half_integer_exponent})")


def local_component(eps: DirichletCharacter, p: int) -> LocalCharacterData:
    """omega_p for the adelization of eps: unit part eps_p^{-1}, omega_p(p) = eps_N(p).

    This fixes the convention Remark: omega_p restricted to Z_p^x is the
    inverse of the p-part of eps.
    """
    eps_N, eps_p = split_at_p(eps, p)
    value = eps_N(p % eps_N.modulus) if eps_N.modulus > 1 else RootOfUnity.one()
    return LocalCharacterData(p, eps_p.inverse(), value)


def character_values_field(chi: DirichletCharacter):
    """(field, zeta) with zeta a primitive root of unity of chi's order."""
    n = chi.order()
    if n <= 2:
        return QQ, QQ.coerce(1) if n == 1 else QQ.coerce(-1)
    K = NumberField(cyclotomic_polynomial(n).monic())
    return K, K.gen
