"""Number fields as monic integral polynomial quotients of Q[x].

Elements are coordinate vectors in the power basis.  Root location and
field extension (needed for eigenvalue-field towers and cyclotomic
values) go through linear-algebra splitting of the etale algebra
K[x]/(h): take a primitive combination u = x + s*theta, compute its
minimal polynomial over Q, factor that, and read the components off.
"""

from __future__ import annotations

from fractions import Fraction

from .factor import factor_rational_poly
from .poly import UniPoly


class RationalField:
    """Adapter presenting Q with the same protocol as NumberField."""

    degree = 1
    is_rational = True
    modulus = UniPoly((0, 1))

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, NFElement) and x.field.degree == 1:
            return x.coords[0]
        raise TypeError(f"cannot coerce {x!r} into Q")

    def element(self, coords):
        assert len(coords) == 1
        return Fraction(coords[0])

    def to_poly(self, x) -> UniPoly:
        return UniPoly.constant(self.coerce(x))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


QQ = RationalField()


class NumberField:
    """Q[x]/(modulus) for a monic integral irreducible modulus."""

    is_rational = False

    def __init__(self, modulus: UniPoly, check_irreducible: bool = True):
        modulus = modulus.monic()
        if modulus.degree < 1:
            raise ValueError("modulus must be non-constant")
        if any(c.denominator != 1 for c in modulus.coeffs):
            raise ValueError("modulus must be integral (rescale the generator first)")
        if check_irreducible:
            facs = factor_rational_poly(modulus)
            if len(facs) != 1 or facs[0][1] != 1:
                raise ValueError(f"modulus {modulus} is not irreducible over Q")
        self.modulus = modulus
        self.degree = modulus.degree
        # reduction rows: x^(degree+k) expressed in the power basis
        d = self.degree
        rows = []
        current = [Fraction(0)] * d
        # x^d = -(lower coefficients)
        for i in range(d):
            current[i] = -modulus.coeffs[i]
        rows.append(tuple(current))
        for _ in range(d - 2):
            nxt = [Fraction(0)] * d
            carry = current[d - 1]
            for i in range(d - 1):
                nxt[i + 1] = current[i]
            if carry != 0:
                for i in range(d):
                    nxt[i] += carry * rows[0][i]
            rows.append(tuple(nxt))
            current = nxt
        self._red = rows

    # -- element constructors -------------------------------------------

    @property
    def zero(self) -> "NFElement":
        return NFElement(self, (Fraction(0),) * self.degree)

    @property
    def one(self) -> "NFElement":
        return NFElement(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    @property
    def gen(self) -> "NFElement":
        cs = [Fraction(0)] * self.degree
        if self.degree == 1:
            return NFElement(self, (-self.modulus.coeffs[0],))
        cs[1] = Fraction(1)
        return NFElement(self, tuple(cs))

    def element(self, coords) -> "NFElement":
        cs = [Fraction(c) if not isinstance(c, Fraction) else c for c in coords]
        if len(cs) > self.degree:
            raise ValueError("too many coordinates")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NFElement(self, tuple(cs))

    def from_poly(self, p: UniPoly) -> "NFElement":
        return self.element((p % self.modulus).coeffs)

    def to_poly(self, x: "NFElement") -> UniPoly:
        return UniPoly(self.coerce(x).coords)

    def coerce(self, x) -> "NFElement":
        if isinstance(x, NFElement):
            if x.field.modulus == self.modulus:
                return NFElement(self, x.coords)
            if x.field.degree == 1:
                return self.element((x.coords[0],))
            raise TypeError("element of a different number field")
        if isinstance(x, (int, Fraction)):
            return self.element((x,))
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def __eq__(self, other):
        if isinstance(other, RationalField):
            return False
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("NumberField", self.modulus))

    def __repr__(self):
        return f"NumberField({self.modulus!r})"

    # -- internal arithmetic ---------------------------------------------

    def _mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj != 0:
                    prod[i + j] += ai * bj
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c != 0:
                row = self._red[k - d]
                for i in range(d):
                    if row[i] != 0:
                        out[i] += c * row[i]
        return tuple(out)

    def _inv(self, a):
        ap = UniPoly(a)
        if ap.is_zero():
            raise ZeroDivisionError("division by zero in number field")
        g, s, _ = ap.xgcd(self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("element is a zero divisor (modulus not irreducible?)")
        inv = s.scale(Fraction(1) / g.coeffs[0]) % self.modulus
        cs = list(inv.coeffs) + [Fraction(0)] * (self.degree - len(inv.coeffs))
        return tuple(cs)


class NFElement:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = tuple(coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def _coerce_other(self, other):
        if isinstance(other, NFElement):
            if other.field.modulus == self.field.modulus:
                return other
            if other.is_rational():
                return self.field.coerce(other.rational_value())
            raise TypeError("cannot mix elements of different number fields")
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(b - a for a, b in zip(self.coords, o.coords)))

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, self.field._mul(self.coords, o.coords))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        return NFElement(self.field, self.field._inv(self.coords))

    def __truediv__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if isinstance(other, NFElement):
            if other.field.modulus == self.field.modulus:
                return self.coords == other.coords
            if self.is_rational() and other.is_rational():
                return self.coords[0] == other.coords[0]
            return False
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.modulus, self.coords))

    def __repr__(self):
        return f"NF({list(self.coords)})"


# ---------------------------------------------------------------------------
# generic helpers over either field
# ---------------------------------------------------------------------------


def field_of(x):
    return QQ if isinstance(x, (int, Fraction)) else x.field


def as_rational(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return x.rational_value()


def minimal_polynomial(x, field=None) -> UniPoly:
    """Minimal polynomial over Q of an element of a number field (or of Q)."""
    if isinstance(x, (int, Fraction)):
        return UniPoly((-Fraction(x), 1))
    K = x.field
    d = K.degree
    # find the first linear dependency among 1, x, x^2, ...
    powers = [K.one]
    for _ in range(d):
        powers.append(powers[-1] * x)
    rows = [list(p.coords) for p in powers]
    # gaussian elimination, tracking the combination
    from .linalg import Matrix

    for k in range(1, d + 2):
        mat = Matrix(QQ, [rows[i] for i in range(k)]).transpose()
        ker = mat.kernel()
        if ker:
            combo = ker[0]
            # normalize to monic
            lead = combo[k - 1]
            assert lead != 0, "kernel vector should involve the top power"
            return UniPoly([c / lead for c in combo])
    raise AssertionError("no dependency found below degree+1")


def multiplicative_order(x, bound: int):
    """Order of x in the multiplicative group, or None if > bound (or not finite)."""
    if isinstance(x, (int, Fraction)):
        if x == 1:
            return 1
        if x == -1:
            return 2
        return None
    one = x.field.one
    acc = x
    for n in range(1, bound + 1):
        if acc == one:
            return n
        acc = acc * x
    return None


def embed_element(x, gen_image):
    """Image of x in L under the embedding of its field sending gen -> gen_image."""
    L = gen_image.field
    if isinstance(x, (int, Fraction)):
        return L.coerce(x)
    acc = L.zero
    for c in reversed(x.coords):
        acc = acc * gen_image + L.coerce(c)
    return acc


# ---------------------------------------------------------------------------
# etale algebra splitting: roots in a field, adjoining roots, composita
# ---------------------------------------------------------------------------


class _Etale:
    """The algebra B = K[x]/(h) for squarefree h over Q, as a Q-vector space.

    Elements are tuples of K-elements of length deg(h) (coefficients in x).
    Basis over Q: theta^i x^j, flattened with i fastest.
    """

    def __init__(self, K, h: UniPoly):
        self.K = K
        self.h = h.monic()
        self.dK = K.degree
        self.dh = h.degree
        self.dim = self.dK * self.dh

    def zero(self):
        return tuple(self.K.zero for _ in range(self.dh))

    def x_elem(self):
        e = [self.K.zero] * self.dh
        if self.dh == 1:
            return (self.K.coerce(-as_rational_poly_const(self.h)),)
        e[1] = self.K.one
        return tuple(e)

    def theta_elem(self):
        if self.K.degree == 1:
            return tuple([self.K.one] + [self.K.zero] * (self.dh - 1))[:self.dh]
        e = [self.K.zero] * self.dh
        e[0] = self.K.gen
        return tuple(e)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a, b):
        n = self.dh
        prod = [self.K.zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if not _is_zero_elem(ai):
                for j, bj in enumerate(b):
                    if not _is_zero_elem(bj):
                        prod[i + j] = prod[i + j] + ai * bj
        # reduce modulo h (rational coefficients)
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if not _is_zero_elem(c):
                for j in range(n):
                    prod[k - n + j] = prod[k - n + j] - c * self.h.coeffs[j]
            prod[k] = self.K.zero
        return tuple(prod[:n])

    def to_vector(self, a):
        out = []
        for comp in a:
            if isinstance(comp, (int, Fraction)):
                out.append(Fraction(comp))
                out.extend([Fraction(0)] * (self.dK - 1))
            else:
                out.extend(comp.coords)
        return out


def _is_zero_elem(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def as_rational_poly_const(h: UniPoly) -> Fraction:
    return h.coeffs[0] if h.coeffs else Fraction(0)


def _split_etale(K, h: UniPoly):
    """Split B = K[x]/(h) into field components.

    Returns a list of (L, theta_in_L, x_in_L): L a NumberField (or QQ),
    with the images of K's generator and of the adjoined root x.
    Components come in a deterministic order, sorted by (degree, modulus).
    h must be squarefree over Q and the discriminants must cooperate with
    the primitive-combination search (a few shifts s are tried).
    """
    from .linalg import Matrix

    B = _Etale(K, h)
    D = B.dim
    for s in range(0, 12):
        u = B.add(B.x_elem(), _scale_elem(B.theta_elem(), s, B))
        powers = [tuple([B.K.one] + [B.K.zero] * (B.dh - 1))]
        for _ in range(D):
            powers.append(B.mul(powers[-1], u))
        vecs = [B.to_vector(p) for p in powers]
        mat = Matrix(QQ, vecs[:D]).transpose()
        if mat.rank() < D:
            continue
        # minimal polynomial of u has degree D: solve for u^D in lower powers
        sol = mat.solve(vecs[D])
        mu = UniPoly([-c for c in sol] + [Fraction(1)])
        facs = factor_rational_poly(mu)
        if any(m > 1 for _, m in facs):
            continue
        # express theta and x in powers of u
        theta_c = mat.solve(B.to_vector(B.theta_elem()))
        x_c = mat.solve(B.to_vector(B.x_elem()))
        comps = []
        for F, _ in sorted(facs, key=lambda t: (t[0].degree, t[0].coeffs)):
            if F.degree == 1:
                L = QQ
                t_val = -F.coeffs[0]
                theta_img = sum(c * t_val ** i for i, c in enumerate(theta_c))
                x_img = sum(c * t_val ** i for i, c in enumerate(x_c))
            else:
                L, scale = _integral_field(F)
                t_val = L.gen * scale  # image of u
                theta_img = _eval_poly_at(theta_c, t_val, L)
                x_img = _eval_poly_at(x_c, t_val, L)
            comps.append((L, theta_img, x_img))
        return comps
    raise ArithmeticError("no primitive shift found for etale splitting")


def _scale_elem(a, s, B):
    if s == 0:
        return B.zero()
    return tuple(x * s for x in a)


def _eval_poly_at(coeffs, val, L):
    acc = L.zero
    for c in reversed(coeffs):
        acc = acc * val + L.coerce(c)
    return acc


def _integral_field(F: UniPoly):
    """NumberField for monic rational F, rescaling the generator to be integral.

    Returns (L, scale) where the root of F equals scale * L.gen with scale
    a positive rational (1/denominator-clearing factor).
    """
    den = 1
    for c in F.coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    if den == 1 and all(c.denominator == 1 for c in F.coeffs):
        return NumberField(F, check_irreducible=False), Fraction(1)
    # root r of F: D*r is a root of D^n F(x/D), integral for D = den (safe choice: den)
    n = F.degree
    D = den
    while True:
        G = UniPoly([c * Fraction(D) ** (n - i) for i, c in enumerate(F.coeffs)])
        if all(c.denominator == 1 for c in G.coeffs):
            return NumberField(G.monic(), check_irreducible=False), Fraction(1, D)
        D *= den


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


def roots_in_field(h: UniPoly, K) -> list:
    """All roots of the rational polynomial h inside K, in deterministic order."""
    if h.is_zero():
        raise ValueError("zero polynomial")
    roots = []
    for f, _ in factor_rational_poly(h):
        if f.degree == 1:
            roots.append(K.coerce(-f.coeffs[0]))
            continue
        if isinstance(K, RationalField) or f.degree > K.degree or K.degree % f.degree:
            continue
        for L, theta_img, x_img in _split_etale(K, f):
            if isinstance(L, RationalField) or L.degree != K.degree:
                continue
            # L = K via theta -> theta_img; pull x_img back through the inverse
            root = _pullback(K, theta_img, x_img)
            if root is not None:
                roots.append(root)
    # verify and sort deterministically
    out = []
    for r in roots:
        val = h.evaluate(r)
        assert _is_zero_elem(val), "claimed root fails to vanish"
        out.append(r)
    out.sort(key=lambda r: (r.coords if isinstance(r, NFElement) else (Fraction(r),)))
    return out


def _pullback(K, theta_img, x_img):
    """Express x_img as a Q-polynomial in theta_img and evaluate at K.gen."""
    from .linalg import Matrix

    L = theta_img.field
    if L.degree != K.degree:
        return None
    powers = [L.one]
    for _ in range(K.degree - 1):
        powers.append(powers[-1] * theta_img)
    mat = Matrix(QQ, [list(p.coords) for p in powers]).transpose()
    try:
        sol = mat.solve(list(x_img.coords))
    except ValueError:
        return None
    acc = K.zero
    for c in reversed(sol):
        acc = acc * K.gen + K.coerce(c)
    return acc


def adjoin_root(K, h: UniPoly):
    """Smallest field containing K and a root of h (h rational, nonconstant).

    Returns (L, emb_gen, root): emb_gen is the image of K's generator in L
    (None when K is Q), and root is a root of h in L.  When h already has a
    root in K, returns K itself with that root (first in canonical order).
    """
    rs = roots_in_field(h, K)
    if rs:
        gen = None if isinstance(K, RationalField) else K.gen
        return K, gen, rs[0]
    if isinstance(K, RationalField):
        facs = sorted(factor_rational_poly(h), key=lambda t: (t[0].degree, t[0].coeffs))
        F = facs[0][0]
        L, scale = _integral_field(F)
        return L, None, L.gen * scale
    best = None
    for f, _ in sorted(factor_rational_poly(h), key=lambda t: (t[0].degree, t[0].coeffs)):
        if f.degree == 1:
            continue  # handled by roots_in_field above
        for L, theta_img, x_img in _split_etale(K, f):
            if isinstance(L, RationalField):
                continue
            if best is None or L.degree < best[0].degree:
                best = (L, theta_img, x_img)
        if best is not None and best[0].degree == K.degree * _min_factor_degree(f, K):
            break
    if best is None:
        raise ArithmeticError("failed to adjoin a root")
    return best


def _min_factor_degree(f, K):
    # lower bound used only to stop the search early; 1 is always safe
    return 1
