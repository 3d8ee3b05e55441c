"""Exact arithmetic over the base coefficient domains.

Three domains sit at the bottom of every coefficient tower: the integers,
the rationals, and prime fields GF(p).  Elements are plain Python objects:
``int`` for integers and prime-field residues (kept in [0, p)), and
``fractions.Fraction`` for rationals (always reduced, denominator > 0).

Besides ring arithmetic, each domain answers the two questions reduction
needs about finite coefficient lists: is a target an ideal combination of
given generators (with an explicit witness), and what generates the module
of relations among given generators.
"""

from fractions import Fraction
from math import gcd


def ext_gcd(a, b):
    """Extended Euclid: returns (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g."""
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        return -old_r, -old_u, -old_v
    return old_r, old_u, old_v


class BaseDomain:
    """Common interface of the three base domains."""

    is_field = False
    p = None  # modulus for prime fields, None otherwise

    def normalize(self, c):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def divides(self, a, b):
        """True if a divides b in the domain."""
        raise NotImplementedError

    def exact_div(self, a, b):
        """a / b, assuming b divides a."""
        raise NotImplementedError

    def unit_factor(self, c):
        """Unit u such that u*c is the canonical associate (positive / monic-1)."""
        raise NotImplementedError

    def solve_membership(self, target, gens):
        """Witness list ws with target = sum(w*g), or None if target is not in <gens>."""
        raise NotImplementedError

    def syzygy_generators(self, gens):
        """Generators of {(w_1..w_m) : sum w_i*gens_i = 0} as a module over the domain."""
        out = []
        m = len(gens)
        nz = [i for i in range(m) if gens[i] != self.zero]
        for i in range(m):
            if gens[i] == self.zero:
                row = [self.zero] * m
                row[i] = self.one
                out.append(tuple(row))
        for a in range(len(nz)):
            for b in range(a + 1, len(nz)):
                i, j = nz[a], nz[b]
                row = [self.zero] * m
                ci, cj = self._pair_syzygy(gens[i], gens[j])
                row[i], row[j] = ci, cj
                out.append(tuple(row))
        return out

    def _pair_syzygy(self, a, b):
        raise NotImplementedError


class IntegerDomain(BaseDomain):
    zero = 0
    one = 1

    def normalize(self, c):
        return int(c)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def divides(self, a, b):
        if a == 0:
            return b == 0
        return b % a == 0

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def lcm(self, a, b):
        return abs(a * b) // gcd(a, b)

    def unit_factor(self, c):
        return -1 if c < 0 else 1

    def solve_membership(self, target, gens):
        # running gcd with a Bezout chain over the generator list
        g = 0
        coeffs = []
        for lam in gens:
            g2, u, v = ext_gcd(g, lam)
            coeffs = [c * u for c in coeffs]
            coeffs.append(v)
            g = g2
        if g == 0:
            return [0] * len(gens) if target == 0 else None
        if target % g:
            return None
        q = target // g
        return [c * q for c in coeffs]

    def _pair_syzygy(self, a, b):
        g = gcd(a, b)
        return b // g, -(a // g)


class RationalDomain(BaseDomain):
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, c):
        return Fraction(c)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def divides(self, a, b):
        return a != 0 or b == 0

    def exact_div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / Fraction(a)

    def unit_factor(self, c):
        return 1 / c

    def solve_membership(self, target, gens):
        if target == 0:
            return [self.zero] * len(gens)
        for i, lam in enumerate(gens):
            if lam != 0:
                ws = [self.zero] * len(gens)
                ws[i] = target / lam
                return ws
        return None

    def _pair_syzygy(self, a, b):
        return b, -a


class PrimeFieldDomain(BaseDomain):
    is_field = True
    zero = 0
    one = 1

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def normalize(self, c):
        return int(c) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def divides(self, a, b):
        return a % self.p != 0 or b % self.p == 0

    def exact_div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def unit_factor(self, c):
        return pow(c, -1, self.p)

    def solve_membership(self, target, gens):
        t = target % self.p
        if t == 0:
            return [0] * len(gens)
        for i, lam in enumerate(gens):
            if lam % self.p:
                ws = [0] * len(gens)
                ws[i] = t * pow(lam, -1, self.p) % self.p
                return ws
        return None

    def _pair_syzygy(self, a, b):
        return b % self.p, (-a) % self.p


ZZ = IntegerDomain()
QQ = RationalDomain()

_prime_fields = {}


def GF(p):
    """The prime field GF(p); instances are cached so domains compare by identity."""
    dom = _prime_fields.get(p)
    if dom is None:
        dom = _prime_fields[p] = PrimeFieldDomain(p)
    return dom


def solve_membership(dom, target, gens):
    """Module-level alias: witness for target in <gens> over dom, or None."""
    return dom.solve_membership(target, gens)


def syzygy_generators(dom, gens):
    """Module-level alias: generators of the relation module of gens over dom."""
    return dom.syzygy_generators(gens)
