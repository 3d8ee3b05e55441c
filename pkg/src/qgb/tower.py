"""Coefficient towers and the lift / complete / project pipeline.

A tower describes a coefficient ring as a quotient: a base domain (integers,
rationals, or a prime field), optional relation variables with defining
relations (an integer modulus counts as a relation over the integer base),
and the main variables.  Groebner bases over the quotient are computed by
lifting generators to the full polynomial ring over the base, adjoining the
relations, completing there under a block order with the main variables
above the relation variables, and projecting the result, dropping zeros.

Supported tower shapes: plain base rings, modular integers Z_m, field
polynomial quotients K[y..]/I, rings of algebraic numbers Z[y]/<p(y)> with
p primitive, Galois rings Z_{p^n}[y]/<f>, and general integer quotients.
"""

from math import gcd as _int_gcd

from qgb.domains import QQ, ZZ, GF
from qgb.engine import (buchberger_field, gb_with_syzygies, interreduce,
                        strong_gb_integer, NO_CAPS)
from qgb.poly import MonomialOrder, Polynomial, PolyRing, VariableSet
from qgb.reduction import canonical_nf_with_cofactors, divide

PLAIN = "plain"
MODULAR = "modular"
FIELD_QUOTIENT = "field_quotient"
ALGEBRAIC = "algebraic"
GALOIS = "galois"
INTEGER_QUOTIENT = "integer_quotient"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RingTower:
    """A coefficient quotient ring together with main polynomial variables.

    Construct bare (no relations), then call finalize(relations) to obtain
    the working tower; the convenience classmethods below cover the common
    shapes in one call.
    """

    def __init__(self, base, mains, relation_vars=(), order_kind="grevlex",
                 relation_kind="grevlex"):
        self.base = base
        self.varset = VariableSet(tuple(mains), tuple(relation_vars))
        self.order_kind = order_kind
        order = MonomialOrder.for_varset(self.varset, main_kind=order_kind,
                                         relation_kind=relation_kind)
        self.t_ring = PolyRing(base, self.varset, order)
        self.relations = []
        self.relation_basis = []
        self.flavor = PLAIN
        self.modulus = None
        self.galois_params = None
        self.completion_notice = False

    # -- construction -----------------------------------------------------

    def finalize(self, relations, galois_params=None):
        """Install defining relations (polynomials in the relation variables,
        or integers over the integer base); completes them to a basis of the
        relation ideal when necessary."""
        rels = []
        for r in relations:
            if isinstance(r, int):
                r = self.t_ring.const(r)
            if r.is_zero():
                continue
            if any(e[i] for _, e, _ in r.terms for i in self.varset.main_indices()):
                raise ValueError("relations may involve only relation variables")
            rels.append(r)
        self.relations = rels
        if rels:
            if self.base.is_field:
                basis = buchberger_field(rels)
            else:
                basis = strong_gb_integer(rels)
            self.relation_basis = basis
            self.completion_notice = sorted(map(str, basis)) != sorted(map(str, rels))
            if any(len(g.terms) == 1 and not any(g.lm()) and
                   (g.lc() == self.base.one) for g in basis):
                raise ValueError("relations generate the unit ideal; quotient ring is trivial")
        self._classify(galois_params)
        return self

    def _classify(self, galois_params):
        if not self.relations:
            self.flavor = PLAIN
            return
        constant = [r for r in self.relation_basis if not any(r.lm())]
        if self.base.is_field:
            self.flavor = FIELD_QUOTIENT
            return
        if galois_params is not None:
            self.flavor = GALOIS
            self.galois_params = galois_params
            self.modulus = galois_params[0] ** galois_params[1]
            return
        if not self.varset.relations:
            self.flavor = MODULAR
            self.modulus = abs(constant[0].lc())
            return
        if not constant and len(self.relation_basis) == 1:
            self.flavor = ALGEBRAIC
            return
        self.flavor = INTEGER_QUOTIENT
        if constant:
            self.modulus = abs(constant[0].lc())

    @classmethod
    def integers(cls, mains, order_kind="grevlex"):
        return cls(ZZ, mains, order_kind=order_kind).finalize([])

    @classmethod
    def rationals(cls, mains, order_kind="grevlex"):
        return cls(QQ, mains, order_kind=order_kind).finalize([])

    @classmethod
    def prime_field(cls, p, mains, order_kind="grevlex"):
        return cls(GF(p), mains, order_kind=order_kind).finalize([])

    @classmethod
    def modular(cls, m, mains, order_kind="grevlex"):
        if m < 2:
            raise ValueError("modulus must be at least 2")
        return cls(ZZ, mains, order_kind=order_kind).finalize([m])

    @classmethod
    def galois(cls, p, n, f_coeffs, mains, order_kind="grevlex", relation_var="y"):
        """Galois ring Z_{p^n}[y]/<f>: f given by ascending coefficients, monic,
        irreducible modulo p."""
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("exponent must be positive")
        q = p ** n
        coeffs = [c % q for c in f_coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("Galois relation must be monic of positive degree")
        if not _irreducible_mod_p([c % p for c in coeffs], p):
            raise ValueError("Galois relation is reducible modulo p")
        tower = cls(ZZ, mains, (relation_var,), order_kind=order_kind)
        y = tower.t_ring.var(relation_var)
        f = tower.t_ring.zero
        for d, c in enumerate(coeffs):
            f = f + tower.t_ring.var(relation_var, d).scale(c) if d else f + tower.t_ring.const(c)
        return tower.finalize([f, q], galois_params=(p, n))

    # -- the projection and its section -----------------------------------

    def project(self, f):
        """Canonical representative of the residue class of a lifted polynomial."""
        if not isinstance(f, Polynomial):
            return f if isinstance(f, QuotientPoly) else QuotientPoly(self, self.t_ring.const(f))
        if not self.relation_basis:
            return QuotientPoly(self, f)
        if self.base.is_field:
            rep = divide(f, self.relation_basis).remainder
        else:
            rep = canonical_nf_with_cofactors(f, self.relation_basis)[1]
        return QuotientPoly(self, rep)

    def lift(self, fbar):
        """The canonical representative as a polynomial over the base."""
        if isinstance(fbar, QuotientPoly):
            return fbar.rep
        if isinstance(fbar, Polynomial):
            return self.project(fbar).rep
        return self.project(self.t_ring.const(fbar)).rep

    def element(self, f):
        return self.project(f) if isinstance(f, Polynomial) else self.project(f)

    def zero(self):
        return QuotientPoly(self, self.t_ring.zero)

    def coefficient_in_relation_ideal(self, h):
        """Membership of a relation-subring polynomial in the relation ideal."""
        if not self.relation_basis:
            return h.is_zero()
        return divide(h, self.relation_basis).remainder.is_zero()

    # -- basis computation -------------------------------------------------

    def groebner_basis(self, gens, *, caps=NO_CAPS, track=False):
        """Basis of the ideal the generators span over the quotient, via the
        lifted completion; see PullbackGB."""
        lifts = [self.lift(g) for g in gens]
        lifts = [f for f in lifts if not f.is_zero()]
        t_input = lifts + list(self.relation_basis)
        tracked = None
        if track:
            tracked = gb_with_syzygies(t_input, caps=caps)
            basis = tracked.basis
        elif not t_input:
            basis = []
        elif self.base.is_field:
            basis = buchberger_field(t_input, caps=caps)
        else:
            basis = strong_gb_integer(t_input, caps=caps)
        projected, proj_index = self._project_basis(basis)
        return PullbackGB(self, basis, projected, proj_index,
                          strong=self._projected_strong(), tracked=tracked,
                          n_lifted_inputs=len(lifts))

    def _project_basis(self, basis):
        projected = []
        proj_index = []
        for g in basis:
            gbar = self.project(g)
            if gbar.is_zero():
                if not divide(g, self.relation_basis).remainder.is_zero():
                    raise AssertionError(
                        "basis element projects to zero but is not in the relation ideal")
                proj_index.append(None)
                continue
            self._check_lm_preserved(g, gbar)
            proj_index.append(len(projected))
            projected.append(gbar)
        return projected, proj_index

    def _check_lm_preserved(self, g, gbar):
        """The structural fact behind the pull-back: leading monomials survive
        projection (full monomial without relation variables, main-variable
        part with them)."""
        if not self.varset.relations:
            if gbar.rep.lm() != g.lm():
                raise AssertionError("projection changed a leading monomial")
            return
        _, lmx_g = g.leading_data_x()
        _, lmx_p = gbar.rep.leading_data_x()
        if lmx_g != lmx_p:
            raise AssertionError("projection changed a leading main-variable monomial")

    def _projected_strong(self):
        if self.flavor == PLAIN or self.flavor == MODULAR:
            return True
        if self.flavor == FIELD_QUOTIENT:
            return len(self.varset.relations) == 1
        return False

    def __repr__(self):
        return (f"RingTower({self.base.__class__.__name__}, flavor={self.flavor}, "
                f"mains={self.varset.mains}, relations={[str(r) for r in self.relations]})")


class QuotientPoly:
    """A residue class, held as its canonical lifted representative."""

    __slots__ = ("tower", "rep")

    def __init__(self, tower, rep):
        self.tower = tower
        self.rep = rep

    def is_zero(self):
        return self.rep.is_zero()

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        if isinstance(other, QuotientPoly):
            return self.tower is other.tower and self.rep == other.rep
        if other == 0:
            return self.rep.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __add__(self, other):
        return self.tower.project(self.rep + _rep(other, self.tower))

    def __sub__(self, other):
        return self.tower.project(self.rep - _rep(other, self.tower))

    def __neg__(self):
        return self.tower.project(-self.rep)

    def __mul__(self, other):
        return self.tower.project(self.rep * _rep(other, self.tower))

    def __rmul__(self, other):
        return self.tower.project(_rep(other, self.tower) * self.rep)

    def __pow__(self, k):
        return self.tower.project(self.rep ** k)

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"<{self.rep} over {self.tower.flavor}>"


def _rep(x, tower):
    if isinstance(x, QuotientPoly):
        return x.rep
    if isinstance(x, Polynomial):
        return x
    return tower.t_ring.const(x)


class PullbackGB:
    """A quotient-ring basis with its lifted provenance.

    t_basis is the completed basis upstairs (relations included while they
    survive interreduction); projected is its image with zeros dropped,
    which is a basis of the quotient ideal; strong records whether the
    projected basis is certified strong (single-divisor reduction complete).
    """

    def __init__(self, tower, t_basis, projected, proj_index, strong,
                 tracked=None, n_lifted_inputs=None):
        self.tower = tower
        self.t_basis = t_basis
        self.projected = projected
        self.proj_index = proj_index
        self.strong = strong
        self.tracked = tracked
        self.n_lifted_inputs = n_lifted_inputs

    def member(self, fbar):
        return not divide(self.tower.lift(fbar), self.t_basis).remainder.terms \
            if self.t_basis else self.tower.lift(fbar).is_zero()

    def member_representation(self, fbar):
        """None, or projected cofactors aligned with .projected giving fbar as
        a combination with the leading-monomial bound."""
        f = self.tower.lift(fbar)
        if not self.t_basis:
            return [] if f.is_zero() else None
        cof, r = divide(f, self.t_basis)
        if r.terms:
            return None
        out = [self.tower.zero() for _ in self.projected]
        for h, idx in zip(cof, self.proj_index):
            if idx is not None:
                out[idx] = self.tower.project(h)
        return out

    def normal_form(self, fbar):
        """Canonical representative of the residue class of fbar modulo the ideal."""
        f = self.tower.lift(fbar)
        if not self.t_basis:
            return self.tower.project(f)
        if self.tower.base.is_field:
            rep = divide(f, self.t_basis).remainder
        else:
            rep = canonical_nf_with_cofactors(f, self.t_basis)[1]
        return QuotientPoly(self.tower, rep)

    def enumerate_residues(self, limit=1_000_000):
        """All canonical residues of the quotient by the ideal, when finite."""
        tower = self.tower
        if tower.base.is_field or tower.modulus is None:
            raise ValueError("residue enumeration needs a modular integer tower")
        basis = self.t_basis
        nv = tower.varset.nvars
        const_d = 0
        for g in basis:
            if not any(g.lm()):
                const_d = _int_gcd(const_d, abs(g.lc()))
        bounds = []
        for i in range(nv):
            powers = {}
            for g in basis:
                lm = g.lm()
                if lm[i] and all(e == 0 or k == i for k, e in enumerate(lm)):
                    d = lm[i]
                    powers[d] = _int_gcd(powers.get(d, 0), abs(g.lc()))
            d = const_d
            bound = None
            if d == 1:
                bound = 0
            else:
                for k in sorted(powers):
                    d = _int_gcd(d, powers[k])
                    if d == 1:
                        bound = k
                        break
            if bound is None:
                raise ValueError("quotient is not finite: variable "
                                 f"{tower.varset.names[i]} is unbounded")
            bounds.append(bound)
        monomials = [()]
        for b in bounds:
            monomials = [m + (e,) for m in monomials for e in range(b)]
        ranges = []
        total = 1
        for mono in monomials:
            d = const_d
            for g in basis:
                lm = g.lm()
                if all(le <= me for le, me in zip(lm, mono)) and any(lm):
                    d = _int_gcd(d, abs(g.lc()))
            ranges.append((mono, d))
            total *= d
            if total > limit:
                raise ValueError(f"residue count exceeds limit {limit}")
        ranges.sort(key=lambda t: tower.t_ring.order.key(t[0]))
        out = []
        stack = [(0, {})]
        while stack:
            pos, acc = stack.pop()
            if pos == len(ranges):
                out.append(QuotientPoly(tower, tower.t_ring.from_dict(dict(acc))))
                continue
            mono, d = ranges[pos]
            for c in reversed(range(d)):
                nxt = dict(acc)
                if c:
                    nxt[mono] = c
                stack.append((pos + 1, nxt))
        out.sort(key=lambda q: [(k, c) for k, _, c in reversed(q.rep.terms)])
        return out

    def __repr__(self):
        return (f"PullbackGB({len(self.projected)} elements, strong={self.strong}, "
                f"tower={self.tower.flavor})")


def real_representation(g, tower):
    """The part of a lifted basis element surviving projection: main-variable
    groups whose relation-subring coefficient lies in the relation ideal are
    removed, the rest kept verbatim."""
    keep = {}
    for xe, h in g.coefficients_x():
        if not tower.coefficient_in_relation_ideal(h):
            for _, ye, c in h.terms:
                exps = tuple(a + b for a, b in zip(xe, ye))
                keep[exps] = c
    return g.ring.from_dict(keep)


def minimal_poly_to_primitive(q):
    """Scale a rational polynomial to a primitive integer polynomial with a
    positive leading coefficient defining the same algebraic element."""
    if q.is_zero():
        raise ZeroDivisionError("zero polynomial")
    den = 1
    for _, _, c in q.terms:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    content = 0
    ints = {}
    for _, e, c in q.terms:
        v = int(c * den)
        ints[e] = v
        content = _int_gcd(content, abs(v))
    ring = PolyRing(ZZ, q.ring.varset, q.ring.order)
    p = ring.from_dict({e: v // content for e, v in ints.items()})
    if p.lc() < 0:
        p = p.scale(-1)
    return p


def algebraic_tower(min_poly_q, mains, order_kind="grevlex", relation_var=None):
    """Tower Z[theta] from the rational minimal polynomial of theta."""
    p = minimal_poly_to_primitive(min_poly_q)
    name = relation_var or q_relation_name(min_poly_q)
    tower = RingTower(ZZ, mains, (name,), order_kind=order_kind)
    rel = tower.t_ring.from_dict(
        {_embed(e, min_poly_q.ring.varset, tower.varset): c for _, e, c in p.terms})
    return tower.finalize([rel])


def q_relation_name(q):
    for i, n in enumerate(q.ring.varset.names):
        if any(e[i] for _, e, _ in q.terms):
            return n
    return q.ring.varset.names[0]


def _embed(exps, src, dst):
    out = [0] * dst.nvars
    for i, e in enumerate(exps):
        if e:
            out[dst.index[src.names[i]]] = e
    return tuple(out)


def gb_quotient(gens, tower, *, caps=NO_CAPS, track=False):
    """Basis of the quotient ideal spanned by gens; spec-level entry point."""
    return tower.groebner_basis(gens, caps=caps, track=track)


def gb_galois(p, n, f_coeffs, gens_builder, mains, order_kind="grevlex",
              relation_var="y", caps=NO_CAPS):
    """Basis over the Galois ring GR(p^n, deg f): builds the tower, then runs
    the generators produced by gens_builder(tower) through the pipeline."""
    tower = RingTower.galois(p, n, f_coeffs, mains, order_kind=order_kind,
                             relation_var=relation_var)
    return tower.groebner_basis(gens_builder(tower), caps=caps)


def _poly_divmod_mod_p(num, den, p):
    """Dense division of coefficient lists modulo p; returns remainder."""
    num = num[:]
    dd = len(den) - 1
    inv = pow(den[-1], -1, p)
    for i in range(len(num) - 1 - dd, -1, -1):
        c = num[i + dd] % p
        if c:
            q = c * inv % p
            for k, dc in enumerate(den):
                num[i + k] = (num[i + k] - q * dc) % p
    while num and num[-1] % p == 0:
        num.pop()
    return num


def _irreducible_mod_p(coeffs, p):
    """Trial factorization over GF(p): no monic divisor of degree up to deg/2."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if coeffs[0] % p == 0:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for tail in _tuples(p, d):
            den = list(tail) + [1]
            if not _poly_divmod_mod_p(coeffs, den, p):
                return False
    return True


def _tuples(p, d):
    if d == 0:
        yield ()
        return
    for rest in _tuples(p, d - 1):
        for c in range(p):
            yield rest + (c,)
