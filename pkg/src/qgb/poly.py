"""Sparse multivariate polynomials over a base domain.

Variables are partitioned into named blocks (an optional tag block used by
intersection, the main x-block, and an optional relation y-block).  A
monomial order assigns every exponent vector an additive integer key so
that comparing monomials is tuple comparison and multiplying monomials is
componentwise key addition; lex, graded lex, graded reverse lex and block
(elimination) orders all fit this scheme.

A polynomial stores its terms as a list of (key, exps, coeff) sorted
strictly descending by key, so the leading term is terms[0] and iteration
order is reduction order.
"""

from qgb import _kernels as K

ORDER_KINDS = ("lex", "grlex", "grevlex")


class VariableSet:
    """Ordered variable names split into tag / main (x) / relation (y) blocks.

    Storage order is [tag?] + mains + relations; exponent vectors align with it.
    """

    __slots__ = ("names", "mains", "relations", "tag", "index")

    def __init__(self, mains, relations=(), tag=None):
        mains = tuple(mains)
        relations = tuple(relations)
        names = ((tag,) if tag else ()) + mains + relations
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.mains = mains
        self.relations = relations
        self.tag = tag
        self.index = {n: i for i, n in enumerate(names)}

    @property
    def nvars(self):
        return len(self.names)

    def main_indices(self):
        return tuple(self.index[n] for n in self.mains)

    def relation_indices(self):
        return tuple(self.index[n] for n in self.relations)

    def __eq__(self, other):
        return (isinstance(other, VariableSet) and self.names == other.names
                and self.mains == other.mains and self.tag == other.tag)

    def __hash__(self):
        return hash((self.names, self.mains, self.tag))

    def __repr__(self):
        return f"VariableSet(mains={self.mains}, relations={self.relations}, tag={self.tag})"


def _block_key_parts(kind, idx, exps):
    if kind == "lex":
        return [exps[i] for i in idx]
    if kind == "grlex":
        part = [exps[i] for i in idx]
        return [sum(part)] + part
    if kind == "grevlex":
        part = [exps[i] for i in idx]
        return [sum(part)] + [-exps[i] for i in reversed(idx)]
    raise ValueError(f"unknown order kind {kind!r}")


class MonomialOrder:
    """A total, multiplicative well-order on monomials, as a key function.

    blocks is an ordered list of (index-tuple, kind); earlier blocks dominate.
    """

    __slots__ = ("blocks", "name")

    def __init__(self, blocks, name):
        self.blocks = tuple((tuple(idx), kind) for idx, kind in blocks)
        self.name = name

    @classmethod
    def simple(cls, kind, nvars):
        if kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        return cls([(range(nvars), kind)], kind)

    @classmethod
    def for_varset(cls, varset, main_kind="grevlex", relation_kind="grevlex",
                   first=None):
        """Standard block order: tag > (first mains) > (other mains) > relations.

        first optionally names main variables promoted to their own leading
        block (elimination); inner kinds apply blockwise.
        """
        blocks = []
        parts = [main_kind]
        if varset.tag:
            blocks.append(((varset.index[varset.tag],), "lex"))
            parts.insert(0, "tag")
        mains = list(varset.mains)
        if first:
            first = list(first)
            rest = [n for n in mains if n not in first]
            blocks.append((tuple(varset.index[n] for n in first), main_kind))
            blocks.append((tuple(varset.index[n] for n in rest), main_kind))
        else:
            blocks.append((tuple(varset.index[n] for n in mains), main_kind))
        if varset.relations:
            blocks.append((varset.relation_indices(), relation_kind))
            parts.append(relation_kind)
        blocks = [(idx, kind) for idx, kind in blocks if idx]
        if len(blocks) == 1:
            return cls(blocks, main_kind)
        return cls(blocks, "block(" + main_kind + ")")

    def key(self, exps):
        out = []
        for idx, kind in self.blocks:
            out.extend(_block_key_parts(kind, idx, exps))
        return tuple(out)

    def compare(self, a, b):
        """-1, 0 or 1 as monomial a is below, equal to, or above b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"MonomialOrder({self.name})"


def compare(order, a, b):
    if len(a) != len(b):
        raise ValueError("exponent vectors over different variable sets")
    return order.compare(a, b)


class PolyRing:
    """A polynomial ring: base domain + variable set + monomial order."""

    __slots__ = ("domain", "varset", "order", "_zero_exps")

    def __init__(self, domain, varset, order):
        self.domain = domain
        self.varset = varset
        self.order = order
        self._zero_exps = (0,) * varset.nvars

    def from_dict(self, coeffs):
        """Polynomial from {exps: coeff}; zeros dropped, terms sorted."""
        dom = self.domain
        terms = []
        for exps, c in coeffs.items():
            c = dom.normalize(c)
            if c != dom.zero:
                exps = tuple(exps)
                terms.append((self.order.key(exps), exps, c))
        terms.sort(key=lambda t: t[0], reverse=True)
        return Polynomial(self, terms)

    def from_terms(self, pairs):
        acc = {}
        dom = self.domain
        for exps, c in pairs:
            exps = tuple(exps)
            acc[exps] = dom.add(acc.get(exps, dom.zero), dom.normalize(c))
        return self.from_dict(acc)

    @property
    def zero(self):
        return Polynomial(self, [])

    @property
    def one(self):
        return self.const(self.domain.one)

    def const(self, c):
        return self.from_dict({self._zero_exps: c})

    def var(self, name, power=1):
        exps = [0] * self.varset.nvars
        exps[self.varset.index[name]] = power
        return self.from_dict({tuple(exps): self.domain.one})

    def gens(self):
        return {n: self.var(n) for n in self.varset.names}

    def monomial(self, exps, coeff=None):
        return self.from_dict({tuple(exps): self.domain.one if coeff is None else coeff})

    def with_order(self, order):
        return PolyRing(self.domain, self.varset, order)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.domain is other.domain
                and self.varset == other.varset and self.order == other.order)

    def __hash__(self):
        return hash((id(self.domain), self.varset, self.order))

    def __repr__(self):
        return f"PolyRing({self.domain.__class__.__name__}, {list(self.varset.names)}, {self.order.name})"


def transport(f, ring, strict=True):
    """Rebuild f over another ring, matching variables by name.

    Variables absent from the target must not occur in f when strict.
    """
    src = f.ring.varset
    dst = ring.varset
    pos = [dst.index.get(n) for n in src.names]
    out = {}
    for _, exps, c in f.terms:
        new = [0] * dst.nvars
        for i, e in enumerate(exps):
            if not e:
                continue
            j = pos[i]
            if j is None:
                if strict:
                    raise ValueError(f"variable {src.names[i]} does not exist in target ring")
                break
            new[j] = e
        else:
            out[tuple(new)] = ring.domain.add(out.get(tuple(new), ring.domain.zero),
                                              ring.domain.normalize(c))
    return ring.from_dict(out)


class Polynomial:
    """Immutable sparse polynomial; do not mutate .terms."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def _axpy(self, c, kshift, eshift, g):
        """self + c * x^shift * g as a new polynomial."""
        p = self.ring.domain.p
        if p is None:
            return Polynomial(self.ring, K.axpy(self.terms, c, kshift, eshift, g.terms))
        return Polynomial(self.ring, K.axpy_mod(self.terms, c, kshift, eshift, g.terms, p))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + self.ring.const(other)
        self._check(other)
        zk = self.ring.order.key(self.ring._zero_exps)
        return self._axpy(self.ring.domain.one, zk, self.ring._zero_exps, other)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        dom = self.ring.domain
        return Polynomial(self.ring, [(k, e, dom.neg(c)) for k, e, c in self.terms])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return self - self.ring.const(other)
        self._check(other)
        zk = self.ring.order.key(self.ring._zero_exps)
        return self._axpy(dom_neg_one(self.ring.domain), zk, self.ring._zero_exps, other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        p = self.ring.domain.p
        if p is None:
            return Polynomial(self.ring, K.mul(self.terms, other.terms))
        return Polynomial(self.ring, K.mul_mod(self.terms, other.terms, p))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c):
        dom = self.ring.domain
        c = dom.normalize(c)
        if c == dom.zero:
            return self.ring.zero
        terms = []
        for k, e, a in self.terms:
            v = dom.mul(c, a)
            if v != dom.zero:
                terms.append((k, e, v))
        return Polynomial(self.ring, terms)

    def mul_monomial(self, exps, coeff=None):
        """self * coeff * x^exps, keeping sortedness (keys shift uniformly)."""
        dom = self.ring.domain
        c = dom.one if coeff is None else dom.normalize(coeff)
        kshift = self.ring.order.key(tuple(exps))
        exps = tuple(exps)
        terms = []
        for k, e, a in self.terms:
            v = dom.mul(c, a)
            if v != dom.zero:
                terms.append((K.tuple_add(k, kshift), K.tuple_add(e, exps), v))
        return Polynomial(self.ring, terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return not self.terms
            return self == self.ring.const(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.varset, tuple((k, c) for k, _, c in self.terms)))

    # leading data -------------------------------------------------------

    def lt(self):
        """(coeff, exps) of the leading term."""
        if not self.terms:
            raise ZeroDivisionError("zero polynomial has no leading term")
        _, e, c = self.terms[0]
        return c, e

    def lm(self):
        if not self.terms:
            raise ZeroDivisionError("zero polynomial has no leading monomial")
        return self.terms[0][1]

    def lc(self):
        if not self.terms:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.terms[0][2]

    def lt_poly(self):
        if not self.terms:
            raise ZeroDivisionError("zero polynomial has no leading term")
        return Polynomial(self.ring, [self.terms[0]])

    def total_degree(self):
        return max((sum(e) for _, e, _ in self.terms), default=-1)

    def degree_in(self, indices):
        return max((sum(e[i] for i in indices) for _, e, _ in self.terms), default=-1)

    def tail(self):
        return Polynomial(self.ring, self.terms[1:])

    # the x-block view (polynomial over the relation subring) -----------

    def leading_data_x(self):
        """(lc_x, lm_x): leading x-monomial and its relation-variable coefficient.

        Viewing the polynomial in the main variables with coefficients in the
        relation subring, returns the coefficient polynomial (main exponents
        zeroed) and the main-block exponent vector of the top x-monomial.
        """
        if not self.terms:
            raise ZeroDivisionError("zero polynomial")
        mi = self.ring.varset.main_indices()
        rest = [i for i in range(self.ring.varset.nvars) if i not in mi]
        top = None
        for _, e, _ in self.terms:
            xpart = tuple(e[i] for i in mi)
            if top is None or self._xkey(xpart) > self._xkey(top):
                top = xpart
        coeff = {}
        for _, e, c in self.terms:
            if tuple(e[i] for i in mi) == top:
                y = [0] * self.ring.varset.nvars
                for i in rest:
                    y[i] = e[i]
                coeff[tuple(y)] = c
        lm_x = [0] * self.ring.varset.nvars
        for pos, i in enumerate(mi):
            lm_x[i] = top[pos]
        return self.ring.from_dict(coeff), tuple(lm_x)

    def _xkey(self, xpart):
        mi = self.ring.varset.main_indices()
        full = [0] * self.ring.varset.nvars
        for pos, i in enumerate(mi):
            full[i] = xpart[pos]
        return self.ring.order.key(tuple(full))

    def coefficients_x(self):
        """List of (x-exps, coefficient polynomial in the relation subring)."""
        mi = self.ring.varset.main_indices()
        groups = {}
        for _, e, c in self.terms:
            xpart = [0] * self.ring.varset.nvars
            for i in mi:
                xpart[i] = e[i]
            ypart = list(e)
            for i in mi:
                ypart[i] = 0
            groups.setdefault(tuple(xpart), {})[tuple(ypart)] = c
        out = []
        for xe, ymap in groups.items():
            out.append((xe, self.ring.from_dict(ymap)))
        out.sort(key=lambda t: self.ring.order.key(t[0]), reverse=True)
        return out

    # rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.varset.names
        parts = []
        for _, e, c in self.terms:
            mon = "*".join(
                f"{names[i]}^{e[i]}" if e[i] > 1 else names[i]
                for i in range(len(e)) if e[i]
            )
            cs = str(c)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            else:
                parts.append(cs + "*" + mon)
        return "+".join(parts).replace("+-", "-")

    def __repr__(self):
        return f"<{self}>"


def dom_neg_one(dom):
    return dom.neg(dom.one)


def leading_data(f, order=None):
    """(LT as a polynomial, LM exponent vector, LC) of f under its ring order."""
    if order is not None and order != f.ring.order:
        f = reorder(f, order)
    c, e = f.lt()
    return f.lt_poly(), e, c


def leading_data_x(f):
    """(LC_x polynomial, LM_x exponent vector) of f viewed over the relation subring."""
    return f.leading_data_x()


def reorder(f, order):
    return f.ring.with_order(order).from_dict({e: c for _, e, c in f.terms})
