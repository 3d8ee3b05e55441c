"""Batch front end: evaluate a parsed script and print canonical results.

Exit codes: 0 success, 1 syntax error, 2 semantic error, 3 resource budget
exceeded.  Output is deterministic: basis elements one per line sorted
ascending by leading monomial (textual tiebreak), then a summary line.
"""

import argparse
import sys

from qgb.domains import QQ, ZZ, GF
from qgb.engine import Caps, ResourceLimitExceeded
from qgb.ideal_ops import (AlgebraMap, eliminate, ideal_quotient, intersect,
                           kernel, syzygies)
from qgb.script import (ScriptError, ScriptSemanticError, ScriptSyntaxError,
                        parse)
from qgb.tower import RingTower

_ORDER_OF_EXPR = ("num", "var", "neg", "add", "sub", "mul", "div", "pow")


def _expr_vars(e, acc):
    kind = e[0]
    if kind == "var":
        acc.append(e[1])
    elif kind in ("neg",):
        _expr_vars(e[1], acc)
    elif kind in ("add", "sub", "mul", "div"):
        _expr_vars(e[1], acc)
        _expr_vars(e[2], acc)
    elif kind == "pow":
        _expr_vars(e[1], acc)
    return acc


def eval_expr(e, ring, pos):
    """Exact evaluation of an expression AST in a polynomial ring."""
    kind = e[0]
    if kind == "num":
        return ring.const(e[1])
    if kind == "var":
        if e[1] not in ring.varset.index:
            raise ScriptSemanticError(f"unknown variable {e[1]!r}", *pos)
        return ring.var(e[1])
    if kind == "neg":
        return -eval_expr(e[1], ring, pos)
    if kind == "add":
        return eval_expr(e[1], ring, pos) + eval_expr(e[2], ring, pos)
    if kind == "sub":
        return eval_expr(e[1], ring, pos) - eval_expr(e[2], ring, pos)
    if kind == "mul":
        return eval_expr(e[1], ring, pos) * eval_expr(e[2], ring, pos)
    if kind == "pow":
        return eval_expr(e[1], ring, pos) ** e[2]
    if kind == "div":
        num = eval_expr(e[1], ring, pos)
        den = eval_expr(e[2], ring, pos)
        if den.is_zero() or any(den.lm()):
            raise ScriptSemanticError("division only by a nonzero constant", *pos)
        c = den.lc()
        dom = ring.domain
        if dom.is_field:
            return num.scale(dom.exact_div(dom.one, c))
        out = {}
        for _, exps, a in num.terms:
            q, r = divmod(a, c)
            if r:
                raise ScriptSemanticError("inexact constant division over ZZ", *pos)
            out[exps] = q
        return ring.from_dict(out)
    raise ScriptSemanticError(f"unsupported expression {kind}", *pos)


class Session:
    """Declarations of one script, materialized."""

    def __init__(self, caps=Caps(), show_lift=False):
        self.caps = caps
        self.show_lift = show_lift
        self.ring_spec = None
        self.ring_pos = None
        self.tower = None
        self.order_kind = "grevlex"
        self.ideals = {}
        self.maps = {}
        self.gb_cache = {}
        self.notes = []

    # declarations -------------------------------------------------------

    def declare_ring(self, name, spec, pos):
        if self.ring_spec is not None:
            raise ScriptSemanticError("a script declares exactly one ring", *pos)
        self.ring_spec = spec
        self.ring_pos = pos

    def declare_vars(self, names, order_kind, pos):
        if self.ring_spec is None:
            raise ScriptSemanticError("vars before ring declaration", *pos)
        if self.tower is not None:
            raise ScriptSemanticError("variables already declared", *pos)
        self.order_kind = order_kind
        self.tower = self._materialize(self.ring_spec, names, order_kind, pos)
        if self.tower.completion_notice:
            self.notes.append("note: relation set was completed to a basis of its ideal")

    def _materialize(self, spec, mains, order_kind, pos):
        tag = spec[0]
        try:
            if tag == "QQ":
                return RingTower.rationals(mains, order_kind)
            if tag == "ZZ":
                return RingTower.integers(mains, order_kind)
            if tag == "ZZmod":
                return RingTower.modular(spec[1], mains, order_kind)
            if tag == "GF":
                return RingTower.prime_field(spec[1], mains, order_kind)
            if tag == "GR":
                return self._materialize_galois(spec, mains, order_kind, pos)
            if tag == "quot":
                return self._materialize_quot(spec, mains, order_kind, pos)
        except ScriptError:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise ScriptSemanticError(str(exc), *pos)
        raise ScriptSemanticError(f"unknown ring form {tag}", *pos)

    def _materialize_galois(self, spec, mains, order_kind, pos):
        _, q, m, rel = spec
        if isinstance(q, tuple):
            p, n = q
            q = p ** n
        else:
            p = _smallest_prime_factor(q)
            n = 0
            qq = q
            while qq % p == 0:
                qq //= p
                n += 1
            if qq != 1:
                raise ScriptSemanticError(f"{q} is not a prime power", *pos)
        names = sorted(set(_expr_vars(rel, [])))
        if len(names) != 1:
            raise ScriptSemanticError("Galois relation must use exactly one variable", *pos)
        yname = names[0]
        if yname in mains:
            raise ScriptSemanticError(f"relation variable {yname} collides with vars", *pos)
        from qgb.poly import MonomialOrder, PolyRing, VariableSet
        tmp = PolyRing(ZZ, VariableSet((yname,)), MonomialOrder.simple("lex", 1))
        f = eval_expr(rel, tmp, pos)
        deg = f.total_degree()
        if deg != m:
            raise ScriptSemanticError(
                f"Galois relation has degree {deg}, declared {m}", *pos)
        coeffs = [0] * (deg + 1)
        for _, e, c in f.terms:
            coeffs[e[0]] = c
        return RingTower.galois(p, n, coeffs, mains, order_kind, relation_var=yname)

    def _materialize_quot(self, spec, mains, order_kind, pos):
        _, base_spec, rel_asts = spec
        base = {"QQ": QQ, "ZZ": ZZ}.get(base_spec[0])
        if base is None:
            base = GF(base_spec[1])
        seen = []
        for ast in rel_asts:
            for v in _expr_vars(ast, []):
                if v not in seen:
                    seen.append(v)
        for v in seen:
            if v in mains:
                raise ScriptSemanticError(f"relation variable {v} collides with vars", *pos)
        tower = RingTower(base, mains, tuple(seen), order_kind=order_kind)
        rels = [eval_expr(ast, tower.t_ring, pos) for ast in rel_asts]
        return tower.finalize(rels)

    def declare_ideal(self, name, asts, pos):
        tower = self._need_tower(pos)
        gens = []
        for ast in asts:
            gens.append(tower.project(eval_expr(ast, tower.t_ring, pos)))
        self.ideals[name] = [g for g in gens if not g.is_zero()]

    def declare_map(self, name, sources, image_asts, pos):
        tower = self._need_tower(pos)
        images = tuple(tower.project(eval_expr(a, tower.t_ring, pos))
                       for a in image_asts)
        try:
            self.maps[name] = AlgebraMap(tuple(sources), tower, images)
            if len(sources) != len(images):
                raise ValueError("one image per source variable required")
        except ValueError as exc:
            raise ScriptSemanticError(str(exc), *pos)

    def _need_tower(self, pos):
        if self.tower is None:
            raise ScriptSemanticError("ring and vars must be declared first", *pos)
        return self.tower

    def _need_ideal(self, name, pos):
        if name not in self.ideals:
            raise ScriptSemanticError(f"unknown ideal {name!r}", *pos)
        return self.ideals[name]

    def gb_of(self, name, pos):
        if name not in self.gb_cache:
            gens = self._need_ideal(name, pos)
            self.gb_cache[name] = self.tower.groebner_basis(gens, caps=self.caps)
        return self.gb_cache[name]

    # commands -----------------------------------------------------------

    def run_command(self, stmt, out):
        kind = stmt[0]
        pos = stmt[-1]
        if kind == "gb":
            self._print_basis(self.gb_of(stmt[1], pos), out)
        elif kind == "member":
            tower = self._need_tower(pos)
            gb = self.gb_of(stmt[2], pos)
            f = tower.project(eval_expr(stmt[1], tower.t_ring, pos))
            out.append("true" if gb.member(f) else "false")
        elif kind == "nf":
            tower = self._need_tower(pos)
            gb = self.gb_of(stmt[2], pos)
            f = tower.project(eval_expr(stmt[1], tower.t_ring, pos))
            out.append(str(gb.normal_form(f)))
        elif kind == "eliminate":
            tower = self._need_tower(pos)
            gens = self._need_ideal(stmt[2], pos)
            for v in stmt[1]:
                if v not in tower.varset.mains:
                    raise ScriptSemanticError(f"unknown variable {v!r}", *pos)
            self._print_basis(eliminate(gens, tower, stmt[1], caps=self.caps), out)
        elif kind == "intersect":
            tower = self._need_tower(pos)
            self._print_basis(
                intersect(self._need_ideal(stmt[1], pos),
                          self._need_ideal(stmt[2], pos), tower, caps=self.caps), out)
        elif kind == "quot":
            tower = self._need_tower(pos)
            gens2 = self._need_ideal(stmt[2], pos)
            if not gens2:
                raise ScriptSemanticError("ideal quotient by the zero ideal", *pos)
            self._print_basis(
                ideal_quotient(self._need_ideal(stmt[1], pos), gens2, tower,
                               caps=self.caps), out)
        elif kind == "kernel":
            if stmt[1] not in self.maps:
                raise ScriptSemanticError(f"unknown map {stmt[1]!r}", pos[0], pos[1])
            self._print_basis(kernel(self.maps[stmt[1]], caps=self.caps), out)
        elif kind == "syz":
            tower = self._need_tower(pos)
            gens = self._need_ideal(stmt[1], pos)
            basis = syzygies(gens, tower, caps=self.caps)
            for vec in basis.generators:
                out.append("(" + ", ".join(str(q) for q in vec) + ")")
            out.append(f"# generators: {len(basis.generators)}")
        elif kind == "residues":
            gb = self.gb_of(stmt[1], pos)
            try:
                res = gb.enumerate_residues()
            except ValueError as exc:
                raise ScriptSemanticError(str(exc), *pos)
            for r in res:
                out.append(str(r))
            out.append(f"# residues: {len(res)}")
        else:
            raise ScriptSemanticError(f"unknown command {kind}", *pos)

    def _print_basis(self, gb, out):
        lines = sorted((q.rep.terms[0][0], str(q)) for q in gb.projected)
        for _, s in lines:
            out.append(s)
        strong = "yes" if gb.strong else "no"
        out.append(f"# elements: {len(gb.projected)}, strong: {strong}, "
                   f"order: {self.order_kind}")
        if self.show_lift:
            for g in gb.t_basis:
                out.append(f"# lift: {g}")


def _smallest_prime_factor(q):
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


def run_text(text, *, caps=Caps(), show_lift=False):
    """Run a script; returns (stdout text, stderr text, exit code)."""
    try:
        script = parse(text)
    except ScriptSyntaxError as exc:
        return "", f"syntax error: {exc}\n", 1
    session = Session(caps=caps, show_lift=show_lift)
    out = []
    try:
        for stmt in script.statements:
            kind = stmt[0]
            if kind == "ring":
                session.declare_ring(stmt[1], stmt[2], stmt[3])
            elif kind == "vars":
                session.declare_vars(stmt[1], stmt[2], stmt[3])
            elif kind == "ideal":
                session.declare_ideal(stmt[1], stmt[2], stmt[3])
            elif kind == "map":
                session.declare_map(stmt[1], stmt[2], stmt[3], stmt[4])
            else:
                session.run_command(stmt, out)
    except ScriptSemanticError as exc:
        partial = "".join(line + "\n" for line in out)
        return partial, f"error: {exc}\n", 2
    except ResourceLimitExceeded as exc:
        partial = "".join(line + "\n" for line in out)
        return partial, f"resource limit: {exc}\n", 3
    text_out = "".join(line + "\n" for line in out)
    notes = "".join(n + "\n" for n in session.notes)
    return text_out, notes, 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="qgb",
        description="Groebner bases over quotient coefficient rings, batch mode")
    ap.add_argument("script", help="script file (see the package README for the grammar)")
    ap.add_argument("--max-basis", type=int, default=None,
                    help="abort when the working basis exceeds this size")
    ap.add_argument("--max-pairs", type=int, default=None,
                    help="abort after treating this many critical pairs")
    ap.add_argument("--show-lift", action="store_true",
                    help="also print the lifted basis as comment lines")
    args = ap.parse_args(argv)
    try:
        with open(args.script, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    caps = Caps(args.max_basis, args.max_pairs)
    out, err, code = run_text(text, caps=caps, show_lift=args.show_lift)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
