"""Parsing of the batch script language.

One script declares exactly one coefficient ring, its main variables, any
number of ideals and maps, and a sequence of commands.  The grammar:

    ring  R = QQ | ZZ | ZZ mod <int> | GF(<int>) | GR(<int>[^<int>], <int>) rel <poly>
              | quot(QQ | ZZ | GF(<int>), [<poly>, ...])  ;
    vars  <name>, ... [order lex|grlex|grevlex] ;
    ideal J = [<poly>, ...] ;
    map   f = (<name>, ...) -> [<poly>, ...] ;

    gb J ;                         member (<poly>) in J ;
    nf (<poly>) wrt J ;            eliminate <name>, ... from J ;
    intersect J1, J2 ;             quot J1, J2 ;
    kernel f ;                     syz J ;        residues J ;

'#' starts a comment; '*' in products may be omitted (juxtaposition);
'^' is the power operator; '/' divides by a constant.
"""

KEYWORDS = {
    "ring", "vars", "ideal", "map", "order", "rel", "mod", "in", "wrt", "from",
    "gb", "nf", "member", "eliminate", "intersect", "quot", "kernel", "syz",
    "residues", "QQ", "ZZ", "GF", "GR", "lex", "grlex", "grevlex",
}

_PUNCT = ("->", "+", "-", "*", "/", "^", "(", ")", "[", "]", ",", ";", "=")


class ScriptError(Exception):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class ScriptSyntaxError(ScriptError):
    """Malformed input text (exit code 1)."""


class ScriptSemanticError(ScriptError):
    """Well-formed text with an invalid meaning (exit code 2)."""


class Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"Token({self.kind}, {self.value!r})"


def tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "kw" if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(Token(p, p, line, col))
                i += len(p)
                col += len(p)
                break
        else:
            raise ScriptSyntaxError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", None, line, col))
    return tokens


# expression ASTs are tuples: ("num", n) ("var", name) ("neg", a)
# ("add"|"sub"|"mul"|"div", a, b) ("pow", a, n)


class Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, expected):
        t = self.peek()
        found = t.value if t.kind != "eof" else "end of input"
        raise ScriptSyntaxError(
            f"expected {' or '.join(expected)}, found {found!r}", t.line, t.col)

    def expect(self, kind, value=None):
        t = self.peek()
        if t.kind != kind or (value is not None and t.value != value):
            self.fail([value if value is not None else kind])
        return self.next()

    def accept(self, kind, value=None):
        t = self.peek()
        if t.kind == kind and (value is None or t.value == value):
            return self.next()
        return None

    # expressions --------------------------------------------------------

    def parse_expr(self):
        node = self.parse_term()
        while True:
            if self.accept("+"):
                node = ("add", node, self.parse_term())
            elif self.accept("-"):
                node = ("sub", node, self.parse_term())
            else:
                return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            if self.accept("*"):
                node = ("mul", node, self.parse_factor())
            elif self.accept("/"):
                node = ("div", node, self.parse_factor())
            elif self.peek().kind in ("int", "ident", "("):
                node = ("mul", node, self.parse_factor())
            else:
                return node

    def parse_factor(self):
        if self.accept("-"):
            return ("neg", self.parse_factor())
        if self.accept("+"):
            return self.parse_factor()
        return self.parse_power()

    def parse_power(self):
        node = self.parse_atom()
        while self.accept("^"):
            t = self.expect("int")
            node = ("pow", node, t.value)
        return node

    def parse_atom(self):
        t = self.peek()
        if t.kind == "int":
            return ("num", self.next().value)
        if t.kind == "ident":
            return ("var", self.next().value)
        if t.kind == "(":
            self.next()
            node = self.parse_expr()
            self.expect(")")
            return node
        self.fail(["a number", "a variable", "'('"])

    def parse_poly_list(self):
        self.expect("[")
        polys = []
        if not self.accept("]"):
            polys.append(self.parse_expr())
            while self.accept(","):
                polys.append(self.parse_expr())
            self.expect("]")
        return polys

    def parse_name_list(self):
        names = [self.expect("ident").value]
        while self.accept(","):
            names.append(self.expect("ident").value)
        return names

    # statements ---------------------------------------------------------

    def parse_script(self):
        stmts = []
        while self.peek().kind != "eof":
            stmts.append(self.parse_statement())
        return SessionScript(stmts)

    def parse_statement(self):
        t = self.peek()
        if t.kind == "ident":
            self.fail(["a statement keyword"])
        if t.kind != "kw":
            self.fail(["a statement keyword"])
        word = t.value
        handler = getattr(self, f"_stmt_{word}", None)
        if handler is None:
            self.fail(["a statement keyword"])
        self.next()
        stmt = handler(t)
        self.expect(";")
        return stmt

    def _stmt_ring(self, t):
        name = self.expect("ident").value
        self.expect("=")
        spec = self.parse_ring_spec()
        return ("ring", name, spec, (t.line, t.col))

    def parse_ring_spec(self):
        t = self.peek()
        if t.kind == "kw" and t.value == "QQ":
            self.next()
            return ("QQ",)
        if t.kind == "kw" and t.value == "ZZ":
            self.next()
            if self.accept("kw", "mod"):
                m = self.expect("int").value
                return ("ZZmod", m)
            return ("ZZ",)
        if t.kind == "kw" and t.value == "GF":
            self.next()
            self.expect("(")
            p = self.expect("int").value
            self.expect(")")
            return ("GF", p)
        if t.kind == "kw" and t.value == "GR":
            self.next()
            self.expect("(")
            q = self.expect("int").value
            if self.accept("^"):
                q = (q, self.expect("int").value)
            self.expect(",")
            m = self.expect("int").value
            self.expect(")")
            self.expect("kw", "rel")
            rel = self.parse_expr()
            return ("GR", q, m, rel)
        if t.kind == "kw" and t.value == "quot":
            self.next()
            self.expect("(")
            base = self.parse_ring_spec()
            if base[0] not in ("QQ", "ZZ", "GF"):
                raise ScriptSyntaxError("quot() base must be QQ, ZZ or GF(p)",
                                        t.line, t.col)
            self.expect(",")
            polys = self.parse_poly_list()
            self.expect(")")
            return ("quot", base, polys)
        self.fail(["QQ", "ZZ", "GF", "GR", "quot"])

    def _stmt_vars(self, t):
        names = self.parse_name_list()
        kind = "grevlex"
        if self.accept("kw", "order"):
            tok = self.peek()
            if tok.kind == "kw" and tok.value in ("lex", "grlex", "grevlex"):
                kind = self.next().value
            else:
                self.fail(["lex", "grlex", "grevlex"])
        return ("vars", names, kind, (t.line, t.col))

    def _stmt_ideal(self, t):
        name = self.expect("ident").value
        self.expect("=")
        polys = self.parse_poly_list()
        return ("ideal", name, polys, (t.line, t.col))

    def _stmt_map(self, t):
        name = self.expect("ident").value
        self.expect("=")
        self.expect("(")
        sources = self.parse_name_list()
        self.expect(")")
        self.expect("->")
        images = self.parse_poly_list()
        return ("map", name, sources, images, (t.line, t.col))

    def _stmt_gb(self, t):
        return ("gb", self.expect("ident").value, (t.line, t.col))

    def _stmt_nf(self, t):
        self.expect("(")
        e = self.parse_expr()
        self.expect(")")
        self.expect("kw", "wrt")
        return ("nf", e, self.expect("ident").value, (t.line, t.col))

    def _stmt_member(self, t):
        self.expect("(")
        e = self.parse_expr()
        self.expect(")")
        self.expect("kw", "in")
        return ("member", e, self.expect("ident").value, (t.line, t.col))

    def _stmt_eliminate(self, t):
        names = self.parse_name_list()
        self.expect("kw", "from")
        return ("eliminate", names, self.expect("ident").value, (t.line, t.col))

    def _stmt_intersect(self, t):
        a = self.expect("ident").value
        self.expect(",")
        return ("intersect", a, self.expect("ident").value, (t.line, t.col))

    def _stmt_quot(self, t):
        a = self.expect("ident").value
        self.expect(",")
        return ("quot", a, self.expect("ident").value, (t.line, t.col))

    def _stmt_kernel(self, t):
        return ("kernel", self.expect("ident").value, (t.line, t.col))

    def _stmt_syz(self, t):
        return ("syz", self.expect("ident").value, (t.line, t.col))

    def _stmt_residues(self, t):
        return ("residues", self.expect("ident").value, (t.line, t.col))


class SessionScript:
    """Parsed statements of one script file."""

    def __init__(self, statements):
        self.statements = statements

    def render(self):
        """Canonical text whose parse equals this script."""
        out = []
        for s in self.statements:
            out.append(_render_stmt(s))
        return "\n".join(out) + "\n"

    def signature(self):
        """Statements with source positions stripped (for structural equality)."""
        return [s[:-1] for s in self.statements]

    def __eq__(self, other):
        return isinstance(other, SessionScript) and self.signature() == other.signature()


def parse(text):
    return Parser(text).parse_script()


def render_expr(e, prec=0):
    kind = e[0]
    if kind == "num":
        return str(e[1])
    if kind == "var":
        return e[1]
    if kind == "neg":
        s = "-" + render_expr(e[1], 3)
        return f"({s})" if prec > 2 else s
    if kind in ("add", "sub"):
        op = "+" if kind == "add" else "-"
        s = render_expr(e[1], 1) + op + render_expr(e[2], 2)
        return f"({s})" if prec > 1 else s
    if kind in ("mul", "div"):
        op = "*" if kind == "mul" else "/"
        s = render_expr(e[1], 2) + op + render_expr(e[2], 3)
        return f"({s})" if prec > 2 else s
    if kind == "pow":
        return render_expr(e[1], 4) + "^" + str(e[2])
    raise ValueError(f"unknown expression node {kind}")


def _render_ring_spec(spec):
    tag = spec[0]
    if tag == "QQ":
        return "QQ"
    if tag == "ZZ":
        return "ZZ"
    if tag == "ZZmod":
        return f"ZZ mod {spec[1]}"
    if tag == "GF":
        return f"GF({spec[1]})"
    if tag == "GR":
        q = spec[1]
        qs = f"{q[0]}^{q[1]}" if isinstance(q, tuple) else str(q)
        return f"GR({qs}, {spec[2]}) rel {render_expr(spec[3])}"
    if tag == "quot":
        inner = ", ".join(render_expr(p) for p in spec[2])
        return f"quot({_render_ring_spec(spec[1])}, [{inner}])"
    raise ValueError(f"unknown ring spec {tag}")


def _render_stmt(s):
    kind = s[0]
    if kind == "ring":
        return f"ring {s[1]} = {_render_ring_spec(s[2])};"
    if kind == "vars":
        order = "" if s[2] == "grevlex" else f" order {s[2]}"
        return f"vars {', '.join(s[1])}{order};"
    if kind == "ideal":
        return f"ideal {s[1]} = [{', '.join(render_expr(p) for p in s[2])}];"
    if kind == "map":
        return (f"map {s[1]} = ({', '.join(s[2])}) -> "
                f"[{', '.join(render_expr(p) for p in s[3])}];")
    if kind == "gb":
        return f"gb {s[1]};"
    if kind == "nf":
        return f"nf ({render_expr(s[1])}) wrt {s[2]};"
    if kind == "member":
        return f"member ({render_expr(s[1])}) in {s[2]};"
    if kind == "eliminate":
        return f"eliminate {', '.join(s[1])} from {s[2]};"
    if kind == "intersect":
        return f"intersect {s[1]}, {s[2]};"
    if kind == "quot":
        return f"quot {s[1]}, {s[2]};"
    if kind == "kernel":
        return f"kernel {s[1]};"
    if kind == "syz":
        return f"syz {s[1]};"
    if kind == "residues":
        return f"residues {s[1]};"
    raise ValueError(f"unknown statement {kind}")
