"""Sparse multivariate polynomials and unreduced rational functions.

A Poly maps exponent tuples to nonzero field payloads.  A RatFunc is an
unreduced fraction of two Polys; equality is decided by cross
multiplication, never by a multivariate gcd.  A cheap simplification
(stripping common monomial content and normalizing the denominator's
leading coefficient) keeps intermediate fractions small; correctness
never depends on it.
"""

from __future__ import annotations

from .scalars import Field, FieldError, can_embed, embed


class PolyError(ValueError):
    pass


class VarTable:
    """An ordered, immutable list of variable names."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise PolyError(f"duplicate variable names in {names}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.index

    def __repr__(self):
        return f"VarTable({', '.join(self.names)})"


def _check_compat(p: "Poly", q: "Poly"):
    if p.vars is not q.vars:
        raise PolyError("polynomials over different variable tables")
    if p.field is not q.field:
        raise FieldError(f"mixed fields: {p.field.tag} vs {q.field.tag}")


class Poly:
    """terms: dict mapping exponent tuples to nonzero payloads."""

    __slots__ = ("vars", "field", "terms")

    def __init__(self, vars: VarTable, field: Field, terms: dict):
        self.vars = vars
        self.field = field
        self.terms = terms

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, vars, field):
        return cls(vars, field, {})

    @classmethod
    def const(cls, vars, field, payload):
        if payload == field.zero():
            return cls.zero(vars, field)
        return cls(vars, field, {(0,) * len(vars): payload})

    @classmethod
    def one(cls, vars, field):
        return cls.const(vars, field, field.one())

    @classmethod
    def var(cls, vars, field, name):
        if name not in vars:
            raise PolyError(f"unknown variable {name!r}")
        exp = [0] * len(vars)
        exp[vars.index[name]] = 1
        return cls(vars, field, {tuple(exp): field.one()})

    @classmethod
    def monomial(cls, vars, field, payload, exponents):
        if payload == field.zero():
            return cls.zero(vars, field)
        return cls(vars, field, {tuple(exponents): payload})

    # predicates -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * len(self.vars): self.field.one()}

    def is_monomial(self):
        return len(self.terms) == 1

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        _check_compat(self, other)
        f = self.field
        zero = f.zero()
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(out.get(e, zero), c)
            if s == zero:
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(self.vars, f, out)

    def __neg__(self):
        f = self.field
        return Poly(self.vars, f, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        _check_compat(self, other)
        f = self.field
        zero = f.zero()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                p = f.mul(c1, c2)
                if p == zero:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add(out.get(e, zero), p)
                if s == zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly(self.vars, f, out)

    def scale(self, payload):
        f = self.field
        if payload == f.zero():
            return Poly.zero(self.vars, f)
        return Poly(self.vars, f, {e: f.mul(c, payload) for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative power of a polynomial; use RatFunc")
        out = Poly.one(self.vars, self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.vars is other.vars
            and self.field is other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.vars), self.field.tag, frozenset(self.terms.items())))

    # ordering / display -----------------------------------------------

    def sorted_terms(self):
        """Graded lexicographic order, largest first, for stable output."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.vars.names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            cs = self.field.to_str(c)
            needs_paren = ("+" in cs[1:]) or ("-" in cs[1:])
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors and cs == "-1" and self.field.char == 0:
                parts.append("-" + "*".join(factors))
            else:
                head = f"({cs})" if needs_paren else cs
                parts.append("*".join([head] + factors) if factors else cs)
        out = parts[0]
        for p in parts[1:]:
            out += ("-" + p[1:]) if p.startswith("-") else ("+" + p)
        return out

    def __repr__(self):
        return f"Poly({self})"

    def conj(self):
        """Apply the coefficient automorphism zeta3 -> zeta3^2 termwise."""
        f = self.field
        return Poly(self.vars, f, {e: f.conj(c) for e, c in self.terms.items()})

    def embed(self, field: Field) -> "Poly":
        if field is self.field:
            return self
        if not can_embed(self.field, field):
            raise FieldError(f"cannot embed {self.field.tag} into {field.tag}")
        return Poly(
            self.vars, field, {e: embed(c, self.field, field) for e, c in self.terms.items()}
        )


class RatFunc:
    """An unreduced fraction num/den of two Polys with den != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, simplify: bool = True):
        _check_compat(num, den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if simplify:
            num, den = _strip_content(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.vars, p.field), simplify=False)

    @classmethod
    def var(cls, vars, field, name):
        return cls.from_poly(Poly.var(vars, field, name))

    @classmethod
    def const(cls, vars, field, payload):
        return cls.from_poly(Poly.const(vars, field, payload))

    @property
    def vars(self):
        return self.num.vars

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RatFunc(-self.num, self.den, simplify=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n, simplify=False)

    def conj(self):
        return RatFunc(self.num.conj(), self.den.conj(), simplify=False)

    def embed(self, field: Field) -> "RatFunc":
        if field is self.field:
            return self
        return RatFunc(self.num.embed(field), self.den.embed(field), simplify=False)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return ratfunc_eq(self, other)

    def __hash__(self):
        raise TypeError("RatFunc is unhashable (equality is extensional)")

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_eq(a: RatFunc, b: RatFunc) -> bool:
    """a == b as elements of the fraction field: a.num*b.den == b.num*a.den."""
    if a.vars is not b.vars:
        raise PolyError("rational functions over different variable tables")
    if a.field is not b.field:
        raise FieldError(f"mixed fields: {a.field.tag} vs {b.field.tag}")
    if a.num.terms == b.num.terms and a.den.terms == b.den.terms:
        return True
    if a.num.is_zero() or b.num.is_zero():
        return a.num.is_zero() and b.num.is_zero()
    return a.num * b.den == b.num * a.den


def _strip_content(num: Poly, den: Poly):
    """Divide num and den by common monomial content; make den's leading
    coefficient 1.  Heuristic only: equality never relies on it."""
    if num.is_zero():
        return num, Poly.one(den.vars, den.field)
    n = len(num.vars)
    mins = [None] * n
    for terms in (num.terms, den.terms):
        for e in terms:
            for i, k in enumerate(e):
                if mins[i] is None or k < mins[i]:
                    mins[i] = k
    if any(mins):
        shift = tuple(mins)
        num = Poly(num.vars, num.field, {_esub(e, shift): c for e, c in num.terms.items()})
        den = Poly(den.vars, den.field, {_esub(e, shift): c for e, c in den.terms.items()})
    f = den.field
    lead = den.terms[max(den.terms, key=lambda e: (sum(e), e))]
    if lead != f.one():
        inv = f.inv(lead)
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _esub(e, shift):
    return tuple(a - b for a, b in zip(e, shift))


class Substitution:
    """Maps each source variable to a RatFunc over a target table."""

    __slots__ = ("source", "target", "images", "field")

    def __init__(self, source: VarTable, images):
        images = list(images)
        if len(images) != len(source):
            raise PolyError("substitution must cover every source variable")
        tgt = images[0].vars
        fld = images[0].field
        for im in images:
            if im.vars is not tgt:
                raise PolyError("substitution images over different tables")
            if im.field is not fld:
                raise FieldError("substitution images over different fields")
        self.source = source
        self.target = tgt
        self.images = images
        self.field = fld

    def __call__(self, p):
        if isinstance(p, RatFunc):
            return substitute_ratfunc(p, self)
        return substitute(p, self)

    def compose(self, other: "Substitution") -> "Substitution":
        """self then other: variables of self.source land over other.target."""
        if self.target is not other.source:
            raise PolyError("composition tables do not match")
        return Substitution(self.source, [other(im) for im in self.images])


def substitute(p: Poly, s: Substitution) -> RatFunc:
    """Apply the ring homomorphism extension of s to p.

    Uses a single common denominator: with images n_i/d_i and M_i the
    largest exponent of variable i in p, the result is
    (sum_terms c * prod n_i^{e_i} d_i^{M_i - e_i}) / prod d_i^{M_i}.
    """
    if p.vars is not s.source:
        raise PolyError("polynomial is not over the substitution's source table")
    field = s.field
    if p.field is not field:
        if not can_embed(p.field, field):
            raise FieldError(f"cannot substitute {field.tag} images into {p.field.tag} poly")
        p = p.embed(field)
    tgt = s.target
    if p.is_zero():
        return RatFunc.from_poly(Poly.zero(tgt, field))
    n = len(p.vars)
    maxes = [0] * n
    for e in p.terms:
        for i, k in enumerate(e):
            if k > maxes[i]:
                maxes[i] = k
    num_pows = [_power_cache(s.images[i].num, maxes[i]) for i in range(n)]
    den_pows = [_power_cache(s.images[i].den, maxes[i]) for i in range(n)]
    total = Poly.zero(tgt, field)
    for e, c in p.terms.items():
        term = Poly.const(tgt, field, c)
        for i, k in enumerate(e):
            if k:
                term = term * num_pows[i][k]
            if maxes[i] - k:
                term = term * den_pows[i][maxes[i] - k]
        total = total + term
    den = Poly.one(tgt, field)
    for i in range(n):
        if maxes[i]:
            den = den * den_pows[i][maxes[i]]
    return RatFunc(total, den)


def _power_cache(p: Poly, up_to: int):
    pows = [Poly.one(p.vars, p.field), p]
    for _ in range(2, up_to + 1):
        pows.append(pows[-1] * p)
    return pows


def substitute_ratfunc(r: RatFunc, s: Substitution) -> RatFunc:
    num = substitute(r.num, s)
    den = substitute(r.den, s)
    if den.is_zero():
        raise ZeroDivisionError("substitution makes the denominator vanish")
    return num / den


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")
