"""Exact arithmetic in tensor algebras over Laurent polynomial rings.

The coefficient ring is Z[t1^(+-1), ..., ts^(+-1)] with the t variables
central.  An element is a finite integer combination of terms

    coeff * t1^e1 * ... * ts^es * g1 g2 ... gk

where the g's are named noncommuting generators.  Internally a term is a
dict entry keyed by (word, texp): word is a tuple of generator name
strings and texp is a tuple of s integers.
"""

from fractions import Fraction


class NamespaceError(ValueError):
    """Raised when combining elements over different t-variable counts."""


class AlgebraElement:
    """An element of the tensor algebra on named generators over Z[t^(+-1)]."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                self._accumulate(key, coeff)

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def scalar(cls, value, nvars):
        elem = cls(nvars)
        elem._accumulate(((), (0,) * nvars), value)
        return elem

    @classmethod
    def one(cls, nvars):
        return cls.scalar(1, nvars)

    @classmethod
    def generator(cls, name, nvars):
        elem = cls(nvars)
        elem._accumulate(((name,), (0,) * nvars), 1)
        return elem

    @classmethod
    def word(cls, names, nvars, coeff=1):
        elem = cls(nvars)
        elem._accumulate((tuple(names), (0,) * nvars), coeff)
        return elem

    @classmethod
    def t_power(cls, index, exponent, nvars, coeff=1):
        """coeff * t_index^exponent, with index counted from 1."""
        if not 1 <= index <= nvars:
            raise NamespaceError(
                "t index %d out of range for %d variables" % (index, nvars))
        texp = [0] * nvars
        texp[index - 1] = exponent
        elem = cls(nvars)
        elem._accumulate(((), tuple(texp)), coeff)
        return elem

    @classmethod
    def term(cls, coeff, word, texp, nvars):
        if len(texp) != nvars:
            raise NamespaceError("t exponent tuple has wrong length")
        elem = cls(nvars)
        elem._accumulate((tuple(word), tuple(texp)), coeff)
        return elem

    def _accumulate(self, key, coeff):
        if coeff == 0:
            return
        terms = self.terms
        new = terms.get(key, 0) + coeff
        if new:
            terms[key] = new
        elif key in terms:
            del terms[key]

    def _check(self, other):
        if self.nvars != other.nvars:
            raise NamespaceError(
                "mixed t-variable counts: %d vs %d" % (self.nvars, other.nvars))

    def is_zero(self):
        return not self.terms

    def copy(self):
        out = AlgebraElement(self.nvars)
        out.terms = dict(self.terms)
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.scalar(other, self.nvars)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.scalar(other, self.nvars)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = self.copy()
        for key, coeff in other.terms.items():
            out._accumulate(key, coeff)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = AlgebraElement(self.nvars)
        out.terms = {key: -coeff for key, coeff in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.scalar(other, self.nvars)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            out = AlgebraElement(self.nvars)
            if other:
                out.terms = {k: c * other for k, c in self.terms.items()}
            return out
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = AlgebraElement(self.nvars)
        for (w1, e1), c1 in self.terms.items():
            for (w2, e2), c2 in other.terms.items():
                key = (w1 + w2, tuple(a + b for a, b in zip(e1, e2)))
                out._accumulate(key, c1 * c2)
        return out

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not defined in the tensor algebra")
        out = AlgebraElement.one(self.nvars)
        for _ in range(exponent):
            out = out * self
        return out

    def support(self):
        """The set of generator names appearing in any term."""
        names = set()
        for word, _ in self.terms:
            names.update(word)
        return names

    def constant_term(self):
        """Integer coefficient of the empty word with all t exponents zero."""
        return self.terms.get(((), (0,) * self.nvars), 0)

    def __repr__(self):
        return "AlgebraElement(%r)" % (format_element(self),)

    def __str__(self):
        return format_element(self)


def _term_sort_key(item):
    (word, texp), _coeff = item
    return (len(word), word, texp)


def format_element(elem, tnames=None):
    """Render an element as deterministic plain text.

    Terms are ordered by word length, then word, then t exponents, so the
    same element always prints the same way.
    """
    if not elem.terms:
        return "0"
    if tnames is None:
        tnames = ["t%d" % (i + 1) for i in range(elem.nvars)]
    pieces = []
    for (word, texp), coeff in sorted(elem.terms.items(), key=_term_sort_key):
        factors = []
        for i, e in enumerate(texp):
            if e == 0:
                continue
            if e == 1:
                factors.append(tnames[i])
            else:
                factors.append("%s^%d" % (tnames[i], e))
        factors.extend(word)
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append((" + " if coeff > 0 else " - ") + body)
    return "".join(pieces)


def word_degree(word, deg_of):
    """Degree of a product of generators from the per-generator degrees."""
    return sum(deg_of[name] for name in word)


def homogeneous_degree(elem, deg_of, t_degrees=None):
    """Common degree of all terms, or None for 0; raises on mixed degrees.

    t_degrees gives the degree of each t variable (all zero when omitted,
    which covers rotation number zero components).
    """
    degree = None
    for (word, texp), _ in elem.terms.items():
        d = word_degree(word, deg_of)
        if t_degrees is not None:
            d += sum(e * td for e, td in zip(texp, t_degrees))
        if degree is None:
            degree = d
        elif degree != d:
            raise ValueError("element is not homogeneous: %s" % format_element(elem))
    return degree


def differentiate(elem, d_of, deg_of):
    """Extend a differential on generators to the whole algebra.

    d_of maps a generator name to its differential (an AlgebraElement) and
    deg_of maps a name to its integer degree.  The extension follows the
    signed Leibniz rule: the sign in front of the i-th summand is -1 raised
    to the total degree of the letters before position i.  The t variables
    are central cycles of even degree, so they never contribute signs.
    """
    nvars = elem.nvars
    out = AlgebraElement(nvars)
    for (word, texp), coeff in elem.terms.items():
        prefix_degree = 0
        for i, name in enumerate(word):
            dgen = d_of[name]
            if dgen.nvars != nvars:
                raise NamespaceError("differential of %s has wrong t-variable count" % name)
            if not dgen.is_zero():
                sign = -1 if prefix_degree % 2 else 1
                left = AlgebraElement.term(coeff * sign, word[:i], texp, nvars)
                right = AlgebraElement.word(word[i + 1:], nvars)
                piece = left * dgen * right
                for key, c in piece.terms.items():
                    out._accumulate(key, c)
            prefix_degree += deg_of[name]
    return out


def substitute(elem, gen_map):
    """Apply an algebra map defined on generators.

    gen_map sends a generator name to an AlgebraElement over the same t
    variables; names absent from the map are kept as themselves.  Words map
    multiplicatively and t monomials are carried through unchanged.
    """
    nvars = elem.nvars
    out = AlgebraElement(nvars)
    for (word, texp), coeff in elem.terms.items():
        piece = AlgebraElement.term(coeff, (), texp, nvars)
        for name in word:
            image = gen_map.get(name)
            if image is None:
                image = AlgebraElement.generator(name, nvars)
            piece = piece * image
        for key, c in piece.terms.items():
            out._accumulate(key, c)
    return out


class PrimeField:
    """Arithmetic in F_p with elements stored as ints in range(p)."""

    def __init__(self, p):
        if p < 2:
            raise ValueError("field order must be a prime, got %r" % (p,))
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise ValueError("field order must be a prime, got %r" % (p,))
            d += 1
        self.p = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def normalize(self, x):
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


class Rationals:
    """The field Q with elements stored as fractions.Fraction values."""

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def normalize(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / Fraction(b)

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")


def evaluate(elem, field, values, tvalues=()):
    """Evaluate an element in a field.

    values maps generator names to field elements; tvalues is a sequence of
    field elements for t1..ts, all of which must be invertible whenever a
    negative exponent appears.
    """
    if len(tvalues) != elem.nvars:
        raise NamespaceError(
            "expected %d t values, got %d" % (elem.nvars, len(tvalues)))
    total = field.zero
    for (word, texp), coeff in elem.terms.items():
        acc = field.normalize(coeff)
        for i, e in enumerate(texp):
            if e == 0:
                continue
            base = tvalues[i]
            if e < 0:
                base = field.inv(base)
                e = -e
            for _ in range(e):
                acc = field.mul(acc, base)
        for name in word:
            acc = field.mul(acc, values[name])
            if acc == field.zero:
                break
        total = field.add(total, acc)
    return field.normalize(total)
