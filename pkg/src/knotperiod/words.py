"""Free group words, group ring elements, and Fox derivatives.

Words in a free group on generators x_0, ..., x_{g-1} are stored as tuples
of nonzero signed integers: the letter k > 0 means x_{k-1}, and -k means its
inverse.  Words are always kept freely reduced.

The Fox derivative d/dx_j is the Z-linear map on the group ring fixed by
  d(x_i)/dx_j     = delta_ij
  d(x_i^-1)/dx_j  = -delta_ij * x_i^-1
  d(uv)/dx_j      = du/dx_j + u * dv/dx_j
"""

__all__ = [
    "FreeWord",
    "GroupRingElement",
    "Presentation",
    "fox_derivative",
    "fox_matrix",
]


class FreeWord:
    """A freely reduced word in a free group."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _reduce(tuple(letters))

    @classmethod
    def generator(cls, i, power=1):
        letters = ((i + 1) if power > 0 else -(i + 1),) * abs(power)
        return cls(letters)

    def __mul__(self, other):
        out = FreeWord()
        out.letters = _reduce(self.letters + other.letters)
        return out

    def inverse(self):
        out = FreeWord()
        out.letters = tuple(-k for k in reversed(self.letters))
        return out

    def is_identity(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def exponent_sum(self, weights):
        """Total weight of the word; weights[i] is a tuple per generator.

        Returns the componentwise sum, e.g. (total_t, total_s).
        """
        nv = len(weights[0]) if weights else 0
        acc = [0] * nv
        for k in self.letters:
            w = weights[abs(k) - 1]
            sgn = 1 if k > 0 else -1
            for i in range(nv):
                acc[i] += sgn * w[i]
        return tuple(acc)

    def __repr__(self):
        if not self.letters:
            return "FreeWord(e)"
        parts = []
        for k in self.letters:
            name = "x%d" % (abs(k) - 1)
            parts.append(name if k > 0 else name + "^-1")
        return "FreeWord(%s)" % " ".join(parts)


def _reduce(letters):
    out = []
    for k in letters:
        if k == 0:
            raise ValueError("letters must be nonzero")
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


class GroupRingElement:
    """Finite Z-linear combination of free group words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if c:
                    clean[w] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of_word(cls, w, coeff=1):
        return cls({w: coeff})

    def add_term(self, w, c):
        new = dict(self.terms)
        v = new.get(w, 0) + c
        if v:
            new[w] = v
        else:
            new.pop(w, None)
        return GroupRingElement(new)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return GroupRingElement(out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        bits = []
        for w, c in sorted(self.terms.items(), key=lambda t: t[0].letters):
            bits.append("%+d*%r" % (c, w))
        return "GroupRingElement(%s)" % " ".join(bits)


def fox_derivative(word, j):
    """Fox derivative of a FreeWord with respect to generator j (0-based).

    >>> x, y = FreeWord([1]), FreeWord([2])
    >>> r = x * y * x * (y * x * y).inverse()      # trefoil relator
    >>> d = fox_derivative(r, 0)
    >>> sorted(len(w) for w in d.terms)
    [0, 2, 5]
    """
    terms = {}
    prefix = FreeWord()
    for k in word.letters:
        g = abs(k) - 1
        if k > 0:
            if g == j:
                terms[prefix] = terms.get(prefix, 0) + 1
            prefix = prefix * FreeWord([k])
        else:
            prefix = prefix * FreeWord([k])
            if g == j:
                terms[prefix] = terms.get(prefix, 0) - 1
    return GroupRingElement(terms)


class Presentation:
    """A finite group presentation with per-generator abelianization weights.

    weights[i] is a tuple giving the exponent of each deck variable for the
    i-th generator: (1,) for every meridian of a knot, or (1, 0) / (0, 1)
    for meridians of the knot and axis components of a two-component link.
    """

    __slots__ = ("num_generators", "relators", "weights", "names")

    def __init__(self, num_generators, relators, weights=None, names=None):
        self.num_generators = num_generators
        self.relators = list(relators)
        if weights is None:
            weights = [(1,)] * num_generators
        self.weights = [tuple(w) for w in weights]
        self.names = list(names) if names else ["x%d" % i for i in range(num_generators)]
        if len(self.weights) != num_generators:
            raise ValueError("need one weight tuple per generator")
        nv = {len(w) for w in self.weights}
        if num_generators and len(nv) != 1:
            raise ValueError("weight tuples must share one length")
        for r in self.relators:
            for k in r.letters:
                if not (1 <= abs(k) <= num_generators):
                    raise ValueError("relator letter out of range")

    @property
    def num_variables(self):
        return len(self.weights[0]) if self.weights else 1

    def deficiency_ok(self):
        """Wirtinger presentations of knots have one fewer relator."""
        return len(self.relators) == self.num_generators - 1

    def __repr__(self):
        return "<Presentation on %d generators, %d relators>" % (
            self.num_generators,
            len(self.relators),
        )


def fox_matrix(presentation):
    """Matrix of Fox derivatives: rows = relators, columns = generators."""
    return [
        [fox_derivative(r, j) for j in range(presentation.num_generators)]
        for r in presentation.relators
    ]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
