"""
Multi-indices and formal linear combinations of q-MZVs.
"""

from fractions import Fraction

from config.settings import BASIS_BRACKETS, BASIS_OKOUNKOV
from qseries.rational import as_rational, format_rational


class Index:
    """
    Finite sequence (s1, ..., sl) of positive integers.

    Instances are immutable and hashable; the empty index has weight 0.
    """

    __slots__ = ('_entries',)

    def __init__(self, entries=()):
        entries = tuple(entries)
        for s in entries:
            if isinstance(s, bool) or not isinstance(s, int) or s < 1:
                raise ValueError(f"index entries must be positive integers, got {s!r}")
        object.__setattr__(self, '_entries', entries)

    def __setattr__(self, name, value):
        raise AttributeError("Index is immutable")

    @classmethod
    def parse(cls, text):
        """Parse "2,3" (spaces and surrounding brackets allowed); "" is the empty index."""
        cleaned = text.strip().strip('[]()').strip()
        if not cleaned:
            return cls(())
        try:
            return cls(int(part) for part in cleaned.split(','))
        except ValueError:
            raise ValueError(f"'{text}' is not a comma-separated list of positive integers") from None

    @property
    def entries(self):
        return self._entries

    @property
    def weight(self):
        return sum(self._entries)

    @property
    def length(self):
        return len(self._entries)

    def sort_key(self):
        return (self.weight, self.length, self._entries)

    def prefixed(self, entry):
        return Index((entry,) + self._entries)

    def tail(self):
        return Index(self._entries[1:])

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __eq__(self, other):
        if isinstance(other, Index):
            return self._entries == other._entries
        if isinstance(other, tuple):
            return self._entries == other
        return NotImplemented

    def __hash__(self):
        return hash(self._entries)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Index({self._entries})"

    def __str__(self):
        return ",".join(str(s) for s in self._entries)


def as_index(value):
    if isinstance(value, Index):
        return value
    if isinstance(value, str):
        return Index.parse(value)
    return Index(value)


def term_label(basis, index):
    """Display label of one basis element: [2,3], Z(2,3) or name(2,3)."""
    body = ",".join(str(s) for s in index)
    if basis == BASIS_BRACKETS:
        return f"[{body}]"
    if basis == BASIS_OKOUNKOV:
        return f"Z({body})"
    return f"{basis}({body})"


class LinComb:
    """
    Formal rational combination constant + sum c_I * Z_basis(I).

    The empty index is folded into the constant, and zero coefficients are
    never stored.
    """

    __slots__ = ('basis', 'constant', 'terms')

    def __init__(self, basis, terms=None, constant=0):
        """
        Args:
            basis: Basis/family label
            terms: Mapping index-like -> rational
            constant: Rational constant term
        """
        constant = as_rational(constant)
        cleaned = {}
        for index, coeff in (terms or {}).items():
            index = as_index(index)
            coeff = as_rational(coeff)
            if index.length == 0:
                constant += coeff
                continue
            total = cleaned.get(index, 0) + coeff
            if total == 0:
                cleaned.pop(index, None)
            else:
                cleaned[index] = total
        self.basis = basis
        self.constant = constant
        self.terms = cleaned

    @classmethod
    def zero(cls, basis):
        return cls(basis)

    @classmethod
    def constant_only(cls, basis, value):
        return cls(basis, constant=value)

    @classmethod
    def singleton(cls, basis, index, coeff=1):
        return cls(basis, {as_index(index): coeff})

    def is_zero(self):
        return self.constant == 0 and not self.terms

    def max_weight(self):
        return max((index.weight for index in self.terms), default=0)

    def indices(self):
        return sorted(self.terms, key=Index.sort_key)

    def coeff(self, index):
        return self.terms.get(as_index(index), Fraction(0))

    def _check_basis(self, other):
        if self.basis != other.basis:
            raise ValueError(f"cannot combine bases '{self.basis}' and '{other.basis}'")

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return LinComb(self.basis, self.terms, self.constant + as_rational(other))
        self._check_basis(other)
        merged = dict(self.terms)
        for index, coeff in other.terms.items():
            merged[index] = merged.get(index, 0) + coeff
        return LinComb(self.basis, merged, self.constant + other.constant)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = as_rational(factor)
        if factor == 0:
            return LinComb(self.basis)
        return LinComb(self.basis,
                       {index: coeff * factor for index, coeff in self.terms.items()},
                       self.constant * factor)

    def __mul__(self, factor):
        if isinstance(factor, LinComb):
            raise TypeError("LinComb products need a family; use stuffle_lincomb")
        return self.scale(factor)

    __rmul__ = __mul__

    def prefixed(self, entry):
        """Prepend `entry` to every index; the constant c becomes c * (entry)."""
        terms = {index.prefixed(entry): coeff for index, coeff in self.terms.items()}
        if self.constant != 0:
            terms[Index((entry,))] = self.constant
        return LinComb(self.basis, terms)

    def with_basis(self, basis):
        return LinComb(basis, self.terms, self.constant)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return (self.basis == other.basis and self.constant == other.constant
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.basis, self.constant, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms in display order: weight descending, then length ascending, then lex."""
        return sorted(self.terms.items(),
                      key=lambda item: (-item[0].weight, item[0].length, item[0].entries))

    def render(self):
        """Human-readable text, e.g. '[4] - 1/6 [2]' or '3 Z(4) + Z(2)'."""
        pieces = [(coeff, term_label(self.basis, index)) for index, coeff in self.sorted_terms()]
        if self.constant != 0:
            pieces.append((self.constant, None))
        if not pieces:
            return "0"

        out = []
        for position, (coeff, label) in enumerate(pieces):
            sign = '-' if coeff < 0 else '+'
            magnitude = abs(coeff)
            if label is None:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = label
            else:
                body = f"{format_rational(magnitude)} {label}"
            if position == 0:
                out.append(f"-{body}" if sign == '-' else body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LinComb({self.basis!r}, {self.render()!r})"
