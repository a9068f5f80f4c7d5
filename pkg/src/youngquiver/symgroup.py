"""Exact symmetric group algebra over the rationals.

Permutations act on {1..n} and compose right-to-left: (a * b)(i) = a(b(i)).
Group algebra elements are sparse rational combinations of permutations.
Characters come from the Murnaghan-Nakayama recursion on border strips,
centrally primitive idempotents from the character formula, and Young
symmetrizers from row/column groups of a tableau.  Induction multiplicities
are character pairings organized over cycle-type pairs weighted by class
sizes, which keeps them feasible well past the point where summing over
group elements would blow up.

These are the brute-force ground truth against which the combinatorial
quiver description is checked.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from itertools import permutations as iter_permutations
from math import factorial

from .config import DEFAULT_BOUNDS, Bounds, check_bound
from .exactlinalg import RationalMatrix, rank
from .partitions import Partition, partitions_of, skew_classify, transpose

# Conjugacy classes are indexed by partitions of the group degree.
CycleType = Partition


@dataclass(frozen=True, slots=True)
class Permutation:
    """One-line notation: images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def extend(self, degree: int) -> "Permutation":
        """View inside a larger symmetric group, fixing the new points."""
        if degree < self.n:
            raise ValueError(f"cannot extend degree {self.n} to {degree}")
        return Permutation(self.images + tuple(range(self.n + 1, degree + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> CycleType:
        lengths = [len(c) for c in self.cycles()]
        fixed = self.n - sum(lengths)
        return Partition(tuple(sorted(lengths + [1] * fixed, reverse=True)))

    def sign(self) -> int:
        transpositions = sum(len(c) - 1 for c in self.cycles())
        return -1 if transpositions % 2 else 1

    def to_cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.to_cycle_string()

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(images) for images in iter_permutations(range(1, n + 1))]


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Sparse rational combination of permutations of fixed degree."""

    degree: int
    terms: dict[Permutation, Fraction]

    def __post_init__(self) -> None:
        clean = {}
        for perm, coeff in self.terms.items():
            if perm.n != self.degree:
                raise ValueError(f"term degree {perm.n} != element degree {self.degree}")
            coeff = Fraction(coeff)
            if coeff:
                clean[perm] = coeff
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def one(degree: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(degree, {Permutation.identity(degree): Fraction(1)})

    @staticmethod
    def zero(degree: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(degree, {})

    @staticmethod
    def from_permutation(perm: Permutation) -> "GroupAlgebraElement":
        return GroupAlgebraElement(perm.n, {perm: Fraction(1)})

    def coefficient(self, perm: Permutation) -> Fraction:
        return self.terms.get(perm, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, scalar: Fraction | int) -> "GroupAlgebraElement":
        scalar = Fraction(scalar)
        return GroupAlgebraElement(self.degree, {p: c * scalar for p, c in self.terms.items()})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        acc = dict(self.terms)
        for perm, coeff in other.terms.items():
            acc[perm] = acc.get(perm, Fraction(0)) + coeff
        return GroupAlgebraElement(self.degree, acc)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return multiply(self, other)

    def embed(self, degree: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            degree, {perm.extend(degree): coeff for perm, coeff in self.terms.items()}
        )

    def __str__(self) -> str:
        """Cycle notation with exact rational coefficients, e.g. 1/2*(1 2)."""
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda p: p.images)
        return " + ".join(f"{self.terms[p]}*{p.to_cycle_string()}" for p in ordered)


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product (bilinear extension of composition)."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    acc: dict[Permutation, Fraction] = {}
    for p, x in a.terms.items():
        for q, y in b.terms.items():
            r = p * q
            acc[r] = acc.get(r, Fraction(0)) + x * y
    return GroupAlgebraElement(a.degree, acc)


@dataclass(frozen=True)
class Tableau:
    """Bijective filling of a shape with 1..n, stored as row tuples."""

    shape: Partition
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if tuple(len(row) for row in entries) != self.shape.rows:
            raise ValueError("entries do not match shape")
        flat = sorted(v for row in entries for v in row)
        if flat != list(range(1, self.shape.size + 1)):
            raise ValueError("entries must be a bijective filling with 1..n")

    @cached_property
    def is_standard(self) -> bool:
        for row in self.entries:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for c in range(self.shape.rows[0] if self.shape.rows else 0):
            col = [row[c] for row in self.entries if len(row) > c]
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(row[c - 1] for row in self.entries if len(row) >= c)


@cache
def _standard_fillings(rows: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(rows)
    if n == 0:
        return ((),)
    out = []
    for r in range(len(rows)):
        if r + 1 < len(rows) and rows[r] == rows[r + 1]:
            continue  # not a removable corner
        smaller = list(rows)
        smaller[r] -= 1
        if smaller[r] == 0:
            smaller.pop()
        for filling in _standard_fillings(tuple(smaller)):
            grown = [list(row) for row in filling]
            while len(grown) <= r:
                grown.append([])
            grown[r].append(n)
            out.append(tuple(tuple(row) for row in grown))
    return tuple(out)


def standard_tableaux(lam: Partition, bounds: Bounds = DEFAULT_BOUNDS) -> list[Tableau]:
    check_bound(lam.size, bounds.max_tableau_size, "tableau size")
    return [Tableau(lam, filling) for filling in _standard_fillings(lam.rows)]


def canonical_tableau(mu: Partition) -> Tableau:
    """Row-by-row filling, top to bottom and left to right; always standard."""
    entries = []
    counter = 1
    for length in mu.rows:
        entries.append(tuple(range(counter, counter + length)))
        counter += length
    return Tableau(mu, tuple(entries))


def _border_strip_removals(shape: tuple[int, ...], length: int):
    """(smaller shape, sign) for each removable border strip of the given
    length, via beta-numbers: removing a strip moves one beta number down by
    ``length``; the sign is (-1)^(number of beta numbers jumped over)."""
    depth = len(shape)
    betas = [shape[i] + (depth - 1 - i) for i in range(depth)]
    beta_set = set(betas)
    for b in betas:
        target = b - length
        if target < 0 or target in beta_set:
            continue
        crossings = sum(1 for x in betas if target < x < b)
        new_betas = sorted([x for x in betas if x != b] + [target], reverse=True)
        lengths = [nb - (depth - 1 - i) for i, nb in enumerate(new_betas)]
        yield tuple(v for v in lengths if v > 0), (-1) ** crossings


@cache
def _mn_character(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    first, rest = cycles[0], cycles[1:]
    return sum(
        sign * _mn_character(smaller, rest)
        for smaller, sign in _border_strip_removals(shape, first)
    )


def character_value(lam: Partition, cycle_type: CycleType) -> int:
    """Irreducible character of the symmetric group, by Murnaghan-Nakayama."""
    if lam.size != cycle_type.size:
        raise ValueError(f"size mismatch: |{lam}| != |{cycle_type}|")
    return _mn_character(lam.rows, cycle_type.rows)


def specht_dimension(lam: Partition) -> int:
    """Hook length formula."""
    cols = transpose(lam).rows
    denominator = 1
    for i, row_len in enumerate(lam.rows):
        for j in range(row_len):
            denominator *= (row_len - j) + (cols[j] - 1 - i)
    return factorial(lam.size) // denominator


def cycle_type_class_size(cycle_type: CycleType) -> int:
    """Size of the conjugacy class with the given cycle type."""
    return factorial(cycle_type.size) // centralizer_order(cycle_type)


def centralizer_order(cycle_type: CycleType) -> int:
    counts: dict[int, int] = {}
    for part in cycle_type.rows:
        counts[part] = counts.get(part, 0) + 1
    order = 1
    for length, mult in counts.items():
        order *= length**mult * factorial(mult)
    return order


def central_idempotent(mu: Partition, bounds: Bounds = DEFAULT_BOUNDS) -> GroupAlgebraElement:
    """(dim/n!) * sum over the group of character values times permutations."""
    n = mu.size
    check_bound(n, bounds.max_group_degree, "group degree")
    lead = Fraction(specht_dimension(mu), factorial(n))
    terms: dict[Permutation, Fraction] = {}
    for perm in all_permutations(n):
        chi = character_value(mu, perm.cycle_type())
        if chi:
            terms[perm] = lead * chi
    return GroupAlgebraElement(n, terms)


def _block_stabilizer(blocks: tuple[tuple[int, ...], ...], n: int, signed: bool):
    """Permutations preserving each block setwise, with their signs."""
    per_block = [list(iter_permutations(block)) for block in blocks]

    def rec(idx: int, images: dict[int, int], parity: int):
        if idx == len(blocks):
            full = tuple(images.get(i, i) for i in range(1, n + 1))
            yield Permutation(full), parity
            return
        block = blocks[idx]
        for arrangement in per_block[idx]:
            sub_parity = _arrangement_parity(block, arrangement) if signed else 1
            new_images = dict(images)
            for src, dst in zip(block, arrangement):
                new_images[src] = dst
            yield from rec(idx + 1, new_images, parity * sub_parity)

    yield from rec(0, {}, 1)


def _arrangement_parity(original: tuple[int, ...], arranged: tuple[int, ...]) -> int:
    index = {v: i for i, v in enumerate(original)}
    perm = [index[v] for v in arranged]
    parity = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = perm[point]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


def young_symmetrizer(tableau: Tableau, bounds: Bounds = DEFAULT_BOUNDS) -> GroupAlgebraElement:
    """Row symmetrizer times signed column symmetrizer, normalized by
    dim/n! so the result is a genuine idempotent."""
    n = tableau.shape.size
    check_bound(n, bounds.max_group_degree, "group degree")
    rows = tableau.entries
    cols = tuple(tableau.column(c) for c in range(1, (tableau.shape.rows or (0,))[0] + 1))
    row_sum = GroupAlgebraElement(
        n, {perm: Fraction(1) for perm, _ in _block_stabilizer(rows, n, signed=False)}
    )
    col_sum = GroupAlgebraElement(
        n, {perm: Fraction(sign) for perm, sign in _block_stabilizer(cols, n, signed=True)}
    )
    product = multiply(row_sum, col_sum)
    return product.scale(Fraction(specht_dimension(tableau.shape), factorial(n)))


def injection_bimodule(n: int, m: int, bounds: Bounds = DEFAULT_BOUNDS) -> list[GroupAlgebraElement]:
    """Basis of the bimodule realizing injections n -> n+m inside C[S_{n+m}].

    One basis element per injection: the sum over all permutations extending
    it (the coset sum over the subgroup fixing 1..n pointwise, which does not
    depend on the coset representative).  Basis size is (n+m)!/m!.
    """
    total = n + m
    check_bound(total, bounds.max_group_degree, "group degree")
    values = range(1, total + 1)
    basis = []
    for image in iter_permutations(values, n):
        rest = sorted(set(values) - set(image))
        terms = {
            Permutation(image + completion): Fraction(1)
            for completion in iter_permutations(rest)
        }
        basis.append(GroupAlgebraElement(total, terms))
    return basis


def direct_hom_dimension(mu: Partition, lam: Partition, bounds: Bounds = DEFAULT_BOUNDS) -> int:
    """Rank of the span of e_lam * b * e_mu over the injection bimodule basis,
    computed inside C[S_{n+1}] with exact arithmetic.  This is the degree-one
    hom dimension measured directly on idempotents, with no combinatorics."""
    n = mu.size
    if lam.size != n + 1:
        raise ValueError("target must have exactly one more node than source")
    check_bound(n, bounds.max_direct_hom_degree, "direct hom degree")
    e_lam = young_symmetrizer(canonical_tableau(lam), bounds)
    e_mu = young_symmetrizer(canonical_tableau(mu), bounds).embed(n + 1)
    group_order = all_permutations(n + 1)
    rows = []
    for element in injection_bimodule(n, 1, bounds):
        product = multiply(multiply(e_lam, element), e_mu)
        rows.append([product.coefficient(perm) for perm in group_order])
    return rank(RationalMatrix.from_rows(rows, len(group_order)))


def induction_multiplicity(
    mu: Partition, m: int, lam: Partition, bounds: Bounds = DEFAULT_BOUNDS
) -> int:
    """Multiplicity of the lam-irreducible in the module induced from
    (mu-irreducible) x (trivial) along S_n x S_m -> S_{n+m}.

    Frobenius reciprocity turns this into a character pairing; the sum runs
    over cycle-type pairs weighted by centralizer orders rather than over
    group elements.
    """
    n = mu.size
    if m < 0:
        raise ValueError("m must be non-negative")
    if lam.size != n + m:
        raise ValueError(f"|{lam}| must equal |{mu}| + {m}")
    check_bound(n + m, bounds.max_induction_degree, "induction degree")
    total = Fraction(0)
    for alpha in partitions_of(n, bounds):
        chi_mu = character_value(mu, alpha)
        if not chi_mu:
            continue
        for beta in partitions_of(m, bounds):
            combined = Partition(tuple(sorted(alpha.rows + beta.rows, reverse=True)))
            chi_lam = character_value(lam, combined)
            if not chi_lam:
                continue
            total += Fraction(
                chi_lam * chi_mu, centralizer_order(alpha) * centralizer_order(beta)
            )
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"character pairing returned {total}")
    return int(total)


def pieri_coefficient(mu: Partition, m: int, lam: Partition) -> int:
    """1 iff lam\\mu is a horizontal strip of size m (no column holds two
    skew nodes), else 0."""
    sk = skew_classify(mu, lam)
    if not sk.contained or sk.size != m:
        return 0
    return 0 if sk.has_column_pair else 1
