"""Matroids on ground set {0, ..., n-1} stored as explicit basis lists.

Subsets are bitmasks.  Ranks come straight from the basis list
(r(A) = max |A & B| over bases), which keeps every minor, dual, and
connectivity computation exact and dependency-free.
"""

import itertools


class MatroidError(ValueError):
    pass


def _as_mask(subset):
    if isinstance(subset, int):
        return subset
    mask = 0
    for e in subset:
        mask |= 1 << e
    return mask


def _bits(mask):
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


class Matroid:
    __slots__ = ("ground_size", "bases", "rank", "_rank_cache", "_flats")

    def __init__(self, ground_size, bases, validate=True):
        self.ground_size = ground_size
        self.bases = frozenset(bases)
        if not self.bases:
            raise MatroidError("a matroid needs at least one basis")
        full = (1 << ground_size) - 1
        sizes = set()
        for b in self.bases:
            if b & ~full:
                raise MatroidError("basis uses elements outside the ground set")
            sizes.add(b.bit_count())
        if len(sizes) != 1:
            raise MatroidError("bases have different sizes")
        self.rank = sizes.pop()
        self._rank_cache = {}
        self._flats = None
        if validate:
            self._check_exchange()

    def _check_exchange(self):
        bases = list(self.bases)
        basis_set = self.bases
        for b1 in bases:
            for b2 in bases:
                if b1 == b2:
                    continue
                only1 = b1 & ~b2
                only2 = b2 & ~b1
                for e in _bits(only1):
                    stripped = b1 ^ (1 << e)
                    if not any(
                        stripped | (1 << f) in basis_set for f in _bits(only2)
                    ):
                        raise MatroidError("basis exchange axiom fails")

    @classmethod
    def from_bases(cls, ground_size, bases, validate=True):
        return cls(ground_size, (_as_mask(b) for b in bases), validate=validate)

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.ground_size == other.ground_size
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.ground_size, self.bases))

    def __repr__(self):
        return (
            f"Matroid(ground_size={self.ground_size}, rank={self.rank}, "
            f"bases={len(self.bases)})"
        )

    def full_mask(self):
        return (1 << self.ground_size) - 1

    def rank_of(self, subset):
        mask = _as_mask(subset)
        cached = self._rank_cache.get(mask)
        if cached is not None:
            return cached
        r = max((mask & b).bit_count() for b in self.bases)
        self._rank_cache[mask] = r
        return r

    def is_independent(self, subset):
        mask = _as_mask(subset)
        return self.rank_of(mask) == mask.bit_count()

    def independent_sets(self):
        """All independent subsets, as masks."""
        seen = set()
        for b in self.bases:
            stack = [b]
            while stack:
                s = stack.pop()
                if s in seen:
                    continue
                seen.add(s)
                rest = s
                while rest:
                    low = rest & -rest
                    stack.append(s ^ low)
                    rest ^= low
        return seen

    def closure(self, subset):
        mask = _as_mask(subset)
        r = self.rank_of(mask)
        out = mask
        for e in range(self.ground_size):
            bit = 1 << e
            if not mask & bit and self.rank_of(mask | bit) == r:
                out |= bit
        return out

    def flats(self):
        if self._flats is None:
            found = set()
            for mask in range(1 << self.ground_size):
                found.add(self.closure(mask))
            self._flats = tuple(sorted(found))
        return self._flats

    def loops(self):
        return self.closure(0)

    def is_loopless(self):
        return self.loops() == 0

    def is_indecomposable(self, subset):
        """No split A = A1 | A2 into nonempty parts with additive rank."""
        mask = _as_mask(subset)
        if mask == 0:
            raise MatroidError("indecomposability is about nonempty sets")
        low = mask & -mask
        rest = mask ^ low
        r = self.rank_of(mask)
        # one side always contains the lowest element; sub = 0 (that element
        # alone) is a split that must be checked too
        sub = rest
        while True:
            if sub != rest:
                part = sub | low
                other = mask ^ part
                if self.rank_of(part) + self.rank_of(other) == r:
                    return False
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return True

    def indecomposable_flats(self):
        return tuple(f for f in self.flats() if f and self.is_indecomposable(f))

    def is_connected(self):
        if self.ground_size == 0:
            return False
        if self.ground_size == 1:
            return True
        return self.is_indecomposable(self.full_mask())

    def parallel_classes(self):
        """Rank-one flats; requires a loopless matroid."""
        if not self.is_loopless():
            raise MatroidError("parallel classes need a loopless matroid")
        classes = {self.closure(1 << e) for e in range(self.ground_size)}
        return tuple(sorted(classes))

    def _compress(self, mask, elements):
        out = 0
        for new, old in enumerate(elements):
            if mask >> old & 1:
                out |= 1 << new
        return out

    def restriction(self, subset):
        mask = _as_mask(subset)
        elements = _bits(mask)
        target = self.rank_of(mask)
        new_bases = {
            self._compress(b & mask, elements)
            for b in self.bases
            if (b & mask).bit_count() == target
        }
        return Matroid(len(elements), new_bases, validate=False)

    def contraction(self, subset):
        mask = _as_mask(subset)
        keep = self.full_mask() ^ mask
        elements = _bits(keep)
        target = self.rank_of(mask)
        new_bases = {
            self._compress(b & keep, elements)
            for b in self.bases
            if (b & mask).bit_count() == target
        }
        return Matroid(len(elements), new_bases, validate=False)

    def deletion(self, subset):
        mask = _as_mask(subset)
        return self.restriction(self.full_mask() ^ mask)

    def dual(self):
        full = self.full_mask()
        return Matroid(self.ground_size, {full ^ b for b in self.bases}, validate=False)

    def direct_sum(self, other):
        shift = self.ground_size
        bases = {
            b1 | (b2 << shift) for b1 in self.bases for b2 in other.bases
        }
        return Matroid(self.ground_size + other.ground_size, bases, validate=False)

    def is_flacet(self, subset):
        """Proper nonempty flat whose restriction and contraction are connected."""
        mask = _as_mask(subset)
        if mask == 0 or mask == self.full_mask():
            return False
        if self.closure(mask) != mask:
            return False
        return self.restriction(mask).is_connected() and self.contraction(
            mask
        ).is_connected()

    def flacets(self):
        full = self.full_mask()
        return tuple(
            f for f in self.flats() if f and f != full and self.is_flacet(f)
        )

    def to_dict(self):
        return {
            "ground_size": self.ground_size,
            "bases": sorted(_bits(b) for b in self.bases),
        }

    @classmethod
    def from_dict(cls, data):
        return cls.from_bases(
            int(data["ground_size"]), [list(map(int, b)) for b in data["bases"]]
        )


def uniform_matroid(rank, n):
    if not 0 <= rank <= n:
        raise MatroidError("uniform matroid needs 0 <= rank <= n")
    bases = set()
    for combo in itertools.combinations(range(n), rank):
        bases.add(_as_mask(combo))
    return Matroid(n, bases, validate=False)
