"""Finite posets given by cover relations, with bitmask subset enumeration."""


class PosetError(ValueError):
    pass


class Poset:
    __slots__ = ("element_count", "covers", "labels", "_lt")

    def __init__(self, element_count, covers, labels=None):
        self.element_count = element_count
        self.covers = tuple(sorted((int(a), int(b)) for a, b in covers))
        if labels is None:
            labels = tuple(str(i) for i in range(element_count))
        self.labels = tuple(labels)
        if len(self.labels) != element_count:
            raise PosetError("label count disagrees with element count")
        for a, b in self.covers:
            if not (0 <= a < element_count and 0 <= b < element_count):
                raise PosetError("cover endpoint outside element range")
            if a == b:
                raise PosetError("cover relates an element to itself")
        self._lt = self._strictly_below()

    def _strictly_below(self):
        n = self.element_count
        above = [[] for _ in range(n)]
        indeg = [0] * n
        for a, b in self.covers:
            above[a].append(b)
            indeg[b] += 1
        order = [v for v in range(n) if indeg[v] == 0]
        head = 0
        lt = [0] * n
        while head < len(order):
            v = order[head]
            head += 1
            for w in above[v]:
                lt[w] |= lt[v] | (1 << v)
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        if len(order) != n:
            raise PosetError("cover relations contain a cycle")
        return tuple(lt)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.element_count == other.element_count
            and self.covers == other.covers
        )

    def __hash__(self):
        return hash((self.element_count, self.covers))

    def __repr__(self):
        return f"Poset(elements={self.element_count}, covers={list(self.covers)})"

    def strictly_below(self, i):
        return self._lt[i]

    def strictly_above(self, i):
        mask = 0
        for j in range(self.element_count):
            if self._lt[j] >> i & 1:
                mask |= 1 << j
        return mask

    def less(self, a, b):
        return self._lt[b] >> a & 1

    def leq(self, a, b):
        return a == b or self.less(a, b)

    def comparable(self, a, b):
        return self.less(a, b) or self.less(b, a)

    def ideal_masks(self):
        """Downward closed subsets."""
        n = self.element_count
        out = []
        for mask in range(1 << n):
            ok = True
            probe = mask
            while probe:
                low = probe & -probe
                if self._lt[low.bit_length() - 1] & ~mask:
                    ok = False
                    break
                probe ^= low
            if ok:
                out.append(mask)
        return out

    def antichain_masks(self):
        """Pairwise incomparable subsets, enumerated independently of ideals."""
        n = self.element_count
        out = []
        for mask in range(1 << n):
            ok = True
            probe = mask
            while probe and ok:
                low = probe & -probe
                i = low.bit_length() - 1
                probe ^= low
                if (self._lt[i] | self.strictly_above(i)) & mask:
                    ok = False
            if ok:
                out.append(mask)
        return out

    def comparability_edges(self):
        return [
            (a, b)
            for a in range(self.element_count)
            for b in range(a + 1, self.element_count)
            if self.comparable(a, b)
        ]

    def _has_incomparable_pair(self, mask):
        probe = mask
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            probe ^= low
            others = mask & ~(1 << i)
            comp = self._lt[i] | self.strictly_above(i)
            if others & ~comp:
                return True
        return False

    def has_x_shape(self):
        """Some element has two incomparable elements strictly below it and
        two incomparable elements strictly above it."""
        for c in range(self.element_count):
            below = self._lt[c]
            if below.bit_count() < 2 or not self._has_incomparable_pair(below):
                continue
            above = self.strictly_above(c)
            if above.bit_count() >= 2 and self._has_incomparable_pair(above):
                return True
        return False

    def to_dict(self):
        return {
            "element_count": self.element_count,
            "covers": [list(c) for c in self.covers],
            "labels": list(self.labels),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            int(data["element_count"]),
            [tuple(int(x) for x in c) for c in data["covers"]],
            labels=data.get("labels"),
        )
