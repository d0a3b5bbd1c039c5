"""Finite group engine: enumerated groups and the standard subgroup algorithms.

Groups are built as construction trees (cyclic leaves, field-additive
leaves, direct and semidirect pair nodes, quotients) and enumerated up
front.  Every element carries a dense integer id; id 0 is always the
identity.  For tree-built groups the ids are breadth-first discovery
ranks over the Cayley graph: start from the identity and repeatedly
right-multiply by the generators in a fixed order.  Quotient groups
instead use ascending minimal-coset-representative order, which is the
deterministic analogue at the quotient level.

All queries after construction are pure.  Caches (element orders,
conjugacy classes, Sylow subgroups, the normal lattice) are filled
idempotently, so concurrent readers can at worst duplicate work.

Algorithm notes, since several follow less-travelled routes:

- closure() uses Dimino's method: when a new generator g is absorbed,
  the enlarged subgroup is filled in whole right-cosets of the previous
  subgroup, so the total cost is proportional to the answer's size, not
  to its square.
- Subgroup products never materialize all pairs; membership tests go
  through per-subgroup frozensets.
- Verification of action/automorphism laws checks every generator
  against every element.  That is a complete proof, not a sample: the
  set of elements satisfying a one-sided homomorphism law against all
  partners is closed under products, so containing the generators
  forces it to be the whole group.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    BadParams,
    GeneratorsDoNotGenerate,
    InvalidAction,
    LatticeCapExceeded,
    NotNormal,
    PrimeDoesNotDivide,
    SizeCapExceeded,
    UnknownElement,
)
from .fields import FieldSpec
from .numtheory import is_prime, is_prime_power_of, p_part

DEFAULT_ELEMENT_CAP = 10**6
DEFAULT_LATTICE_CAP = 10**4

# Below this order a dense composition table is cheap and pays for itself
# in the scan-heavy algorithms.
_TABLE_LIMIT = 200


@dataclass(frozen=True)
class CyclicElement:
    """Residue in a cyclic leaf."""

    value: int


@dataclass(frozen=True)
class VectorElement:
    """Element of a field-additive leaf: coefficient tuple, constant first."""

    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class PairElement:
    """Node of a direct or semidirect pair: (kernel part, acting part)."""

    left: "GroupElement"
    right: "GroupElement"


GroupElement = CyclicElement | VectorElement | PairElement


class Subgroup:
    """A verified subgroup: ambient group, sorted ids, and generating ids."""

    __slots__ = ("group", "ids", "gens", "_idset")

    def __init__(self, group: "FiniteGroup", ids: Sequence[int], gens: Sequence[int]):
        self.group = group
        self.ids = tuple(ids)
        self.gens = tuple(gens)
        self._idset: frozenset[int] | None = None

    @property
    def order(self) -> int:
        return len(self.ids)

    @property
    def idset(self) -> frozenset[int]:
        if self._idset is None:
            self._idset = frozenset(self.ids)
        return self._idset

    def __contains__(self, i: int) -> bool:
        return i in self.idset

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group is other.group
            and self.ids == other.ids
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.ids))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.group!r})"

    def is_abelian(self) -> bool:
        """Pairwise commuting generators force the whole subgroup abelian."""
        comp = self.group.compose
        g = self.gens
        return all(
            comp(g[i], g[j]) == comp(g[j], g[i])
            for i in range(len(g))
            for j in range(i + 1, len(g))
        )

    def is_normal(self) -> bool:
        """Conjugate the generators by the ambient generators.

        Conjugation by g maps this subgroup into itself iff it maps the
        generators into it, and invariance under generating conjugations
        extends to the whole ambient group.
        """
        G = self.group
        comp = G.compose
        inside = self.idset
        for g in G.gens:
            gi = G.invert(g)
            for s in self.gens:
                if comp(comp(g, s), gi) not in inside:
                    return False
        return True


class Action:
    """Tabulated action of a quotient-factor group on a kernel group.

    rows[g][h] is the id of the image of kernel element h under the
    automorphism attached to acting element g.  Construction verifies,
    by complete generator induction, that every row is an automorphism
    and that rows compose like the acting group.
    """

    __slots__ = ("kernel", "acting", "rows")

    def __init__(
        self, kernel: "FiniteGroup", acting: "FiniteGroup", rows: list[list[int]]
    ):
        self.kernel = kernel
        self.acting = acting
        self.rows = rows
        self._verify()

    @classmethod
    def tabulate(
        cls,
        kernel: "FiniteGroup",
        acting: "FiniteGroup",
        fn: Callable[[int, int], int],
    ) -> "Action":
        """Evaluate fn(acting-id, kernel-id) over the full grid and verify."""
        nk = kernel.order
        rows = [[fn(g, h) for h in range(nk)] for g in range(acting.order)]
        return cls(kernel, acting, rows)

    def apply(self, g: int, h: int) -> int:
        return self.rows[g][h]

    def _verify(self) -> None:
        nk = self.kernel.order
        rows = self.rows
        if len(rows) != self.acting.order or any(len(r) != nk for r in rows):
            raise InvalidAction("table shape does not match the groups")
        for g, row in enumerate(rows):
            if row[0] != 0:
                raise InvalidAction(f"row {g} moves the identity")
            if len(set(row)) != nk or min(row) < 0 or max(row) >= nk:
                raise InvalidAction(f"row {g} is not a bijection of the kernel")
        if rows and any(rows[0][h] != h for h in range(nk)):
            raise InvalidAction("identity row is not the identity map")
        kcomp = self.kernel.compose
        for g, row in enumerate(rows):
            for k in self.kernel.gens:
                rk = row[k]
                for h in range(nk):
                    if row[kcomp(k, h)] != kcomp(rk, row[h]):
                        raise InvalidAction(
                            f"row {g} fails the homomorphism law at generator {k}"
                        )
        acomp = self.acting.compose
        for g1 in self.acting.gens:
            r1 = rows[g1]
            for g2 in range(len(rows)):
                r2 = rows[g2]
                r12 = rows[acomp(g1, g2)]
                for h in range(nk):
                    if r12[h] != r1[r2[h]]:
                        raise InvalidAction(
                            f"rows at {g1}*{g2} do not compose functorially"
                        )


def trivial_action(kernel: "FiniteGroup", acting: "FiniteGroup") -> Action:
    row = list(range(kernel.order))
    return Action(kernel, acting, [list(row) for _ in range(acting.order)])


class FiniteGroup:
    """Base engine: a fully enumerated group addressed by dense ids.

    Subclasses provide the primitive layer (compose, invert, element,
    index, order, gens); this class provides every algorithm on top of
    it.  Id 0 is the identity everywhere.
    """

    order: int
    gens: tuple[int, ...]

    def __init__(self, cap: int):
        self._cap = cap
        self._table: list[list[int]] | None = None
        self._orders: list[int] | None = None
        self._classes: list[tuple[int, ...]] | None = None
        self._normals: list[Subgroup] | None = None
        self._sylows: dict[int, Subgroup] = {}
        self._whole: Subgroup | None = None
        self._abelian: bool | None = None

    # -- primitive layer -------------------------------------------------

    def _compose_ids(self, i: int, j: int) -> int:
        raise NotImplementedError

    def invert(self, i: int) -> int:
        raise NotImplementedError

    def element(self, i: int) -> GroupElement:
        raise NotImplementedError

    def index(self, e: GroupElement) -> int:
        raise NotImplementedError

    def _check_cap(self, predicted: int) -> None:
        if predicted > self._cap:
            raise SizeCapExceeded(
                f"group of order {predicted} exceeds the element cap {self._cap}"
            )

    def _finish(self) -> None:
        """Install the fast composition path; call at the end of __init__."""
        if self.order <= _TABLE_LIMIT:
            base = self._compose_ids
            tab = [[base(i, j) for j in range(self.order)] for i in range(self.order)]
            self._table = tab
            self.compose = lambda i, j, _t=tab: _t[i][j]  # type: ignore[assignment]
        else:
            self.compose = self._compose_ids  # type: ignore[assignment]

    def compose(self, i: int, j: int) -> int:  # overwritten by _finish
        return self._compose_ids(i, j)

    # -- enumeration helpers ---------------------------------------------

    def ids(self) -> range:
        return range(self.order)

    def elements(self) -> Iterator[GroupElement]:
        return (self.element(i) for i in range(self.order))

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.compose(self.compose(g, x), self.invert(g))

    def element_order(self, i: int) -> int:
        comp = self.compose
        k = 1
        x = i
        while x != 0:
            x = comp(x, i)
            k += 1
        return k

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [self.element_order(i) for i in range(self.order)]
        return self._orders

    def exponent_of(self, ids: Iterable[int]) -> int:
        out = 1
        orders = self.element_orders()
        for i in ids:
            out = math.lcm(out, orders[i])
        return out

    def is_abelian(self) -> bool:
        if self._abelian is None:
            comp = self.compose
            g = self.gens
            self._abelian = all(
                comp(g[i], g[j]) == comp(g[j], g[i])
                for i in range(len(g))
                for j in range(i + 1, len(g))
            )
        return self._abelian

    # -- subgroup machinery ----------------------------------------------

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, (0,), ())

    def whole_subgroup(self) -> Subgroup:
        if self._whole is None:
            self._whole = self.closure(self.gens)
            if self._whole.order != self.order:
                raise GeneratorsDoNotGenerate(
                    f"generators span {self._whole.order} of {self.order} elements"
                )
        return self._whole

    def closure(self, seed: Iterable[int]) -> Subgroup:
        """Least subgroup containing the seed ids (Dimino coset filling).

        The returned generators are the seed entries that actually
        enlarged the subgroup, in seed order.  Once the partial subgroup
        passes half the group order it must be the whole group by
        Lagrange, so the scan stops early.
        """
        comp = self.compose
        elems = [0]
        inset = {0}
        used: list[int] = []
        for g in seed:
            if g in inset:
                continue
            used.append(g)
            prev = list(elems)
            reps = [g]
            ri = 0
            while ri < len(reps):
                r = reps[ri]
                ri += 1
                if r in inset:
                    continue
                for l in prev:
                    t = comp(l, r)
                    if t not in inset:
                        inset.add(t)
                        elems.append(t)
                for h in used:
                    reps.append(comp(r, h))
            if 2 * len(elems) > self.order:
                return Subgroup(self, range(self.order), tuple(used))
        return Subgroup(self, sorted(elems), tuple(used))

    def _subgroup_from_ids(self, ids: Sequence[int]) -> Subgroup:
        """Wrap an already-closed id set, recovering a small generating set."""
        s = self.closure(sorted(set(ids)))
        if s.order != len(set(ids)):
            raise AssertionError("id set was not composition-closed")
        return s

    def centralizer(self, target: Subgroup | Iterable[int]) -> Subgroup:
        """Elements commuting with the whole target.

        For a Subgroup the scan runs over its generators only: commuting
        with generators extends to all their products.
        """
        if isinstance(target, Subgroup):
            scan: tuple[int, ...] = target.gens
        else:
            scan = tuple(sorted(set(target)))
        comp = self.compose
        ids = [
            g
            for g in range(self.order)
            if all(comp(g, s) == comp(s, g) for s in scan)
        ]
        return self._subgroup_from_ids(ids)

    def center(self) -> Subgroup:
        return self.centralizer(self.whole_subgroup())

    def normalizer(self, target: Subgroup) -> Subgroup:
        """Elements g with g·S·g^-1 = S, tested on S's generators."""
        comp = self.compose
        inside = target.idset
        sgens = target.gens
        ids = []
        for g in range(self.order):
            gi = self.invert(g)
            if all(comp(comp(g, s), gi) in inside for s in sgens):
                ids.append(g)
        return self._subgroup_from_ids(ids)

    def derived_subgroup(self, sub: Subgroup | None = None) -> Subgroup:
        """Commutator subgroup of sub (default: of the whole group).

        Computed as the normal closure, within sub, of the commutators
        of sub's generators.  That equals the usual all-pairs commutator
        subgroup: the closure N makes sub/N abelian, so N contains every
        commutator, and conversely commutators of generators together
        with their sub-conjugates lie in the derived subgroup.
        """
        if sub is None:
            sub = self.whole_subgroup()
        comp = self.compose
        inv = self.invert
        seed: list[int] = []
        seen = set()
        for x in sub.gens:
            for y in sub.gens:
                c = comp(comp(comp(x, y), inv(x)), inv(y))
                if c and c not in seen:
                    seen.add(c)
                    seed.append(c)
        while True:
            n = self.closure(seed)
            extra = []
            for s in sub.gens:
                si = inv(s)
                for g in n.gens:
                    c = comp(comp(s, g), si)
                    if c not in n.idset:
                        extra.append(c)
            if not extra:
                return n
            seed = list(n.gens) + extra

    def derived_series(self) -> list[Subgroup]:
        """Descending commutator series starting at the whole group."""
        series = [self.whole_subgroup()]
        while True:
            nxt = self.derived_subgroup(series[-1])
            if nxt.order == series[-1].order:
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order == 1

    def derived_length(self) -> int:
        return len(self.derived_series()) - 1

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Conjugation orbits, each sorted, listed by least member.

        Orbits under repeated conjugation by the generators equal full
        group orbits: conjugation maps form a finite group, where the
        maps generated by the generators already include their inverses.
        """
        if self._classes is not None:
            return self._classes
        comp = self.compose
        pairs = [(g, self.invert(g)) for g in self.gens]
        seen = bytearray(self.order)
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            seen[i] = 1
            orbit = [i]
            qi = 0
            while qi < len(orbit):
                x = orbit[qi]
                qi += 1
                for g, gi in pairs:
                    y = comp(comp(g, x), gi)
                    if not seen[y]:
                        seen[y] = 1
                        orbit.append(y)
            classes.append(tuple(sorted(orbit)))
        self._classes = classes
        return classes

    def normal_subgroups(self, cap: int = DEFAULT_LATTICE_CAP) -> list[Subgroup]:
        """All normal subgroups, via class closures and pairwise joins.

        Every normal subgroup is a union of conjugacy classes and hence
        the join of the closures of the classes it contains, so closing
        the class-closure atoms under pairwise join yields exactly the
        normal lattice.
        """
        if self._normals is not None:
            return self._normals
        items: list[Subgroup] = []
        keys: set[tuple[int, ...]] = set()

        def push(s: Subgroup) -> None:
            if s.ids not in keys:
                keys.add(s.ids)
                items.append(s)
                if len(items) > cap:
                    raise LatticeCapExceeded(
                        f"normal lattice exceeds {cap} subgroups"
                    )

        for cls in self.conjugacy_classes():
            push(self.closure(cls))
        half = self.order // 2
        i = 0
        while i < len(items):
            a = items[i]
            for j in range(i):
                b = items[j]
                if a.idset <= b.idset or b.idset <= a.idset:
                    continue
                # |AB| = |A||B|/|A∩B| bounds the join from below; a join is
                # a subgroup, so a bound beyond |G|/2 forces the whole group.
                common = len(a.idset & b.idset)
                if a.order * b.order > half * common:
                    push(self.whole_subgroup())
                else:
                    push(self.closure(a.gens + b.gens))
            i += 1
        self._normals = sorted(items, key=lambda s: (s.order, s.ids))
        return self._normals

    def quotient(self, normal: Subgroup) -> "QuotientGroup":
        if normal.group is not self:
            raise BadParams("subgroup belongs to a different group")
        if not normal.is_normal():
            raise NotNormal("cannot quotient by a non-normal subgroup")
        return QuotientGroup(self, normal)

    def sylow(self, ell: int) -> Subgroup:
        """The Sylow ell-subgroup reached by deterministic normalizer ascent.

        Seed with the lowest-id element of maximal ell-power order, then
        repeatedly adjoin the lowest-id ell-element of the normalizer
        that is still outside; each step multiplies the order by at
        least ell, and normalizer ell-elements keep the extension an
        ell-group.
        """
        if ell in self._sylows:
            return self._sylows[ell]
        if not is_prime(ell):
            raise BadParams(f"{ell} is not prime")
        target = p_part(self.order, ell)
        if target == 1:
            raise PrimeDoesNotDivide(f"{ell} does not divide {self.order}")
        orders = self.element_orders()
        best = 0
        seed = -1
        for i, o in enumerate(orders):
            if o > best and is_prime_power_of(o, ell):
                best = o
                seed = i
        p = self.closure((seed,))
        while p.order < target:
            norm = self.normalizer(p)
            ext = -1
            for y in norm.ids:
                if y not in p.idset and is_prime_power_of(orders[y], ell):
                    ext = y
                    break
            if ext < 0:
                raise AssertionError("normalizer ascent stalled; unreachable")
            p = self.closure(p.ids + (ext,))
        if p.order != target:
            raise AssertionError("ascent overshot the Sylow order; unreachable")
        self._sylows[ell] = p
        return p


class CyclicGroup(FiniteGroup):
    """C_n with generator residue 1; ids equal residues.

    Breadth-first discovery from residue 1 visits 0, 1, 2, ... in order,
    so the direct residue table below is exactly the enumerated one.
    """

    def __init__(self, n: int, cap: int = DEFAULT_ELEMENT_CAP):
        super().__init__(cap)
        if n < 1:
            raise BadParams(f"cyclic order {n} must be positive")
        self._check_cap(n)
        self.n = n
        self.order = n
        self.gens = (1,) if n > 1 else ()
        self._finish()

    def _compose_ids(self, i: int, j: int) -> int:
        return (i + j) % self.n

    def invert(self, i: int) -> int:
        return (-i) % self.n

    def element(self, i: int) -> CyclicElement:
        if not 0 <= i < self.n:
            raise UnknownElement(f"id {i} out of range")
        return CyclicElement(i)

    def index(self, e: GroupElement) -> int:
        if not isinstance(e, CyclicElement) or not 0 <= e.value < self.n:
            raise UnknownElement(f"{e!r} is not in C_{self.n}")
        return e.value

    def __repr__(self) -> str:
        return f"C{self.n}"


class FieldAddGroup(FiniteGroup):
    """Additive group of a finite field, generated by the coefficient basis."""

    def __init__(self, field: FieldSpec, cap: int = DEFAULT_ELEMENT_CAP):
        super().__init__(cap)
        self._check_cap(field.order)
        self.field = field
        self.order = field.order
        basis = [
            tuple(1 if k == i else 0 for k in range(field.a))
            for i in range(field.a)
        ]
        # Breadth-first closure over coefficient tuples; discovery rank = id.
        vecs = [field.zero()]
        idx = {field.zero(): 0}
        qi = 0
        while qi < len(vecs):
            x = vecs[qi]
            qi += 1
            for g in basis:
                y = field.add(x, g)
                if y not in idx:
                    idx[y] = len(vecs)
                    vecs.append(y)
        if len(vecs) != field.order:
            raise GeneratorsDoNotGenerate("basis did not span the field")
        self._vec = vecs
        self._id_by_code = [0] * field.order
        for i, v in enumerate(vecs):
            self._id_by_code[field.encode(v)] = i
        self.gens = tuple(idx[b] for b in basis)
        self._neg = [self._id_by_code[field.encode(field.neg(v))] for v in vecs]
        self._p = field.p
        self._finish()

    def _compose_ids(self, i: int, j: int) -> int:
        f = self.field
        return self._id_by_code[f.encode(f.add(self._vec[i], self._vec[j]))]

    def invert(self, i: int) -> int:
        return self._neg[i]

    def element(self, i: int) -> VectorElement:
        if not 0 <= i < self.order:
            raise UnknownElement(f"id {i} out of range")
        return VectorElement(self._vec[i])

    def index(self, e: GroupElement) -> int:
        if not isinstance(e, VectorElement):
            raise UnknownElement(f"{e!r} is not a field vector")
        f = self.field
        if len(e.coeffs) != f.a or any(not 0 <= c < f.p for c in e.coeffs):
            raise UnknownElement(f"{e!r} is not reduced for GF({f.p}^{f.a})")
        return self._id_by_code[f.encode(e.coeffs)]

    def id_of_coeffs(self, coeffs: Sequence[int]) -> int:
        return self._id_by_code[self.field.encode(self.field.element(coeffs))]

    def scalar_row(self, unit) -> list[int]:
        """Permutation of ids induced by multiplication by a fixed unit."""
        f = self.field
        code = self._id_by_code
        return [code[f.encode(f.mul(unit, v))] for v in self._vec]

    def __repr__(self) -> str:
        return f"F{self.field.p}^{self.field.a}+"


class _PairGroup(FiniteGroup):
    """Shared machinery for direct and semidirect pair nodes."""

    def __init__(self, left: FiniteGroup, right: FiniteGroup, cap: int):
        super().__init__(cap)
        self.left = left
        self.right = right
        predicted = left.order * right.order
        self._check_cap(predicted)
        self.order = predicted
        self._nr = right.order

    def _bfs(self, twist: Callable[[int, int], int]) -> None:
        """Enumerate by breadth-first right-multiplication by generators.

        States are (left-id, right-id) pairs packed as left*|R| + right;
        the pair coding commutes with composition, so discovery ranks
        match the element-tree enumeration exactly.
        """
        nr = self._nr
        lcomp = self.left.compose
        rcomp = self.right.compose
        gen_pairs = [(gl, 0) for gl in self.left.gens] + [
            (0, gr) for gr in self.right.gens
        ]
        id_of_code = [-1] * self.order
        id_of_code[0] = 0
        l_of = [0]
        r_of = [0]
        qi = 0
        while qi < len(l_of):
            l1 = l_of[qi]
            r1 = r_of[qi]
            qi += 1
            for gl, gr in gen_pairs:
                l = lcomp(l1, twist(r1, gl))
                r = rcomp(r1, gr)
                code = l * nr + r
                if id_of_code[code] < 0:
                    id_of_code[code] = len(l_of)
                    l_of.append(l)
                    r_of.append(r)
        if len(l_of) != self.order:
            raise GeneratorsDoNotGenerate(
                f"pair generators reached {len(l_of)} of {self.order} elements"
            )
        self._l_of = l_of
        self._r_of = r_of
        self._id_of_code = id_of_code
        self.gens = tuple(
            dict.fromkeys(
                id_of_code[gl * nr + gr] for gl, gr in gen_pairs
            )
        )

    def pair_of(self, i: int) -> tuple[int, int]:
        return self._l_of[i], self._r_of[i]

    def id_of_pair(self, l: int, r: int) -> int:
        return self._id_of_code[l * self._nr + r]

    def element(self, i: int) -> PairElement:
        if not 0 <= i < self.order:
            raise UnknownElement(f"id {i} out of range")
        return PairElement(
            self.left.element(self._l_of[i]), self.right.element(self._r_of[i])
        )

    def index(self, e: GroupElement) -> int:
        if not isinstance(e, PairElement):
            raise UnknownElement(f"{e!r} is not a pair element")
        code = self.left.index(e.left) * self._nr + self.right.index(e.right)
        i = self._id_of_code[code]
        if i < 0:
            raise UnknownElement("pair code missing from the table")
        return i


class DirectProductGroup(_PairGroup):
    """Coordinatewise product of two enumerated groups."""

    def __init__(
        self, left: FiniteGroup, right: FiniteGroup, cap: int = DEFAULT_ELEMENT_CAP
    ):
        super().__init__(left, right, cap)
        self._bfs(lambda r, gl: gl)
        self._finish()

    def _compose_ids(self, i: int, j: int) -> int:
        l = self.left.compose(self._l_of[i], self._l_of[j])
        r = self.right.compose(self._r_of[i], self._r_of[j])
        return self._id_of_code[l * self._nr + r]

    def invert(self, i: int) -> int:
        l = self.left.invert(self._l_of[i])
        r = self.right.invert(self._r_of[i])
        return self._id_of_code[l * self._nr + r]

    def __repr__(self) -> str:
        return f"({self.left!r} x {self.right!r})"


class SemidirectProductGroup(_PairGroup):
    """Kernel-by-acting pair with (h1,g1)(h2,g2) = (h1 * g1.h2, g1 g2)."""

    def __init__(
        self,
        kernel: FiniteGroup,
        acting: FiniteGroup,
        action: Action,
        cap: int = DEFAULT_ELEMENT_CAP,
    ):
        if action.kernel is not kernel or action.acting is not acting:
            raise InvalidAction("action was tabulated for different groups")
        super().__init__(kernel, acting, cap)
        self.action = action
        rows = action.rows
        self._bfs(lambda r, gl: rows[r][gl])
        self._finish()

    def _compose_ids(self, i: int, j: int) -> int:
        l = self.left.compose(self._l_of[i], self.action.rows[self._r_of[i]][self._l_of[j]])
        r = self.right.compose(self._r_of[i], self._r_of[j])
        return self._id_of_code[l * self._nr + r]

    def invert(self, i: int) -> int:
        r = self.right.invert(self._r_of[i])
        l = self.action.rows[r][self.left.invert(self._l_of[i])]
        return self._id_of_code[l * self._nr + r]

    def __repr__(self) -> str:
        return f"({self.left!r} : {self.right!r})"


class QuotientGroup(FiniteGroup):
    """G/N addressed by minimal-id coset representatives.

    Scanning parent ids in ascending order and claiming whole cosets
    makes each first-touched id the minimum of its coset, so qids are
    ordered by minimal representative and qid 0 is the identity coset.
    """

    def __init__(self, parent: FiniteGroup, normal: Subgroup):
        super().__init__(parent._cap)
        self.parent = parent
        self.normal = normal
        reps: list[int] = []
        qid_of = [-1] * parent.order
        comp = parent.compose
        for x in range(parent.order):
            if qid_of[x] >= 0:
                continue
            q = len(reps)
            reps.append(x)
            for n_id in normal.ids:
                qid_of[comp(x, n_id)] = q
        if len(reps) * normal.order != parent.order:
            raise AssertionError("cosets do not tile the parent; unreachable")
        self._rep = reps
        self._qid_of = qid_of
        self.order = len(reps)
        self.gens = tuple(
            dict.fromkeys(q for q in (qid_of[g] for g in parent.gens) if q != 0)
        )
        self._finish()

    def _compose_ids(self, i: int, j: int) -> int:
        return self._qid_of[self.parent.compose(self._rep[i], self._rep[j])]

    def invert(self, i: int) -> int:
        return self._qid_of[self.parent.invert(self._rep[i])]

    def element(self, i: int) -> GroupElement:
        """The minimal coset representative's element tree."""
        return self.parent.element(self._rep[i])

    def index(self, e: GroupElement) -> int:
        """Qid of the coset containing the given parent element."""
        return self._qid_of[self.parent.index(e)]

    def nat(self, parent_id: int) -> int:
        """The natural projection on ids."""
        return self._qid_of[parent_id]

    def rep(self, qid: int) -> int:
        return self._rep[qid]

    def preimage_ids(self, qids: Iterable[int]) -> tuple[int, ...]:
        wanted = set(qids)
        qid_of = self._qid_of
        return tuple(
            x for x in range(self.parent.order) if qid_of[x] in wanted
        )

    def __repr__(self) -> str:
        return f"({self.parent!r})/(order {self.normal.order})"
