"""0-Hecke modules given by combinatorial action tables.

Each generator pi_i sends a basis element to itself (fix), to zero (kill) or
to another basis element (move). The table stores the image label, or
``None`` for zero.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .comb_core import Composition, as_composition, comp_of, complement
from .errors import CertificateError, DomainError
from .permutation import Perm, des_L, interval, leq_L, s_left
from .qsym import QSym, f_elem, zero
from .tableaux import Filling, canonical, enumerate_family, row_word

Label = Hashable
FIX, KILL, MOVE = "fix", "kill", "move"


@dataclass(frozen=True, eq=False)
class CombModule:
    n: int
    basis: tuple[Label, ...]
    table: dict[tuple[int, Label], Label | None] = field(repr=False)
    name: str = ""

    def act(self, i: int, b: Label | None) -> Label | None:
        if b is None:
            return None
        return self.table[(i, b)]

    def act_word(self, word: Sequence[int], b: Label | None) -> Label | None:
        """pi_{w1} pi_{w2} ... pi_{wp} applied to b (rightmost first)."""
        for i in reversed(word):
            b = self.act(i, b)
        return b

    def outcome(self, i: int, b: Label) -> str | tuple[str, Label]:
        t = self.table[(i, b)]
        if t is None:
            return KILL
        if t == b:
            return FIX
        return (MOVE, t)

    def descent(self, b: Label) -> frozenset[int]:
        return frozenset(i for i in range(1, self.n) if self.table[(i, b)] == b)

    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CombModule):
            return NotImplemented
        return (
            self.n == other.n
            and set(self.basis) == set(other.basis)
            and self.table == other.table
        )

    __hash__ = None  # type: ignore[assignment]


def build_module(
    n: int,
    basis: Iterable[Label],
    rule: Callable[[int, Label], Label | None],
    name: str = "",
) -> CombModule:
    basis = tuple(basis)
    members = set(basis)
    table = {}
    for b in basis:
        for i in range(1, n):
            t = rule(i, b)
            if t is not None and t not in members:
                raise CertificateError(f"pi_{i} sends {b} outside the basis")
            table[(i, b)] = t
    return CombModule(n, basis, table, name)


def interval_module(lo: Perm, hi: Perm) -> CombModule:
    if not leq_L(lo, hi):
        raise DomainError("interval module needs lo <=_L hi")
    elems = interval(lo, hi)

    def rule(i: int, g: Perm) -> Perm | None:
        if i in des_L(g):
            return g
        up = s_left(i, g)
        return up if up in elems else None

    return build_module(len(lo), sorted(elems), rule, "B")


def _position_rule(kind: str) -> Callable[[int, Filling], Filling | None]:
    def rule(i: int, t: Filling) -> Filling | None:
        (ri, ci), (rj, cj) = t.positions[i], t.positions[i + 1]
        if kind == "V":
            if ri >= rj:
                return t
            if ci == 1 and cj == 1:
                return None
        else:
            if ci < cj:
                return t
            if ci == cj:
                return None
        return t.swap_values(i, i + 1)

    return rule


def module_V(alpha: Sequence[int]) -> CombModule:
    alpha = as_composition(alpha)
    return build_module(sum(alpha), enumerate_family("SIT", alpha), _position_rule("V"), "V")


def module_X(alpha: Sequence[int]) -> CombModule:
    alpha = as_composition(alpha)
    return build_module(sum(alpha), enumerate_family("SET", alpha), _position_rule("X"), "X")


def verify_relations(m: CombModule) -> bool:
    for b in m.basis:
        for i in range(1, m.n):
            if m.act_word((i, i), b) != m.act(i, b):
                return False
            if i + 1 < m.n and m.act_word((i, i + 1, i), b) != m.act_word((i + 1, i, i + 1), b):
                return False
            for j in range(i + 2, m.n):
                if m.act_word((i, j), b) != m.act_word((j, i), b):
                    return False
    return True


def is_basis_submodule(m: CombModule, subset: Iterable[Label]) -> bool:
    s = set(subset)
    return all(m.act(i, b) is None or m.act(i, b) in s for b in s for i in range(1, m.n))


def characteristic(
    m: CombModule, subset: Iterable[Label] | None = None, below: Iterable[Label] = ()
) -> QSym:
    """Characteristic of span(subset)/span(below) as F-expansion."""
    s = set(m.basis if subset is None else subset)
    s0 = set(below)
    if not s0 <= s:
        raise DomainError("the lower set must be contained in the upper set")
    if not (is_basis_submodule(m, s) and is_basis_submodule(m, s0)):
        raise DomainError("characteristic needs action-closed basis subsets")
    out = zero(m.n)
    for b in m.basis:
        if b in s and b not in s0:
            out = out + f_elem(complement(comp_of(m.descent(b), m.n)))
    return out


def quotient(m: CombModule, subset: Iterable[Label]) -> CombModule:
    s = set(subset)
    basis = tuple(b for b in m.basis if b not in s)
    table = {}
    for b in basis:
        for i in range(1, m.n):
            t = m.table[(i, b)]
            table[(i, b)] = None if t in s else t
    return CombModule(m.n, basis, table, m.name + "/")


def submodule(m: CombModule, subset: Iterable[Label]) -> CombModule:
    s = set(subset)
    if not is_basis_submodule(m, s):
        raise DomainError("subset is not action-closed")
    basis = tuple(b for b in m.basis if b in s)
    return CombModule(m.n, basis, {k: v for k, v in m.table.items() if k[1] in s}, m.name)


def phi_twist(m: CombModule) -> CombModule:
    table = {(i, b): m.table[(m.n - i, b)] for (i, b) in m.table}
    return CombModule(m.n, m.basis, table, m.name + "^phi")


def relabel(m: CombModule, f: Callable[[Label], Label]) -> CombModule:
    table = {(i, f(b)): (None if t is None else f(t)) for (i, b), t in m.table.items()}
    return CombModule(m.n, tuple(f(b) for b in m.basis), table, m.name)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    src: CombModule
    dst: CombModule
    assignment: dict[Label, Label | None]
    name: str = ""

    def __call__(self, b: Label | None) -> Label | None:
        return None if b is None else self.assignment[b]


def hom_check(f: ModuleMap) -> bool:
    if f.src.n != f.dst.n:
        return False
    dst = set(f.dst.basis)
    if any(v is not None and v not in dst for v in f.assignment.values()):
        return False
    return all(
        f(f.src.act(i, b)) == f.dst.act(i, f(b))
        for b in f.src.basis
        for i in range(1, f.src.n)
    )


def is_surjective(f: ModuleMap) -> bool:
    return {v for v in f.assignment.values() if v is not None} == set(f.dst.basis)


def iso_check(f: ModuleMap) -> bool:
    images = [f.assignment[b] for b in f.src.basis]
    return (
        hom_check(f)
        and None not in images
        and len(set(images)) == len(images) == len(f.dst.basis)
        and is_surjective(f)
    )


def theta_V(alpha: Sequence[int]) -> ModuleMap:
    alpha = as_composition(alpha)
    v = module_V(alpha)
    b = interval_module(row_word(canonical("calT", alpha)), row_word(canonical("calT_prime", alpha)))
    return ModuleMap(v, b, {t: row_word(t) for t in v.basis}, "Theta_V")


def theta_X(alpha: Sequence[int]) -> ModuleMap:
    alpha = as_composition(alpha)
    x = module_X(alpha)
    b = interval_module(row_word(canonical("sfT", alpha)), row_word(canonical("sfT_prime", alpha)))
    return ModuleMap(x, b, {t: row_word(t) for t in x.basis}, "Theta_X")


def gamma_map(alpha: Sequence[int]) -> ModuleMap:
    alpha = as_composition(alpha)
    v, x = module_V(alpha), module_X(alpha)
    keep = set(x.basis)
    f = ModuleMap(v, x, {t: (t if t in keep else None) for t in v.basis}, "Gamma")
    if not hom_check(f):
        raise CertificateError(f"Gamma is not a module map for {alpha}")
    return f


def canonical_quotient(alpha: Sequence[int]) -> CombModule:
    """X_alpha modulo the span of the SETs that are not column-increasing SYCTs."""
    alpha = as_composition(alpha)
    x = module_X(alpha)
    keep = set(enumerate_family("SYCT_C", alpha))
    if not keep <= set(x.basis):
        raise CertificateError(f"some column-increasing SYCT of shape {alpha} is not an SET")
    killed = [t for t in x.basis if t not in keep]
    if not is_basis_submodule(x, killed):
        raise CertificateError(f"the kill set of shape {alpha} is not action-closed")
    q = quotient(x, killed)
    return CombModule(q.n, q.basis, q.table, "S_C")


def eta_map(alpha: Sequence[int]) -> ModuleMap:
    alpha = as_composition(alpha)
    x, q = module_X(alpha), canonical_quotient(alpha)
    keep = set(q.basis)
    f = ModuleMap(x, q, {t: (t if t in keep else None) for t in x.basis}, "eta")
    if not hom_check(f):
        raise CertificateError(f"eta is not a module map for {alpha}")
    return f


def one_point_module(sigma: Perm) -> CombModule:
    return interval_module(sigma, sigma)


def irreducible_type(m: CombModule, b: Label) -> Composition:
    """Composition beta with span{b} isomorphic to F_beta, for a one-element submodule."""
    if not is_basis_submodule(m, [b]):
        raise DomainError(f"{b} does not span a submodule")
    return complement(comp_of(m.descent(b), m.n))


def label_str(b: Label) -> str:
    if isinstance(b, Filling):
        return str(b)
    if isinstance(b, tuple):
        return "".join(map(str, b)) if len(b) <= 9 else ",".join(map(str, b))
    return str(b)


def module_to_json(m: CombModule) -> dict:
    action: dict[str, dict[str, object]] = {}
    for i in range(1, m.n):
        row: dict[str, object] = {}
        for b in m.basis:
            o = m.outcome(i, b)
            row[label_str(b)] = o if isinstance(o, str) else {"move": label_str(o[1])}
        action[str(i)] = row
    return {
        "n": m.n,
        "kind": "filling" if m.basis and isinstance(m.basis[0], Filling) else "perm",
        "basis": [label_str(b) for b in m.basis],
        "action": action,
    }


def parse_label(text: str, kind: str) -> Label:
    if kind == "filling":
        return Filling.from_rows([int(x) for x in r.split(",")] for r in text.split("/"))
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(c) for c in text)


def module_from_json(data: dict) -> CombModule:
    kind = data.get("kind", "perm")
    n = int(data["n"])
    labels = {s: parse_label(s, kind) for s in data["basis"]}
    table: dict[tuple[int, Label], Label | None] = {}
    for i_str, row in data["action"].items():
        i = int(i_str)
        for s, o in row.items():
            b = labels[s]
            if o == FIX:
                table[(i, b)] = b
            elif o == KILL:
                table[(i, b)] = None
            else:
                table[(i, b)] = labels[o["move"]]
    return CombModule(n, tuple(labels[s] for s in data["basis"]), table)


def to_dot(m: CombModule, groups: Sequence[Iterable[Label]] | None = None) -> str:
    """Action graph in DOT: loops for fixing generators, labelled arrows for moves."""
    lines = ["digraph action {", "  rankdir=TB;", '  node [shape=box, fontname="monospace"];']
    ids = {b: f"n{k}" for k, b in enumerate(m.basis)}
    for k, b in enumerate(m.basis):
        fixes = ",".join(f"π{i}" for i in sorted(m.descent(b)))
        label = label_str(b) + (f"\\n[{fixes}]" if fixes else "")
        lines.append(f'  {ids[b]} [label="{label}"];')
    if groups:
        for g, members in enumerate(groups, 1):
            lines.append(f"  subgraph cluster_{g} {{")
            lines.append(f'    label="B{g}";')
            lines.append("    " + " ".join(ids[b] for b in members) + ";")
            lines.append("  }")
    for b in m.basis:
        for i in range(1, m.n):
            o = m.outcome(i, b)
            if isinstance(o, tuple):
                lines.append(f'  {ids[b]} -> {ids[o[1]]} [label="π{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
