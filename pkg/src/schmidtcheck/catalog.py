"""Group spec strings, generator files and the builtin catalog.

Spec strings::

    cyclic:N            C_N
    dihedral:2N         dihedral group of order 2N (2N even, >= 4)
    symmetric:N         S_N on N points
    alternating:N       A_N on N points
    semidirect:N/M/K    C_N ⋊ C_M, generator of C_M acting by x -> x^K
    semidirect:A4       (C2 x C2) ⋊ C3
    product:SPEC,SPEC   direct product (split at the first comma)
    file:PATH           permutation generators from a file
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .groups import (
    DEFAULT_ORDER_CAP,
    GroupConstructionError,
    GroupTable,
    Permutation,
    a4_semidirect,
    alternating_group,
    closure_from_generators,
    cyclic_action,
    cyclic_group,
    dihedral_group,
    direct_product,
    semidirect_product,
    symmetric_group,
)

KINDS = ("cyclic", "dihedral", "symmetric", "alternating", "product", "semidirect", "file")


class SpecError(GroupConstructionError):
    pass


class GeneratorFileError(SpecError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: tuple
    text: str

    def __str__(self) -> str:
        return self.text


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecError(f"{what} must be an integer, got {text!r}") from None


def parse_spec(text: str) -> GroupSpec:
    kind, sep, rest = text.strip().partition(":")
    if not sep or kind not in KINDS:
        raise SpecError(f"unknown group spec {text!r}")
    if kind == "product":
        left, comma, right = rest.partition(",")
        if not comma:
            raise SpecError(f"product needs two comma-separated specs: {text!r}")
        params: tuple = (parse_spec(left), parse_spec(right))
    elif kind == "file":
        if not rest:
            raise SpecError("file spec needs a path")
        params = (rest,)
    elif kind == "semidirect":
        if rest == "A4":
            params = ("A4",)
        else:
            parts = rest.split("/")
            if len(parts) != 3:
                raise SpecError(f"semidirect spec must be N/M/K or A4, got {rest!r}")
            params = tuple(_int(p, "semidirect parameter") for p in parts)
    else:
        n = _int(rest, f"{kind} parameter")
        if n < 1:
            raise SpecError(f"{kind} parameter must be positive, got {n}")
        if kind == "dihedral" and (n < 4 or n % 2):
            raise SpecError(f"dihedral order must be even and >= 4, got {n}")
        params = (n,)
    return GroupSpec(kind, params, text.strip())


def build_named(spec: GroupSpec | str, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "cyclic":
        if p[0] > cap:
            raise SpecError(f"cyclic:{p[0]} exceeds order cap {cap}")
        G = cyclic_group(p[0])
    elif k == "dihedral":
        G = dihedral_group(p[0], cap=cap)
    elif k == "symmetric":
        G = symmetric_group(p[0], cap=cap)
    elif k == "alternating":
        G = alternating_group(p[0], cap=cap)
    elif k == "semidirect":
        G = a4_semidirect() if p == ("A4",) else semidirect_product(cyclic_action(*p), cap=cap)
    elif k == "product":
        G = direct_product(build_named(p[0], cap), build_named(p[1], cap), cap=cap)
    else:
        path = Path(p[0])
        try:
            data = path.read_bytes()
        except OSError as e:
            raise SpecError(f"cannot read generator file {path}: {e}") from e
        degree, gens = parse_generator_file(data)
        G = closure_from_generators(gens, degree, cap=cap)
    return GroupTable(G.mul, G.inv, G.elem_order, G.identity, spec.text)


def parse_generator_file(data: bytes | str) -> tuple[int, list[Permutation]]:
    """``degree N`` header, then one permutation per line as N 1-based images."""
    text = data.decode() if isinstance(data, bytes) else data
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if degree is None:
            if len(fields) != 2 or fields[0] != "degree":
                raise GeneratorFileError(lineno, "expected header 'degree N'")
            try:
                degree = int(fields[1])
            except ValueError:
                raise GeneratorFileError(lineno, f"bad degree {fields[1]!r}") from None
            if degree < 1:
                raise GeneratorFileError(lineno, "degree must be positive")
            continue
        if len(fields) != degree:
            raise GeneratorFileError(lineno, f"expected {degree} images, got {len(fields)}")
        try:
            images = [int(f) - 1 for f in fields]
        except ValueError:
            raise GeneratorFileError(lineno, "images must be integers") from None
        if any(not 0 <= i < degree for i in images):
            raise GeneratorFileError(lineno, f"image out of range 1..{degree}")
        if len(set(images)) != degree:
            raise GeneratorFileError(lineno, "not a bijection")
        gens.append(tuple(images))
    if degree is None:
        raise GeneratorFileError(1, "missing 'degree N' header")
    return degree, gens


SEMIDIRECT_BUILTINS = (
    "semidirect:3/2/2",  # S3
    "semidirect:A4",
    "semidirect:15/2/14",  # D30
    "semidirect:5/4/2",
    "semidirect:7/3/2",
    "semidirect:8/2/5",  # modular 2-group with permutable non-normal subgroups
)


def _order_of(spec: str) -> int:
    return build_named(spec).order


def builtin_catalog(max_order: int = 60, dihedral_max: int = 200) -> list[str]:
    """Builtin spec strings: base groups up to ``max_order``, all pairwise
    direct products of nontrivial base groups within ``max_order``, then the
    remaining dihedral groups up to ``dihedral_max``."""
    base = [f"cyclic:{n}" for n in range(1, max_order + 1)]
    base += [f"dihedral:{n}" for n in range(4, max_order + 1, 2)]
    base += [f"symmetric:{n}" for n in (3, 4)]
    base += [f"alternating:{n}" for n in (4, 5)]
    base += list(SEMIDIRECT_BUILTINS)
    orders = {s: _order_of(s) for s in base}
    base = [s for s in base if orders[s] <= max_order]
    nontrivial = [s for s in base if orders[s] > 1]
    products = [
        f"product:{a},{b}"
        for i, a in enumerate(nontrivial)
        for b in nontrivial[i:]
        if orders[a] * orders[b] <= max_order
    ]
    extra = [f"dihedral:{n}" for n in range(max_order + 1 + (max_order + 1) % 2, dihedral_max + 1, 2)]
    return base + products + extra
