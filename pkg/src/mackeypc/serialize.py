"""JSON encodings of groups, G-sets, spans, Mackey functors and permutative categories.

Every decoder accepts plain ``dict``/``list`` data (already parsed JSON) and
raises ``InvalidInputError`` on malformed input.  A group may be given
inline as ``{"degree": n, "generators": [...]}`` or by catalog name, and
nested G-sets inherit the enclosing document's group when they omit it.
"""

from __future__ import annotations

from typing import Any, Optional

import numpy as np

from .abgroups import AbGroup, AbHom
from .burnside import BurnsideElement
from .errors import InvalidInputError
from .groups import DEFAULT_ORDER_CAP, Group, conjugacy_classes_of_subgroups, make_group
from .gsets import GMap, GSet, class_orbit, disjoint_union_all, point_gset
from .mackey import (MackeyFunctor, complete_maps, constant_mackey, dual_constant_mackey, make_mackey,
                     orbit_maps, zero_mackey)
from .permcat import FinPermCat
from .spans import Span, SpanClass, TransitiveSpanKey


def _need(d: Any, key: str, what: str):
    if not isinstance(d, dict) or key not in d:
        raise InvalidInputError(f"{what} needs a {key!r} field")
    return d[key]


def _int_rows(x, what: str) -> list[list[int]]:
    try:
        return [[int(v) for v in row] for row in x]
    except (TypeError, ValueError):
        raise InvalidInputError(f"{what} must be a list of integer lists") from None


# groups ------------------------------------------------------------------------------

def group_to_json(g: Group) -> dict:
    return {"degree": g.degree, "generators": [list(p) for p in g.generators]}


def group_from_json(d: Any, cap: int = DEFAULT_ORDER_CAP) -> Group:
    from .catalog import GROUPS
    if isinstance(d, dict) and "name" in d and "degree" not in d:
        d = str(d["name"])
    if isinstance(d, str):
        if d not in GROUPS:
            raise InvalidInputError(f"unknown group {d!r}; known: {', '.join(GROUPS)}")
        return make_group(*GROUPS[d], cap=cap)
    degree = _need(d, "degree", "group")
    gens = _int_rows(d.get("generators", []), "generators")
    if not isinstance(degree, int):
        raise InvalidInputError("group degree must be an integer")
    return make_group(degree, gens, cap=cap)


def _group_of(d: Any, group: Optional[Group]) -> Group:
    """An explicitly passed group wins over a nested ``"group"`` field."""
    if group is not None:
        return group
    if isinstance(d, dict) and "group" in d:
        return group_from_json(d["group"])
    raise InvalidInputError("no group given")


# G-sets, maps, spans -----------------------------------------------------------------

def gset_to_json(a: GSet, with_group: bool = True) -> dict:
    out = {"group": group_to_json(a.group)} if with_group else {}
    out.update({"n": a.n, "action": [list(x) for x in a.action]})
    return out


def gset_from_json(d: Any, group: Optional[Group] = None) -> GSet:
    """``{"n", "action"}`` or ``{"orbits": [class indices]}`` (a disjoint union of orbits)."""
    g = _group_of(d, group)
    if isinstance(d, dict) and "orbits" in d:
        try:
            parts = [class_orbit(g, int(i)) for i in d["orbits"]]
        except (IndexError, TypeError, ValueError):
            raise InvalidInputError("orbits must be subgroup class indices") from None
        return disjoint_union_all(g, parts)
    n = _need(d, "n", "G-set")
    action = _int_rows(d.get("action", [[] for _ in g.generators]), "action")
    return GSet(g, int(n), tuple(map(tuple, action)))


def gmap_to_json(f: GMap, with_group: bool = True) -> dict:
    return {"source": gset_to_json(f.source, with_group), "target": gset_to_json(f.target, with_group),
            "images": list(f.images)}


def gmap_from_json(d: Any, group: Optional[Group] = None) -> GMap:
    g = _group_of(d, group)
    src = gset_from_json(_need(d, "source", "G-map"), g)
    tgt = gset_from_json(_need(d, "target", "G-map"), g)
    return GMap(src, tgt, tuple(int(x) for x in _need(d, "images", "G-map")))


def span_to_json(s: Span) -> dict:
    return {"group": group_to_json(s.group), "left": gmap_to_json(s.left, False),
            "right": gmap_to_json(s.right, False)}


def span_from_json(d: Any, group: Optional[Group] = None) -> Span:
    g = _group_of(d, group)
    return Span(gmap_from_json(_need(d, "left", "span"), g), gmap_from_json(_need(d, "right", "span"), g))


def key_to_json(k: TransitiveSpanKey) -> dict:
    return {"L": k.L, "a": k.a, "b": k.b}


def span_class_to_json(c: SpanClass) -> list[dict]:
    return [key_to_json(k) for k in sorted(c.keys)]


def element_to_json(x: BurnsideElement) -> dict:
    return {"basis": [key_to_json(k) for k in x.basis], "coefficients": [int(c) for c in x.coefficients]}


# abelian groups and Mackey functors ---------------------------------------------------

def abgroup_to_json(a: AbGroup) -> dict:
    return {"generators": a.ngens, "relations": a.relations.tolist()}


def abgroup_from_json(d: Any) -> AbGroup:
    r = _need(d, "generators", "abelian group")
    return AbGroup(int(r), _int_rows(d.get("relations", []), "relations"))


def _map_entries(table: dict) -> list[dict]:
    return [{"key": list(k), "matrix": [[int(v) for v in row] for row in h.matrix.tolist()]}
            for k, h in sorted(table.items())]


def mackey_to_json(m: MackeyFunctor) -> dict:
    return {"group": group_to_json(m.group), "values": [abgroup_to_json(v) for v in m.values],
            "restrictions": _map_entries(m.restrictions), "transfers": _map_entries(m.transfers)}


def _read_maps(entries, values, group, transfer: bool) -> dict:
    out = {}
    keys = set(orbit_maps(group))
    for e in entries or []:
        key = tuple(int(v) for v in _need(e, "key", "structure map"))
        if key not in keys:
            raise InvalidInputError(f"{list(key)} is not an orbit map of this group")
        i, j, _ = key
        src, tgt = (values[j], values[i]) if transfer else (values[i], values[j])
        mat = _int_rows(_need(e, "matrix", "structure map"), "matrix")
        if np.shape(mat) != (src.ngens, tgt.ngens) and src.ngens and tgt.ngens:
            raise InvalidInputError(f"matrix for {list(key)} should be {src.ngens} x {tgt.ngens}")
        out[key] = AbHom(src, tgt, mat)
    return out


def mackey_from_json(d: Any, group: Optional[Group] = None, check: bool = True) -> MackeyFunctor:
    """Explicit data, or ``{"kind": burnside|constant|dual_constant|zero|mixed_torsion, ...}``.

    Explicit restrictions and transfers may list only generators; the rest
    are generated by composition (see ``complete_maps``).
    """
    from .catalog import mixed_torsion_mackey
    from .mackey import burnside_mackey
    g = _group_of(d, group)
    kind = d.get("kind", "explicit") if isinstance(d, dict) else None
    if kind == "burnside":
        x = gset_from_json(d["x"], g) if "x" in d else point_gset(g)
        return burnside_mackey(x)
    if kind in ("constant", "dual_constant"):
        value = abgroup_from_json(_need(d, "value", f"{kind} Mackey functor"))
        return (constant_mackey if kind == "constant" else dual_constant_mackey)(g, value)
    if kind == "zero":
        return zero_mackey(g)
    if kind == "mixed_torsion":
        return mixed_torsion_mackey(g)
    if kind != "explicit":
        raise InvalidInputError(f"unknown Mackey functor kind {kind!r}")
    values = [abgroup_from_json(v) for v in _need(d, "values", "Mackey functor")]
    nclasses = len(conjugacy_classes_of_subgroups(g))
    if len(values) != nclasses:
        raise InvalidInputError(f"expected {nclasses} values (one per subgroup class), got {len(values)}")
    R = _read_maps(d.get("restrictions"), values, g, transfer=False)
    T = _read_maps(d.get("transfers"), values, g, transfer=True)
    R, T = complete_maps(g, values, R, T)
    return make_mackey(g, values, R, T, check=check)


# permutative categories ---------------------------------------------------------------

def permcat_to_json(c: FinPermCat) -> dict:
    hom = [{"source": a, "target": b, "morphisms": c.hom(a, b)}
           for a in range(c.nobj) for b in range(c.nobj) if c.hom(a, b)]
    return {"name": c.name, "objects": c.nobj, "sum": c.add.tolist(),
            "morphisms": [[int(s), int(t)] for s, t in zip(c.src, c.tgt)], "hom": hom,
            "identities": c.ident.tolist(),
            "composition": [[g, f, h] for (g, f), h in sorted(c.comp.items())],
            "morphism_sum": c.msum.tolist(), "symmetry": c.gamma.tolist()}


def permcat_from_json(d: Any) -> FinPermCat:
    from .catalog import permcat as catalog_permcat
    if isinstance(d, str):
        return catalog_permcat(d)
    if isinstance(d, dict) and "catalog" in d:
        return catalog_permcat(str(d["catalog"]))
    mors = _int_rows(_need(d, "morphisms", "permutative category"), "morphisms")
    comp = {(g, f): h for g, f, h in _int_rows(_need(d, "composition", "permutative category"), "composition")}
    return FinPermCat(_int_rows(_need(d, "sum", "permutative category"), "sum"),
                      [m[0] for m in mors], [m[1] for m in mors],
                      [int(x) for x in _need(d, "identities", "permutative category")], comp,
                      _int_rows(_need(d, "morphism_sum", "permutative category"), "morphism_sum"),
                      _int_rows(_need(d, "symmetry", "permutative category"), "symmetry"),
                      name=str(d.get("name", "")))
