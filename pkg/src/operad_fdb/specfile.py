"""Operad spec JSON: exhaustive finite tables within the arity cap.

Schema:

    { "mode": "symmetric" | "nonsymmetric" | "identity" | "pointed",
      "colours": [...], "cap": n,
      "ops":     [{"id": ..., "in": [...], "out": ...}, ...],
      "compose": [{"outer": id, "inner": [id...], "result": id}, ...],
      "action":  [{"op": id, "perm": [...], "result": id}, ...] }

The loader rejects under-specified composition tables rather than guessing,
reports schema violations with a JSON-pointer location, infers the units by
two-sided neutrality, and re-validates the operad axioms.  Table operads are
reduced: nullary operations are rejected (their relation tables cannot
certify local finiteness).
"""
from __future__ import annotations

import json

from . import perms
from .algebra import MODES, NONSYMMETRIC, SYMMETRIC
from .errors import BadSpecFile
from .operad import Operation, OperadData, validate_operad


def _need(obj, key, where, typ=None):
    if not isinstance(obj, dict) or key not in obj:
        raise BadSpecFile("missing key %r" % key, where)
    val = obj[key]
    if typ is not None and not isinstance(val, typ):
        raise BadSpecFile("key %r must be %s" % (key, typ.__name__),
                          where + "/" + key)
    return val


def load_operad(obj) -> OperadData:
    """Build an OperadData from a parsed spec-JSON object."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    mode = _need(obj, "mode", "", str)
    if mode not in MODES:
        raise BadSpecFile("unknown mode %r" % mode, "/mode")
    colours = _need(obj, "colours", "", list)
    if not colours:
        raise BadSpecFile("colour set is empty", "/colours")
    colours = [str(c) for c in colours]
    cap = _need(obj, "cap", "")
    if not isinstance(cap, int) or cap < 1:
        raise BadSpecFile("cap must be an integer >= 1", "/cap")

    ops = {}
    for i, entry in enumerate(_need(obj, "ops", "", list)):
        where = "/ops/%d" % i
        oid = str(_need(entry, "id", where))
        ins = _need(entry, "in", where, list)
        out = str(_need(entry, "out", where))
        if oid in ops:
            raise BadSpecFile("duplicate op id %r" % oid, where + "/id")
        if len(ins) == 0:
            raise BadSpecFile(
                "nullary operations are not allowed in table operads",
                where + "/in")
        if len(ins) > cap:
            raise BadSpecFile("arity exceeds cap", where + "/in")
        for c in list(ins) + [out]:
            if str(c) not in colours:
                raise BadSpecFile("unknown colour %r" % c, where)
        ops[oid] = Operation(oid, tuple(str(c) for c in ins), out, ("tbl", oid))

    compose_table = {}
    for i, entry in enumerate(_need(obj, "compose", "", list)):
        where = "/compose/%d" % i
        outer = str(_need(entry, "outer", where))
        inner = tuple(str(x) for x in _need(entry, "inner", where, list))
        result = str(_need(entry, "result", where))
        for oid in (outer, result) + inner:
            if oid not in ops:
                raise BadSpecFile("unknown op id %r" % oid, where)
        b = ops[outer]
        if len(inner) != b.arity:
            raise BadSpecFile("inner word length != outer arity", where)
        for j, aid in enumerate(inner):
            if ops[aid].out_colour != b.in_colours[j]:
                raise BadSpecFile("colour mismatch in slot %d" % j, where)
        r = ops[result]
        if r.arity != sum(ops[a].arity for a in inner):
            raise BadSpecFile("result arity inconsistent", where)
        compose_table[(outer, inner)] = ops[result]

    action_table = {}
    if mode == SYMMETRIC:
        for i, entry in enumerate(obj.get("action", [])):
            where = "/action/%d" % i
            oid = str(_need(entry, "op", where))
            perm = tuple(_need(entry, "perm", where, list))
            result = str(_need(entry, "result", where))
            if oid not in ops or result not in ops:
                raise BadSpecFile("unknown op id", where)
            if sorted(perm) != list(range(ops[oid].arity)):
                raise BadSpecFile("not a permutation of the inputs",
                                  where + "/perm")
            action_table[(oid, perm)] = ops[result]

    by_arity = {}
    for op in ops.values():
        by_arity.setdefault(op.arity, []).append(op)
    for n in by_arity:
        by_arity[n].sort(key=lambda o: o.op_id)

    def ops_fn(n):
        return tuple(by_arity.get(n, ()))

    def compose_fn(b, inners):
        key = (b.op_id, tuple(a.op_id for a in inners))
        if key not in compose_table:
            raise BadSpecFile(
                "composition table is under-specified at outer=%s inner=%s"
                % (b.op_id, ",".join(a.op_id for a in inners)), "/compose")
        return compose_table[key]

    def act_fn(op, p):
        if p == perms.identity(op.arity):
            return op
        key = (op.op_id, p)
        if key not in action_table:
            raise BadSpecFile(
                "action table is under-specified at op=%s perm=%r"
                % (op.op_id, p), "/action")
        return action_table[key]

    # infer units for each colour by left neutrality; validate_operad below
    # re-checks the two-sided unit laws with the inferred choices
    units = {}
    for c in colours:
        cands = []
        for u in by_arity.get(1, []):
            if u.in_colours != (c,) or u.out_colour != c:
                continue
            if all(compose_table.get((u.op_id, (op.op_id,))) == op
                   for op in ops.values() if op.out_colour == c):
                cands.append(u)
        if len(cands) != 1:
            raise BadSpecFile(
                "could not infer a unique unit for colour %r" % c, "/ops")
        units[c] = cands[0]

    d = OperadData(
        name=str(obj.get("name", "specfile")),
        mode=mode,
        colours=tuple(colours),
        arity_cap=cap,
        weight_cap=cap - 1,
        ops_fn=ops_fn,
        compose_fn=compose_fn,
        unit_fn=lambda c: units[str(c)],
        weight_fn=lambda op: op.arity - 1,
        act_fn=act_fn if mode == SYMMETRIC else None,
        nullary_source="table" if 0 in by_arity else "none",
    )
    report = validate_operad(d)
    if not report.ok:
        raise BadSpecFile(
            "operad axioms fail: %s" % "; ".join(report.all_failures()[:3]),
            "/compose")
    return d


def load_operad_file(path) -> OperadData:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise BadSpecFile("cannot read file: %s" % exc, "/")
    except json.JSONDecodeError as exc:
        raise BadSpecFile("invalid JSON: %s" % exc, "/")
    if not isinstance(obj, dict):
        raise BadSpecFile("top level must be an object", "/")
    return load_operad(obj)


def export_operad(d: OperadData) -> dict:
    """Exhaustive spec-JSON tables for a (small) operad window."""
    ops_entries = []
    all_ops = list(d.all_ops())
    for op in all_ops:
        ops_entries.append({
            "id": op.op_id,
            "in": list(op.in_colours),
            "out": op.out_colour,
        })
    compose_entries = []
    from .operad import _ops_by_out

    for b in all_ops:
        wb = d.weight(b)
        pools = [[a for a in _ops_by_out(d, c)
                  if d.weight(a) <= d.weight_cap - wb]
                 for c in b.in_colours]
        if any(not p for p in pools):
            continue

        def fill(i, w, acc):
            if i == b.arity:
                result = d.compose(b, tuple(acc))
                compose_entries.append({
                    "outer": b.op_id,
                    "inner": [a.op_id for a in acc],
                    "result": result.op_id,
                })
                return
            for a in pools[i]:
                if w + d.weight(a) <= d.weight_cap - wb:
                    acc.append(a)
                    fill(i + 1, w + d.weight(a), acc)
                    acc.pop()

        fill(0, 0, [])
    action_entries = []
    if d.mode == SYMMETRIC:
        for op in all_ops:
            for p in perms.all_perms(op.arity):
                action_entries.append({
                    "op": op.op_id,
                    "perm": list(p),
                    "result": d.act(op, p).op_id,
                })
    return {
        "name": d.name,
        "mode": d.mode,
        "colours": list(d.colours),
        "cap": d.arity_cap,
        "ops": ops_entries,
        "compose": compose_entries,
        "action": action_entries,
    }
