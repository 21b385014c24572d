"""Minimum greedy tree decompositions of plane tree drawings.

The exact solver is a bottom-up dynamic program over the rooted tree.
For each vertex it tabulates root components by their extreme boundary
paths (the clockwise-first and clockwise-last paths leaving the
subtree), together with the degree of the vertex inside the component.
Two contact regimes are supported exactly: noncrossing and proper.
A multicut reduction provides a fast 2-approximation for proper
contacts, and edge splits are handled by running the same program on
the subdivided drawing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .analysis import conflicting_pairs, drawing_edges_conflict
from .drawing import (
    Drawing,
    RootedTree,
    SubdividedDrawing,
    clockwise_order,
    default_root,
    root_tree,
    subdivide,
)
from .errors import GRRError
from .geometry import hp, in_hp
from .multicut import Cut, MulticutInstance, approx_gvy

CONTACT_MODES = ("proper", "noncrossing", "any")


# -- all-pairs increasing-chord paths ------------------------------------------

class PathICTable:
    """O(1) lookups of "is the unique tree path s-t increasing-chord"."""

    __slots__ = ("_table",)

    def __init__(self, table: dict[int, dict[int, bool]]):
        self._table = table

    def query(self, s: int, t: int) -> bool:
        return self._table[s][t]


def precompute_path_ic(rt: RootedTree) -> PathICTable:
    """Fill the all-pairs table by a DFS from every source.

    Along the DFS path the self-approaching property in each direction
    only ever turns off, so each extension needs one halfplane sweep.
    """
    d = rt.drawing
    table: dict[int, dict[int, bool]] = {}
    for s in d.vertex_ids:
        row: dict[int, bool] = {}
        path: list = []
        stack: list[tuple] = [("enter", s, -1, True, True)]
        while stack:
            frame = stack.pop()
            if frame[0] == "exit":
                path.pop()
                continue
            _, v, parent, fwd, bwd = frame
            pv = d.points[v]
            k = len(path)
            if k > 0:
                if fwd:
                    for i in range(1, k):
                        if not in_hp(hp(path[i - 1], path[i]), pv):
                            fwd = False
                            break
                if bwd:
                    h = hp(pv, path[-1])
                    for i in range(k - 1):
                        if not in_hp(h, path[i]):
                            bwd = False
                            break
            row[v] = fwd and bwd
            path.append(pv)
            stack.append(("exit",))
            for eidx in d.adjacency[v]:
                w = d.other_endpoint(eidx, v)
                if w != parent:
                    stack.append(("enter", w, v, fwd, bwd))
        table[s] = row
    return PathICTable(table)


# -- partitions and their validation -------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Edge components of a drawing plus the contact regime they obey.

    When the partition was computed on a subdivided drawing, origin
    carries the subdivision so results can be mapped back to fragments
    of the original edges.
    """
    components: tuple[frozenset[int], ...]
    contact_mode: str
    origin: Optional[SubdividedDrawing] = None

    @property
    def size(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    checks: tuple[tuple[str, bool], ...]
    problems: tuple[str, ...]


def validate_partition(d: Drawing, p: Partition) -> PartitionReport:
    """Check every partition invariant and report them individually."""
    if p.contact_mode not in CONTACT_MODES:
        raise ValueError(f"unknown contact mode {p.contact_mode!r}")
    problems: list[str] = []
    m = d.n_edges
    comps = [set(c) for c in p.components]

    cover = True
    owner: dict[int, int] = {}
    for ci, c in enumerate(comps):
        if not c:
            cover = False
            problems.append(f"component {ci} is empty")
        for e in sorted(c):
            if not (isinstance(e, int) and 0 <= e < m):
                cover = False
                problems.append(f"component {ci} references unknown edge {e!r}")
            elif e in owner:
                cover = False
                problems.append(
                    f"edge {e} appears in components {owner[e]} and {ci}")
            else:
                owner[e] = ci
    missing = sorted(set(range(m)) - set(owner))
    if missing:
        cover = False
        problems.append(f"edges not covered: {missing}")

    conn = True
    acyc = True
    confl = True
    vsets: list[set[int]] = []
    for ci, c in enumerate(comps):
        edges = sorted(e for e in c if isinstance(e, int) and 0 <= e < m)
        verts: set[int] = set()
        for e in edges:
            verts.update(d.edges[e])
        vsets.append(verts)
        if not edges:
            continue
        eset = set(edges)
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for idx in d.adjacency[v]:
                if idx in eset:
                    w = d.other_endpoint(idx, v)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        if seen != verts:
            conn = False
            problems.append(f"component {ci} is disconnected")
        elif len(edges) != len(verts) - 1:
            acyc = False
            problems.append(f"component {ci} contains a cycle")
        clean = True
        for i in edges:
            for j in edges:
                if i != j and drawing_edges_conflict(d, i, j):
                    confl = False
                    clean = False
                    problems.append(
                        f"component {ci} has conflicting edges {i} and {j}")
                    break
            if not clean:
                break

    single = True
    for ci in range(len(comps)):
        for cj in range(ci + 1, len(comps)):
            inter = vsets[ci] & vsets[cj]
            if len(inter) > 1:
                single = False
                problems.append(
                    f"components {ci} and {cj} share points {sorted(inter)}")

    contacts = True
    shared: dict[int, set[int]] = {}
    for v in d.vertex_ids:
        at_v = {ci for ci, vs in enumerate(vsets) if v in vs}
        if len(at_v) > 1:
            shared[v] = at_v
    if p.contact_mode == "proper":
        for v in sorted(shared):
            heavy = [ci for ci in sorted(shared[v])
                     if sum(1 for e in comps[ci]
                            if isinstance(e, int) and 0 <= e < m
                            and v in d.edges[e]) >= 2]
            if len(heavy) > 1:
                contacts = False
                problems.append(
                    f"vertex {v} is interior to components {heavy}: "
                    f"contact is not proper")
    elif p.contact_mode == "noncrossing":
        # crossing is a pairwise notion: two components cross at v when
        # their edges interleave in the combined rotation at v
        for v in sorted(shared):
            owners = [owner.get(e) for e in clockwise_order(d, v)]
            cands = sorted(shared[v])
            for i1 in range(len(cands)):
                for i2 in range(i1 + 1, len(cands)):
                    pair = (cands[i1], cands[i2])
                    seq = [o for o in owners if o in pair]
                    if len(seq) < 4:
                        continue
                    flips = sum(1 for k in range(len(seq))
                                if seq[k] != seq[(k + 1) % len(seq)])
                    if flips > 2:
                        contacts = False
                        problems.append(
                            f"components {pair[0]} and {pair[1]} cross "
                            f"at vertex {v}")

    checks = (("coverage", cover), ("connectivity", conn),
              ("acyclicity", acyc), ("conflict-freeness", confl),
              ("single-shared-point", single), ("contacts", contacts))
    ok = all(flag for _, flag in checks)
    return PartitionReport(ok=ok, checks=checks, problems=tuple(problems))


# -- the dynamic program --------------------------------------------------------

@dataclass
class DPTables:
    """Filled decomposition tables, kept around for reconstruction.

    tau[u] maps an extreme-endpoint pair to (size, backpointer) for the
    subtree hanging from u's parent edge; sigma tables are per vertex,
    keyed first by the child-index span they cover.
    """
    mode: str
    rt: RootedTree
    pic: PathICTable
    tau: dict[int, dict[tuple[int, int], tuple[int, tuple]]] = field(
        default_factory=dict)
    tau_best: dict[int, tuple[int, tuple[int, int]]] = field(
        default_factory=dict)
    sigma_delta: dict[int, dict[int, dict]] = field(default_factory=dict)
    sigma: dict[int, dict] = field(default_factory=dict)
    sigma_m: dict[int, dict] = field(default_factory=dict)


def fill_gtd_tables(rt: RootedTree, mode: str) -> DPTables:
    if mode not in ("proper", "noncrossing"):
        raise ValueError(
            f"exact decomposition supports proper and noncrossing, "
            f"not {mode!r}")
    pic = precompute_path_ic(rt)
    q = pic.query
    t = DPTables(mode=mode, rt=rt, pic=pic)

    for u in rt.postorder:
        if u == rt.root:
            continue
        cs = rt.children[u]
        d = len(cs)
        if d == 0:
            t.tau[u] = {(u, u): (1, ("leaf",))}
            t.tau_best[u] = (1, (u, u))
            continue
        sd: dict[int, dict] = {1: {}, 2: {}, 3: {}, 4: {}}
        sg: dict = {}
        bsig: dict = {}
        sm: dict = {}

        def sm_val(i: int, j: int) -> int:
            return 0 if i > j else sm[(i, j)][0]

        def upsert(table: dict, key, val: int, bp: tuple) -> None:
            cur = table.get(key)
            if cur is None or val < cur[0]:
                table[key] = (val, bp)

        for w in range(d):
            for a in range(1, d - w + 1):
                b = a + w
                span = (a, b)
                if w == 0:
                    child = cs[a - 1]
                    sd[1][span] = {
                        key: (t.tau[child][key][0], ("s1", child))
                        for key in t.tau[child]}
                if w >= 1:
                    ca, cb = cs[a - 1], cs[b - 1]
                    ta, tb = t.tau[ca], t.tau[cb]
                    mid = sm_val(a + 1, b - 1)
                    ent2 = sd[2].setdefault(span, {})
                    for ka in sorted(ta):
                        x1, y1 = ka
                        va = ta[ka][0]
                        for kb in sorted(tb):
                            x2, y2 = kb
                            if not (q(x1, x2) and q(x1, y2)
                                    and q(y1, x2) and q(y1, y2)):
                                continue
                            upsert(ent2, (x1, y2), va + mid + tb[kb][0] - 1,
                                   ("s2", ca, ka, cb, kb, (a + 1, b - 1)))
                if w >= 2:
                    ent3 = sd[3].setdefault(span, {})
                    for mm in range(a + 1, b):
                        # two-child part on the low side, path part at cs[b-1]
                        two = sd[2].get((a, mm), {})
                        tb = t.tau[cs[b - 1]]
                        mid = sm_val(mm + 1, b - 1)
                        for k2 in sorted(two):
                            x1, y1 = k2
                            v2 = two[k2][0]
                            for kb in sorted(tb):
                                x2, y2 = kb
                                if not (q(x1, x2) and q(x1, y2)
                                        and q(y1, x2) and q(y1, y2)):
                                    continue
                                upsert(ent3, (x1, y2),
                                       v2 + mid + tb[kb][0] - 1,
                                       ("s3", (a, mm), k2, cs[b - 1], kb,
                                        (mm + 1, b - 1)))
                        # mirrored: path part at cs[a-1], two-child part high
                        ta = t.tau[cs[a - 1]]
                        two = sd[2].get((mm, b), {})
                        mid = sm_val(a + 1, mm - 1)
                        for ka in sorted(ta):
                            x1, y1 = ka
                            va = ta[ka][0]
                            for k2 in sorted(two):
                                x2, y2 = k2
                                if not (q(x1, x2) and q(x1, y2)
                                        and q(y1, x2) and q(y1, y2)):
                                    continue
                                upsert(ent3, (x1, y2),
                                       va + mid + two[k2][0] - 1,
                                       ("s3", (mm, b), k2, cs[a - 1], ka,
                                        (a + 1, mm - 1)))
                if w >= 3:
                    ent4 = sd[4].setdefault(span, {})
                    paths_of = {
                        c: [k for k in sorted(t.tau[c]) if k[0] == k[1]]
                        for c in (cs[a - 1], cs[b - 1])}
                    for jj in range(a + 1, b - 1):
                        paths_of.setdefault(
                            cs[jj - 1],
                            [k for k in sorted(t.tau[cs[jj - 1]])
                             if k[0] == k[1]])
                        for kk in range(jj + 1, b):
                            paths_of.setdefault(
                                cs[kk - 1],
                                [k for k in sorted(t.tau[cs[kk - 1]])
                                 if k[0] == k[1]])
                            mids = (sm_val(a + 1, jj - 1)
                                    + sm_val(jj + 1, kk - 1)
                                    + sm_val(kk + 1, b - 1))
                            arms_children = (cs[a - 1], cs[jj - 1],
                                             cs[kk - 1], cs[b - 1])
                            for k1 in paths_of[arms_children[0]]:
                                t1 = k1[0]
                                for k2 in paths_of[arms_children[1]]:
                                    t2 = k2[0]
                                    if not q(t1, t2):
                                        continue
                                    for k3 in paths_of[arms_children[2]]:
                                        t3 = k3[0]
                                        if not (q(t1, t3) and q(t2, t3)):
                                            continue
                                        for k4 in paths_of[arms_children[3]]:
                                            t4 = k4[0]
                                            if not (q(t1, t4) and q(t2, t4)
                                                    and q(t3, t4)):
                                                continue
                                            val = (t.tau[arms_children[0]][k1][0]
                                                   + t.tau[arms_children[1]][k2][0]
                                                   + t.tau[arms_children[2]][k3][0]
                                                   + t.tau[arms_children[3]][k4][0]
                                                   + mids - 3)
                                            upsert(
                                                ent4, (t1, t4), val,
                                                ("s4",
                                                 tuple(zip(arms_children,
                                                           (k1, k2, k3, k4))),
                                                 ((a + 1, jj - 1),
                                                  (jj + 1, kk - 1),
                                                  (kk + 1, b - 1))))
                merged: dict = {}
                for dl in (1, 2, 3, 4):
                    for key in sorted(sd[dl].get(span, {})):
                        val = sd[dl][span][key][0]
                        cur = merged.get(key)
                        if cur is None or val < cur[0]:
                            merged[key] = (val, dl)
                sg[span] = merged
                bk = None
                for key in sorted(merged):
                    if bk is None or merged[key][0] < bk[0]:
                        bk = (merged[key][0], key)
                if bk is not None:
                    bsig[span] = bk

            for a in range(1, d - w + 1):
                b = a + w
                if mode == "proper":
                    val = sum(t.tau_best[cs[mm - 1]][0]
                              for mm in range(a, b + 1))
                    sm[(a, b)] = (val, ("sm_taus",))
                else:
                    best = None
                    for pp in range(a, b + 1):
                        for qq in range(pp, b + 1):
                            bs = bsig.get((pp, qq))
                            if bs is None:
                                continue
                            val = sm_val(a, pp - 1) + bs[0] + sm_val(qq + 1, b)
                            if best is None or val < best[0]:
                                best = (val, ("sm", (a, pp - 1), (pp, qq),
                                              bs[1], (qq + 1, b)))
                    if best is None:
                        raise GRRError(f"no partition for span {(a, b)} at {u}")
                    sm[(a, b)] = best

        pu = rt.parent[u]
        tu: dict = {}
        for span in sorted(sg):
            a, b = span
            for key in sorted(sg[span]):
                x, y = key
                if not (q(pu, x) and q(pu, y)):
                    continue
                upsert(tu, key,
                       sm_val(1, a - 1) + sg[span][key][0] + sm_val(b + 1, d),
                       ("tau_frame", span, key))
        if mode == "proper":
            best = None
            for span in sorted(sg):
                a, b = span
                for key in sorted(sg[span]):
                    val = (1 + sm_val(1, a - 1) + sg[span][key][0]
                           + sm_val(b + 1, d))
                    if best is None or val < best[0]:
                        best = (val, ("tau_edge_proper", span, key))
            if best is None:
                raise GRRError(f"no proper partition below vertex {u}")
            tu[(u, u)] = best
        else:
            tu[(u, u)] = (1 + sm_val(1, d), ("tau_edge",))
        t.tau[u] = tu
        bk = None
        for key in sorted(tu):
            if bk is None or tu[key][0] < bk[0]:
                bk = (tu[key][0], key)
        t.tau_best[u] = bk
        t.sigma_delta[u] = sd
        t.sigma[u] = sg
        t.sigma_m[u] = sm
    return t


# -- reconstruction -------------------------------------------------------------

def _rec_tau(t: DPTables, u: int,
             key: tuple[int, int]) -> tuple[list[set[int]], int]:
    rt = t.rt
    size, bp = t.tau[u][key]
    kind = bp[0]
    if kind == "leaf":
        return [{rt.parent_edge[u]}], 0
    d = len(rt.children[u])
    if kind == "tau_edge":
        return [{rt.parent_edge[u]}] + _rec_sm(t, u, (1, d)), 0
    if kind == "tau_edge_proper":
        _, span, skey = bp
        a, b = span
        comps, _ = _rec_sigma(t, u, span, skey)
        out = ([{rt.parent_edge[u]}] + _rec_sm(t, u, (1, a - 1))
               + comps + _rec_sm(t, u, (b + 1, d)))
        return out, 0
    if kind == "tau_frame":
        _, span, skey = bp
        a, b = span
        comps, root = _rec_sigma(t, u, span, skey)
        comps[root] = comps[root] | {rt.parent_edge[u]}
        left = _rec_sm(t, u, (1, a - 1))
        return left + comps + _rec_sm(t, u, (b + 1, d)), len(left) + root
    raise GRRError(f"unknown backpointer {bp!r}")


def _rec_sigma(t: DPTables, u: int, span, key) -> tuple[list[set[int]], int]:
    _, delta = t.sigma[u][span][key]
    return _rec_sigma_delta(t, u, delta, span, key)


def _rec_sigma_delta(t: DPTables, u: int, delta: int, span,
                     key) -> tuple[list[set[int]], int]:
    size, bp = t.sigma_delta[u][delta][span][key]
    kind = bp[0]
    if kind == "s1":
        return _rec_tau(t, bp[1], key)
    if kind == "s2":
        _, ca, ka, cb, kb, mspan = bp
        pa, ra = _rec_tau(t, ca, ka)
        pb, rb = _rec_tau(t, cb, kb)
        merged = pa[ra] | pb[rb]
        rest = ([c for i, c in enumerate(pa) if i != ra]
                + [c for i, c in enumerate(pb) if i != rb])
        return [merged] + rest + _rec_sm(t, u, mspan), 0
    if kind == "s3":
        _, span2, key2, cvid, ck, mspan = bp
        pa, ra = _rec_sigma_delta(t, u, 2, span2, key2)
        pb, rb = _rec_tau(t, cvid, ck)
        merged = pa[ra] | pb[rb]
        rest = ([c for i, c in enumerate(pa) if i != ra]
                + [c for i, c in enumerate(pb) if i != rb])
        return [merged] + rest + _rec_sm(t, u, mspan), 0
    if kind == "s4":
        _, arms, mspans = bp
        merged: set[int] = set()
        rest: list[set[int]] = []
        for cvid, ck in arms:
            pc, rc = _rec_tau(t, cvid, ck)
            merged |= pc[rc]
            rest += [c for i, c in enumerate(pc) if i != rc]
        for ms in mspans:
            rest += _rec_sm(t, u, ms)
        return [merged] + rest, 0
    raise GRRError(f"unknown backpointer {bp!r}")


def _rec_sm(t: DPTables, u: int, span) -> list[set[int]]:
    i, j = span
    if i > j:
        return []
    size, bp = t.sigma_m[u][span]
    if bp[0] == "sm_taus":
        out: list[set[int]] = []
        for mm in range(i, j + 1):
            child = t.rt.children[u][mm - 1]
            comps, _ = _rec_tau(t, child, t.tau_best[child][1])
            out += comps
        return out
    _, lspan, sspan, skey, rspan = bp
    comps, _ = _rec_sigma(t, u, sspan, skey)
    return _rec_sm(t, u, lspan) + comps + _rec_sm(t, u, rspan)


# -- public solvers -------------------------------------------------------------

def min_gtd_exact(rt: RootedTree, mode: str) -> Partition:
    """Minimum-size decomposition of a rooted tree drawing.

    mode is "proper" or "noncrossing". The reconstructed partition is
    re-validated before being returned.
    """
    tables = fill_gtd_tables(rt, mode)
    v0 = rt.children[rt.root][0]
    size, key = tables.tau_best[v0]
    comps, _ = _rec_tau(tables, v0, key)
    if len(comps) != size:
        raise GRRError(
            f"reconstruction produced {len(comps)} components, "
            f"table says {size}")
    p = Partition(
        components=tuple(sorted((frozenset(c) for c in comps),
                                key=lambda c: min(c))),
        contact_mode=mode)
    report = validate_partition(rt.drawing, p)
    if not report.ok:
        raise GRRError("invalid reconstructed partition: "
                       + "; ".join(report.problems))
    return p


def min_gtd_with_splits(d: Drawing, mode: str) -> Partition:
    """Minimum decomposition when edges may be split.

    Runs the exact program on the subdivision of d; component edge ids
    refer to the subdivided drawing carried in the result's origin.
    """
    sd = subdivide(d)
    rt = root_tree(sd.drawing, default_root(sd.drawing))
    p = min_gtd_exact(rt, mode)
    return Partition(components=p.components, contact_mode=mode, origin=sd)


def build_multicut_instance(d: Drawing) -> MulticutInstance:
    """The subdivided conflict tree: one node per vertex and per edge,
    unit weights, one terminal pair per conflicting edge pair."""
    edges = []
    for idx, (uu, vv) in enumerate(d.edges):
        edges.append((("v", uu), ("e", idx)))
        edges.append((("e", idx), ("v", vv)))
    pairs = [(("e", i), ("e", j)) for i, j in conflicting_pairs(d)]
    return MulticutInstance(edges, pairs)


def multicut_to_partition(d: Drawing, inst: MulticutInstance,
                          cut: Cut) -> Partition:
    """Components of the conflict tree minus the cut, restricted to
    edge nodes, become the partition components."""
    removed = set(cut.edges)
    adj: dict = {n: [] for n in inst.nodes}
    for (x, y) in inst.edges:
        if (x, y) in removed:
            continue
        adj[x].append(y)
        adj[y].append(x)
    seen: set = set()
    comps: list[frozenset[int]] = []
    for start in inst.nodes:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        eids = sorted(idx for kind, idx in members if kind == "e")
        if eids:
            comps.append(frozenset(eids))
    return Partition(components=tuple(sorted(comps, key=min)),
                     contact_mode="proper")


def partition_to_multicut(d: Drawing, p: Partition) -> Cut:
    """The conflict-tree cut induced by a partition: at every shared
    vertex, detach all but one incident component."""
    m = d.n_edges
    comp_edges_at: dict[int, dict[int, list[int]]] = {}
    for ci, c in enumerate(p.components):
        for e in c:
            for v in d.edges[e]:
                comp_edges_at.setdefault(v, {}).setdefault(ci, []).append(e)
    cut_edges = set()
    for v in sorted(comp_edges_at):
        at_v = comp_edges_at[v]
        if len(at_v) <= 1:
            continue
        keeper = min(at_v, key=lambda ci: (-len(at_v[ci]), min(at_v[ci])))
        for ci in sorted(at_v):
            if ci == keeper:
                continue
            for e in sorted(at_v[ci]):
                cut_edges.add((("e", e), ("v", v)))
    return Cut(frozenset(cut_edges), Fraction(len(cut_edges)))


def approx_gtd_proper(d: Drawing) -> Partition:
    """Proper-contact decomposition within twice the optimum (minus one),
    via the primal-dual multicut approximation."""
    inst = build_multicut_instance(d)
    cut = approx_gvy(inst)
    p = multicut_to_partition(d, inst, cut)
    report = validate_partition(d, p)
    if not report.ok:
        raise GRRError("multicut produced an invalid partition: "
                       + "; ".join(report.problems))
    return p
