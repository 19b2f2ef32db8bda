"""Kernel routines shared by every solver.

This module is loaded twice by ``domirr.kernels``: once as plain Python and
once compiled with numba's ``@njit``.  Both copies execute the same source, so
the compiled path and the fallback path are the same algorithm by
construction.  To keep that property the code sticks to a restricted dialect:

* vertex sets are int bitmasks (int64 under numba, plain ints otherwise, so
  the fallback also works past 62 bits),
* all scratch space is allocated by the caller and passed in,
* no Python containers besides the caller-provided arrays/lists.

Graphs arrive either as per-vertex neighbour masks (``adj[v]`` = bitmask of
neighbours) or in CSR form (``indptr``/``adjcsr``) for the matching code.
"""

_WITH_JIT = globals().get("_WITH_JIT", False)

if _WITH_JIT:
    from numba import njit

    def _compiled(f):
        return njit(cache=True)(f)
else:
    def _compiled(f):
        return f


if _WITH_JIT:
    @_compiled
    def popcount(x):
        c = 0
        while x:
            x &= x - 1
            c += 1
        return c
else:
    def popcount(x):
        return int(x).bit_count()


# ---------------------------------------------------------------------------
# maximum matching on a general graph (blossom contraction, O(V^3))
# ---------------------------------------------------------------------------

@_compiled
def _mark_blossom_path(v, b, child, match, parent, base, in_blossom):
    while base[v] != b:
        in_blossom[base[v]] = 1
        in_blossom[base[match[v]]] = 1
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


@_compiled
def _blossom_lca(a, b, match, parent, base, lca_mark, n):
    for i in range(n):
        lca_mark[i] = 0
    v = a
    while True:
        v = base[v]
        lca_mark[v] = 1
        if match[v] == -1:
            break
        v = parent[match[v]]
    v = b
    while True:
        v = base[v]
        if lca_mark[v]:
            return v
        v = parent[match[v]]


@_compiled
def _augment_from(root, n, indptr, adjcsr, match, parent, base, q, used,
                  in_blossom, lca_mark):
    for i in range(n):
        used[i] = 0
        parent[i] = -1
        base[i] = i
    used[root] = 1
    q[0] = root
    qh = 0
    qt = 1
    finish = -1
    while qh < qt:
        v = q[qh]
        qh += 1
        for ei in range(indptr[v], indptr[v + 1]):
            to = adjcsr[ei]
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom at its stem
                cur = _blossom_lca(v, to, match, parent, base, lca_mark, n)
                for i in range(n):
                    in_blossom[i] = 0
                _mark_blossom_path(v, cur, to, match, parent, base, in_blossom)
                _mark_blossom_path(to, cur, v, match, parent, base, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if used[i] == 0:
                            used[i] = 1
                            q[qt] = i
                            qt += 1
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    finish = to
                    qh = qt
                    break
                used[match[to]] = 1
                q[qt] = match[to]
                qt += 1
    if finish == -1:
        return 0
    v = finish
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv
    return 1


@_compiled
def blossom_max_matching(n, indptr, adjcsr, match, parent, base, q, used,
                         in_blossom, lca_mark):
    """Fill ``match`` (-1 = exposed) and return the matching cardinality.

    Deterministic: vertices and CSR neighbour lists are scanned in
    ascending order, so identical inputs give identical matchings.
    """
    for v in range(n):
        match[v] = -1
    for v in range(n):
        if match[v] == -1:
            for ei in range(indptr[v], indptr[v + 1]):
                u = adjcsr[ei]
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    break
    for v in range(n):
        if match[v] == -1:
            _augment_from(v, n, indptr, adjcsr, match, parent, base, q, used,
                          in_blossom, lca_mark)
    total = 0
    for v in range(n):
        if match[v] != -1:
            total += 1
    return total // 2


@_compiled
def matching_brute_size(adj, n, memo):
    """Maximum matching size by subset DP; the test oracle for the blossom."""
    memo[0] = 0
    for mask in range(1, 1 << n):
        v = 0
        while ((mask >> v) & 1) == 0:
            v += 1
        rest = mask & ~(1 << v)
        best = memo[rest]
        for u in range(v + 1, n):
            if ((rest >> u) & 1) and ((adj[v] >> u) & 1):
                cand = 1 + memo[rest & ~(1 << u)]
                if cand > best:
                    best = cand
        memo[mask] = best
    return memo[(1 << n) - 1]


# ---------------------------------------------------------------------------
# capacitated domination feasibility (unit expansion + matching)
# ---------------------------------------------------------------------------

@_compiled
def capdom_feasible(n, adj, caps, s_mask, assign,
                    left_vertex, left_id, unit_start, unit_cnt, unit_owner,
                    indptr, adjcsr,
                    match, parent, base, q, used, in_blossom, lca_mark):
    """Can ``s_mask`` dominate everything within capacities?

    Builds the bipartite unit expansion (one node per vertex outside the set,
    one node per remaining unit of capacity of a member) and saturates the
    outside side via maximum matching.  On success returns 1 and writes the
    dominator of every outside vertex into ``assign``; otherwise returns 0.
    Capacities are capped at the number of outside neighbours, which cannot
    change feasibility.
    """
    for v in range(n):
        assign[v] = -1
    nl = 0
    for v in range(n):
        left_id[v] = -1
        if ((s_mask >> v) & 1) == 0:
            left_id[v] = nl
            left_vertex[nl] = v
            nl += 1
    if nl == 0:
        return 1
    outside = 0
    for i in range(nl):
        outside |= 1 << int(left_vertex[i])
    total = nl
    for w in range(n):
        unit_start[w] = -1
        unit_cnt[w] = 0
        if (s_mask >> w) & 1:
            avail = popcount(adj[w] & outside)
            k = caps[w]
            if avail < k:
                k = avail
            unit_start[w] = total
            unit_cnt[w] = k
            for t in range(k):
                unit_owner[total + t] = w
            total += k
    for i in range(total + 1):
        indptr[i] = 0
    for i in range(nl):
        v = left_vertex[i]
        d = 0
        for w in range(n):
            if (adj[v] >> w) & 1:
                d += unit_cnt[w]
        indptr[i + 1] = d
    for w in range(n):
        if unit_cnt[w] > 0:
            d = popcount(adj[w] & outside)
            for t in range(unit_cnt[w]):
                indptr[unit_start[w] + t + 1] = d
    for i in range(total):
        indptr[i + 1] += indptr[i]
    for i in range(nl):
        v = left_vertex[i]
        ptr = indptr[i]
        for w in range(n):
            if (adj[v] >> w) & 1:
                for t in range(unit_cnt[w]):
                    adjcsr[ptr] = unit_start[w] + t
                    ptr += 1
    for w in range(n):
        for t in range(unit_cnt[w]):
            node = unit_start[w] + t
            ptr = indptr[node]
            for v in range(n):
                if ((adj[w] >> v) & 1) and ((outside >> v) & 1):
                    adjcsr[ptr] = left_id[v]
                    ptr += 1
    msize = blossom_max_matching(total, indptr, adjcsr, match, parent, base,
                                 q, used, in_blossom, lca_mark)
    if msize != nl:
        return 0
    for i in range(nl):
        assign[left_vertex[i]] = unit_owner[match[i]]
    return 1


@_compiled
def brute_cds_scan(n, adj, caps, comb, optima, opt_cap, assign,
                   left_vertex, left_id, unit_start, unit_cnt, unit_owner,
                   indptr, adjcsr,
                   match, parent, base, q, used, in_blossom, lca_mark):
    """Reference scan: smallest feasible set by increasing cardinality.

    Visits subsets level by level (lexicographic within a level), stops after
    the first feasible level, and records up to ``opt_cap`` optima.  Returns
    (size, optima found, subsets examined).
    """
    examined = 0
    for k in range(n + 1):
        found = 0
        n_opt = 0
        for i in range(k):
            comb[i] = i
        while True:
            mask = 0
            for i in range(k):
                mask |= 1 << int(comb[i])
            examined += 1
            if capdom_feasible(n, adj, caps, mask, assign,
                               left_vertex, left_id, unit_start, unit_cnt,
                               unit_owner, indptr, adjcsr,
                               match, parent, base, q, used, in_blossom,
                               lca_mark):
                if n_opt < opt_cap:
                    optima[n_opt] = mask
                n_opt += 1
                found = 1
            i = k - 1
            while i >= 0 and comb[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
        if found:
            return k, n_opt, examined
    return n, 0, examined


# ---------------------------------------------------------------------------
# restricted-domination optimum over every forced core (the exact CDS loop)
# ---------------------------------------------------------------------------

@_compiled
def restricted_min_size(n, adj, caps, u_mask, plain_id, vertex_of, copy_start,
                        copy_cnt, indptr, adjcsr, match, parent, base, q,
                        used, in_blossom, lca_mark):
    """Optimum of the restricted problem for one forced core, via matching.

    Builds the copy expansion of the instance (copies capped at the number of
    usable neighbours, which preserves the maximum matching size) and returns
    n minus the maximum matching cardinality.
    """
    n_plain = 0
    for v in range(n):
        if ((u_mask >> v) & 1) == 0:
            plain_id[v] = n_plain
            vertex_of[n_plain] = v
            n_plain += 1
        else:
            plain_id[v] = -1
    total = n_plain
    for u in range(n):
        copy_cnt[u] = 0
        copy_start[u] = -1
        if (u_mask >> u) & 1:
            avail = popcount(adj[u] & ~u_mask)
            k = caps[u]
            if avail < k:
                k = avail
            copy_start[u] = total
            copy_cnt[u] = k
            for t in range(k):
                vertex_of[total + t] = u
            total += k
    for i in range(total + 1):
        indptr[i] = 0
    for i in range(n_plain):
        v = vertex_of[i]
        d = 0
        for w in range(n):
            if (adj[v] >> w) & 1:
                if (u_mask >> w) & 1:
                    d += copy_cnt[w]
                elif caps[v] + caps[w] > 0:
                    d += 1
        indptr[i + 1] = d
    for u in range(n):
        if copy_cnt[u] > 0:
            d = popcount(adj[u] & ~u_mask)
            for t in range(copy_cnt[u]):
                indptr[copy_start[u] + t + 1] = d
    for i in range(total):
        indptr[i + 1] += indptr[i]
    for i in range(n_plain):
        v = vertex_of[i]
        ptr = indptr[i]
        for w in range(n):
            if (adj[v] >> w) & 1:
                if (u_mask >> w) & 1:
                    for t in range(copy_cnt[w]):
                        adjcsr[ptr] = copy_start[w] + t
                        ptr += 1
                elif caps[v] + caps[w] > 0:
                    adjcsr[ptr] = plain_id[w]
                    ptr += 1
    for u in range(n):
        for t in range(copy_cnt[u]):
            node = copy_start[u] + t
            ptr = indptr[node]
            for w in range(n):
                if ((adj[u] >> w) & 1) and ((u_mask >> w) & 1) == 0:
                    adjcsr[ptr] = plain_id[w]
                    ptr += 1
    msize = blossom_max_matching(total, indptr, adjcsr, match, parent, base,
                                 q, used, in_blossom, lca_mark)
    return n - msize


@_compiled
def cds_enumerate(n, adj, caps, kmax, lower_bound, early_exit, comb,
                  plain_id, vertex_of, copy_start, copy_cnt, indptr, adjcsr,
                  match, parent, base, q, used, in_blossom, lca_mark):
    """Minimise the restricted optimum over all cores of size <= kmax.

    Cores are enumerated by increasing cardinality, lexicographically within
    a cardinality; ties keep the first core found.  Returns
    (best size, best core mask, cores examined).
    """
    best_size = n + 1
    best_u = 0
    examined = 0
    for k in range(kmax + 1):
        for i in range(k):
            comb[i] = i
        while True:
            mask = 0
            for i in range(k):
                mask |= 1 << int(comb[i])
            examined += 1
            size = restricted_min_size(n, adj, caps, mask, plain_id,
                                       vertex_of, copy_start, copy_cnt,
                                       indptr, adjcsr, match, parent, base,
                                       q, used, in_blossom, lca_mark)
            if size < best_size:
                best_size = size
                best_u = mask
                if early_exit and best_size <= lower_bound:
                    return best_size, best_u, examined
            i = k - 1
            while i >= 0 and comb[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
    return best_size, best_u, examined


# ---------------------------------------------------------------------------
# irredundance predicates
# ---------------------------------------------------------------------------

@_compiled
def irr_check(nbar, n, s_mask):
    """1 iff every member of the set dominates a vertex nobody else does."""
    c1 = 0
    c2 = 0
    for v in range(n):
        if (s_mask >> v) & 1:
            nb = nbar[v]
            c2 |= c1 & nb
            c1 |= nb
    once = c1 & ~c2
    for v in range(n):
        if ((s_mask >> v) & 1) and (nbar[v] & once) == 0:
            return 0
    return 1


@_compiled
def maximal_irr_check(nbar, n, s_mask):
    """1 iff ``s_mask`` is irredundant and no superset of it is."""
    if irr_check(nbar, n, s_mask) == 0:
        return 0
    for v in range(n):
        if ((s_mask >> v) & 1) == 0:
            if irr_check(nbar, n, s_mask | (1 << v)):
                return 0
    return 1


@_compiled
def brute_ir_scan(nbar, n):
    """Full-powerset reference for both irredundance numbers.

    Returns (largest irredundant size, smallest maximal irredundant size,
    number of irredundant sets).
    """
    best_max = 0
    best_min = n + 1
    if n == 0:
        return 0, 0, 1
    n_irr = 0
    for mask in range(1 << n):
        if irr_check(nbar, n, mask):
            n_irr += 1
            pc = popcount(mask)
            if pc > best_max:
                best_max = pc
            if pc < best_min:
                maximal = 1
                for v in range(n):
                    if ((mask >> v) & 1) == 0:
                        if irr_check(nbar, n, mask | (1 << v)):
                            maximal = 0
                            break
                if maximal:
                    best_min = pc
    return best_max, best_min, n_irr


@_compiled
def doubled_masks(adj, n, out):
    """Adjacency masks of the doubled bipartite graph on ids 0..2n-1.

    Left id v keeps its name; the twin of v is id n+v.  Left u and twin of v
    are adjacent iff u dominates v (u == v or uv is an edge).
    """
    for v in range(n):
        nb = adj[v] | (1 << v)
        out[v] = nb << n
        out[n + v] = nb


# ---------------------------------------------------------------------------
# branch and reduce: largest independent edge set of the doubled graph
# ---------------------------------------------------------------------------

@_compiled
def _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen, a, b, c, d, drop):
    st_live[sp] = live
    st_clen[sp] = clen
    st_e[sp, 0] = a
    st_e[sp, 1] = b
    st_e[sp, 2] = c
    st_e[sp, 3] = d
    st_drop[sp] = drop
    return sp + 1


@_compiled
def ir_branch(adjh, n2, st_live, st_clen, st_e, st_drop, ce_a, ce_b,
              best_a, best_b, deg):
    """Largest independent edge set of a bipartite graph given as masks.

    Depth-first branch and reduce; at every node the first applicable rule
    (checked in a fixed order, lowest qualifying vertex first) decides the
    branches.  Choosing an edge wipes the closed neighbourhoods of both
    endpoints from the live set, which is exactly the independence
    constraint, so the edges accumulated along any path are automatically
    independent; the endpoint-liveness checks below assert that.

    Returns (best size, nodes expanded); best size -1 flags an internal
    rule-dispatch failure (no rule applied, or a branch produced a dead
    edge), which the callers treat as a hard error.  The witness edges are
    left in ``best_a``/``best_b``.
    """
    full = 0
    for v in range(n2):
        full |= 1 << v
    best = -1
    nodes = 0
    sp = _br_push(0, st_live, st_clen, st_e, st_drop, full, 0, -1, -1, -1, -1, 0)
    while sp > 0:
        sp -= 1
        live = st_live[sp]
        clen = int(st_clen[sp])
        a = int(st_e[sp, 0])
        if a >= 0:
            b = int(st_e[sp, 1])
            if ((live >> a) & 1) == 0 or ((live >> b) & 1) == 0 or \
                    ((adjh[a] >> b) & 1) == 0:
                return -1, nodes
            ce_a[clen] = a
            ce_b[clen] = b
            clen += 1
            live &= ~(adjh[a] | adjh[b] | (1 << a) | (1 << b))
            c = int(st_e[sp, 2])
            if c >= 0:
                d = int(st_e[sp, 3])
                if ((live >> c) & 1) == 0 or ((live >> d) & 1) == 0 or \
                        ((adjh[c] >> d) & 1) == 0:
                    return -1, nodes
                ce_a[clen] = c
                ce_b[clen] = d
                clen += 1
                live &= ~(adjh[c] | adjh[d] | (1 << c) | (1 << d))
        live &= ~st_drop[sp]
        nodes += 1
        if clen + popcount(live) // 2 <= best:
            continue
        if live == 0:
            best = clen
            for i in range(clen):
                best_a[i] = ce_a[i]
                best_b[i] = ce_b[i]
            continue
        for v in range(n2):
            if (live >> v) & 1:
                deg[v] = popcount(adjh[v] & live)
            else:
                deg[v] = -1

        # rule 1: isolated vertex -> drop it
        sel = -1
        for v in range(n2):
            if deg[v] == 0:
                sel = v
                break
        if sel >= 0:
            sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                          -1, -1, -1, -1, 1 << sel)
            continue

        # rule 2: pendant pair -> its edge is in some optimum
        applied = 0
        for v in range(n2):
            if deg[v] == 1:
                u = 0
                while ((adjh[v] & live) >> u) & 1 == 0:
                    u += 1
                if deg[u] == 1:
                    sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live,
                                  clen, v, u, -1, -1, 0)
                    applied = 1
                    break
        if applied:
            continue

        # rule 3: pendant vertex -> drop the neighbour, or take the edge
        for v in range(n2):
            if deg[v] == 1:
                u = 0
                while ((adjh[v] & live) >> u) & 1 == 0:
                    u += 1
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              u, v, -1, -1, 0)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              -1, -1, -1, -1, (1 << u) | (1 << v))
                applied = 1
                break
        if applied:
            continue

        # rule 4: high degree (>= 8) -> drop it, or take one incident edge
        for v in range(n2):
            if deg[v] >= 8:
                nb = adjh[v] & live
                for x in range(n2 - 1, -1, -1):
                    if (nb >> x) & 1:
                        sp = _br_push(sp, st_live, st_clen, st_e, st_drop,
                                      live, clen, v, x, -1, -1, 0)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              -1, -1, -1, -1, 1 << v)
                applied = 1
                break
        if applied:
            continue

        # rule 5: adjacent degree-2 pair u,v -> one of uu1, uv, vv1 is taken
        for u in range(n2):
            if deg[u] == 2:
                v = -1
                nb = adjh[u] & live
                for w in range(n2):
                    if ((nb >> w) & 1) and deg[w] == 2:
                        v = w
                        break
                if v >= 0:
                    u1 = 0
                    while True:
                        if ((nb >> u1) & 1) and u1 != v:
                            break
                        u1 += 1
                    nbv = adjh[v] & live
                    v1 = 0
                    while True:
                        if ((nbv >> v1) & 1) and v1 != u:
                            break
                        v1 += 1
                    sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live,
                                  clen, v, v1, -1, -1, 0)
                    sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live,
                                  clen, u, v, -1, -1, 0)
                    sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live,
                                  clen, u, u1, -1, -1, 0)
                    applied = 1
                    break
        if applied:
            continue

        # rule 6: degree-2 vertex v with neighbours u,w of degree 3..7
        for v in range(n2):
            if deg[v] == 2:
                nb = adjh[v] & live
                u = 0
                while ((nb >> u) & 1) == 0:
                    u += 1
                w = u + 1
                while ((nb >> w) & 1) == 0:
                    w += 1
                common = adjh[u] & adjh[w] & live & ~(1 << v)
                xmask = adjh[u] & live & ~(1 << v) & ~common
                ymask = adjh[w] & live & ~(1 << v) & ~common
                # both-matched pair branches (pushed first, popped last)
                for up in range(n2 - 1, -1, -1):
                    if (xmask >> up) & 1:
                        for wp in range(n2 - 1, -1, -1):
                            if (ymask >> wp) & 1:
                                sp = _br_push(sp, st_live, st_clen, st_e,
                                              st_drop, live, clen,
                                              u, up, w, wp, 1 << v)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              -1, -1, -1, -1, (1 << u) | (1 << v) | (1 << w))
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              v, w, -1, -1, 0)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              v, u, -1, -1, 0)
                applied = 1
                break
        if applied:
            continue

        # rule 7: adjacent degree-3 pair u,v
        for u in range(n2):
            if deg[u] == 3:
                v = -1
                nbu = adjh[u] & live
                for w in range(n2):
                    if ((nbu >> w) & 1) and deg[w] == 3:
                        v = w
                        break
                if v < 0:
                    continue
                u1 = -1
                u2 = -1
                for w in range(n2):
                    if ((nbu >> w) & 1) and w != v:
                        if u1 < 0:
                            u1 = w
                        else:
                            u2 = w
                nbv = adjh[v] & live
                v1 = -1
                v2 = -1
                for w in range(n2):
                    if ((nbv >> w) & 1) and w != u:
                        if v1 < 0:
                            v1 = w
                        else:
                            v2 = w
                # v1,v2 both matched while u1,u2 are not: drop u,u1,u2,v and
                # pick one remaining edge at each of v1,v2
                exclv = (1 << v) | (1 << u1) | (1 << u2)
                cv = adjh[v1] & adjh[v2] & live & ~exclv
                xm = adjh[v1] & live & ~exclv & ~cv
                ym = adjh[v2] & live & ~exclv & ~cv
                dropv = (1 << u) | (1 << u1) | (1 << u2) | (1 << v)
                for x in range(n2 - 1, -1, -1):
                    if (xm >> x) & 1:
                        for y in range(n2 - 1, -1, -1):
                            if (ym >> y) & 1:
                                sp = _br_push(sp, st_live, st_clen, st_e,
                                              st_drop, live, clen,
                                              v1, x, v2, y, dropv)
                # u1,u2 both matched: drop u, pick one remaining edge at each
                cu = adjh[u1] & adjh[u2] & live & ~(1 << u)
                xm = adjh[u1] & live & ~(1 << u) & ~cu
                ym = adjh[u2] & live & ~(1 << u) & ~cu
                for x in range(n2 - 1, -1, -1):
                    if (xm >> x) & 1:
                        for y in range(n2 - 1, -1, -1):
                            if (ym >> y) & 1:
                                sp = _br_push(sp, st_live, st_clen, st_e,
                                              st_drop, live, clen,
                                              u1, x, u2, y, 1 << u)
                # the five named edges (popped first, in this order)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              v, v2, -1, -1, 0)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              v, v1, -1, -1, 0)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              u, u2, -1, -1, 0)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              u, u1, -1, -1, 0)
                sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live, clen,
                              u, v, -1, -1, 0)
                applied = 1
                break
        if applied:
            continue

        # rule 8: degree 3..7 vertex whose neighbours all have degree >= 4
        for v in range(n2):
            if 3 <= deg[v] <= 7:
                nb = adjh[v] & live
                allbig = 1
                for w in range(n2):
                    if ((nb >> w) & 1) and deg[w] < 4:
                        allbig = 0
                        break
                if allbig:
                    for x in range(n2 - 1, -1, -1):
                        if (nb >> x) & 1:
                            sp = _br_push(sp, st_live, st_clen, st_e, st_drop,
                                          live, clen, v, x, -1, -1, 0)
                    sp = _br_push(sp, st_live, st_clen, st_e, st_drop, live,
                                  clen, -1, -1, -1, -1, 1 << v)
                    applied = 1
                    break
        if applied:
            continue
        # the case analysis is exhaustive; reaching this point is a bug
        return -1, nodes
    return best, nodes


# ---------------------------------------------------------------------------
# iterative-deepening DFS: smallest inclusion-maximal irredundant set
# ---------------------------------------------------------------------------

@_compiled
def ir_min_solve(nbar, n, cand, st_set, st_c1, st_c2, st_idx, st_depth):
    """Smallest inclusion-maximal irredundant set by deepening sweeps.

    Isolated vertices belong to every maximal irredundant set, so they are
    forced up front and sweeps extend over the rest in ascending-id order,
    pruning non-irredundant extensions (sound because irredundance is closed
    under subsets).  The first maximal set met at the shallowest sweep is
    returned: (size, member mask, sets visited).
    """
    iso = 0
    m = 0
    for v in range(n):
        if nbar[v] == (1 << v):
            iso |= 1 << v
        else:
            cand[m] = v
            m += 1
    visited = 0
    for kx in range(m + 1):
        sp = 0
        st_set[sp] = iso
        st_c1[sp] = iso
        st_c2[sp] = 0
        st_idx[sp] = 0
        st_depth[sp] = 0
        sp = 1
        while sp > 0:
            sp -= 1
            s = st_set[sp]
            c1 = st_c1[sp]
            c2 = st_c2[sp]
            idx = int(st_idx[sp])
            d = int(st_depth[sp])
            visited += 1
            if d == kx:
                maximal = 1
                for v in range(n):
                    if ((s >> v) & 1) == 0:
                        if irr_check(nbar, n, s | (1 << v)):
                            maximal = 0
                            break
                if maximal:
                    return popcount(s), s, visited
                continue
            for i in range(m - 1, idx - 1, -1):
                v = int(cand[i])
                nb = nbar[v]
                nc2 = c2 | (c1 & nb)
                nc1 = c1 | nb
                once = nc1 & ~nc2
                ok = (nb & once) != 0
                if ok:
                    for w in range(n):
                        if ((s >> w) & 1) and (nbar[w] & once) == 0:
                            ok = 0
                            break
                if ok:
                    st_set[sp] = s | (1 << v)
                    st_c1[sp] = nc1
                    st_c2[sp] = nc2
                    st_idx[sp] = i + 1
                    st_depth[sp] = d + 1
                    sp += 1
    return -1, 0, visited


# ---------------------------------------------------------------------------
# exhaustive verification sweep over all connected labelled graphs
# ---------------------------------------------------------------------------

@_compiled
def sweep_ir_exhaustive(n, adj, nbar, adjh,
                        st_live, st_clen, st_e, st_drop, ce_a, ce_b,
                        best_a, best_b, deg,
                        cand, st_set, st_c1, st_c2, st_idx, st_depth):
    """Compare both irredundance solvers against the powerset reference on
    every connected labelled graph with exactly ``n`` vertices.

    Also re-validates each branch-solver witness (edge endpoints map to an
    irredundant set of the reported size) and each DFS witness (maximal
    irredundant of the reported size).  Returns
    (graphs checked, mismatches, first offending edge code).
    """
    npairs = n * (n - 1) // 2
    checked = 0
    bad = 0
    first_bad = -1
    full = (1 << n) - 1
    for code in range(1 << npairs):
        for v in range(n):
            adj[v] = 0
        p = 0
        for i in range(n):
            for j in range(i + 1, n):
                if (code >> p) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                p += 1
        reach = 1
        while True:
            new = reach
            for v in range(n):
                if (reach >> v) & 1:
                    new |= adj[v]
            if new == reach:
                break
            reach = new
        if reach != full:
            continue
        checked += 1
        for v in range(n):
            nbar[v] = adj[v] | (1 << v)
        ref_max, ref_min, _ = brute_ir_scan(nbar, n)
        doubled_masks(adj, n, adjh)
        bsize, _ = ir_branch(adjh, 2 * n, st_live, st_clen, st_e, st_drop,
                             ce_a, ce_b, best_a, best_b, deg)
        ssize, smask, _ = ir_min_solve(nbar, n, cand, st_set, st_c1, st_c2,
                                       st_idx, st_depth)
        ok = 1
        if bsize != ref_max or ssize != ref_min:
            ok = 0
        if ok:
            members = 0
            for i in range(bsize):
                e = int(best_a[i])
                if e >= n:
                    e = int(best_b[i])
                members |= 1 << e
            if popcount(members) != bsize or irr_check(nbar, n, members) == 0:
                ok = 0
        if ok:
            if popcount(smask) != ssize or \
                    maximal_irr_check(nbar, n, smask) == 0:
                ok = 0
        if ok == 0:
            bad += 1
            if first_bad < 0:
                first_bad = code
    return checked, bad, first_bad
