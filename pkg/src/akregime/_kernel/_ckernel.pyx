# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Kleshchev kernel; mirrors pykernel exactly.

A multipartition is unpacked once per verdict into flat C arrays (component
offsets + row lengths); node collection, residue arithmetic and the
normal-node counting run at C speed.  The memo table and the recursion keep
Python tuples as keys so results stay interchangeable with the fallback.
"""

from libc.stdlib cimport free, malloc

cdef int REMOVABLE = 0
cdef int ADDABLE = 1

cdef struct RNode:
    int kind
    int comp
    int row
    int col
    long cls
    long exp


cdef inline long _mod(long value, long e) nogil:
    cdef long r = value % e
    if r < 0:
        r += e
    return r


cdef int _collect(long e, long* classes, long* shifts, object mp,
                  RNode* nodes) except -1:
    """Fill `nodes` with removable and addable nodes in below order; the
    caller sorts/filters by residue.  Returns the node count."""
    cdef int count = 0
    cdef int k, r, rows
    cdef long row_len, next_row, prev_row, exp
    cdef object component
    for k, component in enumerate(mp):
        rows = len(component)
        for r in range(rows + 1):
            row_len = component[r] if r < rows else 0
            if r < rows:
                next_row = component[r + 1] if r + 1 < rows else 0
                if row_len > next_row:
                    exp = shifts[k] + row_len - (r + 1)
                    if e > 0:
                        exp = _mod(exp, e)
                    nodes[count].kind = REMOVABLE
                    nodes[count].comp = k
                    nodes[count].row = r
                    nodes[count].col = <int> row_len
                    nodes[count].cls = classes[k]
                    nodes[count].exp = exp
                    count += 1
            prev_row = component[r - 1] if r >= 1 else -1
            if r == 0 or prev_row > row_len:
                exp = shifts[k] + (row_len + 1) - (r + 1)
                if e > 0:
                    exp = _mod(exp, e)
                nodes[count].kind = ADDABLE
                nodes[count].comp = k
                nodes[count].row = r
                nodes[count].col = <int> (row_len + 1)
                nodes[count].cls = classes[k]
                nodes[count].exp = exp
                count += 1
    return count


cdef int _good_in_group(RNode* nodes, int total, long cls, long exp) nogil:
    """Index (into `nodes`) of the good node among the residue class
    (cls, exp), or -1.  `nodes` is in below order."""
    cdef int x, xp, y, rem, add
    cdef bint normal
    for x in range(total):
        if nodes[x].kind != REMOVABLE or nodes[x].cls != cls or nodes[x].exp != exp:
            continue
        normal = True
        for xp in range(x + 1, total):
            if nodes[xp].kind != ADDABLE or nodes[xp].cls != cls or nodes[xp].exp != exp:
                continue
            rem = 0
            add = 0
            for y in range(x + 1, xp):
                if nodes[y].cls != cls or nodes[y].exp != exp:
                    continue
                if nodes[y].kind == REMOVABLE:
                    rem += 1
                else:
                    add += 1
            if rem <= add:
                normal = False
                break
        if normal:
            return x
    return -1


cdef object _remove(object mp, int k, int r):
    cdef object component = mp[k]
    cdef long new_len = component[r] - 1
    if new_len:
        rows = component[:r] + (new_len,) + component[r + 1:]
    else:
        rows = component[:r] + component[r + 1:]
    return mp[:k] + (rows,) + mp[k + 1:]


cdef bint _verdict(long e, long* classes, long* shifts, object mp,
                   dict memo, RNode* nodes) except? 0:
    cached = memo.get(mp)
    if cached is not None:
        return cached
    cdef object component
    cdef bint empty = True
    for component in mp:
        if len(component) > 0:
            empty = False
            break
    if empty:
        memo[mp] = True
        return True

    cdef int total = _collect(e, classes, shifts, mp, nodes)
    cdef bint result = False
    cdef int x, idx
    cdef long cls, exp
    # Scratch copy: the recursion below reuses `nodes`.
    cdef int n_removable = 0
    cdef RNode* snapshot = <RNode*> malloc(total * sizeof(RNode))
    if snapshot == NULL:
        raise MemoryError()
    for x in range(total):
        snapshot[x] = nodes[x]
    try:
        for x in range(total):
            if snapshot[x].kind != REMOVABLE:
                continue
            cls = snapshot[x].cls
            exp = snapshot[x].exp
            # Dedup residues: only act on the first removable node of each.
            idx = 0
            while idx < x:
                if (snapshot[idx].kind == REMOVABLE
                        and snapshot[idx].cls == cls and snapshot[idx].exp == exp):
                    break
                idx += 1
            if idx < x:
                continue
            idx = _good_in_group(snapshot, total, cls, exp)
            if idx < 0:
                continue
            if _verdict(e, classes, shifts,
                        _remove(mp, snapshot[idx].comp, snapshot[idx].row),
                        memo, nodes):
                result = True
                break
    finally:
        free(snapshot)
    memo[mp] = result
    return result


cdef int _max_nodes(object mp):
    cdef int total = 0
    cdef object component
    for component in mp:
        total += 2 * len(component) + 2
    return total


def good_node(e, classes, shifts, mp, residue):
    """The good node of the given residue, 1-based, or None.  e != 1."""
    cdef int m = len(classes)
    cdef long* c_classes = <long*> malloc(m * sizeof(long))
    cdef long* c_shifts = <long*> malloc(m * sizeof(long))
    cdef RNode* nodes = NULL
    cdef int total, idx, k
    cdef long cls = residue[0]
    cdef long exp = residue[1]
    if c_classes == NULL or c_shifts == NULL:
        free(c_classes)
        free(c_shifts)
        raise MemoryError()
    try:
        for k in range(m):
            c_classes[k] = classes[k]
            c_shifts[k] = shifts[k]
        nodes = <RNode*> malloc(_max_nodes(mp) * sizeof(RNode))
        if nodes == NULL:
            raise MemoryError()
        total = _collect(e, c_classes, c_shifts, mp, nodes)
        idx = _good_in_group(nodes, total, cls, exp)
        if idx < 0:
            return None
        return (nodes[idx].comp + 1, nodes[idx].row + 1, nodes[idx].col)
    finally:
        free(c_classes)
        free(c_shifts)
        free(nodes)


def kleshchev_verdicts(e, classes, shifts, mps):
    """Kleshchev verdict per multipartition, sharing one memo table.  The
    memo is confined to this call.  Requires e != 1."""
    cdef int m = len(classes)
    cdef long* c_classes = <long*> malloc(m * sizeof(long))
    cdef long* c_shifts = <long*> malloc(m * sizeof(long))
    cdef RNode* nodes = NULL
    cdef int capacity = 0, need, k
    cdef dict memo = {}
    cdef list out = []
    if c_classes == NULL or c_shifts == NULL:
        free(c_classes)
        free(c_shifts)
        raise MemoryError()
    try:
        for k in range(m):
            c_classes[k] = classes[k]
            c_shifts[k] = shifts[k]
        for mp in mps:
            need = _max_nodes(mp)
            if need > capacity:
                free(nodes)
                nodes = <RNode*> malloc(need * sizeof(RNode))
                if nodes == NULL:
                    raise MemoryError()
                capacity = need
            out.append(_verdict(e, c_classes, c_shifts, mp, memo, nodes))
        return [bool(v) for v in out]
    finally:
        free(c_classes)
        free(c_shifts)
        free(nodes)
