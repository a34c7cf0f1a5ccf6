"""Pure-Python Kleshchev kernel.

This is the fallback twin of the compiled kernel in _ckernel.pyx; the two
must implement the identical algorithm and return identical values.  The
kernel works on raw data (order e, class/shift tuples, multipartitions as
tuples of tuples) so it can be compiled without touching the typed API
layer in `simples`.

Good-node rule, for a fixed residue: list the removable and addable nodes
of that residue in the "below" order (component, then row; within one
residue all such nodes have distinct (component, row) when q != 1).  A
removable node x is normal when for every addable node x' below x there are
strictly more removable than addable nodes of the residue strictly between
x and x'.  The good node is the highest normal one.
"""

REMOVABLE = 0
ADDABLE = 1


def _residue_nodes(e, classes, shifts, mp):
    """Removable and addable nodes grouped by residue, in below order.

    Returns dict residue -> list of (kind, component, row, column) with kind
    REMOVABLE/ADDABLE, plus the sorted tuple of residues of removable nodes.
    """
    groups = {}
    removable_residues = set()
    for k, component in enumerate(mp):
        rows = len(component)
        for r in range(rows + 1):
            row_len = component[r] if r < rows else 0
            if r < rows:
                below = component[r + 1] if r + 1 < rows else 0
                if row_len > below:
                    exp = shifts[k] + row_len - (r + 1)
                    if e > 0:
                        exp %= e
                    res = (classes[k], exp)
                    groups.setdefault(res, []).append((REMOVABLE, k, r, row_len))
                    removable_residues.add(res)
            above = component[r - 1] if r >= 1 else None
            if above is None or above > row_len:
                exp = shifts[k] + (row_len + 1) - (r + 1)
                if e > 0:
                    exp %= e
                res = (classes[k], exp)
                groups.setdefault(res, []).append((ADDABLE, k, r, row_len + 1))
    return groups, sorted(removable_residues)


def _good_index(nodes):
    """Index of the good node in a below-ordered residue group, or -1."""
    size = len(nodes)
    for x in range(size):
        if nodes[x][0] != REMOVABLE:
            continue
        normal = True
        for xp in range(x + 1, size):
            if nodes[xp][0] != ADDABLE:
                continue
            rem = add = 0
            for y in range(x + 1, xp):
                if nodes[y][0] == REMOVABLE:
                    rem += 1
                else:
                    add += 1
            if rem <= add:
                normal = False
                break
        if normal:
            return x
    return -1


def good_node(e, classes, shifts, mp, residue):
    """The good node of the given residue, as (component, row, column)
    1-based, or None.  Requires e != 1."""
    groups, _ = _residue_nodes(e, classes, shifts, mp)
    nodes = groups.get(tuple(residue))
    if not nodes:
        return None
    idx = _good_index(nodes)
    if idx < 0:
        return None
    _, k, r, c = nodes[idx]
    return (k + 1, r + 1, c)


def _remove(mp, k, r):
    component = mp[k]
    new_len = component[r] - 1
    rows = component[:r] + ((new_len,) if new_len else ()) + component[r + 1:]
    return mp[:k] + (rows,) + mp[k + 1:]


def _verdict(e, classes, shifts, mp, memo):
    cached = memo.get(mp)
    if cached is not None:
        return cached
    if all(not component for component in mp):
        memo[mp] = True
        return True
    groups, removable_residues = _residue_nodes(e, classes, shifts, mp)
    result = False
    for res in removable_residues:
        nodes = groups[res]
        idx = _good_index(nodes)
        if idx < 0:
            continue
        _, k, r, _ = nodes[idx]
        if _verdict(e, classes, shifts, _remove(mp, k, r), memo):
            result = True
            break
    memo[mp] = result
    return result


def kleshchev_verdicts(e, classes, shifts, mps):
    """Kleshchev verdict for each multipartition, sharing one memo table.

    The memo is confined to this call, so concurrent callers never share
    state.  Requires e != 1.
    """
    memo = {}
    return [_verdict(e, classes, shifts, mp, memo) for mp in mps]
