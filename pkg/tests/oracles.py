"""Independent reference computations used only by the tests.

These deliberately avoid the library's abacus machinery: cores are found by
repeated removal moves on the raw part lists, and counting checks come from
direct enumeration.
"""

from barblocks.partitions import BarPartition, Partition


def bar_core_by_removal(lam: BarPartition, p: int) -> BarPartition:
    """p-bar core via greedy removal: subtract p from a part (keeping parts
    distinct, dropping zeros) or delete two parts summing to p."""
    parts = list(lam.parts)
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(parts):
            if a >= p and (a - p == 0 or a - p not in parts):
                new = parts[:i] + parts[i + 1 :]
                if a - p:
                    new.append(a - p)
                parts = sorted(new, reverse=True)
                changed = True
                break
        if changed:
            continue
        for i, a in enumerate(parts):
            for j in range(i + 1, len(parts)):
                if a + parts[j] == p:
                    parts = [x for k, x in enumerate(parts) if k not in (i, j)]
                    changed = True
                    break
            if changed:
                break
    return BarPartition(parts)


def p_core_by_hook_removal(lam: Partition, p: int) -> Partition:
    """Classical p-core via beta-numbers: slide beads down by p while possible."""
    length = lam.length
    beta = {lam.parts[i] + length - 1 - i for i in range(length)}
    changed = True
    while changed:
        changed = False
        for b in sorted(beta, reverse=True):
            if b >= p and b - p not in beta:
                beta.remove(b)
                beta.add(b - p)
                changed = True
                break
    ordered = sorted(beta, reverse=True)
    parts = [b - (length - 1 - i) for i, b in enumerate(ordered)]
    return Partition([x for x in parts if x > 0])


def count_odd_part_partitions(n: int) -> int:
    """Number of partitions of n into odd parts, by direct recursion."""
    cache = {}

    def rec(remaining, max_part):
        if remaining == 0:
            return 1
        key = (remaining, max_part)
        if key in cache:
            return cache[key]
        total = 0
        first = min(remaining, max_part)
        if first % 2 == 0:
            first -= 1
        for part in range(first, 0, -2):
            total += rec(remaining - part, part)
        cache[key] = total
        return total

    return rec(n, n)
