"""Pure-Python twin of the compiled string kernels."""


def levenshtein(a: str, b: str) -> int:
    """Edit distance (insert/delete/substitute, unit costs)."""
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev = list(range(lb + 1))
    for i, ca in enumerate(a, 1):
        curr = [i]
        append = curr.append
        for j, cb in enumerate(b, 1):
            best = prev[j - 1] + (0 if ca == cb else 1)
            cand = curr[j - 1] + 1
            if cand < best:
                best = cand
            cand = prev[j] + 1
            if cand < best:
                best = cand
            append(best)
        prev = curr
    return prev[lb]


def similarity(a: str, b: str) -> float:
    """Normalized similarity: 1 - lev(a, b) / max(len); 1.0 for two empties."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest
