#!/usr/bin/env python3
"""Enumerates rich flow admissible multigraphs up to isomorphism.

Writes one block per graph (a "# name" line, the "n m" header and one
"u v" line per edge), blocks separated by blank lines.

    python3 gen_small_corpus.py --max-vertices 6 --max-edges 10 -o small_admissible.graphs
"""

import argparse
import itertools
import sys


def connected(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


def admissible(n, edges):
    if not connected(n, edges):
        return False
    m = len(edges)
    for i in range(m):
        rest = edges[:i] + edges[i + 1:]
        if not connected(n, rest):
            return False
    for i, j in itertools.combinations(range(m), 2):
        rest = [e for k, e in enumerate(edges) if k not in (i, j)]
        if not connected(n, rest) and set(edges[i]) & set(edges[j]):
            return False
    return True


def canonical(n, edges):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    best = None
    for perm in itertools.permutations(range(n)):
        # Relabel so that degrees are non-increasing; prunes most permutations.
        if any(deg[perm[i]] < deg[perm[i + 1]] for i in range(n - 1)):
            continue
        pos = {v: i for i, v in enumerate(perm)}
        key = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def multisets(pairs, size, start, n, deg, out, acc):
    remaining = size - len(acc)
    deficit = sum(max(0, 3 - d) for d in deg)
    if deficit > 2 * remaining:
        return
    if remaining == 0:
        out.append(list(acc))
        return
    for idx in range(start, len(pairs)):
        u, v = pairs[idx]
        deg[u] += 1
        deg[v] += 1
        acc.append((u, v))
        multisets(pairs, size, idx, n, deg, out, acc)
        acc.pop()
        deg[u] -= 1
        deg[v] -= 1


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--max-edges", type=int, default=10)
    parser.add_argument("-o", "--output", default="-")
    parser.add_argument("--check", metavar="FILE", help="compare against an existing corpus file instead of writing")
    args = parser.parse_args()

    found = []
    for n in range(2, args.max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for m in range((3 * n + 1) // 2, args.max_edges + 1):
            seen = set()
            candidates = []
            multisets(pairs, m, 0, n, [0] * n, candidates, [])
            for edges in candidates:
                key = canonical(n, edges)
                if key in seen:
                    continue
                seen.add(key)
                if admissible(n, list(key)):
                    found.append((n, key))

    lines = [f"# rich flow admissible multigraphs, n <= {args.max_vertices}, m <= {args.max_edges}\n\n"]
    for index, (n, edges) in enumerate(found):
        lines.append(f"# g{index:04d}\n{n} {len(edges)}\n")
        lines.extend(f"{u} {v}\n" for u, v in edges)
        lines.append("\n")
    text = "".join(lines)

    if args.check:
        with open(args.check) as f:
            same = f.read() == text
        print(f"{len(found)} graphs, {'identical' if same else 'DIFFERENT'}", file=sys.stderr)
        sys.exit(0 if same else 1)

    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as f:
            f.write(text)
    print(f"{len(found)} graphs", file=sys.stderr)


if __name__ == "__main__":
    main()
