#!/usr/bin/env python3
"""Regenerate the weight-system database shipped in data/.

Enumerates every tuple (d; w0..wn) of positive integers with d = sum(w)
such that the general degree-d hypersurface in P(w0..wn) is quasismooth
and wellformed.  Records whose weight multiset contains d/2 are written
in 4-weight form (the d/2 entry dropped), the others with all weights,
matching the layout of the published classification data.

The search runs over normalized weights q_i = w_i / d.  Quasismoothness
forces, for every i, some j with w_i | d - w_j, hence q_i = 1/a or
q_i = (1 - q_j)/a with an integer a >= 2.  Deriving a value can only grow
the reduced denominator, and mutually dependent values (cycles) share one
denominator, so every solution can be generated in non-decreasing order
of reduced denominator from three kinds of steps: a self value 1/a, a
value (1 - v)/a derived from an earlier one, or a whole cycle block; the
final slot is the forced residual 1 - sum and needs no structure of its
own.  Candidates are then filtered through the full quasismoothness and
wellformedness criteria.

Validation targets: 3 systems for 3 weights, 95 for 4 weights, and 7555
for 5 weights (7238 of them not smooth in codimension 2, of which 2409
contain no edge).
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict
from itertools import combinations
from math import gcd, lcm
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from cytk.arith import attainable_sums, is_partitionable  # noqa: E402


# ----------------------------------------------------------------------
# Acceptance criteria for a candidate weight system (any number of
# weights; the 5-weight case is the one shipped in the package).


def is_quasismooth_general(d: int, w: tuple[int, ...]) -> bool:
    n = len(w)
    for i in range(n):
        if all((d - w[j]) % w[i] != 0 for j in range(n)):
            return False
    for i1, i2 in combinations(range(n), 2):
        reach = attainable_sums((w[i1], w[i2]), d)
        hits = sum(1 for j in range(n) if reach >> (d - w[j]) & 1)
        if hits < 2:
            return False
    for size in range(3, n + 1):
        for idx in combinations(range(n), size):
            if not is_partitionable(d, tuple(w[i] for i in idx)):
                return False
    return True


def _gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def is_wellformed_general(d: int, w: tuple[int, ...]) -> bool:
    n = len(w)
    for i in range(n):
        if _gcd_all(w[j] for j in range(n) if j != i) != 1:
            return False
    for i, j in combinations(range(n), 2):
        if d % _gcd_all(w[k] for k in range(n) if k not in (i, j)) != 0:
            return False
    return True


# ----------------------------------------------------------------------
# Cycle tables, indexed by the common reduced denominator of the cycle.


def two_cycle_table(cap: int) -> dict[int, list[tuple[int, ...]]]:
    """Pairs {s/den, t/den} with den = g*s*t + s + t, gcd(s, t) = 1.

    This parametrizes every two-cycle exactly: a1 = g*s + 1, a2 = g*t + 1
    where g = gcd(a1 - 1, a2 - 1)."""
    table: dict[int, set[tuple[int, ...]]] = defaultdict(set)
    g = 1
    while g + 2 <= cap:
        s = 1
        while g * s * s + 2 * s <= cap:
            t = s
            while True:
                den = g * s * t + s + t
                if den > cap:
                    break
                if gcd(s, t) == 1:
                    table[den].add((s, t))
                t += 1
            s += 1
        g += 1
    return {den: sorted(chains) for den, chains in table.items()}


def chain_cycle_table(
    cap: int, length: int, slots: int, den_cap: int | None = None
) -> dict[int, list[tuple[int, ...]]]:
    """Cycles of ``length`` linked values n_i/den: a_i * n_i = den - n_{i+1}
    cyclically, with every a_i >= 2 and every n_i in [1, den/2] coprime to
    den.  Chains are anchored at their minimal numerator.

    When the cycle fills all ``slots`` the numerators sum to den exactly;
    with one slot left over the sum lies in [den/2, den - 1]."""
    den_cap = min(cap, den_cap or cap)
    table: dict[int, set[tuple[int, ...]]] = defaultdict(set)
    for den in range(2, den_cap + 1):
        coprime = bytearray(gcd(i, den) == 1 for i in range(den))
        half = den // 2
        if length == slots:
            sum_lo, sum_hi = den, den
        elif length == slots - 1:
            sum_lo, sum_hi = (den + 1) // 2, den - 1
        else:
            sum_lo, sum_hi = length, den - 1

        def extend(path: list[int], total: int) -> None:
            n_first, n_last = path[0], path[-1]
            if len(path) == length:
                if not sum_lo <= total <= sum_hi:
                    return
                rest = den - n_first
                if rest % n_last == 0 and rest // n_last >= 2:
                    table[den].add(tuple(sorted(path)))
                return
            slots_after = length - len(path)
            hi_next = min(half, den - 2 * n_last, sum_hi - total - (slots_after - 1))
            if hi_next < n_first:
                return
            a = -(-(den - hi_next) // n_last)
            while True:
                nxt = den - a * n_last
                if nxt < n_first:
                    break
                if coprime[nxt]:
                    path.append(nxt)
                    extend(path, total + nxt)
                    path.pop()
                a += 1

        for n1 in range(1, half + 1):
            if coprime[n1]:
                extend([n1], n1)
    return {den: sorted(chains) for den, chains in table.items()}


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


# ----------------------------------------------------------------------
# Denominator-ordered depth-first search.


class Enumerator:
    def __init__(self, slots: int, cap: int, long_den_cap: int):
        self.slots = slots
        self.cap = cap
        self.solutions: set[tuple[int, tuple[int, ...]]] = set()
        self.tables: dict[int, dict[int, list[tuple[int, ...]]]] = {}
        if slots >= 2:
            self.tables[2] = two_cycle_table(cap)
        for length in range(3, slots + 1):
            den_cap = cap if length <= 3 else long_den_cap
            self.tables[length] = chain_cycle_table(cap, length, slots, den_cap)

    def run(self) -> None:
        self._descend([], 1, 0, 1)

    def _record(self, values: list[tuple[int, int]]) -> None:
        d = 1
        for _, den in values:
            d = lcm(d, den)
        weights = tuple(sorted(num * (d // den) for num, den in values))
        self.solutions.add((d, weights))

    def _compatible_dens(self, l: int, dmin: int) -> list[int]:
        """All den >= dmin with lcm(l, den) <= cap, via den = e*f with e | l,
        f <= cap // l and gcd(f, l // e) = 1 (so that lcm(l, den) = l*f)."""
        out = set()
        f_max = self.cap // l
        for e in _divisors(l):
            co = l // e
            for f in range(1, f_max + 1):
                if gcd(f, co) == 1:
                    den = e * f
                    if den >= dmin:
                        out.add(den)
        return sorted(out)

    def _descend(
        self, values: list[tuple[int, int]], dmax: int, sum_num: int, l: int
    ) -> None:
        left = self.slots - len(values)
        if left == 0:
            if sum_num == l:
                self._record(values)
            return
        if left == 1:
            rem = l - sum_num
            if rem <= 0 or 2 * rem > l:
                return
            g = gcd(rem, l)
            if l // g >= dmax:  # residual keeps the denominator order
                values.append((rem // g, l // g))
                self._record(values)
                values.pop()
            return

        cap = self.cap
        tried: set[tuple[tuple[int, int], ...]] = set()

        def try_batch(batch: list[tuple[int, int]]) -> None:
            key = tuple(batch)
            if key in tried:
                return
            tried.add(key)
            new_l = l
            for _, den in batch:
                new_l = lcm(new_l, den)
            if new_l > cap:
                return
            new_sum = sum_num * (new_l // l) + sum(
                num * (new_l // den) for num, den in batch
            )
            rem = new_l - new_sum
            remaining = left - len(batch)
            if rem < 0 or (remaining == 0) != (rem == 0):
                return
            if remaining:
                if rem * cap < remaining * new_l or 2 * rem > remaining * new_l:
                    return
            values.extend(batch)
            self._descend(values, batch[-1][1], new_sum, new_l)
            del values[len(values) - len(batch):]

        dens = self._compatible_dens(l, max(dmax, 2))

        for den in dens:
            try_batch([(1, den)])

        for nv, dv in set(values):
            top = dv - nv
            a_hi = top * cap // dv  # beyond this the value drops below 1/cap
            for a in range(2, a_hi + 1):
                g = gcd(top, a)
                num, den = top // g, dv * a // g
                if den < dmax or den > cap or 2 * num > den:
                    continue
                if lcm(l, den) > cap:
                    continue
                try_batch([(num, den)])

        for size, table in self.tables.items():
            if size > left:
                continue
            for den in dens:
                for nums in table.get(den, ()):
                    try_batch([(num, den) for num in nums])


def solve(
    slots: int, cap: int, long_den_cap: int
) -> list[tuple[int, tuple[int, ...]]]:
    enum = Enumerator(slots, cap, long_den_cap)
    enum.run()
    found = []
    for d, weights in sorted(enum.solutions):
        if is_quasismooth_general(d, weights) and is_wellformed_general(d, weights):
            found.append((d, weights))
    return found


def render_record(d: int, weights: tuple[int, ...]) -> str:
    if d % 2 == 0 and d // 2 in weights:
        reduced = list(weights)
        reduced.remove(d // 2)
        return " ".join(str(x) for x in (d, *reduced))
    return " ".join(str(x) for x in (d, *weights))


def hypersurface_stats(found) -> tuple[int, int]:
    """(not smooth in codim 2, of which containing no edge) over 5-weight
    records, using the packaged predicates."""
    from cytk.hypersurface import _stratified_locus
    from cytk.wps import WeightSystem

    not_smooth = 0
    no_edge = 0
    for d, weights in found:
        locus = _stratified_locus(WeightSystem(d, weights))
        if locus.singular_curves or any(e.singular for e in locus.contained_edges):
            not_smooth += 1
            if not locus.contained_edges:
                no_edge += 1
    return not_smooth, no_edge


def main() -> int:
    parser = argparse.ArgumentParser(description="regenerate the weight-system list")
    parser.add_argument("--weights", type=int, default=5, choices=(3, 4, 5))
    parser.add_argument("--cap", type=int, default=4000, help="max degree searched")
    parser.add_argument(
        "--long-den-cap",
        type=int,
        default=1500,
        help="denominator cap for cycle blocks of length 4 and 5",
    )
    parser.add_argument("--stats", action="store_true", help="census statistics")
    parser.add_argument("--out", help="write the database to this path")
    args = parser.parse_args()

    start = time.time()
    found = solve(args.weights, args.cap, args.long_den_cap)
    elapsed = time.time() - start
    print(
        f"{len(found)} weight systems with {args.weights} weights "
        f"(cap {args.cap}, {elapsed:.1f}s)"
    )
    if found:
        print(f"max degree found: {max(d for d, _ in found)}")
    if args.stats and args.weights == 5:
        not_smooth, no_edge = hypersurface_stats(found)
        print(f"not smooth in codim 2: {not_smooth}; of which no edge: {no_edge}")

    if args.out:
        lines = [render_record(d, w) for d, w in found]
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(
                "# General quasismooth wellformed hypersurfaces of degree\n"
                "# d = w0+...+w4 in P(w0..w4); 4-weight records omit the\n"
                "# weight d/2.  Regenerate: scripts/generate_weight_systems.py\n"
            )
            handle.write("\n".join(lines) + "\n")
        print(f"wrote {len(lines)} records to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
